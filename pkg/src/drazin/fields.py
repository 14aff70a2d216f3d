"""Exact field contexts: the rationals Q and prime fields F_p.

Scalars are plain Python values (fractions.Fraction for Q, ints in [0, p)
for F_p); a Field object supplies the operations and the JSON encoding.
Keeping scalars unwrapped keeps exhaustive sweeps cheap and makes canonical
form automatic.
"""

from __future__ import annotations

from fractions import Fraction

from .exceptions import NonPrimeModulusError, ParseError

# Witnesses making Miller-Rabin deterministic for every n < 3.3 * 10^24,
# which is far beyond any modulus this library will meet.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n):
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n == q:
            return True
        if n % q == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Field:
    """Common interface; use the Q singleton or PrimeField(p)."""

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def dot(self, xs, ys):
        """Sum of products; the F_p override defers the reduction."""
        total = self.zero
        for x, y in zip(xs, ys):
            total = self.add(total, self.mul(x, y))
        return total

    def from_int(self, n):
        raise NotImplementedError

    def scalar_to_json(self, a):
        raise NotImplementedError

    def scalar_from_json(self, obj):
        raise NotImplementedError

    def descriptor(self):
        raise NotImplementedError

    @staticmethod
    def from_descriptor(obj):
        """Build a field from {"field": "Q"} or {"field": "Fp", "p": p}."""
        if not isinstance(obj, dict) or "field" not in obj:
            raise ParseError("field descriptor must be an object with a 'field' key")
        tag = obj["field"]
        if tag == "Q":
            return Q
        if tag == "Fp":
            if "p" not in obj:
                raise ParseError("F_p descriptor needs a 'p' entry")
            p = obj["p"]
            if not isinstance(p, int) or isinstance(p, bool):
                raise ParseError("'p' must be an integer")
            return PrimeField(p)
        raise ParseError("unknown field tag %r" % (tag,))


class Rationals(Field):
    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in Q")
        return 1 / a

    def dot(self, xs, ys):
        return sum((x * y for x, y in zip(xs, ys)), Fraction(0))

    def from_int(self, n):
        return Fraction(n)

    def scalar_to_json(self, a):
        return "%d/%d" % (a.numerator, a.denominator)

    def scalar_from_json(self, obj):
        if isinstance(obj, bool):
            raise ParseError("booleans are not Q scalars")
        if isinstance(obj, int):
            return Fraction(obj)
        if isinstance(obj, str):
            try:
                return Fraction(obj)
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError("bad Q scalar %r" % (obj,)) from exc
        raise ParseError("Q scalar must be an int or 'num/den' string, got %r" % (obj,))

    def descriptor(self):
        return {"field": "Q"}

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


class PrimeField(Field):
    def __init__(self, p):
        if not isinstance(p, int) or isinstance(p, bool) or not is_prime(p):
            raise NonPrimeModulusError("p must be a prime integer, got %r" % (p,))
        self.p = p
        self.zero = 0
        self.one = 1 % p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("0 has no inverse in F_%d" % self.p)
        return pow(a, -1, self.p)

    def dot(self, xs, ys):
        return sum(x * y for x, y in zip(xs, ys)) % self.p

    def from_int(self, n):
        return n % self.p

    def scalar_to_json(self, a):
        return a

    def scalar_from_json(self, obj):
        if isinstance(obj, bool) or not isinstance(obj, int):
            raise ParseError("F_p scalar must be an integer, got %r" % (obj,))
        return obj % self.p

    def descriptor(self):
        return {"field": "Fp", "p": self.p}

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return "F%d" % self.p


Q = Rationals()
