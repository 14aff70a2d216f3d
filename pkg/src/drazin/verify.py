"""Axiom checkers and brute-force oracles.

check_axioms evaluates one labeled axiom system by exact equality and
returns a uniform report. brute_force_drazin scans a candidate set for
the unique element passing the Drazin axioms, which makes it an oracle
independent of any closed-form construction. cross_route_audit runs
every applicable computation route on one matrix and compares.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional

from .core import DrazinData, drazin_index, drazin_inverse
from .decompositions import image_kernel_drazin
from .exceptions import (
    EnumerationTooLargeError,
    InternalInconsistencyError,
    NotSquareError,
)
from .fields import PrimeField
from .finite import EndoFun, fp_matrix_monoid, monoid_drazin
from .linalg import Matrix

__all__ = [
    "AxiomReport",
    "CrossRouteReport",
    "all_matrices",
    "brute_force_drazin",
    "check_axioms",
    "check_monoid_axioms",
    "cross_route_audit",
    "monoid_cycle_drazin",
]

SYSTEMS = ("D", "G", "DV", "GV", "MP", "CND", "EV")


@dataclass(frozen=True)
class AxiomReport:
    """Result of evaluating one axiom system on one subject."""

    system: str
    passed: bool
    failed_axioms: tuple
    witnessed_index: Optional[int] = None

    def __post_init__(self):
        assert self.passed == (not self.failed_axioms)

    def to_json(self):
        return {
            "system": self.system,
            "passed": self.passed,
            "failed_axioms": list(self.failed_axioms),
            "witnessed_index": self.witnessed_index,
        }


def _identity_like(obj):
    if isinstance(obj, Matrix):
        return Matrix.identity(obj.field, obj.rows)
    if isinstance(obj, EndoFun):
        return EndoFun.identity(obj.n)
    raise TypeError("no identity for %r" % (obj,))


def _index_cap(obj):
    """Upper bound for the index search: the ambient dimension."""
    if isinstance(obj, Matrix):
        return obj.rows
    if isinstance(obj, EndoFun):
        return obj.n
    raise TypeError("no dimension bound for %r" % (obj,))


def _min_power_fixed(base, absorber, cap):
    """Minimal k in [0, cap] with base^k * absorber == base^k, else None."""
    power = _identity_like(base)
    for k in range(cap + 1):
        if power * absorber == power:
            return k
        power = power * base
    return None


def _report(system, failed, witnessed=None):
    failed = tuple(failed)
    return AxiomReport(
        system=system,
        passed=not failed,
        failed_axioms=failed,
        witnessed_index=witnessed,
    )


def check_axioms(system, **subject):
    """Evaluate one axiom system exactly; see SYSTEMS for the tags.

    Subjects by system:
      D:   x, inverse            (matrix or endofunction)
      G:   x, inverse            (matrix or endofunction)
      DV:  f, g, f_over_g, g_over_f
      GV:  f, g, f_over_g, g_over_f
      MP:  f, pseudo             (matrices)
      CND: x, core, nilpotent_part [, nilpotent_index]
      EV:  x, family             (matrix + eventuating family)
    """
    if system == "D":
        return _check_d(subject["x"], subject["inverse"])
    if system == "G":
        return _check_g(subject["x"], subject["inverse"])
    if system == "DV":
        return _check_dv(
            subject["f"], subject["g"], subject["f_over_g"], subject["g_over_f"]
        )
    if system == "GV":
        return _check_gv(
            subject["f"], subject["g"], subject["f_over_g"], subject["g_over_f"]
        )
    if system == "MP":
        return _check_mp(subject["f"], subject["pseudo"])
    if system == "CND":
        return _check_cnd(
            subject["x"],
            subject["core"],
            subject["nilpotent_part"],
            subject.get("nilpotent_index"),
        )
    if system == "EV":
        return _check_ev(subject["x"], subject["family"])
    raise ValueError("unknown axiom system %r" % (system,))


def _check_d(x, inverse):
    failed = []
    witnessed = _min_power_fixed(x, x * inverse, _index_cap(x))
    if witnessed is None:
        failed.append("D.1")
    if inverse * x * inverse != inverse:
        failed.append("D.2")
    if inverse * x != x * inverse:
        failed.append("D.3")
    return _report("D", failed, witnessed)


def _check_g(x, inverse):
    failed = []
    if x * inverse * x != x:
        failed.append("G.1")
    if inverse * x * inverse != inverse:
        failed.append("G.2")
    if inverse * x != x * inverse:
        failed.append("G.3")
    return _report("G", failed)


def _check_dv(f, g, f_over_g, g_over_f):
    failed = []
    fg = f * g
    gf = g * f
    cap = max(_index_cap(fg), _index_cap(gf))
    k1 = _min_power_fixed(fg, f * f_over_g, cap)
    k2 = _min_power_fixed(gf, g * g_over_f, cap)
    witnessed = None
    if k1 is None or k2 is None:
        failed.append("DV.1")
    else:
        witnessed = max(k1, k2)
    if f_over_g * f * f_over_g != f_over_g or g_over_f * g * g_over_f != g_over_f:
        failed.append("DV.2")
    if f * f_over_g != g_over_f * g or f_over_g * f != g * g_over_f:
        failed.append("DV.3")
    return _report("DV", failed, witnessed)


def _check_gv(f, g, f_over_g, g_over_f):
    failed = []
    fg = f * g
    gf = g * f
    if g * g_over_f * gf != gf or f * f_over_g * fg != fg:
        failed.append("GV.1")
    if f_over_g * f * f_over_g != f_over_g or g_over_f * g * g_over_f != g_over_f:
        failed.append("GV.2")
    if f * f_over_g != g_over_f * g or f_over_g * f != g * g_over_f:
        failed.append("GV.3")
    return _report("GV", failed)


def _check_mp(f, pseudo):
    failed = []
    if f * pseudo * f != f:
        failed.append("MP.1")
    if pseudo * f * pseudo != pseudo:
        failed.append("MP.2")
    if (f * pseudo).transpose() != f * pseudo:
        failed.append("MP.3")
    if (pseudo * f).transpose() != pseudo * f:
        failed.append("MP.4")
    return _report("MP", failed)


def _check_cnd(x, core, nilpotent_part, nilpotent_index=None):
    failed = []
    if drazin_index(core) > 1:
        failed.append("CND.1")
    if nilpotent_index is None:
        cap = max(nilpotent_part.rows, 1)
        if not any((nilpotent_part ** t).is_zero() for t in range(cap + 1)):
            failed.append("CND.2")
    elif not (nilpotent_part ** nilpotent_index).is_zero():
        failed.append("CND.2")
    zero = Matrix.zeros(x.field, x.rows, x.cols)
    if core * nilpotent_part != zero or nilpotent_part * core != zero:
        failed.append("CND.3")
    if core + nilpotent_part != x:
        failed.append("CND.4")
    return _report("CND", failed)


def _check_ev(x, family):
    failed = []
    k = family.index
    sections = family.sections
    retractions = family.retractions
    through = sections[0].cols
    eye = Matrix.identity(x.field, through)
    if any(r * s != eye for s, r in zip(sections, retractions)):
        failed.append("ev.1")
    composites = [s * r for s, r in zip(sections, retractions)]
    if any(e != composites[0] for e in composites[1:]):
        failed.append("ev.2")
    pairs_ok = all(
        x * sections[j] == sections[j + 1] and retractions[j + 1] * x == retractions[j]
        for j in range(len(sections) - 1)
    )
    if not pairs_ok:
        failed.append("ev.3")
    xk1 = x ** (k + 1)
    if any(xk1 * e != xk1 or e * xk1 != xk1 for e in composites):
        failed.append("ev.4")
    return _report("EV", failed)


def check_monoid_axioms(monoid, x, inverse, cap):
    """The D axioms for a monoid element, index search capped at cap."""
    failed = []
    witnessed = None
    mul = monoid.mul
    eq = monoid.eq
    xd_x = mul(inverse, x)
    x_xd = mul(x, inverse)
    power = monoid.identity
    for k in range(cap + 1):
        if eq(mul(power, x_xd), power):
            witnessed = k
            break
        power = mul(power, x)
    if witnessed is None:
        failed.append("D.1")
    if not eq(mul(xd_x, inverse), inverse):
        failed.append("D.2")
    if not eq(xd_x, x_xd):
        failed.append("D.3")
    return _report("D", failed, witnessed)


def brute_force_drazin(x, candidates, limit=10 ** 6):
    """The unique Drazin inverse of x among candidates, or None.

    The Drazin inverse is unique whenever it exists, so two surviving
    candidates mean a bug somewhere and raise InternalInconsistencyError.
    Candidates beyond limit raise EnumerationTooLargeError.
    """
    cap = _index_cap(x)
    powers = [_identity_like(x)]
    for _ in range(cap):
        powers.append(powers[-1] * x)
    survivor = None
    count = 0
    for c in candidates:
        count += 1
        if count > limit:
            raise EnumerationTooLargeError(
                "more than %d candidates in brute-force search" % limit
            )
        t = x * c
        if c * x != t:
            continue
        if c * t != c:
            continue
        if not any(powers[k] * t == powers[k] for k in range(cap + 1)):
            continue
        if survivor is not None:
            raise InternalInconsistencyError(
                "two Drazin inverses found for %r: %r and %r" % (x, survivor, c)
            )
        survivor = c
    return survivor


def all_matrices(field, rows, cols, scalars=None):
    """Every rows x cols matrix with entries drawn from scalars.

    scalars defaults to the whole field for PrimeField and must be given
    otherwise.
    """
    if scalars is None:
        if isinstance(field, PrimeField):
            scalars = [field.from_int(i) for i in range(field.p)]
        else:
            raise ValueError("scalars required over an infinite field")
    cells = rows * cols
    for combo in product(scalars, repeat=cells):
        entries = [list(combo[i * cols : (i + 1) * cols]) for i in range(rows)]
        yield Matrix(field, entries)


def _matrix_to_np(x):
    import numpy as np

    arr = np.zeros((x.rows, x.cols), dtype=np.int64)
    for i in range(x.rows):
        for j in range(x.cols):
            arr[i, j] = x[i, j]
    return arr


def _np_to_matrix(field, arr):
    return Matrix(field, [[int(v) for v in row] for row in arr.tolist()])


def monoid_cycle_drazin(x, max_steps=None):
    """Route C: the power-cycle walk in the monoid of matrices over F_p.

    Same contract as drazin_inverse. Only finite fields qualify: the walk
    needs the power sequence to repeat.
    """
    if not isinstance(x.field, PrimeField):
        raise ValueError("the power-cycle route needs a finite field")
    if not x.is_square:
        raise NotSquareError("Drazin inverses need a square matrix")
    monoid = fp_matrix_monoid(x.field.p, x.rows)
    element, index = monoid_drazin(monoid.element(_matrix_to_np(x)), max_steps)
    inverse = _np_to_matrix(x.field, element.value)
    return DrazinData(
        inverse=inverse, index=index, idempotent=x * inverse, route="MonoidCycle"
    )


@dataclass(frozen=True)
class CrossRouteReport:
    """Pairwise comparison of every route that applies to one matrix."""

    inverses: dict
    indices: dict
    pairwise_equal: dict
    agree: bool

    def to_json(self):
        return {
            "routes": sorted(self.inverses),
            "inverses": {r: m.to_json() for r, m in self.inverses.items()},
            "indices": dict(self.indices),
            "pairwise_equal": {
                "%s=%s" % pair: ok for pair, ok in sorted(self.pairwise_equal.items())
            },
            "agree": self.agree,
        }


def cross_route_audit(x):
    """Run routes A, B and (over F_p) C on x and compare everything.

    A = rank factorization, B = image-kernel splitting, C = power-cycle
    walk in the matrix monoid. Uniqueness says they must agree; the
    report records the pairwise outcomes.
    """
    inverses = {}
    indices = {}
    a = drazin_inverse(x)
    inverses["A"] = a.inverse
    indices["A"] = a.index
    b = image_kernel_drazin(x)
    inverses["B"] = b.inverse
    indices["B"] = b.index
    if isinstance(x.field, PrimeField):
        c = monoid_cycle_drazin(x)
        inverses["C"] = c.inverse
        indices["C"] = c.index
    routes = sorted(inverses)
    pairwise = {}
    for i, r1 in enumerate(routes):
        for r2 in routes[i + 1 :]:
            pairwise[(r1, r2)] = (
                inverses[r1] == inverses[r2] and indices[r1] == indices[r2]
            )
    return CrossRouteReport(
        inverses=inverses,
        indices=indices,
        pairwise_equal=pairwise,
        agree=all(pairwise.values()),
    )
