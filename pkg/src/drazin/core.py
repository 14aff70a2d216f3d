"""Drazin index and inverse of a square exact matrix (Route A).

The index is the first repeat in the rank chain rank(x^0), rank(x^1), ...
The inverse comes from a full-rank factorization of x^{k+1}: with
x^{k+1} = L*R the r-by-r core beta = R*L is invertible, and

    x^D = x^k * L * beta^{-2} * R.

Invertible inputs short-circuit to the ordinary inverse.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exceptions import (
    FieldMismatchError,
    InternalInconsistencyError,
    NotSquareError,
    ShapeMismatchError,
    SingularMatrixError,
    WitnessInvalidError,
)
from .linalg import Matrix, full_rank_factorization, invert_matrix, rank


@dataclass(frozen=True)
class DrazinData:
    inverse: Matrix
    index: int
    idempotent: Matrix
    route: str  # RankFactorization | ImageKernel | MonoidCycle


def _require_square(x):
    if not isinstance(x, Matrix) or not x.is_square:
        raise NotSquareError("expected a square matrix")


def drazin_index(x):
    """Least k with rank(x^k) = rank(x^{k+1}); always <= n."""
    _require_square(x)
    prev_rank = x.rows  # rank of x^0 = I
    power = x
    k = 0
    while True:
        r = rank(power)
        if r == prev_rank:
            return k
        prev_rank = r
        power = power * x
        k += 1


def drazin_inverse(x):
    _require_square(x)
    k = drazin_index(x)
    if k == 0:
        inverse = invert_matrix(x)
        return DrazinData(
            inverse=inverse,
            index=0,
            idempotent=Matrix.identity(x.field, x.rows),
            route="RankFactorization",
        )
    xk = x ** k
    fact = full_rank_factorization(xk * x)
    beta = fact.right * fact.left
    try:
        beta_inv = invert_matrix(beta)
    except SingularMatrixError as exc:
        raise InternalInconsistencyError(
            "core of x^{k+1} singular at the stabilized index"
        ) from exc
    inverse = xk * fact.left * beta_inv * beta_inv * fact.right
    return DrazinData(
        inverse=inverse,
        index=k,
        idempotent=x * inverse,
        route="RankFactorization",
    )


def group_inverse(x):
    """x^D when the index is at most 1, else None."""
    d = drazin_inverse(x)
    if d.index <= 1:
        return d.inverse
    return None


def drazin_from_pi_witnesses(x, y, p, z, q):
    """Assemble x^D from strong pi-regularity witnesses.

    Requires y*x^{p+1} = x^p and x^{q+1}*z = x^q exactly; with k = max(p, q)
    the result x^k * z^{k+1} is the Drazin inverse of x.
    """
    _require_square(x)
    for w in (y, z):
        if not isinstance(w, Matrix) or w.rows != x.rows or w.cols != x.cols:
            raise ShapeMismatchError("witnesses must match the shape of x")
        if w.field != x.field:
            raise FieldMismatchError("witnesses must live over the field of x")
    if not isinstance(p, int) or not isinstance(q, int) or p < 0 or q < 0:
        raise ValueError("p and q must be natural numbers")
    xp = x ** p
    if y * (xp * x) != xp:
        raise WitnessInvalidError("y*x^{p+1} != x^p")
    xq = x ** q
    if (xq * x) * z != xq:
        raise WitnessInvalidError("x^{q+1}*z != x^q")
    k = max(p, q)
    return (x ** k) * (z ** (k + 1))


def verify_drazin_data(x, d):
    """Cheap exact [D.1-3] revalidation used by every decomposition entry."""
    _require_square(x)
    if not isinstance(d, DrazinData):
        raise ValueError("expected DrazinData")
    xd = d.inverse
    if xd.field != x.field or (xd.rows, xd.cols) != (x.rows, x.cols):
        raise ValueError("DrazinData does not match the shape or field of x")
    xk = x ** d.index
    if xk * x * xd != xk:
        raise ValueError("stale DrazinData: [D.1] fails at the recorded index")
    if xd * x * xd != xd:
        raise ValueError("stale DrazinData: [D.2] fails")
    if xd * x != x * xd:
        raise ValueError("stale DrazinData: [D.3] fails")
    if d.idempotent != x * xd:
        raise ValueError("stale DrazinData: recorded idempotent is wrong")
