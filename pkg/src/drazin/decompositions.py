"""Splittings and decompositions attached to a Drazin matrix.

Covers: idempotent splittings, the invertible map induced on the retract of
e_x, core-nilpotent, the complement formula, the Fitting similarity, the
image-kernel construction (Route B), eventuating families, and the power
isomorphism check.

Every operation that consumes a DrazinData revalidates it on entry, so a
stale or hand-built bundle fails fast instead of corrupting results.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import DrazinData, drazin_index, verify_drazin_data
from .exceptions import (
    InternalInconsistencyError,
    NotIdempotentError,
    NotSquareError,
    SingularMatrixError,
)
from .linalg import (
    Matrix,
    block_diag,
    full_rank_factorization,
    hstack,
    image_basis,
    invert_matrix,
    kernel_basis,
    vstack,
)


@dataclass(frozen=True)
class IdempotentSplitting:
    retraction: Matrix  # r x n, applied first
    section: Matrix  # n x r
    through_dim: int


@dataclass(frozen=True)
class CoreNilpotent:
    core: Matrix
    nilpotent_part: Matrix
    nilpotent_index: int


@dataclass(frozen=True)
class FittingData:
    change_of_basis: Matrix
    invertible_block: Matrix
    nilpotent_block: Matrix


@dataclass(frozen=True)
class EventuatingFamily:
    window: tuple
    sections: tuple
    retractions: tuple
    index: int


def split_idempotent(e):
    """Split e = section * retraction with retraction * section = identity.

    Realized by the full-rank factorization: for an idempotent the two
    factors compose to the identity on the through space.
    """
    if not e.is_square:
        raise NotSquareError("idempotents are square")
    if e * e != e:
        raise NotIdempotentError("e*e != e")
    fact = full_rank_factorization(e)
    if fact.right * fact.left != Matrix.identity(e.field, fact.rank):
        raise InternalInconsistencyError("factorization of an idempotent must split it")
    return IdempotentSplitting(
        retraction=fact.right, section=fact.left, through_dim=fact.rank
    )


def splitting_iso(x, d):
    """The invertible map alpha induced by x on the retract of e_x.

    With (r, s) splitting e_x, alpha = r*x*s; its inverse is r*x^D*s. Both
    commuting squares, the triangle with x^k, and the inverse identity are
    checked exactly before returning.
    """
    verify_drazin_data(x, d)
    sp = split_idempotent(d.idempotent)
    r, s = sp.retraction, sp.section
    alpha = r * x * s
    alpha_inv = r * d.inverse * s
    ident = Matrix.identity(x.field, sp.through_dim)
    if alpha * alpha_inv != ident or alpha_inv * alpha != ident:
        raise InternalInconsistencyError("alpha and r*x^D*s are not mutually inverse")
    if r * x != alpha * r or x * s != s * alpha:
        raise InternalInconsistencyError("alpha squares do not commute")
    xk = x ** d.index
    e = d.idempotent
    if e * xk != xk or xk * e != xk:
        raise InternalInconsistencyError("x^k does not factor through the retract")
    return alpha


def _nilpotency_index(n):
    """Smallest t with n^t = 0; caller guarantees n is nilpotent."""
    if n.rows == 0:
        return 0
    t = 1
    power = n
    while not power.is_zero():
        power = power * n
        t += 1
        if t > n.rows + 1:
            raise InternalInconsistencyError("matrix is not nilpotent")
    return t


def core_nilpotent(x, d):
    """x = core + nilpotent_part with the three separation axioms."""
    verify_drazin_data(x, d)
    core = x * d.inverse * x
    nilpotent_part = x - core
    return CoreNilpotent(
        core=core,
        nilpotent_part=nilpotent_part,
        nilpotent_index=_nilpotency_index(nilpotent_part),
    )


def complement_formula_check(x, d):
    """Does x^D = x^k * (x^{k+1} + (I - e_x))^{-1}, in both orders?"""
    verify_drazin_data(x, d)
    k = d.index
    xk = x ** k
    shifted = xk * x + (Matrix.identity(x.field, x.rows) - d.idempotent)
    try:
        inv = invert_matrix(shifted)
    except SingularMatrixError:
        return False
    return d.inverse == xk * inv and d.inverse == inv * xk


def fitting_decomposition(x, d):
    """Similarity x = p * diag(alpha, eta) * p^{-1}, alpha invertible, eta nilpotent.

    p's columns are the sections of the splittings of e_x and of I - e_x;
    its inverse is the stacked retractions (the cross blocks vanish).
    """
    verify_drazin_data(x, d)
    e = d.idempotent
    comp = Matrix.identity(x.field, x.rows) - e
    sp = split_idempotent(e)
    sp_c = split_idempotent(comp)
    p = hstack(sp.section, sp_c.section)
    p_inv = vstack(sp.retraction, sp_c.retraction)
    if p * p_inv != Matrix.identity(x.field, x.rows):
        raise InternalInconsistencyError("stacked splittings failed to invert p")
    nilpotent_part = x - x * d.inverse * x
    alpha = sp.retraction * x * sp.section
    eta = sp_c.retraction * nilpotent_part * sp_c.section
    if x != p * block_diag(alpha, eta) * p_inv:
        raise InternalInconsistencyError("Fitting blocks do not reassemble x")
    return FittingData(
        change_of_basis=p, invertible_block=alpha, nilpotent_block=eta
    )


def drazin_from_fitting(x, f):
    """Rebuild x^D = p * diag(alpha^{-1}, 0) * p^{-1} from FittingData."""
    alpha_inv = invert_matrix(f.invertible_block)
    nil_size = f.nilpotent_block.rows
    middle = block_diag(alpha_inv, Matrix.zeros(x.field, nil_size, nil_size))
    return f.change_of_basis * middle * invert_matrix(f.change_of_basis)


def image_kernel_drazin(x):
    """Route B: split the space as im(x^{k+1}) + ker(x^{k+1}) and invert on the image.

    Same contract as drazin_inverse; the assembled basis is invertible at
    the stabilized index, and a singular one means a library bug.
    """
    k = drazin_index(x)
    power = x ** (k + 1)
    iota = image_basis(power)
    kappa = kernel_basis(power)
    psi = hstack(iota, kappa)
    try:
        phi = invert_matrix(psi)
    except SingularMatrixError as exc:
        raise InternalInconsistencyError(
            "image and kernel of x^{k+1} do not span at the stabilized index"
        ) from exc
    r = iota.cols
    phi_top = phi.take_rows(range(r))
    alpha = phi_top * x * iota
    try:
        alpha_inv = invert_matrix(alpha)
    except SingularMatrixError as exc:
        raise InternalInconsistencyError(
            "x is singular on the stabilized image"
        ) from exc
    nil_size = x.rows - r
    middle = block_diag(alpha_inv, Matrix.zeros(x.field, nil_size, nil_size))
    inverse = psi * middle * phi
    return DrazinData(
        inverse=inverse, index=k, idempotent=x * inverse, route="ImageKernel"
    )


def eventuating_family(x, d, N=None):
    """Sections s_i and retractions r_i indexed over [-N, N].

    s_0, r_0 split e_x; moving right composes with x, moving left with x^D:
    s_i = x^i * s_0 and r_i = r_0 * (x^D)^i for i > 0, and with the roles of
    x and x^D exchanged for i < 0. N defaults to index + 2.
    """
    verify_drazin_data(x, d)
    if N is None:
        N = d.index + 2
    if not isinstance(N, int) or N < 1:
        raise ValueError("window radius N must be a natural number >= 1")
    sp = split_idempotent(d.idempotent)
    r0, s0 = sp.retraction, sp.section
    sections = []
    retractions = []
    for i in range(-N, N + 1):
        if i >= 0:
            sections.append((x ** i) * s0)
            retractions.append(r0 * (d.inverse ** i))
        else:
            sections.append((d.inverse ** (-i)) * s0)
            retractions.append(r0 * (x ** (-i)))
    return EventuatingFamily(
        window=tuple(range(-N, N + 1)),
        sections=tuple(sections),
        retractions=tuple(retractions),
        index=d.index,
    )


def munn_power_iso_check(x, d):
    """Is x^{k+1} an isomorphism on the retract of e_x?

    Concretely: e_x absorbs x^{k+1} on both sides and x^{k+1} + (I - e_x)
    is invertible.
    """
    verify_drazin_data(x, d)
    power = x ** (d.index + 1)
    e = d.idempotent
    if e * power != power or power * e != power:
        return False
    shifted = power + (Matrix.identity(x.field, x.rows) - e)
    try:
        invert_matrix(shifted)
    except SingularMatrixError:
        return False
    return True
