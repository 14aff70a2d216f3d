import random
from fractions import Fraction

import pytest

from drazin import (
    Matrix,
    NotIdempotentError,
    NotSquareError,
    PrimeField,
    Q,
    complement_formula_check,
    core_nilpotent,
    drazin_from_fitting,
    drazin_inverse,
    eventuating_family,
    fitting_decomposition,
    image_kernel_drazin,
    munn_power_iso_check,
    rank,
    split_idempotent,
    splitting_iso,
)

F5 = PrimeField(5)


def q(entries):
    return Matrix(Q, entries)


DIAG = q([[2, 0], [0, 0]])
NILP = q([[0, 1], [0, 0]])
MIXED = q([[2, 0, 0], [0, 0, 1], [0, 0, 0]])
IDEM = q([[1, 1], [0, 0]])


def test_split_idempotent_frozen():
    sp = split_idempotent(IDEM)
    assert sp.through_dim == 1
    assert sp.section == q([[1], [0]])
    assert sp.retraction == q([[1, 1]])
    assert sp.section * sp.retraction == IDEM
    assert sp.retraction * sp.section == Matrix.identity(Q, 1)


def test_split_identity_and_zero():
    ident = Matrix.identity(Q, 3)
    sp = split_idempotent(ident)
    assert sp.through_dim == 3
    assert sp.section == ident and sp.retraction == ident
    zero = Matrix.zeros(Q, 2, 2)
    sp0 = split_idempotent(zero)
    assert sp0.through_dim == 0
    assert sp0.section.cols == 0 and sp0.retraction.rows == 0
    assert sp0.section * sp0.retraction == zero


def test_split_rejects_non_idempotent():
    with pytest.raises(NotIdempotentError):
        split_idempotent(q([[1, 1], [0, 1]]))
    with pytest.raises(NotSquareError):
        split_idempotent(q([[1, 0]]))


def test_splitting_iso_frozen():
    d = drazin_inverse(DIAG)
    assert splitting_iso(DIAG, d) == q([[2]])
    x = q([[2, 1], [0, 0]])
    assert splitting_iso(x, drazin_inverse(x)) == q([[2]])


def test_splitting_iso_random_round_trip():
    rng = random.Random(707)
    for _ in range(20):
        n = rng.randint(1, 4)
        x = Matrix(F5, [[rng.randrange(5) for _ in range(n)] for _ in range(n)])
        d = drazin_inverse(x)
        alpha = splitting_iso(x, d)
        assert alpha.rows == alpha.cols == rank(x ** max(d.index, 1))
        assert rank(alpha) == alpha.rows


def test_core_nilpotent_frozen_diagonal():
    cn = core_nilpotent(DIAG, drazin_inverse(DIAG))
    assert cn.core == DIAG
    assert cn.nilpotent_part.is_zero()
    assert cn.nilpotent_index == 1


def test_core_nilpotent_frozen_nilpotent():
    cn = core_nilpotent(NILP, drazin_inverse(NILP))
    assert cn.core.is_zero()
    assert cn.nilpotent_part == NILP
    assert cn.nilpotent_index == 2


def test_core_nilpotent_frozen_mixed():
    cn = core_nilpotent(MIXED, drazin_inverse(MIXED))
    assert cn.core == q([[2, 0, 0], [0, 0, 0], [0, 0, 0]])
    assert cn.nilpotent_part == q([[0, 0, 0], [0, 0, 1], [0, 0, 0]])
    assert cn.nilpotent_index == 2


def test_core_nilpotent_separation_axioms():
    rng = random.Random(808)
    for _ in range(25):
        n = rng.randint(1, 4)
        x = Matrix(F5, [[rng.randrange(5) for _ in range(n)] for _ in range(n)])
        d = drazin_inverse(x)
        cn = core_nilpotent(x, d)
        assert cn.core + cn.nilpotent_part == x
        assert (cn.core * cn.nilpotent_part).is_zero()
        assert (cn.nilpotent_part * cn.core).is_zero()
        assert (cn.nilpotent_part ** cn.nilpotent_index).is_zero()
        core_d = drazin_inverse(cn.core)
        assert core_d.index <= 1
        assert core_d.inverse == d.inverse


def test_fitting_frozen_mixed():
    d = drazin_inverse(MIXED)
    f = fitting_decomposition(MIXED, d)
    assert f.invertible_block == q([[2]])
    assert rank(f.invertible_block) == f.invertible_block.rows
    eta = f.nilpotent_block
    assert (eta ** max(eta.rows, 1)).is_zero()
    p = f.change_of_basis
    from drazin import block_diag, invert_matrix

    assert p * block_diag(f.invertible_block, eta) * invert_matrix(p) == MIXED
    assert drazin_from_fitting(MIXED, f) == d.inverse


def test_fitting_round_trip_random():
    rng = random.Random(909)
    for _ in range(20):
        n = rng.randint(1, 4)
        x = Matrix(F5, [[rng.randrange(5) for _ in range(n)] for _ in range(n)])
        d = drazin_inverse(x)
        f = fitting_decomposition(x, d)
        assert drazin_from_fitting(x, f) == d.inverse


def test_image_kernel_route_agrees():
    for x in (DIAG, NILP, MIXED, IDEM, q([[1, 1], [0, 1]])):
        a = drazin_inverse(x)
        b = image_kernel_drazin(x)
        assert b.route == "ImageKernel"
        assert b.inverse == a.inverse
        assert b.index == a.index
        assert b.idempotent == a.idempotent


def test_image_kernel_zero_dim():
    x = Matrix(Q, [], cols=0)
    d = image_kernel_drazin(x)
    assert d.index == 0 and d.inverse == x


def test_eventuating_family_axioms():
    for x in (DIAG, MIXED, IDEM, NILP):
        d = drazin_inverse(x)
        fam = eventuating_family(x, d)
        N = d.index + 2
        assert fam.window == tuple(range(-N, N + 1))
        assert fam.index == d.index
        ident_e = None
        for s, r in zip(fam.sections, fam.retractions):
            if ident_e is None:
                ident_e = Matrix.identity(x.field, s.cols)
            assert r * s == ident_e
            assert s * r == d.idempotent
        for pos in range(len(fam.window) - 1):
            assert x * fam.sections[pos] == fam.sections[pos + 1]
            assert fam.retractions[pos + 1] * x == fam.retractions[pos]


def test_eventuating_family_window_validation():
    d = drazin_inverse(DIAG)
    fam = eventuating_family(DIAG, d, N=1)
    assert fam.window == (-1, 0, 1)
    with pytest.raises(ValueError):
        eventuating_family(DIAG, d, N=0)
    with pytest.raises(ValueError):
        eventuating_family(DIAG, d, N=-2)


def test_complement_and_munn_hold():
    rng = random.Random(111)
    cases = [DIAG, NILP, MIXED, IDEM]
    for _ in range(15):
        n = rng.randint(1, 4)
        cases.append(Matrix(F5, [[rng.randrange(5) for _ in range(n)] for _ in range(n)]))
    for x in cases:
        d = drazin_inverse(x)
        assert complement_formula_check(x, d)
        assert munn_power_iso_check(x, d)
