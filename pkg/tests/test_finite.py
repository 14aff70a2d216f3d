import random

import pytest

from drazin import (
    CycleNotFoundError,
    EndoFun,
    Matrix,
    Monoid,
    ParseError,
    PrimeField,
    all_endofunctions,
    drazin_inverse,
    endo_drazin,
    eventual_image,
    fp_matrix_monoid,
    int_mod_monoid,
    monoid_drazin,
    power_cycle,
    transformation_monoid,
)

from oracles import brute_drazin_endo, brute_drazin_zmod, compose


def test_endofun_basics():
    f = EndoFun(3, (1, 2, 1))
    assert f(0) == 1 and f(2) == 1
    g = EndoFun(3, (0, 0, 2))
    # applicative order: (f*g)(x) = f(g(x))
    assert (f * g).table == (1, 1, 1)
    assert (g * f).table == (0, 2, 0)
    assert (f ** 2).table == tuple(compose(f.table, f.table))
    assert (f ** 0) == EndoFun.identity(3)


def test_endofun_validation():
    with pytest.raises(ParseError):
        EndoFun(2, (0, 5))
    with pytest.raises(ParseError):
        EndoFun(2, (0,))


def test_endofun_json_round_trip():
    f = EndoFun(3, (2, 0, 1))
    assert EndoFun.from_json(f.to_json()) == f
    assert EndoFun.from_json([2, 0, 1]) == f
    assert EndoFun.from_json({"n": 3, "table": [2, 0, 1]}) == f


def test_endofun_json_errors():
    with pytest.raises(ParseError):
        EndoFun.from_json({"n": 3})
    with pytest.raises(ParseError):
        EndoFun.from_json({"n": 2, "table": [0, 1, 0]})
    with pytest.raises(ParseError):
        EndoFun.from_json({"n": 2, "table": [0, "x"]})
    with pytest.raises(ParseError):
        EndoFun.from_json("nope")


def test_all_endofunctions_counts():
    assert len(list(all_endofunctions(0))) == 1
    assert len(set(all_endofunctions(3))) == 27


def test_eventual_image_frozen():
    assert eventual_image(EndoFun.identity(3)) == ((0, 1, 2), 0)
    assert eventual_image(EndoFun(3, (0, 0, 0))) == ((0,), 1)
    assert eventual_image(EndoFun(3, (1, 2, 1))) == ((1, 2), 1)
    tower = EndoFun(4, (0, 0, 1, 2))
    assert eventual_image(tower) == ((0,), 3)


def test_eventual_image_restriction_is_bijective():
    rng = random.Random(3001)
    for _ in range(50):
        n = rng.randint(1, 7)
        f = EndoFun(n, tuple(rng.randrange(n) for _ in range(n)))
        stable, k = eventual_image(f)
        image = {f(i) for i in stable}
        assert image == set(stable)
        assert len({f(i) for i in stable}) == len(stable)


def test_endo_drazin_frozen():
    ident = EndoFun.identity(4)
    assert endo_drazin(ident) == (ident, 0)
    const = EndoFun(3, (1, 1, 1))
    assert endo_drazin(const) == (const, 1)
    swap_tail = EndoFun(3, (1, 2, 1))
    assert endo_drazin(swap_tail) == (swap_tail, 1)


def test_endo_drazin_of_bijection_is_inverse():
    f = EndoFun(3, (1, 2, 0))
    d, k = endo_drazin(f)
    assert k == 0
    assert d.table == (2, 0, 1)
    assert d * f == EndoFun.identity(3)


def test_endo_drazin_matches_brute_force_n_up_to_3():
    for n in (1, 2, 3):
        for f in all_endofunctions(n):
            d, k = endo_drazin(f)
            assert d.table == brute_drazin_endo(f.table), f.table
            # k is the minimal absorption exponent
            fk = f ** k
            assert fk * f * d == fk
            if k > 0:
                prev = f ** (k - 1)
                assert prev * f * d != prev


def test_endo_drazin_random_larger():
    rng = random.Random(3002)
    for _ in range(40):
        n = rng.randint(4, 8)
        f = EndoFun(n, tuple(rng.randrange(n) for _ in range(n)))
        d, k = endo_drazin(f)
        assert d * f == f * d
        assert d * f * d == d
        fk = f ** k
        assert fk * f * d == fk
        if k > 0:
            prev = f ** (k - 1)
            assert prev * f * d != prev


def test_monoid_drazin_frozen_z8():
    mon = int_mod_monoid(8)
    x = mon.element(2)
    assert power_cycle(x) == (3, 1)
    d, index = monoid_drazin(x)
    assert d.value == 0
    assert index == 3
    assert brute_drazin_zmod(2, 8) == 0


def test_monoid_drazin_frozen_z12():
    mon = int_mod_monoid(12)
    x = mon.element(2)
    assert power_cycle(x) == (2, 2)
    d, index = monoid_drazin(x)
    assert d.value == 8
    assert index == 2
    assert brute_drazin_zmod(2, 12) == 8


def test_monoid_drazin_identity_element():
    mon = int_mod_monoid(12)
    d, index = monoid_drazin(mon.element(1))
    assert d.value == 1 and index == 0


def test_monoid_drazin_zero_element():
    mon = int_mod_monoid(5)
    d, index = monoid_drazin(mon.element(0))
    assert d.value == 0 and index == 1


def test_monoid_drazin_exhaustive_zmod():
    for modulus in range(1, 25):
        mon = int_mod_monoid(modulus)
        for value in range(modulus):
            d, index = monoid_drazin(mon.element(value))
            assert d.value == brute_drazin_zmod(value, modulus), (value, modulus)
            # minimality of the returned index
            assert pow(value, index + 1, modulus) * d.value % modulus == pow(
                value, index, modulus
            )
            if index > 0:
                assert pow(value, index, modulus) * d.value % modulus != pow(
                    value, index - 1, modulus
                )


def test_cycle_not_found_with_tiny_budget():
    mon = int_mod_monoid(8)
    with pytest.raises(CycleNotFoundError):
        power_cycle(mon.element(2), max_steps=1)


def test_unknown_size_requires_max_steps():
    mon = Monoid(mul=lambda a, b: a * b, identity=1)
    with pytest.raises(ValueError):
        power_cycle(mon.element(2))
    assert power_cycle(mon.element(1), max_steps=5) == (0, 1)


def test_linear_scan_walk_agrees_with_keyed_walk():
    keyed = int_mod_monoid(12)
    scanning = Monoid(
        mul=lambda a, b: (a * b) % 12,
        identity=1,
        eq=lambda a, b: a == b,
        size=12,
    )
    assert not scanning._use_key and keyed._use_key
    for value in range(12):
        assert monoid_drazin(scanning.element(value))[1] == monoid_drazin(
            keyed.element(value)
        )[1]
        assert monoid_drazin(scanning.element(value))[0].value == monoid_drazin(
            keyed.element(value)
        )[0].value


def test_transformation_monoid_agrees_with_endo_drazin():
    rng = random.Random(3003)
    mon = transformation_monoid(4)
    for _ in range(30):
        table = tuple(rng.randrange(4) for _ in range(4))
        d, index = monoid_drazin(mon.element(table))
        ed, ek = endo_drazin(EndoFun(4, table))
        assert d.value == ed.table
        assert index == ek


def test_fp_matrix_monoid_agrees_with_rank_route():
    import numpy as np

    rng = random.Random(3004)
    f5 = PrimeField(5)
    mon = fp_matrix_monoid(5, 3)
    for _ in range(6):
        entries = [[rng.randrange(5) for _ in range(3)] for _ in range(3)]
        d, index = monoid_drazin(mon.element(np.array(entries, dtype=np.int64)))
        ref = drazin_inverse(Matrix(f5, entries))
        assert index == ref.index
        assert [[int(v) for v in row] for row in d.value] == [
            list(row) for row in ref.inverse.entries
        ]
