import random

import pytest

from shiftgen.rootsys import build_root_system
from shiftgen.weights import (
    common_zero_runs,
    digit_difference,
    digit_expand,
    dominance_leq,
    format_weight,
    is_b_small,
    is_b_small_exhaustive,
    is_restricted,
    lattice_order,
    longest_common_zero_run,
    parse_weight,
    q_shift,
)

A1 = build_root_system("A1")
A2 = build_root_system("A2")


def test_digit_expansion_examples():
    assert digit_expand(A1, (7,), 2).digits == ((1,), (1,), (1,))
    assert digit_expand(A2, (5, 1), 3).digits == ((2, 1), (1, 0))
    assert digit_expand(A2, (0, 0), 5, 3).digits == ((0, 0),) * 3


def test_digit_expansion_roundtrip():
    rng = random.Random(7)
    for _ in range(300):
        rs = random.Random(rng.random()).choice([A1, A2])
        p = rng.choice([2, 3, 5, 7])
        r = rng.randint(1, 6)
        lam = tuple(rng.randrange(p**r) for _ in range(rs.rank))
        exp = digit_expand(rs, lam, p, r)
        assert exp.reconstruct() == lam
        assert all(all(0 <= x < p for x in d) for d in exp.digits)


def test_q_shift_examples():
    assert q_shift(A1, (1,), 2, 3, 1) == (2,)
    assert q_shift(A1, (7,), 2, 3, 2) == (7,)
    assert q_shift(A1, (5,), 2, 3, 3) == (5,)  # full cycle is the identity


def test_digit_difference_examples():
    assert digit_difference(A1, (5,), (6,), 2, 3) == 2  # 101 vs 011
    assert digit_difference(A1, (7,), (7,), 2, 3) == 0
    assert digit_difference(A1, (7,), (0,), 2, 3) == 3


def test_common_zero_runs_examples():
    # digits of 17 base 2 over 5 positions: (1,0,0,0,1); of 1: (1,0,0,0,0)
    assert common_zero_runs(A1, (17,), (1,), 2, 5, epsilon=1) == [(1, 3)]
    assert longest_common_zero_run(A1, (0,), (0,), 2, 6) == (0, 6)
    assert longest_common_zero_run(A1, (7,), (7,), 2, 3) == (3, 0)


def test_restriction_examples():
    assert is_restricted(A1, (1,), 2, 1)
    assert not is_restricted(A1, (2,), 2, 1)
    assert is_restricted(A1, (0,), 2, 0)  # 0 is the only p^0-restricted weight
    assert not is_restricted(A1, (1,), 2, 0)


def test_b_small_examples_and_oracle():
    assert is_b_small(A1, (3,), 3)
    assert not is_b_small(A1, (3,), 2)
    assert is_b_small(A2, (1, 1), 2)
    assert is_b_small(A2, (0, 0), 0)
    rng = random.Random(11)
    b3 = build_root_system("B3")
    for _ in range(200):
        rs = [A2, b3][rng.randrange(2)]
        lam = tuple(rng.randint(-4, 4) for _ in range(rs.rank))
        b = rng.randint(0, 8)
        if rs.is_dominant(lam):
            assert is_b_small(rs, lam, b) == is_b_small_exhaustive(rs, lam, b)


def test_lattice_order_examples():
    assert lattice_order(A1, (1,), 2) == (2, 2, 1)
    assert lattice_order(A1, (1,), 3) == (2, 1, 1)
    assert lattice_order(A1, (0,)) == (1, 1, 0)
    t_lam, _, c_bar = lattice_order(A2, (1, 0))
    assert (t_lam, c_bar) == (3, 2)


def test_dominance_examples():
    assert dominance_leq(A1, (3,), (3,))
    assert dominance_leq(A1, (1,), (3,))
    assert not dominance_leq(A1, (0,), (1,))


def test_weight_literals():
    assert parse_weight("[2,0,1]") == (2, 0, 1)
    assert parse_weight(" [ 5 ] ") == (5,)
    assert format_weight((2, 0, 1)) == "[2,0,1]"
    with pytest.raises(ValueError):
        parse_weight("2,0,1")
    with pytest.raises(ValueError):
        parse_weight("[1,2]", rank=3)


def test_shift_action_and_metric_laws():
    rng = random.Random(23)
    for _ in range(500):
        rs = [A1, A2][rng.randrange(2)]
        p = rng.choice([2, 3, 5])
        r = rng.randint(1, 5)
        lam, mu, nu = (
            tuple(rng.randrange(p**r) for _ in range(rs.rank)) for _ in range(3)
        )
        e1, e2 = rng.randrange(2 * r), rng.randrange(2 * r)
        # group action of Z/rZ
        assert q_shift(rs, q_shift(rs, lam, p, r, e1), p, r, e2) == \
            q_shift(rs, lam, p, r, (e1 + e2) % r)
        assert q_shift(rs, lam, p, r, 0) == lam
        assert q_shift(rs, lam, p, r, r) == lam
        # metric axioms plus shift invariance
        d_lm = digit_difference(rs, lam, mu, p, r)
        assert d_lm == digit_difference(rs, mu, lam, p, r)
        assert (d_lm == 0) == (lam == mu)
        assert d_lm <= digit_difference(rs, lam, nu, p, r) + \
            digit_difference(rs, nu, mu, p, r)
        e = rng.randrange(r)
        assert digit_difference(
            rs, q_shift(rs, lam, p, r, e), q_shift(rs, mu, p, r, e), p, r
        ) == d_lm
