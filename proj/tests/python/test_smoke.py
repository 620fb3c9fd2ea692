"""Smoke tests for the Python bindings: worked values plus quick properties."""

import random

import pytest

import chaincover as cc

RM13_ROWS = [
    [1, 1, 1, 1, 0, 0, 0, 0],
    [1, 1, 0, 0, 1, 1, 0, 0],
    [1, 0, 1, 0, 1, 0, 1, 0],
    [1, 1, 1, 1, 1, 1, 1, 1],
]
V0 = [1, 0, 0, 1, 1, 1, 0, 1]
HAMMING74 = [
    [1, 0, 0, 0, 1, 1, 0],
    [0, 1, 0, 0, 1, 0, 1],
    [0, 0, 1, 0, 0, 1, 1],
    [0, 0, 0, 1, 1, 1, 1],
]


def test_dimension_and_weights():
    assert cc.rho(1, 3) == 4
    assert cc.rho(2, 4) == 11
    assert cc.ghw_rm(2, 1, 3) == [4, 6, 7, 8]
    assert cc.ghw_rm(3, 1, 2) == [6, 8, 9]
    assert [cc.ghw_binary(t, 1, 3) for t in range(1, 5)] == [4, 6, 7, 8]
    assert cc.canonical_rep(5, 2, 3) == [(1, 2), (1, 1)]


def test_chained_generator_golden():
    ch = cc.chained_rm(2, 1, 3)
    assert ch["rows"] == RM13_ROWS
    assert ch["d"] == [4, 6, 7, 8]
    assert ch["perm"] == list(range(1, 9))
    assert ch["q"] == 2


def test_bounds():
    assert cc.mu_rm(2, 1, 3, 1) == 3
    assert cc.mu_rm(2, 1, 3, 2) == 4
    assert cc.mu_from_d([4, 6, 7, 8], 8, 2, 1) == 3
    assert cc.recursive_bound(2, 2, 4) == 5
    assert cc.recursive_bound(1, 2, 4) == 4


def test_canonicalize():
    ch = cc.canonicalize(2, HAMMING74)
    assert ch["d"] == [3, 5, 6, 7]
    assert sorted(ch["perm"]) == list(range(1, 8))


def test_cover_worked_example():
    res = cc.cover(2, 1, 3, [V0])
    assert res["codewords"] == [[0, 1, 0, 1, 0, 1, 0, 1]]
    assert res["support"] == [1, 2, 5]
    assert res["bound"] == 3
    assert res["trace"] == [0, 0, 1, 1]

    res_max = cc.cover(2, 1, 3, [V0], tie="max")
    assert res_max["codewords"] == [[1, 0, 0, 1, 1, 0, 0, 1]]
    assert res_max["support"] == [6]


def test_cover_chained_matches_builtin():
    direct = cc.cover_chained(2, RM13_ROWS, [4, 6, 7, 8], [V0])
    built_in = cc.cover(2, 1, 3, [V0])
    assert direct == built_in


def test_cover_rm():
    res = cc.cover_rm(1, 3, [V0])
    assert res["support"] == [1, 2, 5]
    assert res["bound"] == 3
    assert res["joint_support_size"] >= 0
    assert res["split_support_size"] >= 0
    assert len(res["support"]) == min(
        res["joint_support_size"], res["split_support_size"]
    )


def test_cover_random_property():
    rng = random.Random(20260817)
    for t in (1, 2):
        mu = cc.mu_rm(2, 2, 4, t)
        for _ in range(25):
            targets = [[rng.randrange(2) for _ in range(16)] for _ in range(t)]
            res = cc.cover(2, 2, 4, targets)
            assert len(res["support"]) <= mu
            for cw, residual, target in zip(
                res["codewords"], res["residuals"], targets
            ):
                assert [(a + b) % 2 for a, b in zip(cw, residual)] == target


def test_oracles():
    assert cc.exact_radius(2, RM13_ROWS) == 2
    assert cc.exact_radius(2, RM13_ROWS, t=2) == 3
    assert cc.exact_ghw(2, HAMMING74) == [3, 5, 6, 7]
    codeword, distance = cc.exact_nearest(2, RM13_ROWS, V0)
    assert distance == 1
    assert codeword == [1, 0, 0, 1, 1, 0, 0, 1]


def test_sweeps():
    csv = cc.sweep_mu([(2, 1, 3)], 2)
    assert csv == "q,r,m,t,n,k,mu_t\n2,1,3,1,8,4,3\n2,1,3,2,8,4,4\n"
    exact = cc.sweep_exact([(2, 1, 3)], 1, jobs=2)
    assert exact.splitlines()[1] == "2,1,3,1,8,4,3,2,1.5000"


def test_errors_surface_as_value_errors():
    with pytest.raises(ValueError):
        cc.ghw_rm(6, 1, 2)  # not a prime power
    with pytest.raises(ValueError):
        cc.cover(2, 1, 3, [])  # no targets
    with pytest.raises(ValueError):
        cc.exact_radius(3, [[1] * 9], t=4)  # beyond the state budget
