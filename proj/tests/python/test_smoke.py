from fractions import Fraction

import pytest

import hypernorm as hn


def test_norm_of_triangle():
    r = hn.norm(3, [[1, 2], [2, 3], [1, 3]])
    assert r["value"] == Fraction(3, 2)
    assert sum(r["primal"]) == sum(r["dual"]) == Fraction(3, 2)
    assert not r["infinite"]


def test_norm_with_empty_set_is_infinite():
    r = hn.norm(2, [[], [1]])
    assert r["infinite"]
    assert r["value"] is None
    assert r["reciprocal"] == 0


def test_special_families_match_closed_forms():
    for n in range(2, 7):
        for k in range(1, n):
            assert hn.norm(n, hn.k_subsets_family(n, k))["value"] == Fraction(n, k)
            assert hn.norm(n, hn.cyclic_family(n, k))["value"] == Fraction(n, k)
            if k > 1:
                assert hn.norm(n, hn.degenerate_family(n, k))["value"] == hn.degenerate_norm(n, k)
                x, y = hn.degenerate_certificates(n, k)
                assert sum(x) == sum(y) == hn.degenerate_norm(n, k)


def test_projection_inequalities():
    sizes, tuples = [2, 2, 2], [[0, 0, 0], [1, 1, 0], [1, 0, 1]]
    triangle = [[1, 2], [2, 3], [1, 3]]
    assert hn.relative_size(sizes, tuples) == Fraction(3, 8)
    assert hn.shearer_check(sizes, tuples, 3, triangle)["holds"]
    constant = [Fraction(1, 3)] * 3
    assert hn.shearer_check(sizes, tuples, 3, triangle, constant)["holds"]
    assert hn.geometric_witness(sizes, tuples, 3, triangle)["holds"]
    assert hn.loomis_whitney(sizes, tuples)["holds"]
    box = hn.sharp_box(3, triangle, Fraction(1, 2))
    assert box["ok"]
    assert sum(box["exponents"]) == 1


def test_cost_calculus():
    beta = [Fraction(0), Fraction(1, 2), Fraction(3, 4)]
    assert hn.cost(beta, 1, 0, 2) == Fraction(3, 4)
    assert hn.cost(beta, 1, 3, 2) == 0
    stages = ["00", "01", "11"]
    total = hn.total_cost(beta, 1, stages)
    assert total["exact"] and total["value"] == (Fraction(3, 4), Fraction(3, 4))
    weak = hn.weak_total_cost(beta, Fraction(1, 2), stages)
    ident = hn.i_weak_total_cost(beta, Fraction(1, 2), stages, [0, 1, 2])
    assert weak == ident
    c, blocks = hn.change_set(["00", "01", "11", "01"], [2, 1])
    assert c == ["000", "001", "101", "111"]
    assert blocks == [0, 2, 3]


def test_entropy_and_balls():
    assert hn.entropy(Fraction(1, 2)) == (1, 1)
    assert hn.entropy(0) == (0, 0)
    lo, hi = hn.entropy(Fraction(1, 4), Fraction(1, 2**40))
    assert lo <= hi and hi - lo <= Fraction(1, 2**40)
    assert hn.ball_size(10, Fraction(3, 10)) == 176
    assert hn.ball_bound_check(64, Fraction(1, 2))["verdict"] == "hold"
    d = hn.delta_threshold(Fraction(1, 10))
    assert d["delta"] <= Fraction(1, 4)
    assert d["entropy_at_2delta"][1] < Fraction(9, 10)
    assert hn.hamming_density("0011", "0101") == Fraction(1, 2)


def test_errors_map_to_value_error():
    with pytest.raises(ValueError):
        hn.norm(2, [[3]])
    with pytest.raises(ValueError):
        hn.entropy(Fraction(3, 2))
    with pytest.raises(ValueError):
        hn.cyclic_family(3, 3)
