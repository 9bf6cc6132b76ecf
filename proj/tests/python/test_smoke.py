import pytest

import bsgroup


def test_reduce_and_equality():
    assert bsgroup.reduce(2, 3, "t a^2 t^-1") == "a^3"
    assert bsgroup.is_identity(2, 3, "a^-3 t a^2 t^-1")
    assert bsgroup.are_equal(2, 3, "t a^2 t^-1", "a^3")
    assert not bsgroup.are_equal(2, 3, "t", "a")


def test_normal_form():
    nf = bsgroup.normal_form(2, 3, "a^2 t^-1")
    assert nf["prefix"] == [(-1, 0)]
    assert nf["tail"] == 3


def test_tree_and_indices():
    assert [bsgroup.ball_size(2, 3, r) for r in range(3)] == [1, 6, 26]
    assert bsgroup.tree_dot(2, 3, 1).startswith("digraph bass_serre {")
    assert bsgroup.orbit_index(2, 3, "t") == 3
    assert bsgroup.orbit_index(2, 3, "t^-1") == 2
    assert bsgroup.min_index(3, 6, 2) == 3
    assert bsgroup.commensuration_exponent(2, 3, "t^2") == 4
    assert bsgroup.finite_index_intersection(2, 3, ["t^-1", "t"]) == 6
    assert bsgroup.acts_trivially(2, 2, "a^2", 3)


def test_invariants_and_classifier():
    assert bsgroup.modular_delta(2, 3, "t^-2") == (4, 9)
    assert bsgroup.scale_set(4, 6) == (2, 3)
    assert bsgroup.scale_member(4, 6, 2**200)
    assert not bsgroup.scale_member(4, 6, 6)
    assert not bsgroup.g_isomorphic((2, 3), (-2, 3))["isomorphic"]
    v = bsgroup.product_isomorphic([(2, 3), (4, 4)], [(-4, 4), (2, 3)])
    assert v["isomorphic"] and v["sigma"] == [2, 1]


def test_errors():
    with pytest.raises(bsgroup.ParseError):
        bsgroup.reduce(2, 3, "a^0")
    with pytest.raises(bsgroup.InvalidParameters):
        bsgroup.reduce(0, 3, "a")
    with pytest.raises(bsgroup.CapExceeded):
        bsgroup.ball_size(2, 3, 3, cap=10)
    with pytest.raises(bsgroup.OutOfHypothesis):
        bsgroup.g_isomorphic((1, 3), (2, 3))
