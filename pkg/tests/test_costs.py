"""Cost-model construction, validation, and the builtin models."""

import numpy as np
import pytest

from medianstring import Alphabet, CostModel, ring_costs, unit_costs, validate_cost_model
from medianstring.costs import ASYMMETRIC, NONZERO_DIAGONAL, TRIANGLE


def test_constructor_enforces_shape_and_sign():
    ab = Alphabet.from_string("ab")
    with pytest.raises(ValueError, match="3x3"):
        CostModel(ab, np.zeros((2, 2)))
    bad = np.zeros((3, 3))
    bad[0, 1] = -1.0
    with pytest.raises(ValueError, match="non-negative"):
        CostModel(ab, bad)
    with pytest.raises(ValueError, match="finite"):
        CostModel(ab, np.full((3, 3), np.inf))


def test_eps_eps_entry_is_normalized():
    ab = Alphabet.from_string("ab")
    mat = np.ones((3, 3))
    np.fill_diagonal(mat, 0.0)
    mat[2, 2] = 7.0
    model = CostModel(ab, mat)
    assert model.costs[2, 2] == 0.0


def test_triangle_violation_reported_with_witness():
    # rewriting 0 into 1 directly costs 5 but going through 2 costs 1 + 1
    ab = Alphabet.from_string("012")
    mat = np.array(
        [
            [0.0, 5.0, 1.0, 3.0],
            [5.0, 0.0, 1.0, 3.0],
            [1.0, 1.0, 0.0, 3.0],
            [3.0, 3.0, 3.0, 0.0],
        ]
    )
    model = CostModel(ab, mat)
    violations = model.validate()
    assert (TRIANGLE, 0, 2, 1) in violations
    assert model.metric_validated is False


def test_asymmetry_and_diagonal_reported():
    ab = Alphabet.from_string("ab")
    mat = np.array([[0.0, 2.0, 1.0], [3.0, 0.5, 1.0], [1.0, 1.0, 0.0]])
    violations = validate_cost_model(CostModel(ab, mat))
    assert (ASYMMETRIC, 0, 1) in violations
    assert (NONZERO_DIAGONAL, 1) in violations


def test_unit_costs_are_metric():
    model = unit_costs(Alphabet.from_string("abcd"))
    assert model.metric_validated
    assert model.cost("a", "a") == 0.0
    assert model.cost("a", "b") == 1.0
    assert model.cost("a", "") == 1.0
    assert model.cost("", "b") == 1.0


def test_ring_costs_shape_and_values():
    model = ring_costs(Alphabet.from_string("01234567"))
    assert model.metric_validated
    assert model.cost("0", "1") == 1.0
    assert model.cost("0", "7") == 1.0
    assert model.cost("0", "4") == 4.0
    assert model.cost("2", "6") == 4.0
    assert model.cost("0", "") == 2.0
    assert model.cost("", "5") == 2.0


def test_ring_costs_larger_alphabet_is_metric():
    model = ring_costs(Alphabet.from_string("ABCDEFGHIJKLMNOPQRSTUVW"))
    assert model.alphabet.size == 23
    assert model.metric_validated
    assert model.cost("A", "L") == 11.0
    assert model.cost("A", "") == 6.0


def test_scaled_model():
    model = unit_costs(Alphabet.from_string("ab"))
    doubled = model.scaled(2.0)
    assert doubled.cost("a", "b") == 2.0
    with pytest.raises(ValueError):
        model.scaled(0.0)


def test_tolerance_tracks_integer_valuedness():
    ab = Alphabet.from_string("ab")
    ints = unit_costs(ab)
    assert ints.tolerance == 0.0
    mat = np.ones((3, 3)) * 0.5
    np.fill_diagonal(mat, 0.0)
    floats = CostModel(ab, mat)
    assert floats.tolerance == 1e-9


def test_alphabet_basics():
    ab = Alphabet.from_string("abc")
    assert ab.size == 3
    assert ab.eps_code == 3
    assert ab.code("b") == 1
    assert ab.code("") == 3
    assert ab.symbol(3) == ""
    assert "a" in ab and "z" not in ab
    assert ab.decode(ab.encode("cab")) == "cab"
    with pytest.raises(ValueError):
        ab.code("z")
    with pytest.raises(ValueError):
        Alphabet.from_string("aa")
    with pytest.raises(ValueError):
        Alphabet.from_string("a b")
