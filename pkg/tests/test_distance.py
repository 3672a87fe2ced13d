"""Distance, canonical scripts, and script application."""

import os
import subprocess
import sys

import numpy as np
import pytest

from medianstring import (
    Alphabet,
    CostModel,
    EditOp,
    apply_op,
    apply_script,
    builtin_table1,
    distance,
    distance_with_script,
    unit_costs,
)
from medianstring.distance import EditScript

from oracles import oracle_distance, random_band_metric, random_string


def test_unit_distance_classic_pair():
    ab = Alphabet.from_string("eginkst")
    model = unit_costs(ab)
    assert distance("kitten", "sitting", model) == 3.0
    # cross-check against the brute-force recursion
    assert oracle_distance("kitten", "sitting", model.cost) == 3.0


def test_worked_example_distances():
    model = builtin_table1()
    assert distance("2", "0", model) == 2.0
    assert distance("2", "1", model) == 1.0
    assert distance("2", "4", model) == 2.0
    assert distance("0", "4", model) == 4.0
    assert distance("1", "4", model) == 3.0


def test_insertion_script_uses_gap_positions():
    model = builtin_table1()
    d, script = distance_with_script("2", "24", model)
    assert d == 2.0
    assert script.ops == (EditOp(1, "", "4"),)
    assert apply_script("2", script) == "24"


def test_matches_are_not_recorded():
    model = unit_costs(Alphabet.from_string("ab"))
    _, script = distance_with_script("ab", "ab", model)
    assert script.ops == ()
    assert script.total_cost == 0.0


def test_traceback_prefers_substitution_on_ties():
    # "ab" -> "ba" costs 2 either as two substitutions or delete+insert;
    # the canonical script must pick the substitutions.
    model = unit_costs(Alphabet.from_string("ab"))
    d, script = distance_with_script("ab", "ba", model)
    assert d == 2.0
    assert script.ops == (EditOp(0, "a", "b"), EditOp(1, "b", "a"))


def test_script_positions_are_source_coordinates():
    model = unit_costs(Alphabet.from_string("abcdx"))
    d, script = distance_with_script("abc", "axbcd", model)
    assert d == 2.0
    kinds = [(op.kind, op.pos, op.dst) for op in script.ops]
    assert kinds == [("ins", 1, "x"), ("ins", 3, "d")]
    assert apply_script("abc", script) == "axbcd"


def test_empty_string_scripts():
    model = builtin_table1()
    d, script = distance_with_script("", "14", model)
    assert d == 4.0
    assert script.ops == (EditOp(0, "", "1"), EditOp(0, "", "4"))
    assert apply_script("", script) == "14"
    d2, script2 = distance_with_script("14", "", model)
    assert d2 == 4.0
    assert [op.kind for op in script2.ops] == ["del", "del"]


def test_distance_rejects_foreign_symbols():
    model = builtin_table1()
    with pytest.raises(ValueError, match="not in the alphabet"):
        distance("2x", "1", model)
    with pytest.raises(ValueError, match="not in the alphabet"):
        distance("2", "z", model)


def test_apply_op_basic_and_errors():
    assert apply_op("abc", EditOp(1, "b", "x")) == "axc"
    assert apply_op("abc", EditOp(1, "b", "")) == "ac"
    assert apply_op("abc", EditOp(3, "", "z")) == "abcz"
    assert apply_op("abc", EditOp(0, "", "z")) == "zabc"
    with pytest.raises(ValueError, match="expects"):
        apply_op("abc", EditOp(1, "c", "x"))
    with pytest.raises(ValueError, match="outside"):
        apply_op("abc", EditOp(3, "c", "x"))
    with pytest.raises(ValueError, match="outside"):
        apply_op("abc", EditOp(4, "", "x"))


def test_edit_op_validation():
    with pytest.raises(ValueError):
        EditOp(0, "", "")
    with pytest.raises(ValueError):
        EditOp(-1, "a", "b")
    assert EditOp(0, "a", "b").kind == "sub"
    assert EditOp(0, "a", "").kind == "del"
    assert EditOp(0, "", "b").kind == "ins"


def test_apply_script_checks_source_and_order():
    model = unit_costs(Alphabet.from_string("ab"))
    _, script = distance_with_script("ab", "ba", model)
    with pytest.raises(ValueError, match="source"):
        apply_script("ba", script)
    bad = EditScript("ab", "ba", tuple(reversed(script.ops)), 2.0)
    with pytest.raises(ValueError, match="order"):
        apply_script("ab", bad)


def test_apply_script_flags_inconsistent_target():
    lying = EditScript("ab", "zz", (EditOp(0, "a", "b"),), 1.0)
    with pytest.raises(ValueError, match="inconsistent"):
        apply_script("ab", lying)


def test_same_gap_insertions_apply_in_script_order():
    model = builtin_table1()
    d, script = distance_with_script("1", "041", model)
    # both insertions demand gap 0; applying the script must restore "041"
    assert [op.pos for op in script.ops] == [0, 0]
    assert apply_script("1", script) == "041"
    assert d == 4.0


def test_script_total_matches_sum_of_op_costs():
    rng = np.random.default_rng(5)
    ab = Alphabet.from_string("abc")
    model = random_band_metric(ab, rng)
    for _ in range(50):
        s1 = random_string(rng, "abc", 7)
        s2 = random_string(rng, "abc", 7)
        d, script = distance_with_script(s1, s2, model)
        assert d == sum(model.cost(op.src, op.dst) for op in script.ops)
        assert apply_script(s1, script) == s2


def test_python_fallback_matches_numba_backend():
    """The pure-Python kernels must agree with the JIT path exactly."""
    rng = np.random.default_rng(11)
    ab = Alphabet.from_string("abc")
    model = random_band_metric(ab, rng)
    pairs = [
        (random_string(rng, "abc", 8), random_string(rng, "abc", 8))
        for _ in range(40)
    ]
    expected = [distance(a, b, model) for a, b in pairs]
    prog = (
        "import sys, json\n"
        "from medianstring import Alphabet, CostModel, distance\n"
        "import numpy as np\n"
        "spec = json.load(sys.stdin)\n"
        "model = CostModel(Alphabet.from_string(spec['alphabet']),"
        " np.array(spec['costs']))\n"
        "print(json.dumps([distance(a, b, model) for a, b in spec['pairs']]))\n"
    )
    import json

    env = dict(os.environ, MEDIANSTRING_NO_NUMBA="1")
    proc = subprocess.run(
        [sys.executable, "-c", prog],
        input=json.dumps(
            {"alphabet": "abc", "costs": model.costs.tolist(), "pairs": pairs}
        ),
        capture_output=True,
        text=True,
        env=env,
    )
    assert proc.returncode == 0, proc.stderr
    assert json.loads(proc.stdout) == expected
