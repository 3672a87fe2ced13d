"""
Distances, edit scripts, and the file formats
=============================================

Shows the DP distance with a custom cost table, the script it explains
itself with, and the plain-text formats the CLI reads and writes.
"""

import tempfile
from pathlib import Path

from medianstring import (
    Alphabet,
    StringSet,
    apply_op,
    apply_script,
    distance,
    distance_with_script,
    load_cost_matrix,
    load_strings,
    ring_costs,
    save_cost_matrix,
    save_strings,
)

# A ring alphabet of 8 symbols: substituting a -> b costs the circular
# distance between them, like direction codes on a contour.
alpha = Alphabet.from_string("01234567")
model = ring_costs(alpha)
print("cost(0,1) =", model.cost("0", "1"), " cost(0,4) =", model.cost("0", "4"))
print("indel     =", model.cost("0", ""))

s, t = "0012334", "012344"
d, script = distance_with_script(s, t, model)
print(f"\nd({s}, {t}) = {d}")
for op in script.ops:
    print(" ", op)

# Applying the whole script reproduces the target. Applying any single op
# moves the candidate exactly that op's cost closer to it.
assert apply_script(s, script) == t
one = script.ops[0]
partial = apply_op(s, one)
print(f"after {one}: {partial}, d = {distance(partial, t, model)}")

# The string file format is one member per line with an alphabet header,
# optionally labeled. The cost format is a tab-separated matrix whose
# header row names the symbols plus the empty-symbol column.
with tempfile.TemporaryDirectory() as tmp:
    strings_path = Path(tmp) / "members.txt"
    costs_path = Path(tmp) / "ring.costs"
    save_strings(StringSet((s, t, "01234"), alpha), strings_path)
    save_cost_matrix(model, costs_path)
    print("\n" + strings_path.read_text(), end="")
    print(costs_path.read_text(), end="")

    back = load_strings(strings_path)
    again = load_cost_matrix(costs_path)
    assert back.members == (s, t, "01234")
    assert again.cost("0", "4") == model.cost("0", "4")
