"""
A four-symbol refinement, step by step
======================================

Walks the small example from the test suite: three one-symbol strings,
a candidate that sits between them, and one ranked edit that fixes it.
"""

from medianstring import (
    StringSet,
    builtin_table1,
    collect_stats,
    refine,
    score_repercussion,
    sum_distances,
)

# The built-in demo cost table covers the symbols 0, 1, 2, 4. Substituting
# 2 -> 1 costs 1, but 2 -> 4 costs 2, and indels cost 2 across the board.
model = builtin_table1()
print("alphabet:", "".join(model.alphabet.symbols))
print(model.costs)

# Three members, one symbol each. The candidate "2" has distance 2, 1, 2
# to them, so its sum is 5.
strset = StringSet(("0", "1", "4"), model.alphabet)
print("\nsum of distances from '2':", sum_distances("2", strset, model))

# Each member demands one substitution at position 0. The ranking scores
# every demanded op by its direct gain plus the estimated side effect on
# the members that asked for something else.
stats, total, _ = collect_stats("2", strset, model)
for so in score_repercussion(stats, model):
    print(
        f"  {so.op.src}->{so.op.dst}: direct {so.direct_gain:+.0f}, "
        f"indirect {so.indirect_delta:+.0f}, total {so.total_score:+.0f}"
    )

# 2 -> 1 ranks first and is the only op that actually helps: it saves 1
# against member "1" and costs nothing extra against the others. refine
# probes it first, accepts it, and the next pass finds nothing better.
median, trace = refine(strset, "2", "repercussion", model)
print("\nrefined median:", median)
print("final sum:", trace.final.sum_distances)
print("ops probed in the accepting pass:", trace.entries[0].ops_dequeued)
