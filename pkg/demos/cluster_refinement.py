"""
Three rankings on one noisy cluster
===================================

Generates a cluster of strings perturbed from a hidden center, then lets
each ranking heuristic repair the set median and prints the trajectories.
"""

from medianstring import (
    DatasetSpec,
    distance,
    gen_dataset,
    planted_center,
    refine_from_set_median,
    ring_costs,
    sum_distances,
)

spec = DatasetSpec(
    kind="perturbed_cluster",
    alphabet_size=8,
    count=30,
    mean_length=40,
    noise_rate=0.2,
    seed=42,
)
strset = gen_dataset(spec)
model = ring_costs(strset.alphabet)
center = planted_center(spec)
print(f"{spec.count} members of length ~{spec.mean_length}, noise {spec.noise_rate}")
print("planted center:", center)
print("its sum of distances:", sum_distances(center, strset, model))

# All three start from the set member closest to the rest. The counting
# heuristics rank demanded ops by popularity; the repercussion ranking also
# estimates what each op would do to everyone who asked for something else.
for scorer in ("frequency", "frequency_cost", "repercussion"):
    median, trace = refine_from_set_median(strset, scorer, model)
    sums = [f"{e.sum_distances:.0f}" for e in trace.entries]
    print(f"\n{scorer}")
    print("  sums per iteration:", " ".join(sums))
    print("  final sum:", trace.final.sum_distances)
    print("  ops probed:", sum(e.ops_dequeued for e in trace.entries))
    print("  distance to planted center:", distance(median, center, model))
