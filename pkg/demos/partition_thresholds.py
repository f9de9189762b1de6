"""Threshold tables: what a detection value must exceed to rule out each
k-product hypothesis, and where those numbers come from.

The k-product threshold is the largest partition bound over k-part
partitions; the table verifies the closed form against brute-force
enumeration. The bipartition (depth) thresholds order the two-part bounds.
"""
from entmon import (
    depth_threshold,
    enumerate_partitions,
    genuine_threshold,
    min_entangled_block,
    partition_bound,
    s_threshold,
    verify_partition_term_max,
)

print("k-product thresholds s_k (exceeding s_k => not k-product):")
print("n\\k " + " ".join(f"{k:>5}" for k in range(2, 10)))
for n in range(3, 11):
    row = [f"{s_threshold(n, k):>5g}" if k <= n - 1 else "    ." for k in range(2, 10)]
    print(f"{n:<3} " + " ".join(row))
print()

print("genuine-multipartite thresholds:", {n: genuine_threshold(n) for n in range(3, 11)})
print()

print("closed form vs enumeration for n = 9:")
for k in range(2, 9):
    brute = max(partition_bound(p) for p in enumerate_partitions(9, k))
    rec = verify_partition_term_max(9, k)
    print(
        f"  k={k}: s_k={s_threshold(9, k):g}  brute-force max bound={brute:g}  "
        f"pair-count max {rec.max_value:g} at {rec.maximizer} (matches: {rec.matches})"
    )
print()

print("bipartition depth thresholds for n = 9 (exceeding the m-th rules out")
print("every bipartition whose smaller side has >= m parties):")
for m in range(1, 9 // 2):
    print(f"  m={m}: {depth_threshold(9, m):g}")
print()

print("not-k-product => mutually entangled subset of at least ceil(n/(k-1)):")
for n, k in [(7, 3), (9, 4), (12, 5)]:
    print(f"  n={n}, not {k}-product -> subset of >= {min_entangled_block(n, k)}")
