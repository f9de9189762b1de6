"""Pairwise in-plane correlation quantities, monogamy bounds, and
k-product exclusion logic.

The central quantity for a qubit pair (k, l) is the sum of the four squared
correlation-block entries with both indices in the xy plane, evaluated in
per-qubit frames; summed over all pairs in preferred frames it becomes the
detection value M^(pb). A pure state that factors as a product over a
partition (r_1, ..., r_k) can reach at most sum C(r_m, 2) + #{r_m = 2}, so
exceeding that bound excludes the partition.

All functions are pure over immutable inputs; stress runs derive per-trial
seeds from the master seed (seed + trial index) so results are reproducible
regardless of scheduling.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

import numpy as np

from .frames import (
    EPS_BLOCH,
    MAXIMIZE,
    ZeroPolicy,
    preferred_frame,
    random_rotation,
    rotation_to_z,
)
from .statevec import PureState, make_random_haar
from .tensor import (
    bloch_vector,
    pair_block,
    reduced_density_pair,
    reduced_density_single,
)

# strict-inequality margin for every exclusion verdict: the criteria require
# ">", and the margin keeps rounding from manufacturing entanglement claims
EPS_DET = 1e-9

PAIR_BOUND = 2.0
TWO_TERM_BOUND = 2.0
TRIPLE_BOUND = 3.0

# restarts for the maximize zero-policy search (identity start + this many
# random starts drawn from the candidate axes)
_MAXIMIZE_RESTARTS = 4

_SIGNED_AXES = [
    (1.0, 0.0, 0.0),
    (-1.0, 0.0, 0.0),
    (0.0, 1.0, 0.0),
    (0.0, -1.0, 0.0),
    (0.0, 0.0, 1.0),
    (0.0, 0.0, -1.0),
]


def _check_frames(n: int, frames) -> None:
    if len(frames) != n:
        raise ValueError(f"expected {n} frames, got {len(frames)}")


def _inplane_sq(block: np.ndarray, R_k: np.ndarray, R_l: np.ndarray) -> float:
    B = R_k @ block @ R_l.T
    return float(B[0, 0] ** 2 + B[0, 1] ** 2 + B[1, 0] ** 2 + B[1, 1] ** 2)


def _pair_blocks(state: PureState) -> dict[tuple[int, int], np.ndarray]:
    return {
        (k, l): pair_block(reduced_density_pair(state, k, l))
        for k, l in combinations(range(state.n), 2)
    }


def m_kl(state: PureState, frames, k: int, l: int) -> float:
    """Sum of the four squared in-plane block entries of pair (k, l) in the
    given frames; always in [0, 2]."""
    _check_frames(state.n, frames)
    block = pair_block(reduced_density_pair(state, k, l))
    return _inplane_sq(block, frames[k], frames[l])


def m_total(state: PureState, frames) -> float:
    """Sum of m_kl over all qubit pairs in the given frames."""
    _check_frames(state.n, frames)
    return sum(
        _inplane_sq(block, frames[k], frames[l])
        for (k, l), block in _pair_blocks(state).items()
    )


def m_pb(state: PureState, policy: ZeroPolicy | None = None) -> float:
    """Detection value: m_total in per-qubit preferred frames.

    For the maximize policy, qubits with vanishing Bloch vector get their z
    axis chosen by seeded random-restart coordinate ascent over the policy's
    candidate axes; the result is a lower bound on the supremum and every
    candidate is a valid preferred basis, so detection stays sound.
    """
    policy = policy or ZeroPolicy.canonical()
    n = state.n
    if n == 1:
        return 0.0
    blochs = [bloch_vector(reduced_density_single(state, k)) for k in range(n)]
    frames = [preferred_frame(b, policy) for b in blochs]
    blocks = _pair_blocks(state)
    zero = [k for k, b in enumerate(blochs) if float(np.linalg.norm(b)) <= EPS_BLOCH]
    if policy.mode == MAXIMIZE and zero:
        return _maximize_zero_axes(blocks, frames, zero, policy, n)
    return sum(_inplane_sq(blocks[(k, l)], frames[k], frames[l]) for k, l in blocks)


def _maximize_zero_axes(blocks, base_frames, zero, policy: ZeroPolicy, n: int) -> float:
    rng = np.random.default_rng(policy.seed)
    candidates: dict[int, list[np.ndarray]] = {}
    for q in zero:  # fixed qubit order keeps the draw sequence deterministic
        axes = rng.standard_normal((policy.samples, 3))
        norms = np.linalg.norm(axes, axis=1)
        degenerate = norms < 1e-12
        axes[degenerate] = (0.0, 0.0, 1.0)
        norms[degenerate] = 1.0
        axes /= norms[:, None]
        candidates[q] = [rotation_to_z(a) for a in _SIGNED_AXES] + [
            rotation_to_z(a) for a in axes
        ]

    pairs = list(blocks)
    pairs_of = {q: [p for p in pairs if q in p] for q in zero}

    def total(frames) -> float:
        return sum(_inplane_sq(blocks[(k, l)], frames[k], frames[l]) for k, l in pairs)

    def local_sum(frames, q) -> float:
        return sum(_inplane_sq(blocks[(k, l)], frames[k], frames[l]) for k, l in pairs_of[q])

    starts = [{q: None for q in zero}]
    for _ in range(_MAXIMIZE_RESTARTS):
        starts.append({q: int(rng.integers(len(candidates[q]))) for q in zero})

    best = -math.inf
    for start in starts:
        frames = list(base_frames)
        for q, idx in start.items():
            if idx is not None:
                frames[q] = candidates[q][idx]
        value = total(frames)
        while True:
            before = value
            for q in zero:
                current = local_sum(frames, q)
                best_local, best_frame = current, None
                saved = frames[q]
                for F in candidates[q]:
                    frames[q] = F
                    s = local_sum(frames, q)
                    if s > best_local:
                        best_local, best_frame = s, F
                frames[q] = saved if best_frame is None else best_frame
                value += best_local - current
            if value - before < 1e-9:
                break
        best = max(best, total(frames))
    return best


@dataclass(frozen=True)
class MonogamyReport:
    """All pairwise trade-off sums for one state in one set of frames, with
    the worst slack against each bound (slack < 0 means a violation)."""

    n: int
    pair_values: dict[tuple[int, int], float]
    two_term_sums: dict[tuple[tuple[int, int], tuple[int, int]], float]
    triple_sums: dict[tuple[int, int, int], float]
    total: float
    total_bound: float
    pair_slack: float
    two_term_slack: float
    triple_slack: float
    total_slack: float

    @property
    def min_slack(self) -> float:
        return min(self.pair_slack, self.two_term_slack, self.triple_slack, self.total_slack)


def monogamy_check(state: PureState, frames) -> MonogamyReport:
    """Evaluate every pairwise bound (<= 2), every common-qubit two-term sum
    (<= 2), every three-qubit triple sum (<= 3), and the global bound."""
    n = state.n
    if n < 2:
        raise ValueError("monogamy bounds need at least 2 qubits")
    _check_frames(n, frames)
    blocks = _pair_blocks(state)
    values = {
        (k, l): _inplane_sq(block, frames[k], frames[l]) for (k, l), block in blocks.items()
    }

    two_term: dict[tuple[tuple[int, int], tuple[int, int]], float] = {}
    triple: dict[tuple[int, int, int], float] = {}
    if n >= 3:
        for q in range(n):
            touching = [p for p in values if q in p]
            for p1, p2 in combinations(touching, 2):
                two_term[(p1, p2)] = values[p1] + values[p2]
        for k, l, m in combinations(range(n), 3):
            triple[(k, l, m)] = values[(k, l)] + values[(l, m)] + values[(k, m)]

    total = sum(values.values())
    total_bound = 2.0 if n == 2 else float(math.comb(n, 2))
    return MonogamyReport(
        n=n,
        pair_values=values,
        two_term_sums=two_term,
        triple_sums=triple,
        total=total,
        total_bound=total_bound,
        pair_slack=min(PAIR_BOUND - v for v in values.values()),
        two_term_slack=min((TWO_TERM_BOUND - v for v in two_term.values()), default=math.inf),
        triple_slack=min((TRIPLE_BOUND - v for v in triple.values()), default=math.inf),
        total_slack=total_bound - total,
    )


@dataclass(frozen=True)
class StressSummary:
    """Worst observed slacks over a batch of random states in random frames."""

    n: int
    trials: int
    seed: int
    min_pair_slack: float
    min_two_term_slack: float
    min_triple_slack: float
    min_total_slack: float
    max_pair_value: float
    violations: int

    @property
    def min_slack(self) -> float:
        return min(
            self.min_pair_slack,
            self.min_two_term_slack,
            self.min_triple_slack,
            self.min_total_slack,
        )


def monogamy_stress(n: int, trials: int, seed: int, tol: float = 1e-9) -> StressSummary:
    """Run monogamy_check on Haar-random states with uniformly random local
    frames; trial i uses state seed ``seed + i``. A violation (slack < -tol)
    falsifies the implementation, not the bounds."""
    if n < 2:
        raise ValueError("stress runs need at least 2 qubits")
    if trials < 1:
        raise ValueError(f"trial count must be >= 1, got {trials}")
    mins = [math.inf] * 4
    max_pair = -math.inf
    violations = 0
    for i in range(trials):
        st = make_random_haar(n, seed + i)
        frame_rng = np.random.default_rng([seed, i])
        frames = [random_rotation(frame_rng) for _ in range(n)]
        rep = monogamy_check(st, frames)
        slacks = (rep.pair_slack, rep.two_term_slack, rep.triple_slack, rep.total_slack)
        mins = [min(a, b) for a, b in zip(mins, slacks)]
        max_pair = max(max_pair, max(rep.pair_values.values()))
        violations += sum(1 for v in rep.pair_values.values() if PAIR_BOUND - v < -tol)
        violations += sum(1 for v in rep.two_term_sums.values() if TWO_TERM_BOUND - v < -tol)
        violations += sum(1 for v in rep.triple_sums.values() if TRIPLE_BOUND - v < -tol)
        violations += 1 if rep.total_slack < -tol else 0
    return StressSummary(
        n=n,
        trials=trials,
        seed=seed,
        min_pair_slack=mins[0],
        min_two_term_slack=mins[1],
        min_triple_slack=mins[2],
        min_total_slack=mins[3],
        max_pair_value=max_pair,
        violations=violations,
    )


# ---------------------------------------------------------------------------
# partitions and thresholds


def _as_partition(parts) -> tuple[int, ...]:
    p = tuple(sorted((int(r) for r in parts), reverse=True))
    if not p or any(r < 1 for r in p):
        raise ValueError(f"partition parts must be positive integers, got {tuple(parts)}")
    return p


def partition_bound(parts) -> float:
    """Largest detection value reachable by a product state over this
    partition: sum of C(r_m, 2) plus one for every part of size exactly 2."""
    p = _as_partition(parts)
    return float(sum(math.comb(r, 2) for r in p) + sum(1 for r in p if r == 2))


def enumerate_partitions(n: int, k: int | None = None) -> list[tuple[int, ...]]:
    """All integer partitions of n (into exactly k parts when given), parts
    non-increasing, in reverse-lexicographic order."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if k is not None and not 1 <= k <= n:
        raise ValueError(f"part count must satisfy 1 <= k <= {n}, got {k}")

    def rec(remaining: int, max_part: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for p in range(min(max_part, remaining), 0, -1):
            for rest in rec(remaining - p, p):
                yield (p,) + rest

    out = list(rec(n, n))
    if k is not None:
        out = [p for p in out if len(p) == k]
    return out


def s_threshold(n: int, k: int) -> float:
    """Exclusion threshold for "not k-product": the largest partition_bound
    over all k-part partitions of n (2 for k = n-1, 4 for k = n-2,
    C(n-k+1, 2) below that)."""
    if n < 3:
        raise ValueError(f"thresholds need n >= 3, got {n}")
    if not 2 <= k <= n - 1:
        raise ValueError(f"k must satisfy 2 <= k <= {n - 1}, got {k}")
    if k == n - 1:
        return 2.0
    if k == n - 2:
        return 4.0
    return float(math.comb(n - k + 1, 2))


def genuine_threshold(n: int) -> float:
    """Exceeding this value certifies genuine n-partite entanglement."""
    if n < 3:
        raise ValueError(f"genuine-multipartite threshold needs n >= 3, got {n}")
    if n == 3:
        return 2.0
    if n == 4:
        return 4.0
    return float(math.comb(n - 1, 2))


def depth_threshold(n: int, m: int) -> float:
    """Bipartition-family threshold C(m,2) + C(n-m,2) (+1 when m = 2)."""
    if n < 5:
        raise ValueError(f"depth thresholds need n >= 5, got {n}")
    if not 1 <= m <= n // 2 - 1:
        raise ValueError(f"m must satisfy 1 <= m <= {n // 2 - 1}, got {m}")
    return float(math.comb(m, 2) + math.comb(n - m, 2) + (1 if m == 2 else 0))


def min_entangled_block(n: int, k: int) -> int:
    """A state that is not k-product has at least ceil(n / (k-1)) mutually
    entangled particles."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    return -(-n // (k - 1))


@dataclass(frozen=True)
class PartitionMaxRecord:
    """Brute-force verification that the largest per-part pair-count sum over
    k-part partitions of n is C(n-k+1, 2), attained by (n-k+1, 1, ..., 1)."""

    n: int
    k: int
    bound: float
    max_value: float
    maximizer: tuple[int, ...]
    matches: bool


def verify_partition_term_max(n: int, k: int) -> PartitionMaxRecord:
    """Enumerate all k-part partitions of n and check the pair-count maximum."""
    if not 3 <= n <= 20:
        raise ValueError(f"n must be in 3..20, got {n}")
    if not 2 <= k <= n:
        raise ValueError(f"k must satisfy 2 <= k <= {n}, got {k}")
    best_value = -1.0
    best_parts: tuple[int, ...] = ()
    for p in enumerate_partitions(n, k):
        value = float(sum(math.comb(r, 2) for r in p))
        if value > best_value:
            best_value, best_parts = value, p
    bound = float(math.comb(n - k + 1, 2))
    expected = (n - k + 1,) + (1,) * (k - 1)
    matches = best_value == bound and best_parts == expected
    return PartitionMaxRecord(
        n=n, k=k, bound=bound, max_value=best_value, maximizer=best_parts, matches=matches
    )


def factorization_residual(state: PureState, k: int, l: int) -> float:
    """Largest deviation of the (k, l) correlation block from the outer
    product of the two Bloch vectors, in the computational frame.

    Zero (within tolerance) for any state that is product across a cut
    separating k and l; strictly positive certifies that k and l do not sit
    in separate product factors.
    """
    if not 0 <= k < l < state.n:
        raise ValueError(f"pair indices must satisfy 0 <= k < l < {state.n}, got ({k}, {l})")
    block = pair_block(reduced_density_pair(state, k, l))
    b_k = bloch_vector(reduced_density_single(state, k))
    b_l = bloch_vector(reduced_density_single(state, l))
    return float(np.max(np.abs(block - np.outer(b_k, b_l))))


# ---------------------------------------------------------------------------
# full exclusion report


@dataclass(frozen=True)
class DetectionReport:
    """Outcome of comparing one detection value against every partition bound
    and threshold family.

    ``depth_statement_m``/``depth_proof_parties`` carry the two readings of
    the bipartition-family conclusion (the threshold statement asserts
    "genuinely m-partite"; the ordering argument behind it yields at least
    m + 1 mutually entangled parties). The enumeration-based
    ``entangled_subset_guarantee`` is reported alongside and is never weaker.
    """

    n: int
    policy: str
    m_pb: float
    s_thresholds: dict[int, float]
    genuine_threshold: float | None
    depth_thresholds: dict[int, float]
    excluded_partitions: tuple[tuple[tuple[int, ...], float], ...]
    surviving_partitions: tuple[tuple[int, ...], ...]
    entangled_subset_guarantee: int
    genuine_multipartite: bool
    not_product_min_k: int | None
    depth_statement_m: int | None
    depth_proof_parties: int | None

    def to_json_dict(self) -> dict:
        """Serialization contract: exactly the schema fields, nothing more."""
        thresholds: dict = {f"s_{k}": v for k, v in sorted(self.s_thresholds.items())}
        thresholds["genuine"] = self.genuine_threshold
        thresholds["depth"] = {str(m): v for m, v in sorted(self.depth_thresholds.items())}
        return {
            "n": self.n,
            "policy": self.policy,
            "m_pb": self.m_pb,
            "thresholds": thresholds,
            "excluded_partitions": [[list(p), b] for p, b in self.excluded_partitions],
            "surviving_partitions": [list(p) for p in self.surviving_partitions],
            "entangled_subset_guarantee": self.entangled_subset_guarantee,
            "genuine_multipartite": self.genuine_multipartite,
        }


def exclusion_report(state: PureState, policy: ZeroPolicy | None = None) -> DetectionReport:
    """Compute m_pb and compare it against every partition of n.

    A nontrivial partition is excluded iff the value exceeds its bound by
    more than EPS_DET; the trivial partition (n) always survives. The
    entangled-subset guarantee is the smallest largest-part over surviving
    partitions.
    """
    policy = policy or ZeroPolicy.canonical()
    n = state.n
    if n < 2:
        raise ValueError("exclusion reports need at least 2 qubits")
    value = m_pb(state, policy)

    excluded: list[tuple[tuple[int, ...], float]] = []
    surviving: list[tuple[int, ...]] = []
    for parts in enumerate_partitions(n):
        if len(parts) == 1:
            surviving.append(parts)
            continue
        bound = partition_bound(parts)
        if value > bound + EPS_DET:
            excluded.append((parts, bound))
        else:
            surviving.append(parts)

    guarantee = min(parts[0] for parts in surviving)
    surviving_ks = {len(parts) for parts in surviving}
    not_product_min_k: int | None = None
    for k in range(n, 1, -1):
        if k in surviving_ks:
            break
        not_product_min_k = k

    s_thresholds = {k: s_threshold(n, k) for k in range(2, n)} if n >= 3 else {}
    for k, s in s_thresholds.items():
        # the closed-form threshold must agree with the enumerated verdicts
        assert (value > s + EPS_DET) == (k not in surviving_ks), (n, k)

    if n >= 3:
        gt = genuine_threshold(n)
        genuine = value > gt + EPS_DET
    else:
        gt = None
        genuine = 2 not in surviving_ks

    depth_thresholds = (
        {m: depth_threshold(n, m) for m in range(1, n // 2)} if n >= 5 else {}
    )
    triggered = [m for m, t in depth_thresholds.items() if value > t + EPS_DET]
    depth_statement_m = max(triggered) if triggered else None
    depth_proof_parties = depth_statement_m + 1 if depth_statement_m is not None else None

    return DetectionReport(
        n=n,
        policy=policy.describe(),
        m_pb=value,
        s_thresholds=s_thresholds,
        genuine_threshold=gt,
        depth_thresholds=depth_thresholds,
        excluded_partitions=tuple(excluded),
        surviving_partitions=tuple(surviving),
        entangled_subset_guarantee=guarantee,
        genuine_multipartite=genuine,
        not_product_min_k=not_product_min_k,
        depth_statement_m=depth_statement_m,
        depth_proof_parties=depth_proof_parties,
    )
