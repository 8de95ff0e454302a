"""Seeded Monte Carlo estimates of d^(n)(H, G) for groups too big to count.

Sample i draws its coordinates from a keyed stream: draw j of sample i is
``mix64(mix64(seed + K*(i+1)) + K*(j+1))`` with ``K = 0x9E3779B97F4A7C15`` and
``mix64`` the SplitMix64 finalizer. Indices in [0, m) come from rejection
sampling (``bits >= 2^64 mod m``, then ``bits % m``), so the law is exactly
uniform. Because streams are keyed by sample index, any partition of the
sample range gives the same hits.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import ParentMismatch
from .group import FiniteGroup, Subgroup

Z95 = 1.959963984540054


@dataclass(frozen=True)
class McEstimate:
    point: float
    samples: int
    hits: int
    stderr: float
    ci95_low: float
    ci95_high: float
    seed: int

    def contains(self, value) -> bool:
        return self.ci95_low <= float(value) <= self.ci95_high


def wilson_interval(hits: int, samples: int, z: float = Z95) -> tuple[float, float]:
    p = hits / samples
    denom = 1 + z * z / samples
    centre = (p + z * z / (2 * samples)) / denom
    half = z * math.sqrt(p * (1 - p) / samples + z * z / (4 * samples * samples)) / denom
    # the endpoints are exactly 0 or 1 at the extremes; avoid rounding noise there
    lo = 0.0 if hits == 0 else max(0.0, centre - half)
    hi = 1.0 if hits == samples else min(1.0, centre + half)
    return lo, hi


def estimate_degree(
    H: Subgroup, G: FiniteGroup, n: int, samples: int, seed: int, threads: int = 1
) -> McEstimate:
    if H.parent is not G:
        raise ParentMismatch(f"subgroup belongs to {H.parent.name}, not {G.name}")
    if n < 1:
        raise ValueError("n must be at least 1")
    if samples < 1:
        raise ValueError("samples must be at least 1")
    table = np.ascontiguousarray(G.table, dtype=np.int32)
    inv = np.ascontiguousarray(G.inverses, dtype=np.int32)
    hmem = H.array
    bounds = np.linspace(0, samples, max(1, threads) + 1).astype(np.int64)
    ranges = [(int(a), int(b)) for a, b in zip(bounds[:-1], bounds[1:]) if b > a]

    def run(r):
        return kernels.mc_hits(table, inv, hmem, n, seed, r[0], r[1])

    if threads <= 1 or len(ranges) == 1:
        hits = sum(map(run, ranges))
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            hits = sum(pool.map(run, ranges))
    p = hits / samples
    lo, hi = wilson_interval(hits, samples)
    return McEstimate(
        point=p,
        samples=samples,
        hits=hits,
        stderr=math.sqrt(p * (1 - p) / samples),
        ci95_low=lo,
        ci95_high=hi,
        seed=seed,
    )
