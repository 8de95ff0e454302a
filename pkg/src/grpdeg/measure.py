"""Exact relative n-th nilpotency degrees.

``d^(n)(H, G)`` is the proportion of tuples ``(h1, ..., hn, g)`` in ``H^n x G``
whose left-normed commutator is trivial. Three independent routes compute it:

* ``relative_degree_bruteforce`` tests every tuple (the oracle);
* ``relative_degree_centralizer`` sums ``|C_G([h1, ..., hn])|`` over ``H^n``;
* ``relative_degree_dp`` pushes the uniform measure on ``H^n`` through the
  iterated commutator one coordinate at a time and pairs the resulting
  distribution with centralizer sizes.

All values are ``fractions.Fraction``.
"""

from __future__ import annotations

import enum
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

import numpy as np

from . import kernels
from .errors import BudgetExceeded, ParentMismatch
from .group import FiniteGroup, Subgroup, whole

DEFAULT_BUDGET = 10**8
_INT64_SAFE = 1 << 62


def default_budget() -> int:
    """Evaluation budget, overridable through ``GRPDEG_BUDGET``."""
    env = os.environ.get("GRPDEG_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


class Method(enum.Enum):
    BRUTE_FORCE = "BruteForce"
    CENTRALIZER = "Centralizer"
    DISTRIBUTION_DP = "DistributionDP"
    MONTE_CARLO = "MonteCarlo"


@dataclass(frozen=True)
class DegreeValue:
    value: Fraction
    n: int
    method: Method
    favorable_count: Optional[int] = None
    total_count: Optional[int] = None

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True, eq=False)
class CommutatorDistribution:
    """``counts[g]`` = number of k-tuples of ``source`` with commutator g."""

    group: FiniteGroup
    source: Subgroup
    depth: int
    counts: tuple

    @property
    def total(self) -> int:
        return self.source.order**self.depth


def _check(H: Subgroup, G: FiniteGroup, n: int) -> None:
    if H.parent is not G:
        raise ParentMismatch(f"subgroup belongs to {H.parent.name}, not {G.name}")
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")


def haar_measure_of_subgroup(G: FiniteGroup, H: Subgroup) -> Fraction:
    """Normalized counting measure of H, i.e. ``1 / |G:H|``."""
    if H.parent is not G:
        raise ParentMismatch(f"subgroup belongs to {H.parent.name}, not {G.name}")
    return Fraction(H.order, G.order)


def _split(H: Subgroup, threads: int):
    first = H.array
    k = max(1, min(threads, len(first)))
    return [np.ascontiguousarray(c) for c in np.array_split(first, k)]


def _fan_out(fn, chunks, threads):
    if threads <= 1 or len(chunks) == 1:
        return sum(fn(c) for c in chunks)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        # integer addition is exact, so chunking never changes the result
        return sum(pool.map(fn, chunks))


def relative_degree_bruteforce(
    H: Subgroup, G: FiniteGroup, n: int, budget: Optional[int] = None, threads: int = 1
) -> DegreeValue:
    _check(H, G, n)
    budget = default_budget() if budget is None else budget
    total = H.order**n * G.order
    if total > budget:
        raise BudgetExceeded(total, budget, "use the distribution method or Monte Carlo")
    comm, hmem = G.comm_table, H.array
    fav = _fan_out(
        lambda first: kernels.count_bruteforce(comm, first, hmem, n), _split(H, threads), threads
    )
    return DegreeValue(Fraction(fav, total), n, Method.BRUTE_FORCE, fav, total)


def relative_degree_centralizer(
    H: Subgroup, G: FiniteGroup, n: int, budget: Optional[int] = None, threads: int = 1
) -> DegreeValue:
    _check(H, G, n)
    budget = default_budget() if budget is None else budget
    if H.order**n > budget:
        raise BudgetExceeded(H.order**n, budget, "use the distribution method or Monte Carlo")
    comm, hmem, csize = G.comm_table, H.array, G.centralizer_sizes
    fav = _fan_out(
        lambda first: kernels.centralizer_sum(comm, first, hmem, n, csize),
        _split(H, threads),
        threads,
    )
    total = H.order**n * G.order
    return DegreeValue(Fraction(fav, total), n, Method.CENTRALIZER, fav, total)


@lru_cache(maxsize=8192)
def _distribution_counts(H: Subgroup, k: int) -> tuple:
    G = H.parent
    if k == 1:
        return tuple(int(x) for x in H.mask)
    prev = _distribution_counts(H, k - 1)
    comm = G.comm_table
    if H.order**k < _INT64_SAFE:
        out = kernels.dp_step(comm, np.array(prev, dtype=np.int64), H.array)
        return tuple(out.tolist())
    return tuple(kernels.dp_step_bigint(comm, prev, H.array))


def commutator_distribution(H: Subgroup, G: FiniteGroup, k: int) -> CommutatorDistribution:
    """Distribution of ``[h1, ..., hk]`` over ``H^k``."""
    _check(H, G, k)
    return CommutatorDistribution(G, H, k, _distribution_counts(H, k))


def relative_degree_dp(H: Subgroup, G: FiniteGroup, n: int) -> DegreeValue:
    _check(H, G, n)
    counts = _distribution_counts(H, n)
    csize = G.centralizer_sizes.tolist()
    fav = sum(c * s for c, s in zip(counts, csize) if c)
    total = H.order**n * G.order
    return DegreeValue(Fraction(fav, total), n, Method.DISTRIBUTION_DP, fav, total)


def degree(G: FiniteGroup, n: int = 1) -> DegreeValue:
    """``d^(n)(G)``; ``degree(G)`` is the commutativity degree."""
    return relative_degree_dp(whole_of(G), G, n)


@lru_cache(maxsize=4096)
def whole_of(G: FiniteGroup) -> Subgroup:
    return whole(G)


def dp_cost(H: Subgroup, G: FiniteGroup, n: int) -> int:
    """Table lookups the distribution method performs."""
    return max(0, n - 1) * G.order * H.order + G.order
