"""Finite groups stored as Cayley tables over the indices 0..order-1.

The identity is always index 0. Commutators are ``[x, y] = x^-1 y^-1 x y``
and longer commutators are left-normed: ``[x1, ..., xk] = [[x1, ..., x(k-1)], xk]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import (
    BudgetExceeded,
    MalformedTable,
    NotAGroup,
    NotASubgroup,
    NotNormal,
    ParentMismatch,
)

ASSOCIATIVITY_FULL_CAP = 256


class FiniteGroup:
    """A finite group given by its multiplication table.

    ``table[i, j]`` is the index of ``i * j``. Instances are immutable; derived
    data (inverses, commutator table, centralizer sizes) is computed lazily
    and cached.
    """

    def __init__(
        self,
        table,
        labels: Optional[Sequence[str]] = None,
        name: Optional[str] = None,
        *,
        assoc_cap: int = ASSOCIATIVITY_FULL_CAP,
    ):
        t = _as_table(table)
        n = t.shape[0]
        ar = np.arange(n, dtype=t.dtype)
        if not (np.array_equal(t[0], ar) and np.array_equal(t[:, 0], ar)):
            raise NotAGroup("element 0 is not a two-sided identity")
        rows_ok = (np.sort(t, axis=1) == ar).all(axis=1)
        if not rows_ok.all():
            raise NotAGroup(f"row {int(np.argmin(rows_ok))} is not a permutation")
        cols_ok = (np.sort(t, axis=0) == ar[:, None]).all(axis=0)
        if not cols_ok.all():
            raise NotAGroup(f"column {int(np.argmin(cols_ok))} is not a permutation")
        inv = np.argmax(t == 0, axis=1).astype(np.int32)
        bad = np.flatnonzero(t[inv, ar] != 0)
        if bad.size:
            raise NotAGroup(f"element {int(bad[0])} has no two-sided inverse")
        _check_associative(t, assoc_cap)
        t.setflags(write=False)
        inv.setflags(write=False)
        self.table = t
        self.inverses = inv
        self.order = n
        self.labels = tuple(labels) if labels is not None else None
        if self.labels is not None and len(self.labels) != n:
            raise MalformedTable(f"{len(self.labels)} labels for {n} elements")
        self.name = name if name is not None else f"table:{n}"

    def __repr__(self):
        return f"FiniteGroup({self.name!r}, order={self.order})"

    def __len__(self):
        return self.order

    identity = 0

    def mul(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def inv(self, x: int) -> int:
        return int(self.inverses[x])

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels is not None else str(x)

    @cached_property
    def comm_table(self) -> np.ndarray:
        """``comm_table[x, y] = [x, y]`` as an int32 array."""
        t, inv = self.table, self.inverses
        c = t[t[inv[:, None], inv[None, :]], t].astype(np.int32)
        c.setflags(write=False)
        return np.ascontiguousarray(c)

    @cached_property
    def commuting(self) -> np.ndarray:
        m = self.table == self.table.T
        m.setflags(write=False)
        return m

    @cached_property
    def centralizer_sizes(self) -> np.ndarray:
        s = self.commuting.sum(axis=1).astype(np.int64)
        s.setflags(write=False)
        return s

    @cached_property
    def is_abelian(self) -> bool:
        return bool(self.commuting.all())

    @cached_property
    def element_orders(self) -> np.ndarray:
        t = self.table
        orders = np.zeros(self.order, dtype=np.int64)
        for x in range(self.order):
            k, y = 1, x
            while y != 0:
                y = t[y, x]
                k += 1
            orders[x] = k
        orders.setflags(write=False)
        return orders

    def check_index(self, x: int) -> int:
        if not 0 <= x < self.order:
            raise IndexError(f"element index {x} out of range for order {self.order}")
        return int(x)


def _as_table(table) -> np.ndarray:
    try:
        rows = [list(r) for r in table]
    except TypeError as exc:
        raise MalformedTable("table must be a sequence of rows") from exc
    n = len(rows)
    if n == 0:
        raise MalformedTable("empty table")
    if any(len(r) != n for r in rows):
        raise MalformedTable(f"table is not square ({n} rows, ragged lengths)")
    try:
        t = np.array(rows, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise MalformedTable("table entries must be integers") from exc
    if t.min() < 0 or t.max() >= n:
        raise MalformedTable(f"table entries must lie in 0..{n - 1}")
    return np.ascontiguousarray(t.astype(np.int32))


def _check_associative(t: np.ndarray, cap: int) -> None:
    n = t.shape[0]
    if n <= cap:
        for a in range(n):
            lhs = t[t[a]]  # (a*b)*c over b, c
            rhs = t[a][t]  # a*(b*c)
            if not np.array_equal(lhs, rhs):
                b, c = np.argwhere(lhs != rhs)[0]
                raise NotAGroup(f"associativity fails for triple ({a}, {int(b)}, {int(c)})")
        return
    rng = np.random.default_rng(0)
    k = 10 * n * n
    for start in range(0, k, 1 << 20):
        m = min(1 << 20, k - start)
        a, b, c = rng.integers(0, n, size=(3, m))
        lhs = t[t[a, b], c]
        rhs = t[a, t[b, c]]
        bad = np.flatnonzero(lhs != rhs)
        if bad.size:
            i = bad[0]
            raise NotAGroup(
                f"associativity fails for triple ({int(a[i])}, {int(b[i])}, {int(c[i])})"
            )


def from_cayley_table(table, labels: Optional[Sequence[str]] = None, name=None) -> FiniteGroup:
    """Validate a Cayley table and move its identity to index 0 if needed."""
    t = _as_table(table)
    n = t.shape[0]
    ar = np.arange(n)
    ids = [e for e in range(n) if np.array_equal(t[e], ar) and np.array_equal(t[:, e], ar)]
    if not ids:
        raise NotAGroup("no two-sided identity element")
    e = ids[0]
    if e != 0:
        sigma = ar.copy()
        sigma[0], sigma[e] = e, 0
        # sigma is an involution, so it maps old indices to new and back
        t = sigma[t[np.ix_(sigma, sigma)]].astype(np.int32)
        if labels is not None:
            labels = [labels[i] for i in sigma]
    return FiniteGroup(t, labels=labels, name=name)


class Subgroup:
    """A subgroup of ``parent`` given by its sorted member indices."""

    def __init__(self, parent: FiniteGroup, members: Iterable[int], *, check: bool = True):
        mem = tuple(sorted({int(m) for m in members}))
        self.parent = parent
        self.members = mem
        mask = np.zeros(parent.order, dtype=bool)
        if mem:
            arr = np.fromiter(mem, dtype=np.intp)
            if arr[0] < 0 or arr[-1] >= parent.order:
                raise NotASubgroup("member index out of range")
            mask[arr] = True
        mask.setflags(write=False)
        self._mask = mask
        if check:
            self._validate()

    def _validate(self):
        g = self.parent
        if not self.members or self.members[0] != 0:
            raise NotASubgroup("subgroup must contain the identity 0")
        arr = self.array
        if not self._mask[g.table[np.ix_(arr, arr)]].all():
            raise NotASubgroup("members are not closed under multiplication")
        if not self._mask[g.inverses[arr]].all():
            raise NotASubgroup("members are not closed under inverses")
        if g.order % len(arr):
            raise NotASubgroup(f"order {len(arr)} does not divide {g.order}")

    @cached_property
    def array(self) -> np.ndarray:
        a = np.array(self.members, dtype=np.int32)
        a.setflags(write=False)
        return a

    @property
    def mask(self) -> np.ndarray:
        return self._mask

    @property
    def order(self) -> int:
        return len(self.members)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, x) -> bool:
        return 0 <= x < self.parent.order and bool(self._mask[x])

    def __eq__(self, other):
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.parent is other.parent and self.members == other.members

    def __hash__(self):
        return hash((id(self.parent), self.members))

    def __repr__(self):
        return f"Subgroup({self.parent.name!r}, order={self.order}, members={list(self.members)})"

    def issubset(self, other: Subgroup) -> bool:
        _same_parent(self, other)
        return bool((other._mask | ~self._mask).all())

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    @property
    def is_whole(self) -> bool:
        return self.order == self.parent.order

    @cached_property
    def is_abelian(self) -> bool:
        arr = self.array
        return bool(self.parent.commuting[np.ix_(arr, arr)].all())

    @cached_property
    def as_group(self) -> FiniteGroup:
        return induced_group(self)


def _same_parent(*subs: Subgroup) -> FiniteGroup:
    p = subs[0].parent
    for s in subs[1:]:
        if s.parent is not p:
            raise ParentMismatch("subgroups belong to different parent groups")
    return p


def _check_parent(H: Subgroup, G: FiniteGroup) -> None:
    if H.parent is not G:
        raise ParentMismatch(f"subgroup belongs to {H.parent.name}, not {G.name}")


def whole(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, range(G.order), check=False)


def trivial(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, (0,), check=False)


def commutator(G: FiniteGroup, x: int, y: int) -> int:
    G.check_index(x)
    G.check_index(y)
    return int(G.comm_table[x, y])


def iterated_commutator(G: FiniteGroup, xs: Sequence[int]) -> int:
    if len(xs) == 0:
        raise ValueError("iterated_commutator needs at least one element")
    v = G.check_index(xs[0])
    for x in xs[1:]:
        v = int(G.comm_table[v, G.check_index(x)])
    return v


def centralizer(G: FiniteGroup, x: int) -> Subgroup:
    G.check_index(x)
    return Subgroup(G, np.flatnonzero(G.commuting[x]).tolist(), check=False)


def center(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, np.flatnonzero(G.commuting.all(axis=1)).tolist(), check=False)


def _closure(G: FiniteGroup, start: Iterable[int], gens: Sequence[int]) -> list[int]:
    # in a finite group the monoid generated by gens is the subgroup they generate
    t = G.table
    gens = sorted({int(g) for g in gens if g != 0})
    seen = np.zeros(G.order, dtype=bool)
    frontier = sorted({0, *map(int, start)})
    seen[frontier] = True
    if not gens:
        return frontier
    garr = np.array(gens, dtype=np.intp)
    while frontier:
        prod = np.unique(t[np.array(frontier)[:, None], garr[None, :]])
        new = prod[~seen[prod]]
        seen[new] = True
        frontier = new.tolist()
    return np.flatnonzero(seen).tolist()


def subgroup_generated(G: FiniteGroup, seeds: Sequence[int]) -> Subgroup:
    seeds = [G.check_index(s) for s in seeds]
    return Subgroup(G, _closure(G, (), seeds), check=False)


def join(A: Subgroup, B: Subgroup) -> Subgroup:
    G = _same_parent(A, B)
    return Subgroup(G, _closure(G, A.members, B.members + A.members), check=False)


def intersection(A: Subgroup, B: Subgroup) -> Subgroup:
    G = _same_parent(A, B)
    return Subgroup(G, np.flatnonzero(A.mask & B.mask).tolist(), check=False)


def is_normal(G: FiniteGroup, N: Subgroup) -> bool:
    _check_parent(N, G)
    t, inv = G.table, G.inverses
    g = np.arange(G.order)
    conj = t[t[inv[:, None], N.array[None, :]], g[:, None]]
    return bool(N.mask[conj].all())


def normal_closure(G: FiniteGroup, S: Subgroup) -> Subgroup:
    _check_parent(S, G)
    t, inv = G.table, G.inverses
    g = np.arange(G.order)
    conj = np.unique(t[t[inv[:, None], S.array[None, :]], g[:, None]])
    return subgroup_generated(G, conj.tolist())


@dataclass(frozen=True, eq=False)
class QuotientGroup:
    """``group`` is G/kernel; ``projection[x]`` is the coset index of x."""

    group: FiniteGroup
    projection: np.ndarray
    kernel: Subgroup

    @property
    def parent(self) -> FiniteGroup:
        return self.kernel.parent

    def image(self, H: Subgroup) -> Subgroup:
        _check_parent(H, self.parent)
        return Subgroup(self.group, np.unique(self.projection[H.array]).tolist(), check=False)

    def preimage(self, S: Subgroup) -> Subgroup:
        _check_parent(S, self.group)
        return Subgroup(self.parent, np.flatnonzero(S.mask[self.projection]).tolist(), check=False)


def quotient(G: FiniteGroup, N: Subgroup) -> QuotientGroup:
    """Quotient by a normal subgroup; cosets are numbered by least member."""
    if not is_normal(G, N):
        raise NotNormal(f"subgroup of order {N.order} is not normal in {G.name}")
    t = G.table
    proj = np.full(G.order, -1, dtype=np.int32)
    reps = []
    for x in range(G.order):
        if proj[x] < 0:
            proj[t[x, N.array]] = len(reps)
            reps.append(x)
    r = np.array(reps, dtype=np.intp)
    qt = proj[t[np.ix_(r, r)]]
    labels = None
    if G.labels is not None:
        labels = [f"{G.labels[x]}N" for x in reps]
    name = G.name if N.is_trivial else f"({G.name})/N{N.order}"
    proj.setflags(write=False)
    return QuotientGroup(FiniteGroup(qt, labels=labels, name=name), proj, N)


def induced_group(H: Subgroup) -> FiniteGroup:
    """H as a group in its own right; index i stands for ``H.members[i]``."""
    G = H.parent
    pos = np.full(G.order, -1, dtype=np.int64)
    pos[H.array] = np.arange(H.order)
    t = pos[G.table[np.ix_(H.array, H.array)]]
    labels = [G.label(x) for x in H.members] if G.labels is not None else None
    name = G.name if H.is_whole else f"{G.name}|H{H.order}"
    return FiniteGroup(t, labels=labels, name=name)


def restrict(S: Subgroup, H: Subgroup) -> Subgroup:
    """Re-express S (a subgroup of H) inside ``H.as_group``."""
    if not S.issubset(H):
        raise NotASubgroup("S is not contained in H")
    pos = np.searchsorted(H.array, S.array)
    return Subgroup(H.as_group, pos.tolist(), check=False)


def upper_central_series(G: FiniteGroup) -> list[Subgroup]:
    """Z_0 = 1, Z_1 = Z(G), ... up to the first repeated term (not repeated)."""
    Z = trivial(G)
    series = [Z]
    while True:
        Q = quotient(G, Z)
        nxt = Q.preimage(center(Q.group))
        if nxt == Z:
            return series
        series.append(nxt)
        Z = nxt


def nilpotency_class(G: FiniteGroup) -> Optional[int]:
    """Least c with Z_c = G, or None when G is not nilpotent."""
    series = upper_central_series(G)
    return len(series) - 1 if series[-1].is_whole else None


def n_fold_commutator_subgroup(
    H: Subgroup, G: FiniteGroup, n: int, budget: Optional[int] = None
) -> Subgroup:
    """Subgroup generated by every ``[h1, ..., hn, g]`` with h_i in H, g in G."""
    from .measure import default_budget

    _check_parent(H, G)
    if n < 1:
        raise ValueError("n must be at least 1")
    budget = default_budget() if budget is None else budget
    cost = H.order**n * G.order
    if cost > budget:
        raise BudgetExceeded(cost, budget)
    c = G.comm_table
    vals = H.array
    for _ in range(n - 1):
        vals = np.unique(c[vals[:, None], H.array[None, :]])
    final = np.unique(c[vals])
    return subgroup_generated(G, final.tolist())


@dataclass(frozen=True)
class StructureProbe:
    order: int
    is_abelian: bool
    is_cyclic: bool
    exponent: int
    element_order_census: dict

    @property
    def is_cyclic_of_order_2(self) -> bool:
        return self.order == 2

    @property
    def is_elementary_abelian_rank_2(self) -> bool:
        return self.order == 4 and self.exponent == 2


def structure_probe(G: FiniteGroup) -> StructureProbe:
    orders = G.element_orders
    census: dict[int, int] = {}
    for k in orders.tolist():
        census[k] = census.get(k, 0) + 1
    exponent = int(np.lcm.reduce(orders)) if orders.size else 1
    return StructureProbe(
        order=G.order,
        is_abelian=G.is_abelian,
        is_cyclic=bool(orders.max() == G.order),
        exponent=exponent,
        element_order_census=dict(sorted(census.items())),
    )
