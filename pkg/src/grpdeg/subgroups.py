"""Exhaustive subgroup enumeration for small groups."""

from __future__ import annotations

from functools import lru_cache

from .group import FiniteGroup, Subgroup, _closure, is_normal, trivial


@lru_cache(maxsize=512)
def all_subgroups(G: FiniteGroup) -> tuple[Subgroup, ...]:
    """Every subgroup of G, sorted by (order, members).

    Grows the lattice upward from the trivial subgroup by adjoining one
    element at a time. Each subgroup is reached because it is the last term
    of a chain <x1> < <x1, x2> < ... inside it.
    """
    start = trivial(G)
    found = {start.members: ((), start)}
    frontier = [start.members]
    while frontier:
        nxt = []
        for key in frontier:
            gens, S = found[key]
            for x in range(G.order):
                if x in S:
                    continue
                new_gens = gens + (x,)
                members = tuple(_closure(G, S.members, new_gens))
                if members not in found:
                    found[members] = (new_gens, Subgroup(G, members, check=False))
                    nxt.append(members)
        frontier = nxt
    subs = sorted((s for _, s in found.values()), key=lambda s: (s.order, s.members))
    for s in subs:
        if G.order % s.order:
            raise AssertionError(f"subgroup of order {s.order} in group of order {G.order}")
    return tuple(subs)


@lru_cache(maxsize=512)
def normal_subgroups(G: FiniteGroup) -> tuple[Subgroup, ...]:
    return tuple(s for s in all_subgroups(G) if is_normal(G, s))
