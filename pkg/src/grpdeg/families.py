"""Standard group families and the permutation-closure constructor.

Element orderings (CLI subgroup indices refer to these):

* ``cyclic(n)``: index k is g^k.
* ``dihedral(n)`` (order 2n): r^0..r^(n-1), then s, rs, ..., r^(n-1)s.
* ``symmetric(n)``, ``alternating(n)``: permutations of 0..n-1 as image tuples
  in lexicographic order (identity first); ``p*q`` applies p first, then q.
* ``dicyclic(m)`` (order 4m): a^0..a^(2m-1), then x, ax, ..., a^(2m-1)x with
  a^(2m) = 1, x^2 = a^m and x a x^-1 = a^-1.
* ``heisenberg(p)`` (order p^3): upper unitriangular 3x3 matrices over F_p,
  (a, b, c) at index a*p^2 + b*p + c with a, b the superdiagonal and c the corner.
* ``direct_product(G1, G2)``: (i, j) at index i*|G2| + j.
"""

from __future__ import annotations

from itertools import permutations
from typing import Sequence

import numpy as np

from .errors import InvalidParameter, NotAPermutation, OrderCapExceeded
from .group import FiniteGroup

PERMUTATION_ORDER_CAP = 10080


def _positive(name: str, value: int, least: int = 1) -> int:
    if not isinstance(value, (int, np.integer)) or isinstance(value, bool) or value < least:
        raise InvalidParameter(f"{name} needs an integer >= {least}, got {value!r}")
    return int(value)


def cyclic(n: int) -> FiniteGroup:
    n = _positive("cyclic", n)
    k = np.arange(n)
    return FiniteGroup((k[:, None] + k[None, :]) % n, name=f"cyclic:{n}")


def dihedral(n: int) -> FiniteGroup:
    n = _positive("dihedral", n)
    idx = np.arange(2 * n)
    a, e = idx % n, idx // n
    # (r^a s^e)(r^b s^f) = r^(a + (-1)^e b) s^(e+f)
    sign = np.where(e == 0, 1, -1)
    rot = (a[:, None] + sign[:, None] * a[None, :]) % n
    ref = (e[:, None] + e[None, :]) % 2
    labels = [f"r{i}" for i in range(n)] + [f"r{i}s" for i in range(n)]
    return FiniteGroup(rot + n * ref, labels=labels, name=f"dihedral:{n}")


def _perm_group(perms: Sequence[tuple], name: str) -> FiniteGroup:
    index = {p: i for i, p in enumerate(perms)}
    arr = np.array(perms, dtype=np.intp)
    table = np.empty((len(perms), len(perms)), dtype=np.int64)
    for i, p in enumerate(arr):
        # row j of arr[:, p] is q_j[p[k]], i.e. the product p * q_j
        table[i] = [index[tuple(row)] for row in arr[:, p].tolist()]
    labels = ["".join(map(str, p)) if len(p) < 10 else str(list(p)) for p in perms]
    return FiniteGroup(table, labels=labels, name=name)


def symmetric(n: int) -> FiniteGroup:
    n = _positive("sym", n)
    return _perm_group(list(permutations(range(n))), f"sym:{n}")


def _is_even(p) -> bool:
    seen, parity = set(), 0
    for i in range(len(p)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = p[j]
            length += 1
        parity += length - 1
    return parity % 2 == 0


def alternating(n: int) -> FiniteGroup:
    n = _positive("alt", n, least=3)
    return _perm_group([p for p in permutations(range(n)) if _is_even(p)], f"alt:{n}")


def dicyclic(m: int) -> FiniteGroup:
    m = _positive("dicyclic", m, least=2)
    n2 = 2 * m
    idx = np.arange(2 * n2)
    a, e = idx % n2, idx // n2
    ai, ei = a[:, None], e[:, None]
    aj, fj = a[None, :], e[None, :]
    # x a^j = a^-j x and x^2 = a^m
    exp = np.where(ei == 0, ai + aj, ai - aj + np.where(fj == 1, m, 0)) % n2
    xs = (ei + fj) % 2
    labels = [f"a{i}" for i in range(n2)] + [f"a{i}x" for i in range(n2)]
    return FiniteGroup(exp + n2 * xs, labels=labels, name=f"dicyclic:{m}")


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


def heisenberg(p: int) -> FiniteGroup:
    p = _positive("heisenberg", p, least=2)
    if not _is_prime(p):
        raise InvalidParameter(f"heisenberg needs a prime, got {p}")
    idx = np.arange(p**3)
    a, b, c = idx // (p * p), (idx // p) % p, idx % p
    na = (a[:, None] + a[None, :]) % p
    nb = (b[:, None] + b[None, :]) % p
    nc = (c[:, None] + c[None, :] + a[:, None] * b[None, :]) % p
    labels = [f"({x},{y},{z})" for x, y, z in zip(a, b, c)]
    return FiniteGroup(na * p * p + nb * p + nc, labels=labels, name=f"heisenberg:{p}")


def direct_product(G1: FiniteGroup, G2: FiniteGroup) -> FiniteGroup:
    n2 = G2.order
    t = (G1.table[:, None, :, None] * n2 + G2.table[None, :, None, :]).reshape(
        G1.order * n2, G1.order * n2
    )
    labels = None
    if G1.labels is not None or G2.labels is not None:
        labels = [f"({G1.label(i)},{G2.label(j)})" for i in range(G1.order) for j in range(n2)]
    return FiniteGroup(t, labels=labels, name=f"{G1.name} x {G2.name}")


def from_permutation_generators(
    degree: int,
    generators: Sequence[Sequence[int]],
    *,
    cap: int = PERMUTATION_ORDER_CAP,
    name: str | None = None,
) -> FiniteGroup:
    """Close the generators under composition by breadth-first search.

    Elements are numbered in discovery order, so the identity is index 0.
    """
    degree = _positive("degree", degree)
    gens = []
    for g in generators:
        g = tuple(int(x) for x in g)
        if len(g) != degree or sorted(g) != list(range(degree)):
            raise NotAPermutation(f"{list(g)} is not a permutation of 0..{degree - 1}")
        gens.append(g)
    ident = tuple(range(degree))
    index = {ident: 0}
    elements = [ident]
    head = 0
    while head < len(elements):
        x = elements[head]
        head += 1
        for g in gens:
            y = tuple(g[i] for i in x)
            if y not in index:
                if len(elements) >= cap:
                    raise OrderCapExceeded(f"closure exceeds {cap} elements")
                index[y] = len(elements)
                elements.append(y)
    arr = np.array(elements, dtype=np.intp)
    table = np.empty((len(elements), len(elements)), dtype=np.int64)
    for i, p in enumerate(arr):
        table[i] = [index[tuple(row)] for row in arr[:, p].tolist()]
    labels = [str(list(p)) for p in elements]
    return FiniteGroup(table, labels=labels, name=name or f"perm:{degree}")
