"""Independent reference computations built from concrete element arithmetic.

Nothing here touches Cayley tables: groups are realised as permutations or
quaternion units and every commutator is evaluated from scratch.
"""

from fractions import Fraction
from itertools import permutations, product


def perm_mul(p, q):
    # apply p first, then q
    return tuple(q[i] for i in p)


def perm_inv(p):
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def perm_closure(gens, degree):
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = perm_mul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(seen)


def s3_elements():
    return list(permutations(range(3)))


def d4_elements():
    return perm_closure([(1, 2, 3, 0), (0, 3, 2, 1)], 4)


def r_d4():
    return (1, 2, 3, 0)


# quaternion units as (sign, axis) with axis in "1ijk"
_QTAB = {
    ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
    ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
    ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
}


def q_mul(a, b):
    s, ax = _QTAB[(a[1], b[1])]
    return (a[0] * b[0] * s, ax)


def q_inv(a):
    return a if a[1] == "1" else (-a[0], a[1])


def q8_elements():
    return [(s, ax) for s in (1, -1) for ax in "1ijk"]


def commutator(mul, inv, x, y):
    return mul(mul(inv(x), inv(y)), mul(x, y))


def iterated(mul, inv, xs):
    v = xs[0]
    for x in xs[1:]:
        v = commutator(mul, inv, v, x)
    return v


def relative_degree(H, G, n, mul, inv, identity):
    """Literal count of (h_1..h_n, g) with trivial left-normed commutator."""
    hits = 0
    total = 0
    for hs in product(H, repeat=n):
        for g in G:
            total += 1
            if iterated(mul, inv, list(hs) + [g]) == identity:
                hits += 1
    return Fraction(hits, total)


def perm_degree(H, G, n):
    return relative_degree(H, G, n, perm_mul, perm_inv, tuple(range(len(G[0]))))


def q8_degree(n):
    els = q8_elements()
    return relative_degree(els, els, n, q_mul, q_inv, (1, "1"))


def commutator_census(H, G, k, mul, inv):
    """Counts of [h_1..h_k] over H^k keyed by element."""
    out = {}
    for hs in product(H, repeat=k):
        v = iterated(mul, inv, list(hs))
        out[v] = out.get(v, 0) + 1
    return out
