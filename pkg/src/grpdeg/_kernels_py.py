"""numpy implementations of the hot loops; reference for the compiled twin.

All functions take the group data as plain arrays so that both backends share
one calling convention:

* ``comm``: int32 commutator table, ``comm[x, y] = [x, y]``;
* ``first``: int32 values the first tuple coordinate ranges over;
* ``hmem``: int32 subgroup members for the remaining coordinates.
"""

import numpy as np

GOLDEN = 0x9E3779B97F4A7C15
MASK64 = (1 << 64) - 1
_CHUNK = 1 << 21


def count_bruteforce(comm, first, hmem, n):
    """Number of tuples (h1..hn, g) with [h1, ..., hn, g] = 1, testing each g."""
    order = comm.shape[0]
    hits = 0
    per_row = max(1, _CHUNK // order)
    for prefix in _prefixes(comm, first, hmem, n):
        for s in range(0, prefix.size, per_row):
            hits += int(np.count_nonzero(comm[prefix[s : s + per_row]] == 0))
    return hits


def centralizer_sum(comm, first, hmem, n, csize):
    """Sum of |C_G([h1, ..., hn])| over the tuples."""
    total = 0
    for prefix in _prefixes(comm, first, hmem, n):
        total += int(csize[prefix].sum())
    return total


def _prefixes(comm, first, hmem, n):
    # yields chunks of [h1, ..., hn] values, one chunk per first coordinate
    for h1 in np.asarray(first):
        vals = np.array([h1], dtype=np.int32)
        for _ in range(n - 1):
            vals = comm[vals[:, None], hmem[None, :]].ravel()
        yield vals


def dp_step(comm, counts, hmem):
    """One level of the commutator-distribution recurrence on int64 counts."""
    out = np.zeros(comm.shape[0], dtype=np.int64)
    live = np.flatnonzero(counts)
    for h in hmem:
        np.add.at(out, comm[live, h], counts[live])
    return out


def dp_step_bigint(comm, counts, hmem):
    """Same recurrence on Python integers, for counts beyond 64 bits."""
    out = [0] * comm.shape[0]
    hlist = [int(h) for h in hmem]
    for v, c in enumerate(counts):
        if c:
            row = comm[v]
            for h in hlist:
                out[row[h]] += c
    return out


def mix64(z):
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 & MASK64
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB & MASK64
    return z ^ (z >> 31)


def draw_bits(seed, i, j):
    """64-bit draw number j of sample i."""
    key = mix64((seed + GOLDEN * (i + 1)) & MASK64)
    return mix64((key + GOLDEN * (j + 1)) & MASK64)


def uniform_index(seed, i, j, m):
    """Unbiased index in [0, m) by rejection; returns (index, next j)."""
    threshold = (-m & MASK64) % m
    while True:
        bits = draw_bits(seed, i, j)
        j += 1
        if bits >= threshold:
            return bits % m, j


def _mix64_np(z):
    z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
    return z ^ (z >> np.uint64(31))


def _sample_scalar(table, inv, hmem, n, seed, i):
    m, order = len(hmem), table.shape[0]
    j = 0
    k, j = uniform_index(seed, i, j, m)
    v = int(hmem[k])
    for step in range(n):
        if step == n - 1:
            x, j = uniform_index(seed, i, j, order)
        else:
            k, j = uniform_index(seed, i, j, m)
            x = int(hmem[k])
        v = int(table[table[inv[v], inv[x]], table[v, x]])
    return v == 0


def mc_hits(table, inv, hmem, n, seed, start, stop):
    """Hits among samples start..stop-1: n coordinates from H, the last from G."""
    seed &= MASK64
    m, order = len(hmem), table.shape[0]
    hits = 0
    g = np.uint64(GOLDEN)
    with np.errstate(over="ignore"):
        for lo in range(start, stop, _CHUNK):
            hi = min(stop, lo + _CHUNK)
            i = np.arange(lo, hi, dtype=np.uint64)
            key = _mix64_np(np.uint64(seed) + g * (i + np.uint64(1)))
            v = None
            bad = np.zeros(hi - lo, dtype=bool)
            for j in range(n + 1):
                mod = m if j < n else order
                bits = _mix64_np(key + g * np.uint64(j + 1))
                bad |= bits < np.uint64((-mod & MASK64) % mod)
                idx = (bits % np.uint64(mod)).astype(np.int64)
                x = hmem[idx] if j < n else idx
                if v is None:
                    v = x
                else:
                    v = table[table[inv[v], inv[x]], table[v, x]]
            ok = ~bad
            hits += int(np.count_nonzero(v[ok] == 0))
            for r in np.flatnonzero(bad):
                hits += _sample_scalar(table, inv, hmem, n, seed, lo + int(r))
    return hits
