"""Time the compiled kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Both backends get the same inputs; results are checked for equality before
any timing is reported.
"""

import argparse
import time

import numpy as np

from grpdeg.group import whole
from grpdeg.kernels import backends
from grpdeg.spec import resolve


def cases():
    s4 = resolve("sym:4")
    big = resolve("alt:4 x sym:3")  # order 72
    d12 = resolve("dihedral:12")
    for G, n in [(s4, 4), (d12, 4), (big, 3)]:
        H = whole(G)
        yield f"bruteforce {G.name} n={n}", lambda k, G=G, H=H, n=n: k.count_bruteforce(
            G.comm_table, H.array, H.array, n
        )
        yield f"centralizer {G.name} n={n}", lambda k, G=G, H=H, n=n: k.centralizer_sum(
            G.comm_table, H.array, H.array, n, G.centralizer_sizes
        )
    counts = np.ones(big.order, dtype=np.int64)
    yield f"dp_step {big.name}", lambda k: k.dp_step(big.comm_table, counts, whole(big).array).tolist()
    yield f"mc_hits {s4.name} n=2 1e6", lambda k: k.mc_hits(
        s4.table, s4.inverses, whole(s4).array, 2, 7, 0, 1_000_000
    )


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return min(times), out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    avail = backends()
    names = sorted(avail)
    print(f"{'kernel':<40}" + "".join(f"{n:>12}" for n in names) + ("   speedup" if len(names) > 1 else ""))
    for label, fn in cases():
        results, times = [], []
        for name in names:
            t, out = best_of(lambda: fn(avail[name]), args.repeat)
            times.append(t)
            results.append(out)
        if any(r != results[0] for r in results[1:]):
            raise SystemExit(f"backends disagree on {label}")
        row = f"{label:<40}" + "".join(f"{t * 1e3:>10.2f}ms" for t in times)
        if len(names) > 1:
            row += f"  {times[names.index('python')] / times[names.index('cython')]:>7.1f}x"
        print(row)


if __name__ == "__main__":
    main()
