"""Compare the compiled and numpy kernel backends on representative genera.

    python3 benchmarks/bench_kernel.py [--repeat 3] [--qmax 3]

Each case is computed once per backend (after a warm-up) and the results are
checked for equality, so a speedup is only reported for identical output.
"""
from __future__ import annotations

import argparse
import time

from epg import kernel
from epg.genus import HybridSpec, WeightSystem, cy_fermat_genus, hybrid_genus, lg_genus, weighted_cy_genus


def cases(qmax):
    return [
        ("cy_fermat 4", lambda: cy_fermat_genus(4, qmax, 8)),
        ("cy_fermat 5", lambda: cy_fermat_genus(5, qmax, 9)),
        ("lg (1,1,1,1,1;5)", lambda: lg_genus(WeightSystem((1,) * 5, 5), qmax, 9)),
        ("weighted_cy (3,1,1,1;6)", lambda: weighted_cy_genus(WeightSystem((3, 1, 1, 1), 6), qmax, 8)),
        ("hybrid (3,3) h1", lambda: hybrid_genus(HybridSpec(3, 3), "h1", min(qmax, 2), 10)),
    ]


def timed(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--qmax", type=int, default=3)
    args = ap.parse_args(argv)

    backends = kernel.available_backends()
    if "cython" not in backends:
        print("compiled kernel not built; only the numpy backend is available")
    print(f"{'case':28s}" + "".join(f"{b:>12s}" for b in backends) + ("     speedup" if len(backends) > 1 else ""))
    for name, fn in cases(args.qmax):
        times, results = {}, {}
        for b in backends:
            old = kernel.set_backend(b)
            try:
                fn()
                times[b], results[b] = timed(fn, args.repeat)
            finally:
                kernel.set_backend(old)
        ref = results[backends[0]].series
        if any(r.series != ref for r in results.values()):
            raise SystemExit(f"{name}: backends disagree")
        row = f"{name:28s}" + "".join(f"{times[b]:11.3f}s" for b in backends)
        if "cython" in times:
            row += f"{times['numpy'] / times['cython']:11.2f}x"
        print(row)


if __name__ == "__main__":
    main()
