"""Time the pure-Python search kernel against the compiled one.

Runs the nonzero-frieze enumeration over a few ring/height cells with each
kernel, checks that both agree on the counts, and prints the timings side by
side.  Cells and repeat count can be overridden on the command line:

    python benchmarks/bench_search.py
    python benchmarks/bench_search.py --cells Z:4 Zi:3 --repeats 5
"""

import argparse
import statistics
import sys
import time

from quiddity.enumeration import active_kernel, count_nonzero
from quiddity.rings import ring_from_tag

DEFAULT_CELLS = ["Z:4", "Z:5", "Zi:2", "Zi:3", "Zzeta6:3"]


def time_cell(ring, n: int, kernel: str, repeats: int):
    best = []
    total = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = count_nonzero(ring, n, kernel=kernel)
        best.append(time.perf_counter() - t0)
        if total is None:
            total = result.total
        elif total != result.total:
            raise SystemExit(f"unstable count for {ring.tag} n={n}")
    return min(best), statistics.median(best), total


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--cells", nargs="+", default=DEFAULT_CELLS,
                        metavar="RING:N", help="cells to time (default: %(default)s)")
    parser.add_argument("--repeats", type=int, default=3,
                        help="runs per cell and kernel, best is reported")
    args = parser.parse_args(argv)

    try:
        from quiddity import _speedups  # noqa: F401
        have_compiled = True
    except ImportError:
        have_compiled = False
        print("compiled kernel not built, timing the pure kernel only",
              file=sys.stderr)

    print(f"default kernel: {active_kernel()}, repeats per cell: {args.repeats}")
    header = f"{'cell':<12}{'count':>8}{'pure':>12}"
    if have_compiled:
        header += f"{'compiled':>12}{'speedup':>10}"
    print(header)
    for spec in args.cells:
        tag, _, height = spec.partition(":")
        ring = ring_from_tag(tag)
        n = int(height)
        pure_best, _, pure_total = time_cell(ring, n, "pure", args.repeats)
        line = f"{spec:<12}{pure_total:>8}{pure_best:>11.3f}s"
        if have_compiled:
            fast_best, _, fast_total = time_cell(ring, n, "compiled", args.repeats)
            if fast_total != pure_total:
                raise SystemExit(
                    f"kernels disagree on {spec}: {pure_total} vs {fast_total}")
            line += f"{fast_best:>11.3f}s{pure_best / fast_best:>9.1f}x"
        print(line)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
