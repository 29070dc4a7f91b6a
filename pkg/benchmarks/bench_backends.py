"""Time the monomial kernel backends on kernel ops and Groebner runs.

Runs each workload once per available backend (compiled "c" kernel and
the pure-"python" fallback) and prints a small table.  The first row is
a tight loop over raw monomial operations, where the compiled kernel
shows its real advantage; the end-to-end rows are dominated by exact
rational arithmetic, so the gap there is much smaller.  Usage:

    python3 benchmarks/bench_backends.py [--repeat N]
"""

import argparse
import random
import time

from laddergb import (
    QQ,
    conventional_order,
    ladder_from_json,
    natural_generators,
    verify_family,
)
from laddergb import mono
from laddergb.poly import buchberger_reduced


def bench_kernel_ops():
    rng = random.Random(7)
    monos = []
    for _ in range(300):
        ids = sorted(rng.sample(range(1, 40), rng.randint(1, 6)))
        monos.append(tuple(x for v in ids for x in (v, rng.randint(1, 3))))
    pairs = [(rng.choice(monos), rng.choice(monos)) for _ in range(2000)]
    mul, divides, lcm = mono.mul, mono.divides, mono.lcm
    for _ in range(20):
        for a, b in pairs:
            mul(a, b)
            divides(a, b)
            lcm(a, b)


def bench_basis(data):
    ladder = ladder_from_json(data)

    def run():
        order = conventional_order(ladder)
        gens = natural_generators(ladder, QQ, order)
        buchberger_reduced(gens, order, QQ)

    return run


def bench_verify(data):
    ladder = ladder_from_json(data)

    def run():
        # defeat the decomposition memo so both backends do the same work
        from laddergb.complexes import _VD_MEMO

        _VD_MEMO.clear()
        report, _, _ = verify_family(ladder)
        assert report["pass"]

    return run


WORKLOADS = [
    ("kernel ops (mul/divides/lcm)", bench_kernel_ops),
    (
        "groebner maxminors 3x6",
        bench_basis({"family": "maxminors", "m": 3, "n": 6}),
    ),
    (
        "groebner pfaffian n=8",
        bench_basis({"family": "pfaffian", "n": 8, "corners": [[1, 8]], "t": [2]}),
    ),
    (
        "groebner symmetric n=5",
        bench_basis({"family": "symmetric", "n": 5, "points": [[5, 5]], "t": [2]}),
    ),
    (
        "full verification onesided 4x4",
        bench_verify(
            {"family": "onesided", "m": 4, "n": 4, "points": [[2, 1], [4, 3]], "t": [2, 2]}
        ),
    ),
]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3, help="runs per cell (best kept)")
    args = ap.parse_args()

    backends = mono.available_backends()
    original = mono.BACKEND
    results = {}
    try:
        for name in backends:
            mono.use_backend(name)
            for label, fn in WORKLOADS:
                results[(label, name)] = min(
                    _timed(fn) for _ in range(args.repeat)
                )
    finally:
        mono.use_backend(original)

    width = max(len(label) for label, _ in WORKLOADS)
    header = "%-*s" % (width, "workload")
    for name in backends:
        header += "  %10s" % name
    if {"c", "python"} <= set(backends):
        header += "  %8s" % "speedup"
    print(header)
    print("-" * len(header))
    for label, _ in WORKLOADS:
        row = "%-*s" % (width, label)
        for name in backends:
            row += "  %9.1fms" % (results[(label, name)] * 1e3)
        if {"c", "python"} <= set(backends):
            ratio = results[(label, "python")] / results[(label, "c")]
            row += "  %7.2fx" % ratio
        print(row)


def _timed(fn):
    start = time.perf_counter()
    fn()
    return time.perf_counter() - start


if __name__ == "__main__":
    main()
