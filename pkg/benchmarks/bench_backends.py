"""Timing comparison of the compiled and pure-numpy backend variants.

Runs each available implementation of the two hot loops — running partial
sums over a long alternating series, and the direct cosine sum at a large
order — and prints a small table of best-of-``repeat`` timings.

Usage::

    python benchmarks/bench_backends.py [--terms 2000000] [--order 200000]
                                        [--repeat 5]
"""

import argparse
import timeit

import numpy as np

from trigconv import _kernels


def bench_running_sums(impl, terms, repeat):
    impl(terms[:16])  # trigger any one-time compilation outside the timer
    timer = timeit.Timer(lambda: impl(terms))
    return min(timer.repeat(repeat=repeat, number=1))


def bench_cosine_sum(impl, order, repeat):
    impl(16, 0.37)
    timer = timeit.Timer(lambda: impl(order, 0.37))
    return min(timer.repeat(repeat=repeat, number=1))


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--terms", type=int, default=2_000_000,
                        help="series length for running_sums (default 2e6)")
    parser.add_argument("--order", type=int, default=200_000,
                        help="harmonic order for cosine_sum (default 2e5)")
    parser.add_argument("--repeat", type=int, default=5,
                        help="timing repetitions, best one reported")
    args = parser.parse_args()

    index = np.arange(1, args.terms + 1)
    terms = np.where(index % 2 == 0, 1.0, -1.0) / np.sqrt(index)

    print(f"active backend: {_kernels.BACKEND}")
    print(f"{'variant':<10} {'running_sums(' + str(args.terms) + ')':>24} "
          f"{'cosine_sum(' + str(args.order) + ')':>22}")
    for name, impl in _kernels.IMPLEMENTATIONS.items():
        sums_time = bench_running_sums(impl["running_sums"], terms, args.repeat)
        cos_time = bench_cosine_sum(impl["cosine_sum"], args.order, args.repeat)
        print(f"{name:<10} {sums_time * 1e3:>21.2f} ms {cos_time * 1e3:>19.2f} ms")

    reference = {name: float(np.asarray(impl["running_sums"](terms))[-1])
                 for name, impl in _kernels.IMPLEMENTATIONS.items()}
    values = list(reference.values())
    spread = max(values) - min(values)
    print(f"final-sum agreement across variants: spread {spread:.3e}")


if __name__ == "__main__":
    main()
