"""Time the compiled kernels against the pure-Python fallback.

    python3 bench/benchmark.py [--repeat N]

Both kernel modules are swapped into ``whmilnor._kernels`` in turn, so every
workload runs through the same library code. Results are checked for equality
before the timings are printed.
"""

import argparse
import contextlib
import random
import time

from whmilnor import _kernels, _pykernels
from whmilnor.ideals import Ideal, clear_cache, groebner, milnor_algebra, saito_check
from whmilnor.parser import parse_polynomial
from whmilnor.grading import random_weighted_homogeneous
from whmilnor.poly import WeightSystem

try:
    from whmilnor import _ckernels
except ImportError:
    _ckernels = None

NAMES = ("mono_divides", "mono_lcm", "mono_mul", "mono_quo", "normal_form",
         "poly_add", "poly_mul", "poly_sub_mul", "rref")


@contextlib.contextmanager
def backend(module):
    saved = {n: getattr(_kernels, n) for n in NAMES}
    for n in NAMES:
        setattr(_kernels, n, getattr(module, n))
    clear_cache()
    try:
        yield
    finally:
        for n, f in saved.items():
            setattr(_kernels, n, f)
        clear_cache()


def katsura4():
    v = ("a", "b", "c", "d", "e")
    gens = ["a + 2*b + 2*c + 2*d + 2*e - 1",
            "a^2 + 2*b^2 + 2*c^2 + 2*d^2 + 2*e^2 - a",
            "2*a*b + 2*b*c + 2*c*d + 2*d*e - b",
            "b^2 + 2*a*c + 2*b*d + 2*c*e - c",
            "2*b*c + 2*a*d + 2*b*e - d"]
    return groebner(Ideal([parse_polynomial(g, v) for g in gens], v)).texts()


def milnor_mixed():
    v = ("x", "y", "z")
    f = parse_polynomial("x^5 + y^7 + z^4 + x^2*y^3*z + x*y*z^2 + x^3*z^3", v)
    return milnor_algebra(f).milnor_number


def saito_batch():
    rng = random.Random(11)
    W = WeightSystem(("x", "y", "z", "w"), (1, 2, 3, 5))
    return [saito_check(random_weighted_homogeneous(rng, W, rng.randint(6, 16)), W)
            for _ in range(60)]


WORKLOADS = [("katsura-4 groebner", katsura4),
             ("milnor, mu = 114", milnor_mixed),
             ("60 graded saito checks", saito_batch)]


def timed(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        clear_cache()
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled kernels not built; only the fallback is available")
        return 1
    print(f"{'workload':28s} {'python s':>10s} {'cython s':>10s} {'speedup':>8s}")
    for name, fn in WORKLOADS:
        with backend(_pykernels):
            tp, rp = timed(fn, args.repeat)
        with backend(_ckernels):
            tc, rc = timed(fn, args.repeat)
        if rp != rc:
            raise SystemExit(f"{name}: backends disagree")
        print(f"{name:28s} {tp:10.3f} {tc:10.3f} {tp / tc:7.2f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
