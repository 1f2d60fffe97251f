"""The compiled kernels must agree with the fallback on every input."""

import os
import subprocess
import sys
from fractions import Fraction

import pytest

from whmilnor import _kernels, _pykernels

ck = pytest.importorskip("whmilnor._ckernels")


def _mono(rng, n):
    return tuple(rng.randint(0, 4) for _ in range(n))


def _poly(rng, n, k=5):
    out = {}
    for _ in range(rng.randint(0, k)):
        out[_mono(rng, n)] = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
    return {m: c for m, c in out.items() if c}


def test_backend_selected():
    assert _kernels.BACKEND in ("cython", "python")


def test_monomial_ops_agree(rng):
    for _ in range(300):
        n = rng.randint(1, 5)
        a, b = _mono(rng, n), _mono(rng, n)
        assert ck.mono_mul(a, b) == _pykernels.mono_mul(a, b)
        assert ck.mono_lcm(a, b) == _pykernels.mono_lcm(a, b)
        assert ck.mono_divides(a, b) == _pykernels.mono_divides(a, b)
        if _pykernels.mono_divides(a, b):
            assert ck.mono_quo(b, a) == _pykernels.mono_quo(b, a)


def test_poly_ops_agree(rng):
    for _ in range(200):
        n = rng.randint(1, 4)
        p, q = _poly(rng, n), _poly(rng, n)
        c, m = Fraction(rng.randint(-5, 5), 3), _mono(rng, n)
        assert ck.poly_add(p, q) == _pykernels.poly_add(p, q)
        assert ck.poly_mul(p, q) == _pykernels.poly_mul(p, q)
        assert ck.poly_sub_mul(p, c, m, q) == _pykernels.poly_sub_mul(p, c, m, q)


def test_rref_agrees(rng):
    for _ in range(100):
        rows = [[Fraction(rng.randint(-3, 3)) for _ in range(6)] for _ in range(rng.randint(0, 6))]
        assert ck.rref([list(r) for r in rows], 6) == _pykernels.rref([list(r) for r in rows], 6)


def test_normal_form_agrees(rng):
    key = lambda m: (sum(m), tuple(-e for e in reversed(m)))
    for _ in range(100):
        basis = []
        for _ in range(rng.randint(1, 3)):
            p = _poly(rng, 2, 3)
            if p:
                lm = max(p, key=key)
                lc = p[lm]
                basis.append((lm, {m: c / lc for m, c in p.items()}))
        target = _poly(rng, 2, 6)
        assert ck.normal_form(target, basis, key, 10_000) == _pykernels.normal_form(target, basis, key, 10_000)


def test_normal_form_budget_agrees():
    key = lambda m: (sum(m), tuple(-e for e in reversed(m)))
    basis = [((1, 0), {(1, 0): Fraction(1), (0, 1): Fraction(-1)})]
    target = {(9, 0): Fraction(1)}
    assert ck.normal_form(target, basis, key, 3)[0] is None
    assert _pykernels.normal_form(target, basis, key, 3)[0] is None


def test_environment_forces_fallback():
    env = dict(os.environ, WHMILNOR_PURE_PYTHON="1")
    proc = subprocess.run([sys.executable, "-c", "import whmilnor; print(whmilnor.BACKEND)"],
                          capture_output=True, text=True, env=env)
    assert proc.stdout.strip() == "python"
