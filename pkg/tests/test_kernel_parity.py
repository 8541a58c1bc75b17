"""The compiled kernel must agree with the pure-Python kernel exactly."""

import random
from fractions import Fraction

import pytest

from rsaffine import _pykernel

ckernel = pytest.importorskip("rsaffine._ckernel")


def random_poly(rng, max_terms=8):
    out = {}
    for _ in range(rng.randint(0, max_terms)):
        key = (
            rng.randint(-12, 12),
            rng.randint(-12, 12),
            rng.randint(-3, 3),
            rng.randint(-3, 3),
        )
        c = Fraction(rng.randint(-9, 9), rng.randint(1, 7))
        if c:
            out[key] = out.get(key, Fraction(0)) + c
    return {k: v for k, v in out.items() if v}


@pytest.mark.parametrize("seed", range(6))
def test_binary_ops_agree(seed):
    rng = random.Random(seed)
    for _ in range(40):
        p, q = random_poly(rng), random_poly(rng)
        assert _pykernel.padd(p, q) == ckernel.padd(p, q)
        assert _pykernel.psub(p, q) == ckernel.psub(p, q)
        assert _pykernel.pmul(p, q) == ckernel.pmul(p, q)
        assert _pykernel.peq(p, q) == ckernel.peq(p, q)


@pytest.mark.parametrize("seed", range(3))
def test_unary_ops_agree(seed):
    rng = random.Random(100 + seed)
    for _ in range(40):
        p = random_poly(rng)
        c = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        sh = tuple(rng.randint(-4, 4) for _ in range(4))
        assert _pykernel.pneg(p) == ckernel.pneg(p)
        assert _pykernel.pscale(p, c) == ckernel.pscale(p, c)
        assert _pykernel.pshift(p, *sh) == ckernel.pshift(p, *sh)


def test_cancellation_paths_agree():
    p = {(0, 0, 0, 0): Fraction(1), (6, 0, 0, 0): Fraction(2)}
    q = {(0, 0, 0, 0): Fraction(-1), (6, 0, 0, 0): Fraction(-2)}
    assert _pykernel.padd(p, q) == ckernel.padd(p, q) == {}
    r = {(6, 0, 0, 0): Fraction(1), (0, 6, 0, 0): Fraction(-1)}
    t = {(6, 0, 0, 0): Fraction(1), (0, 6, 0, 0): Fraction(1)}
    # (r-s)(r+s): middle terms cancel identically in both kernels
    assert _pykernel.pmul(r, t) == ckernel.pmul(r, t)
    assert (12, 0, 0, 0) in ckernel.pmul(r, t)
    assert (6, 6, 0, 0) not in ckernel.pmul(r, t)
