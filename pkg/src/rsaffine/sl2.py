"""Finite-dimensional modules for the rank-1 affine algebra: the ladder
module V_n, its affine Chevalley pullback, and the loop-generator
(current) evaluation modules with their series and imaginary generators.

Both normalizations are exposed: shift 1 gives V_n(a), shift rs^-1 gives
the variant W_n(a) = V_n(rs^-1 a) used by the per-weight eigenvalue
formulas.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cartan import AffineType, build_pairing
from .errors import BadConstantTerm, NotEigenvector, WindowTooSmall
from .field import A, ONE, R, S, RatFunc, quantum_int
from .matrix import Matrix, commutator
from .rep_core import (
    Aim,
    E,
    F,
    GammaHalf,
    GammaPrimeHalf,
    MatrixModule,
    W,
    Wp,
    Wpser,
    Wser,
    Xm,
    Xp,
)
from .series import TruncSeries

_A1 = build_pairing(AffineType("A", 1))
_RHO = R * S**-1

PLAIN = "plain"
RS_INVERSE = "rs_inverse"


def shift_factor(use_shift) -> RatFunc:
    if use_shift in (False, PLAIN):
        return ONE
    if use_shift in (True, RS_INVERSE):
        return _RHO
    raise ValueError(f"unknown shift {use_shift!r}")


@dataclass(frozen=True)
class EvalModule:
    """An (n+1)-dimensional current module; shift multiplies the parameter a."""

    n: int
    shift: RatFunc
    base: MatrixModule

    @property
    def dim(self) -> int:
        return self.n + 1


def _vn_matrices(n: int):
    d = n + 1
    e = Matrix.zeros(d)
    f = Matrix.zeros(d)
    erows = [list(row) for row in e.rows]
    frows = [list(row) for row in f.rows]
    for i in range(1, d):
        erows[i - 1][i] = quantum_int(n + 1 - i)
    for i in range(d - 1):
        frows[i + 1][i] = quantum_int(i + 1)
    w = Matrix.diagonal([R**n * _RHO**-i for i in range(d)])
    wp = Matrix.diagonal([S**n * _RHO**i for i in range(d)])
    return Matrix(erows), Matrix(frows), w, wp


def _with_gammas(assign, dim):
    ident = Matrix.identity(dim)
    for g in (GammaHalf(1), GammaHalf(-1), GammaPrimeHalf(1), GammaPrimeHalf(-1)):
        assign[g] = ident
    return assign


def build_Vn(n: int) -> MatrixModule:
    """The (n+1)-dimensional ladder module of the finite subalgebra:
    e.v_i = [n+1-i] v_(i-1), f.v_i = [i+1] v_(i+1), diagonal omega actions."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    e, f, w, wp = _vn_matrices(n)
    assign = {
        E(1): e,
        F(1): f,
        W(1): w,
        W(1, -1): w.inverse(),
        Wp(1): wp,
        Wp(1, -1): wp.inverse(),
    }
    return MatrixModule(_A1, _with_gammas(assign, n + 1))


def build_chevalley_eval(n: int, use_shift=False) -> MatrixModule:
    """Affine Chevalley module on V_n: node-0 generators act through the
    evaluation morphism e_0 -> r^-1 s a' f, f_0 -> r s^-1 a'^-1 e, with the
    omega pair swapped between the two nodes."""
    sh = shift_factor(use_shift)
    e, f, w, wp = _vn_matrices(n)
    ap = sh * A
    assign = {
        E(1): e,
        F(1): f,
        W(1): w,
        W(1, -1): w.inverse(),
        Wp(1): wp,
        Wp(1, -1): wp.inverse(),
        E(0): f.scale(R**-1 * S * ap),
        F(0): e.scale(R * S**-1 * ap.inv()),
        W(0): wp,
        W(0, -1): wp.inverse(),
        Wp(0): w,
        Wp(0, -1): w.inverse(),
    }
    return MatrixModule(_A1, _with_gammas(assign, n + 1))


def current_matrices(n: int, shift: RatFunc, k: int):
    """The loop-generator matrices x+(k), x-(k) on V_n (closed form)."""
    d = n + 1
    ap = shift * A
    xp = [[None] * d for _ in range(d)]
    xm = [[None] * d for _ in range(d)]
    from .field import ZERO

    for r_ in range(d):
        for c_ in range(d):
            xp[r_][c_] = ZERO
            xm[r_][c_] = ZERO
    for i in range(1, d):
        xp[i - 1][i] = ap**k * S ** (-n * k) * _RHO ** (-k * i) * quantum_int(n + 1 - i)
    for i in range(d - 1):
        xm[i + 1][i] = ap**k * R ** (n * k) * _RHO ** (-k * (i + 1)) * quantum_int(i + 1)
    return Matrix(xp), Matrix(xm)


def evaluation_map_consistency(n: int, use_shift=False, kmax: int = 3):
    """Cross-check the closed current action against the lifted evaluation
    morphism x+(k) -> r^-k s^k a^k w'^-k e, x-(k) -> r^-k s^k a^k f w^k.

    Returns a list of discrepancy descriptions (empty when they agree)."""
    sh = shift_factor(use_shift)
    e, f, w, wp = _vn_matrices(n)
    ap = sh * A
    out = []
    for k in range(-kmax, kmax + 1):
        scalar = (R**-1 * S * ap) ** k
        via_ev_p = (wp**-k @ e).scale(scalar)
        via_ev_m = (f @ w**k).scale(scalar)
        xp, xm = current_matrices(n, sh, k)
        if via_ev_p != xp:
            out.append(f"x+({k}) mismatch at n={n}")
        if via_ev_m != xm:
            out.append(f"x-({k}) mismatch at n={n}")
    return out


def build_current_eval(n: int, use_shift=False, kmax: int = 4, lmax: int = 4) -> EvalModule:
    """Current module with x+-(k) for |k| <= kmax+1, the omega series to
    order 2*kmax, and the recovered imaginary generators to +-lmax."""
    if n < 0 or kmax < 1:
        raise ValueError("need n >= 0 and kmax >= 1")
    sh = shift_factor(use_shift)
    d = n + 1
    _, _, w, wp = _vn_matrices(n)
    assign = {
        W(1): w,
        W(1, -1): w.inverse(),
        Wp(1): wp,
        Wp(1, -1): wp.inverse(),
    }
    reach = max(kmax + 1, 2 * kmax)  # series to order 2*kmax need currents there
    for k in range(-reach, reach + 1):
        xp, xm = current_matrices(n, sh, k)
        assign[Xp(1, k)] = xp
        assign[Xm(1, k)] = xm
    em = EvalModule(n, sh, MatrixModule(_A1, _with_gammas(assign, d)))

    ws, wps = omega_matrices(em, 2 * kmax)
    for m, mat in enumerate(ws):
        assign[Wser(1, m)] = mat
    for m, mat in enumerate(wps):
        assign[Wpser(1, -m)] = mat
    em = EvalModule(n, sh, MatrixModule(_A1, assign))

    apos, aneg = recover_imaginary(em, lmax)
    for l in range(1, lmax + 1):
        assign[Aim(1, l)] = apos[l - 1]
        assign[Aim(1, -l)] = aneg[l - 1]
    return EvalModule(n, sh, MatrixModule(_A1, assign))


def omega_matrices(em: EvalModule, mmax: int):
    """Series generators from the commutator instances:
    w(m) = (r-s)[x+(m), x-(0)] and w'(-m) = -(r-s)[x+(0), x-(-m)] for m > 0,
    w(0), w'(0) from the group-likes.  All results are diagonal (asserted).
    """
    mod = em.base
    if mod.kmax < mmax:
        raise WindowTooSmall(f"currents to |k| <= {mod.kmax}, need {mmax}")
    rs = R - S
    xm0 = mod.get(Xm(1, 0))
    xp0 = mod.get(Xp(1, 0))
    ws = [mod.get(W(1))]
    wps = [mod.get(Wp(1))]
    for m in range(1, mmax + 1):
        wm = commutator(mod.get(Xp(1, m)), xm0).scale(rs)
        wpm = commutator(xp0, mod.get(Xm(1, -m))).scale(-rs)
        if not wm.is_diagonal() or not wpm.is_diagonal():
            raise NotEigenvector(f"series generator at m={m} is not diagonal")
        ws.append(wm)
        wps.append(wpm)
    return ws, wps


def recover_imaginary(em: EvalModule, lmax: int):
    """Imaginary generators from the series logarithm:
    sum_m w(m) z^-m = w(0) exp((r-s) sum_l a(l) z^-l) and the primed series
    with the -(r-s) sign.  Returns (a(1..lmax), a(-1..-lmax)), all diagonal.
    """
    mod = em.base
    try:
        ws = [mod.assign[Wser(1, m)] for m in range(lmax + 1)]
        wps = [mod.assign[Wpser(1, -m)] for m in range(lmax + 1)]
    except KeyError:
        ws, wps = omega_matrices(em, lmax)
    d = em.dim
    rs_inv = (R - S).inv()

    apos_diag = [[] for _ in range(lmax)]
    aneg_diag = [[] for _ in range(lmax)]
    for i in range(d):
        c0 = ws[0][i, i]
        c0p = wps[0][i, i]
        if c0.is_zero() or c0p.is_zero():
            raise BadConstantTerm("group-like eigenvalue vanished")
        f = TruncSeries("z", lmax, [w[i, i] / c0 for w in ws])
        g = TruncSeries("z", lmax, [w[i, i] / c0p for w in wps])
        lf = f.log()
        lg = g.log()
        for l in range(1, lmax + 1):
            apos_diag[l - 1].append(lf[l] * rs_inv)
            aneg_diag[l - 1].append(-(lg[l] * rs_inv))
    apos = [Matrix.diagonal(cs) for cs in apos_diag]
    aneg = [Matrix.diagonal(cs) for cs in aneg_diag]
    return apos, aneg


def highest_weight_vector(em: EvalModule):
    from .field import ZERO

    return [ONE] + [ZERO] * em.n
