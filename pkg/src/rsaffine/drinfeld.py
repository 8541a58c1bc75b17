"""Highest-weight eigenvalue series and the polynomial pair that encodes them.

The ascending eigenvalue series of the w(m) generators on the highest-weight
line determines a unique monic-at-1 polynomial P with

    sum_k c_k z^k  =  r^deg(P) * P(s z) / P(r z)      (expansion about 0),

and the descending primed series satisfies the mirrored identity with
Q(z) = P((rs)^deg(P) z) expanded about infinity.  Reconstruction solves the
triangular linear system the identity imposes and then verifies every
remaining coefficient, so a non-Drinfeld series is rejected, not fitted.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IndexOutOfRange, MirrorMismatch, NoSolution, NotEigenvector
from .field import A, ONE, R, S, ZERO, render
from .rep_core import Wpser, Wser
from .series import ASC, DESC, TruncSeries
from .sl2 import EvalModule, omega_matrices, shift_factor


@dataclass(frozen=True)
class HwSeries:
    """Eigenvalue series of the series generators on the highest-weight line."""

    plus: TruncSeries  # ascending: eigenvalue of w(k) as coefficient of z^k
    minus: TruncSeries  # descending: eigenvalue of w'(-k) as coefficient of z^-k
    n: int


@dataclass(frozen=True)
class DrinfeldPoly:
    """P(z) with constant term 1, its degree, and the mirror Q(z) = P((rs)^deg z)."""

    coeffs: tuple  # c_0 .. c_deg, c_0 = 1
    mirror: tuple

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other):
        if not isinstance(other, DrinfeldPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def text(self) -> str:
        return poly_text(self.coeffs)

    def mirror_text(self) -> str:
        return poly_text(self.mirror)


def poly_text(coeffs) -> str:
    parts = []
    for k, c in enumerate(coeffs):
        if c.is_zero():
            continue
        mono = "1" if k == 0 else ("z" if k == 1 else f"z^{k}")
        if k == 0:
            parts.append(render(c))
        elif c.is_one():
            parts.append(f" + {mono}")
        else:
            parts.append(f" + ({render(c)})*{mono}")
    return "".join(parts) if parts else "0"


def _mirror(coeffs, n: int):
    rs_n = (R * S) ** n
    return tuple(c * rs_n**k for k, c in enumerate(coeffs))


def extract_hw_series(em: EvalModule, order: int) -> HwSeries:
    """Eigenvalues of w(k) and w'(-k) on the highest-weight basis vector."""
    mod = em.base
    have = all(Wser(1, m) in mod.assign and Wpser(1, -m) in mod.assign for m in range(order + 1))
    if have:
        ws = [mod.assign[Wser(1, m)] for m in range(order + 1)]
        wps = [mod.assign[Wpser(1, -m)] for m in range(order + 1)]
    else:
        ws, wps = omega_matrices(em, order)
    for m in (ws, wps):
        for mat in m:
            if not mat.is_diagonal():
                raise NotEigenvector("series generator is not diagonal on the basis")
    plus = TruncSeries("z", order, [w[0, 0] for w in ws], ASC)
    minus = TruncSeries("z", order, [w[0, 0] for w in wps], DESC)
    return HwSeries(plus=plus, minus=minus, n=em.n)


def closed_form_P(n: int, use_shift=False) -> DrinfeldPoly:
    """Product form prod_{k=1..n} (1 - a' (r^-1 s)^k r^-1 s^-n z), a' = shift*a."""
    ap = shift_factor(use_shift) * A
    roots = [ap * (R**-1 * S) ** k * R**-1 * S**-n for k in range(1, n + 1)]
    coeffs = [ONE]
    for rt in roots:
        nxt = [ZERO] * (len(coeffs) + 1)
        for j, c in enumerate(coeffs):
            nxt[j] = nxt[j] + c
            nxt[j + 1] = nxt[j + 1] - c * rt
        coeffs = nxt
    coeffs = tuple(coeffs)
    return DrinfeldPoly(coeffs=coeffs, mirror=_mirror(coeffs, n))


def _ratio_series_asc(num, den, order) -> TruncSeries:
    """Ascending expansion of num(z)/den(z) about 0 (den[0] invertible)."""
    f = TruncSeries("z", order, list(num), ASC)
    g = TruncSeries("z", order, list(den), ASC)
    return f * g.inv()


def _ratio_series_desc(num, den, order) -> TruncSeries:
    """Descending expansion of num(z)/den(z) about infinity for polynomials
    of the same degree with invertible leading coefficients."""
    d = len(num) - 1
    if len(den) - 1 != d:
        raise ValueError("expansion about infinity needs equal degrees")
    f = TruncSeries("z", order, list(reversed(num)), DESC)
    g = TruncSeries("z", order, list(reversed(den)), DESC)
    return f * g.inv()


def plus_series_of(p: DrinfeldPoly, order: int) -> TruncSeries:
    """r^deg * P(sz)/P(rz) expanded about 0."""
    num = [c * S**k for k, c in enumerate(p.coeffs)]
    den = [c * R**k for k, c in enumerate(p.coeffs)]
    return _ratio_series_asc(num, den, order) * R ** p.degree


def minus_series_of(p: DrinfeldPoly, order: int) -> TruncSeries:
    """r^deg * Q(sz)/Q(rz) expanded about infinity, Q the mirror."""
    if p.degree == 0:
        return TruncSeries("z", order, [ONE], DESC)
    num = [c * S**k for k, c in enumerate(p.mirror)]
    den = [c * R**k for k, c in enumerate(p.mirror)]
    return _ratio_series_desc(num, den, order) * R ** p.degree


def reconstruct_P(h: HwSeries) -> DrinfeldPoly:
    """Solve r^n P(sz) = P(rz) * plus-series for the n unknown coefficients,
    verify the remaining orders, then verify the minus-series mirror law.

    Raises NoSolution when the plus series is not of polynomial-ratio shape
    and MirrorMismatch when the plus side solves but the minus side fails.
    """
    n = h.n
    order = h.plus.order
    if order < 2 * n + 1:
        raise NoSolution(f"need plus series to order {2 * n + 1}, have {order}")
    phi = h.plus
    if phi[0] != R**n:
        raise NoSolution("constant term is not r^n")

    # triangular solve: coefficient of z^k in r^n P(sz) - P(rz)*phi = 0
    coeffs = [ONE] + [ZERO] * n
    for k in range(1, n + 1):
        acc = ZERO
        for j in range(k):
            acc = acc + coeffs[j] * R**j * phi[k - j]
        coeffs[k] = acc / (R**n * (S**k - R**k))
    p = DrinfeldPoly(coeffs=tuple(coeffs), mirror=_mirror(tuple(coeffs), n))

    if plus_series_of(p, order) != phi:
        raise NoSolution("plus series is not of Drinfeld polynomial form")
    if minus_series_of(p, h.minus.order) != h.minus:
        raise MirrorMismatch("minus series fails the mirrored identity")
    return p


def weight_gamma_series(em: EvalModule, i: int, order: int):
    """Eigenvalue generating functions of w(m), w'(-m) on the basis vector
    v_i: (ascending plus, descending minus)."""
    if not (0 <= i <= em.n):
        raise IndexOutOfRange(f"weight index {i} outside 0..{em.n}")
    mod = em.base
    have = all(Wser(1, m) in mod.assign and Wpser(1, -m) in mod.assign for m in range(order + 1))
    if have:
        ws = [mod.assign[Wser(1, m)] for m in range(order + 1)]
        wps = [mod.assign[Wpser(1, -m)] for m in range(order + 1)]
    else:
        ws, wps = omega_matrices(em, order)
    plus = TruncSeries("u", order, [w[i, i] for w in ws], ASC)
    minus = TruncSeries("u", order, [w[i, i] for w in wps], DESC)
    return plus, minus


def rq_polynomials(n: int, i: int):
    """The two factor lists (R, Q) in the per-weight closed form, as
    linear-factor parameter lists: R over j = 1..n, Q doubled over j = 1..i."""
    rfac = [A * R**-j * S ** (j - n - 1) for j in range(1, n + 1)]
    qfac = []
    for j in range(1, i + 1):
        qfac.append(A * R**-j * S ** (j - n - 1))
        qfac.append(A * R ** (1 - j) * S ** (j - n - 2))
    return rfac, qfac


def _poly_from_roots(params):
    coeffs = [ONE]
    for rt in params:
        nxt = [ZERO] * (len(coeffs) + 1)
        for j, c in enumerate(coeffs):
            nxt[j] = nxt[j] + c
            nxt[j + 1] = nxt[j + 1] - c * rt
        coeffs = nxt
    return coeffs


def rq_closed_series(n: int, i: int, order: int) -> TruncSeries:
    """Ascending expansion of r^(n-i) s^i R(us) Q(ur) / (R(ur) Q(us))."""
    rfac, qfac = rq_polynomials(n, i)
    num = _poly_series(_poly_from_roots(rfac), S, order) * _poly_series(
        _poly_from_roots(qfac), R, order
    )
    den = _poly_series(_poly_from_roots(rfac), R, order) * _poly_series(
        _poly_from_roots(qfac), S, order
    )
    pref = R ** (n - i) * S**i
    return num * den.inv() * pref


def _poly_series(coeffs, scale, order) -> TruncSeries:
    return TruncSeries("u", order, [c * scale**k for k, c in enumerate(coeffs)], ASC)


def verify_RQ_form(em: EvalModule, order: int = 6) -> dict:
    """Per-weight check of the closed-form eigenvalue generating function.

    The module must carry the rs^-1 shift (the closed form is stated for
    that normalization).  Also asserts the two prefactor readings agree:
    r^(deg R - deg Q/2) s^(deg Q/2) == r^(n-i) s^i since deg R = n and
    deg Q = 2i.  Failures are report content, never exceptions.
    """
    n = em.n
    results = []
    for i in range(n + 1):
        plus, _ = weight_gamma_series(em, i, order)
        want = rq_closed_series(n, i, order)
        degR, degQ = n, 2 * i
        pref_printed = R ** (degR - degQ // 2) * S ** (degQ // 2)
        pref_proof = R ** (n - i) * S**i
        entry = {
            "i": i,
            "pass": plus == want,
            "prefactor_consistent": pref_printed == pref_proof,
        }
        if not entry["pass"]:
            entry["residual"] = [render(a - b) for a, b in zip(plus.coeffs, want.coeffs)]
        results.append(entry)
    return {
        "n": n,
        "order": order,
        "all_pass": all(e["pass"] and e["prefactor_consistent"] for e in results),
        "per_weight": results,
    }


def drinfeld_report(n: int, use_shift=False, order=None) -> dict:
    """Reconstruction vs closed form plus the mirror law, JSON-ready."""
    from .sl2 import build_current_eval

    order = order if order is not None else 2 * n + 2
    kmax = max(1, (order + 1) // 2)
    em = build_current_eval(n, use_shift, kmax=kmax, lmax=1)
    h = extract_hw_series(em, order)
    closed = closed_form_P(n, use_shift)
    status = {"plus": "pass", "minus": "pass"}
    matches = False
    p = None
    try:
        p = reconstruct_P(h)
        matches = p == closed
    except NoSolution as exc:
        status["plus"] = f"fail: {exc}"
        status["minus"] = "skipped"
    except MirrorMismatch as exc:
        status["minus"] = f"fail: {exc}"
    return {
        "n": n,
        "shift": "rs_inverse" if shift_factor(use_shift) != ONE else "plain",
        "P": (p or closed).text(),
        "Q": (p or closed).mirror_text(),
        "checks": {
            "plus": status["plus"],
            "minus": status["minus"],
            "matches_closed_form": matches,
        },
    }
