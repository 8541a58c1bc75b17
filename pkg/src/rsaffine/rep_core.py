"""Generator symbols, matrix modules, and the relation-verification engine.

Every defining relation of both presentations is checked as an exact matrix
identity over Q(r, s, a).  Reports carry instance counts and the rendered
residual for any failure; an empty failure list means the relation holds
exactly on the module.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .cartan import PairingTable
from .errors import MissingGenerator, UnsupportedRank, WindowTooSmall
from .field import ONE, R, S, RatFunc, rf, render
from .matrix import Matrix, commutator

# -- generator symbols ---------------------------------------------------------

E_KIND = "E"
F_KIND = "F"
W_KIND = "W"
WP_KIND = "Wp"
GH_KIND = "GammaHalf"
GPH_KIND = "GammaPrimeHalf"
XP_KIND = "Xp"
XM_KIND = "Xm"
AIM_KIND = "Aimag"
WSER_KIND = "Wser"
WPSER_KIND = "Wpser"


@dataclass(frozen=True)
class Gen:
    """A generator symbol; `i` is the node index, `k` the loop/series index."""

    kind: str
    i: int = 0
    k: int = 0

    def __post_init__(self):
        if self.kind == AIM_KIND and self.k == 0:
            raise ValueError("imaginary root vectors need a nonzero index")

    def __str__(self):
        if self.kind in (E_KIND, F_KIND):
            return f"{self.kind}({self.i})"
        if self.kind in (W_KIND, WP_KIND, GH_KIND, GPH_KIND):
            sign = "+1" if self.k >= 0 else "-1"
            base = f"{self.kind}({self.i},{sign})" if self.kind in (W_KIND, WP_KIND) else f"{self.kind}({sign})"
            return base
        return f"{self.kind}({self.i},{self.k})"


def E(i):
    return Gen(E_KIND, i)


def F(i):
    return Gen(F_KIND, i)


def W(i, e=1):
    return Gen(W_KIND, i, 1 if e >= 0 else -1)


def Wp(i, e=1):
    return Gen(WP_KIND, i, 1 if e >= 0 else -1)


def GammaHalf(e=1):
    return Gen(GH_KIND, 0, 1 if e >= 0 else -1)


def GammaPrimeHalf(e=1):
    return Gen(GPH_KIND, 0, 1 if e >= 0 else -1)


def Xp(i, k):
    return Gen(XP_KIND, i, k)


def Xm(i, k):
    return Gen(XM_KIND, i, k)


def Aim(i, ell):
    return Gen(AIM_KIND, i, ell)


def Wser(i, m):
    return Gen(WSER_KIND, i, m)


def Wpser(i, m):
    return Gen(WPSER_KIND, i, m)


# -- modules --------------------------------------------------------------------


class MatrixModule:
    """A finite set of generator symbols mapped to square RatFunc matrices.

    Immutable after construction.  Construction verifies the group-like
    inverse pairs and the central half-element normalization (level zero:
    gamma gamma' acts as the identity).  `rs` carries the images of the two
    deformation parameters so specialized modules re-run the relation
    coefficients in their own field.
    """

    def __init__(self, table: PairingTable, assign: dict, check=True, rs=None):
        dims = {m.n for m in assign.values()} | {m.m for m in assign.values()}
        if len(dims) != 1:
            raise ValueError("all generator matrices must share one square size")
        self.dim = dims.pop()
        self.table = table
        self.assign = dict(assign)
        self.rs = (R, S) if rs is None else (RatFunc._coerce(rs[0]), RatFunc._coerce(rs[1]))
        self.kmax = max(
            (abs(g.k) for g in assign if g.kind in (XP_KIND, XM_KIND)), default=-1
        )
        if check:
            self._check_invariants()

    def _check_invariants(self):
        ident = Matrix.identity(self.dim)
        for i in range(self.table.size):
            for kind in (W_KIND, WP_KIND):
                plus, minus = Gen(kind, i, 1), Gen(kind, i, -1)
                if plus in self.assign and minus in self.assign:
                    if self.assign[plus] @ self.assign[minus] != ident:
                        raise ValueError(f"{kind}({i}) inverse pair broken")
        gh, gph = Gen(GH_KIND, 0, 1), Gen(GPH_KIND, 0, 1)
        if gh in self.assign and gph in self.assign:
            g = self.assign[gh]
            gp = self.assign[gph]
            if (g @ g) @ (gp @ gp) != ident:
                raise ValueError("gamma gamma' must act as the identity (c = 0)")

    def has(self, gen: Gen) -> bool:
        return gen in self.assign

    def get(self, gen: Gen) -> Matrix:
        # out-of-range series elements are zero by definition
        if gen.kind == WSER_KIND and gen.k < 0:
            return Matrix.zeros(self.dim)
        if gen.kind == WPSER_KIND and gen.k > 0:
            return Matrix.zeros(self.dim)
        try:
            return self.assign[gen]
        except KeyError:
            raise MissingGenerator(str(gen)) from None

    def with_assign(self, gen: Gen, mat: Matrix) -> "MatrixModule":
        new = dict(self.assign)
        new[gen] = mat
        return MatrixModule(self.table, new, check=False, rs=self.rs)

    def generators(self):
        return sorted(self.assign, key=lambda g: (g.kind, g.i, g.k))

    def to_json(self) -> dict:
        return {
            "type": str(self.table.type),
            "dim": self.dim,
            "generators": [
                {
                    "symbol": str(g),
                    "matrix": [[render(x) for x in row] for row in self.assign[g].rows],
                }
                for g in self.generators()
            ],
        }


@dataclass
class RelationReport:
    relation_id: str
    instances_checked: int = 0
    failures: list = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "relation_id": self.relation_id,
            "instances_checked": self.instances_checked,
            "failures": self.failures,
        }


class _Checker:
    def __init__(self, relation_id):
        self.report = RelationReport(relation_id)
        self._t0 = time.monotonic()

    def check(self, instance, lhs: Matrix, rhs: Matrix):
        self.report.instances_checked += 1
        if lhs != rhs:
            self.report.failures.append(
                {
                    "instance": str(instance),
                    "lhs": _render_matrix(lhs),
                    "rhs": _render_matrix(rhs),
                }
            )

    def done(self):
        self.report.elapsed_ms = (time.monotonic() - self._t0) * 1000.0
        return self.report


def _render_matrix(m: Matrix) -> str:
    return "[" + "; ".join(", ".join(render(x) for x in row) for row in m.rows) + "]"


# -- Chevalley relations ---------------------------------------------------------


def check_chevalley(mod: MatrixModule, nodes=None) -> list:
    """Verify (R1)-(R4) as exact matrix identities; returns one report each.

    nodes restricts the checked index set (e.g. the finite part of the
    diagram); default is every node of the table.
    """
    table = mod.table
    nodes = list(range(table.size)) if nodes is None else list(nodes)
    ident = Matrix.identity(mod.dim)
    zero = Matrix.zeros(mod.dim)
    reports = []

    c = _Checker("R1")
    for i in nodes:
        c.check(("winv", i), mod.get(W(i)) @ mod.get(W(i, -1)), ident)
        c.check(("wpinv", i), mod.get(Wp(i)) @ mod.get(Wp(i, -1)), ident)
    for i in nodes:
        for j in nodes:
            c.check(("ww", i, j), commutator(mod.get(W(i)), mod.get(W(j))), zero)
            c.check(("wwp", i, j), commutator(mod.get(W(i)), mod.get(Wp(j))), zero)
            c.check(("wpwp", i, j), commutator(mod.get(Wp(i)), mod.get(Wp(j))), zero)
    gh, gph = mod.get(GammaHalf()), mod.get(GammaPrimeHalf())
    c.check(("ghinv",), gh @ mod.get(GammaHalf(-1)), ident)
    c.check(("gphinv",), gph @ mod.get(GammaPrimeHalf(-1)), ident)
    c.check(("central-product",), (gh @ gh) @ (gph @ gph), ident)
    reports.append(c.done())

    c = _Checker("R2")
    for i in nodes:
        ei, fi = mod.get(E(i)), mod.get(F(i))
        for j in nodes:
            wj, wjinv = mod.get(W(j)), mod.get(W(j, -1))
            wpj, wpjinv = mod.get(Wp(j)), mod.get(Wp(j, -1))
            pij = table.entry(i, j)
            pji = table.entry(j, i)
            c.check(("we", i, j), wj @ ei @ wjinv, ei.scale(pij))
            c.check(("wf", i, j), wj @ fi @ wjinv, fi.scale(pij.inv()))
            c.check(("wpe", i, j), wpj @ ei @ wpjinv, ei.scale(pji.inv()))
            c.check(("wpf", i, j), wpj @ fi @ wpjinv, fi.scale(pji))
    reports.append(c.done())

    c = _Checker("R3")
    rsub, ssub = mod.rs
    rsinv = (rsub - ssub).inv()
    for i in nodes:
        for j in nodes:
            lhs = commutator(mod.get(E(i)), mod.get(F(j)))
            if i == j:
                rhs = (mod.get(W(i)) - mod.get(Wp(i))).scale(rsinv)
            else:
                rhs = zero
            c.check((i, j), lhs, rhs)
    reports.append(c.done())

    c = _Checker("R4")
    for i in nodes:
        ei, wi, wiinv = mod.get(E(i)), mod.get(W(i)), mod.get(W(i, -1))
        fi, wpi, wpiinv = mod.get(F(i)), mod.get(Wp(i)), mod.get(Wp(i, -1))
        for j in nodes:
            if i == j:
                continue
            times = 1 - table.cartan[i][j]
            b = mod.get(E(j))
            for _ in range(times):
                b = ei @ b - wi @ b @ wiinv @ ei
            c.check(("ad_l e", i, j), b, zero)
            b = mod.get(F(j))
            for _ in range(times):
                b = b @ fi - fi @ wpiinv @ b @ wpi
            c.check(("ad_r f", i, j), b, zero)
    reports.append(c.done())

    return reports


def chevalley_instance_counts(table: PairingTable, nodes=None) -> dict:
    N = table.size if nodes is None else len(list(nodes))
    return {
        "R1": 2 * N + 3 * N * N + 3,
        "R2": 4 * N * N,
        "R3": N * N,
        "R4": 2 * N * (N - 1),
    }


# -- Drinfeld relations -----------------------------------------------------------


def check_drinfeld(mod: MatrixModule, kmax: int, lmax: int) -> list:
    """Verify (D1)-(D8) on a rank-1 current module, exactly.

    Level-zero convention: the series generators Wser/Wpser and the
    imaginary generators are the operational ones, defined through the
    (m,0)/(0,-m) commutator instances and the series logarithm.  In that
    normalization the central prefactors of D5/D7 are integer powers of the
    central group-like K = omega omega' (central because rank 1), and the
    gamma half-generators enter only the D1 inverse/centrality checks.
    """
    table = mod.table
    if table.type.family != "A" or table.type.rank != 1:
        raise UnsupportedRank("current-level verification is rank-1 only")
    if kmax < 1 or lmax < 1:
        raise WindowTooSmall("need kmax >= 1 and lmax >= 1")
    if mod.kmax < kmax + 1:
        raise WindowTooSmall(
            f"currents materialized to |k| <= {mod.kmax}, need {kmax + 1}"
        )
    i = 1
    dim = mod.dim
    ident = Matrix.identity(dim)
    zero = Matrix.zeros(dim)
    rho = table.entry(i, i)
    rsub, ssub = mod.rs
    rs = (rsub - ssub).inv()

    w, winv = mod.get(W(i)), mod.get(W(i, -1))
    wp, wpinv = mod.get(Wp(i)), mod.get(Wp(i, -1))
    kc = w @ wp
    kcinv = winv @ wpinv

    def kpow(n):
        base = kc if n >= 0 else kcinv
        out = ident
        for _ in range(abs(n)):
            out = out @ base
        return out

    reports = []

    c = _Checker("D1")
    gh, gph = mod.get(GammaHalf()), mod.get(GammaPrimeHalf())
    c.check(("winv",), w @ winv, ident)
    c.check(("wpinv",), wp @ wpinv, ident)
    c.check(("wwp",), commutator(w, wp), zero)
    c.check(("ghinv",), gh @ mod.get(GammaHalf(-1)), ident)
    c.check(("gphinv",), gph @ mod.get(GammaPrimeHalf(-1)), ident)
    c.check(("central-product",), (gh @ gh) @ (gph @ gph), ident)
    reports.append(c.done())

    ells = [l for l in range(-lmax, lmax + 1) if l != 0]

    c = _Checker("D2")
    for l1 in ells:
        for l2 in ells:
            # type 1: gamma^|l| - gamma'^|l| annihilates the right side
            c.check((l1, l2), commutator(mod.get(Aim(i, l1)), mod.get(Aim(i, l2))), zero)
    reports.append(c.done())

    c = _Checker("D3")
    for l in ells:
        al = mod.get(Aim(i, l))
        for tag, m in (("w", w), ("winv", winv), ("wp", wp), ("wpinv", wpinv)):
            c.check((l, tag), commutator(al, m), zero)
    reports.append(c.done())

    c = _Checker("D4")
    for k in range(-(kmax + 1), kmax + 2):
        xp, xm = mod.get(Xp(i, k)), mod.get(Xm(i, k))
        c.check(("w x+", k), w @ xp @ winv, xp.scale(rho))
        c.check(("w x-", k), w @ xm @ winv, xm.scale(rho.inv()))
        c.check(("wp x+", k), wp @ xp @ wpinv, xp.scale(rho.inv()))
        c.check(("wp x-", k), wp @ xm @ wpinv, xm.scale(rho))
    reports.append(c.done())

    def theta(l):
        return (rho**l - rho**-l) * rs / rf(l)

    c = _Checker("D5_1")
    for l in range(1, lmax + 1):
        al = mod.get(Aim(i, l))
        th = theta(l)
        for k in range(-kmax, kmax + 1):
            if abs(l + k) > kmax + 1:
                continue
            lhs = commutator(al, mod.get(Xp(i, k)))
            c.check(("x+", l, k), lhs, mod.get(Xp(i, l + k)).scale(th))
            lhs = commutator(al, mod.get(Xm(i, k)))
            c.check(("x-", l, k), lhs, (kpow(-l) @ mod.get(Xm(i, l + k))).scale(-th))
    reports.append(c.done())

    c = _Checker("D5_2")
    for l in range(1, lmax + 1):
        al = mod.get(Aim(i, -l))
        th = theta(l)
        for k in range(-kmax, kmax + 1):
            if abs(k - l) > kmax + 1:
                continue
            lhs = commutator(al, mod.get(Xp(i, k)))
            c.check(("x+", -l, k), lhs, (kpow(-l) @ mod.get(Xp(i, k - l))).scale(th))
            lhs = commutator(al, mod.get(Xm(i, k)))
            c.check(("x-", -l, k), lhs, mod.get(Xm(i, k - l)).scale(-th))
    reports.append(c.done())

    c = _Checker("D6")
    sqrt_factor = ONE  # (<j,i><i,j>^-1)^(1/2) at i = j
    for sign in (+1, -1):
        rr = rho if sign > 0 else rho.inv()
        X = (lambda k: mod.get(Xp(i, k))) if sign > 0 else (lambda k: mod.get(Xm(i, k)))
        for k in range(-(kmax + 1), kmax + 1):
            for k2 in range(-(kmax + 1), kmax + 1):
                lhs = X(k + 1) @ X(k2) - (X(k2) @ X(k + 1)).scale(rr)
                rhs = (X(k2 + 1) @ X(k) - (X(k) @ X(k2 + 1)).scale(rr)).scale(-sqrt_factor)
                c.check((sign, k, k2), lhs, rhs)
    reports.append(c.done())

    c = _Checker("D7")
    for k in range(-kmax, kmax + 1):
        for k2 in range(-kmax, kmax + 1):
            m = k + k2
            lhs = commutator(mod.get(Xp(i, k)), mod.get(Xm(i, k2)))
            rhs = (kpow(k2) @ mod.get(Wser(i, m)) - kpow(-k) @ mod.get(Wpser(i, m))).scale(rs)
            c.check((k, k2), lhs, rhs)
    reports.append(c.done())

    for rid in ("D8_1", "D8_2", "D8_3"):
        c = _Checker(rid)  # vacuous at rank 1: no i != j pairs
        reports.append(c.done())

    return reports


def drinfeld_instance_counts(kmax: int, lmax: int) -> dict:
    d5 = 0
    for l in range(1, lmax + 1):
        for k in range(-kmax, kmax + 1):
            if abs(l + k) <= kmax + 1:
                d5 += 2
    return {
        "D1": 6,
        "D2": (2 * lmax) ** 2,
        "D3": 2 * lmax * 4,
        "D4": 4 * (2 * kmax + 3),
        "D5_1": d5,
        "D5_2": d5,
        "D6": 2 * (2 * kmax + 2) ** 2,
        "D7": (2 * kmax + 1) ** 2,
        "D8_1": 0,
        "D8_2": 0,
        "D8_3": 0,
    }


def apply_word(mod: MatrixModule, word, vec):
    """Right-to-left action of a generator word on a vector."""
    out = [RatFunc._coerce(x) for x in vec]
    for gen in reversed(list(word)):
        out = mod.get(gen).apply(out)
    return out


def all_pass(reports) -> bool:
    return all(r.passed for r in reports)
