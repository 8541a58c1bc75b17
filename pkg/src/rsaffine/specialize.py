"""Parameter specializations: s -> r^-1, s -> r, r -> s^k, and their images
on pairing tables and matrix modules.

Specialization acts on matrices entrywise; a genuinely divergent entry
raises SpecializationPole.  The specialized module carries the images of
(r, s) so relation suites re-run with the right coefficients where those
coefficients stay finite.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cartan import PairingTable
from .errors import SpecializationPole
from .field import R, S, RatFunc
from .matrix import Matrix
from .rep_core import MatrixModule

S_TO_R_INVERSE = "s_to_r_inverse"
S_TO_R = "s_to_r"
R_TO_S_POW = "r_to_s_pow"
INDEPENDENT = "independent"


@dataclass(frozen=True)
class SpecMap:
    """One of the parameter collapses; k parametrizes r -> s^k (k != 1,
    which would duplicate s -> r read backwards)."""

    kind: str
    k: int = 0

    def __post_init__(self):
        if self.kind not in (S_TO_R_INVERSE, S_TO_R, R_TO_S_POW, INDEPENDENT):
            raise ValueError(f"unknown specialization {self.kind!r}")
        if self.kind == R_TO_S_POW and self.k == 1:
            raise ValueError("r -> s^1 duplicates the s -> r map")

    @property
    def target_variable(self) -> str:
        return "s" if self.kind == R_TO_S_POW else "r"

    def subs(self) -> dict:
        if self.kind == S_TO_R_INVERSE:
            return {"s": R**-1}
        if self.kind == S_TO_R:
            return {"s": R}
        if self.kind == R_TO_S_POW:
            return {"r": S**self.k}
        return {}

    def apply(self, x: RatFunc) -> RatFunc:
        return x.substitute(**self.subs())

    def image_rs(self):
        """Images of the pair (r, s) under the map."""
        return (self.apply(R), self.apply(S))


def parse_spec_map(text: str) -> SpecMap:
    """'s=r^-1' | 's=r' | 'r=s^k' (integer k != 1) | 'independent'."""
    t = text.replace(" ", "")
    if t in ("s=r^-1", "s=r^(-1)", "s=1/r"):
        return SpecMap(S_TO_R_INVERSE)
    if t == "s=r":
        return SpecMap(S_TO_R)
    if t == "independent":
        return SpecMap(INDEPENDENT)
    if t.startswith("r=s^"):
        return SpecMap(R_TO_S_POW, int(t[4:].strip("()")))
    raise ValueError(f"cannot parse specialization map {text!r}")


def specialize_table(t: PairingTable, m: SpecMap):
    """Entrywise image of the pairing table; a matrix of RatFunc values."""
    return [[m.apply(e) for e in row] for row in t.entries]


def specialize_pairing(t: PairingTable, m: SpecMap) -> PairingTable:
    """Specialized table rewrapped for the relation engine (classical data
    unchanged; diagnostics inherited, not recomputed)."""
    entries = specialize_table(t, m)
    return PairingTable(
        type=t.type,
        entries=tuple(tuple(row) for row in entries),
        cartan=t.cartan,
        d=t.d,
        diagnostics=t.diagnostics,
    )


def specialize_module(mod: MatrixModule, m: SpecMap) -> MatrixModule:
    """Entrywise image of every generator matrix, over the specialized table."""
    subs = m.subs()
    assign = {}
    for g, mat in mod.assign.items():
        try:
            assign[g] = Matrix(
                [[x.substitute(**subs) for x in row] for row in mat.rows]
            )
        except SpecializationPole as exc:
            raise SpecializationPole(f"generator {g} has a pole: {exc}") from None
    table = specialize_pairing(mod.table, m)
    rs = (m.apply(mod.rs[0]), m.apply(mod.rs[1]))
    return MatrixModule(table, assign, check=False, rs=rs)


def centrality_report(mod: MatrixModule) -> dict:
    """Do the group-like matrices commute with every generator matrix?"""
    from .matrix import commutator
    from .rep_core import W_KIND, WP_KIND

    grouplikes = [(g, m) for g, m in mod.assign.items() if g.kind in (W_KIND, WP_KIND)]
    failures = []
    checked = 0
    for g, gm in grouplikes:
        for h, hm in mod.assign.items():
            checked += 1
            if not commutator(gm, hm).is_zero():
                failures.append(f"[{g}, {h}] != 0")
    return {"checked": checked, "failures": failures}
