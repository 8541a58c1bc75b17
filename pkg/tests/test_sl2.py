"""Evaluation modules: ladder actions, currents, series and imaginary
generators, all against independently computed eigenvalue formulas."""

import json
from pathlib import Path

import pytest

from rsaffine.errors import WindowTooSmall
from rsaffine.field import A, ONE, R, S, ZERO, quantum_int
from rsaffine.rep_core import (
    Aim,
    E,
    F,
    W,
    Wp,
    Wser,
    Xm,
    Xp,
    all_pass,
    check_chevalley,
    check_drinfeld,
)
from rsaffine.series import TruncSeries
from rsaffine.sl2 import (
    build_chevalley_eval,
    build_current_eval,
    build_Vn,
    evaluation_map_consistency,
    highest_weight_vector,
    omega_matrices,
    recover_imaginary,
)

RHO = R * S**-1
GOLDEN = Path(__file__).parent / "golden" / "module_v2.json"


def test_v0_is_trivial():
    m = build_Vn(0)
    assert m.get(E(1)).is_zero() and m.get(F(1)).is_zero()
    assert m.get(W(1)).is_identity() and m.get(Wp(1)).is_identity()


def test_v1_actions():
    m = build_Vn(1)
    assert m.get(E(1)).apply([ZERO, ONE]) == [ONE, ZERO]  # e.v_1 = [1] v_0
    assert m.get(F(1)).apply([ONE, ZERO]) == [ZERO, ONE]  # f.v_0 = [1] v_1
    assert m.get(W(1)).apply([ONE, ZERO]) == [R, ZERO]
    assert m.get(Wp(1)).apply([ONE, ZERO]) == [S, ZERO]


def test_v2_raising_coefficient():
    m = build_Vn(2)
    assert m.get(E(1)).apply([ZERO, ONE, ZERO]) == [R + S, ZERO, ZERO]


@pytest.mark.parametrize("n", range(5))
def test_weight_grading(n):
    m = build_Vn(n)
    for i in range(n + 1):
        v = [ONE if j == i else ZERO for j in range(n + 1)]
        assert m.get(W(1)).apply(v) == [R**n * RHO**-i * x for x in v]
        assert m.get(Wp(1)).apply(v) == [S**n * RHO**i * x for x in v]


def test_finite_part_relations():
    assert all_pass(check_chevalley(build_Vn(3), nodes=[1]))


# -- Chevalley evaluation -------------------------------------------------------


def test_node0_omega_swap():
    for n in range(4):
        m = build_chevalley_eval(n)
        v0 = [ONE] + [ZERO] * n
        assert m.get(W(0)).apply(v0) == [S**n] + [ZERO] * n


def test_node0_raising_action():
    m = build_chevalley_eval(1)
    v0 = [ONE, ZERO]
    assert m.get(E(0)).apply(v0) == [ZERO, R**-1 * S * A]


def test_n0_affine_module_trivial():
    m = build_chevalley_eval(0)
    assert m.get(E(0)).is_zero() and m.get(F(0)).is_zero()
    assert all_pass(check_chevalley(m))


def test_e0_annihilates_v0_iff_n0():
    for n in range(4):
        m = build_chevalley_eval(n)
        v0 = [ONE] + [ZERO] * n
        killed = all(x.is_zero() for x in m.get(E(0)).apply(v0))
        assert killed == (n == 0)


# -- currents ---------------------------------------------------------------------


def test_current_k0_is_chevalley_pair():
    em = build_current_eval(2, kmax=2, lmax=1)
    m = build_Vn(2)
    assert em.base.get(Xp(1, 0)) == m.get(E(1))
    assert em.base.get(Xm(1, 0)) == m.get(F(1))


def test_current_positive_k_example():
    # x+(1).v_1 = a s^-1 (rs^-1)^-1 [1] v_0 = a r^-1 v_0 at n = 1
    em = build_current_eval(1, kmax=2, lmax=1)
    assert em.base.get(Xp(1, 1)).apply([ZERO, ONE]) == [A * R**-1, ZERO]


def test_current_negative_k_example():
    # x-(-1).v_0 = a^-1 r^-1 (rs^-1) v_1 = a^-1 s^-1 v_1 at n = 1
    em = build_current_eval(1, kmax=2, lmax=1)
    assert em.base.get(Xm(1, -1)).apply([ONE, ZERO]) == [ZERO, A**-1 * S**-1]


@pytest.mark.parametrize("n", range(4))
def test_highest_weight_annihilation(n):
    em = build_current_eval(n, kmax=3, lmax=1)
    v0 = highest_weight_vector(em)
    for k in range(-em.base.kmax, em.base.kmax + 1):
        assert all(x.is_zero() for x in em.base.get(Xp(1, k)).apply(v0))


@pytest.mark.parametrize("n", range(5))
@pytest.mark.parametrize("shift", (False, True))
def test_evaluation_morphism_agrees_with_closed_action(n, shift):
    assert evaluation_map_consistency(n, shift, kmax=3) == []


# -- series generators --------------------------------------------------------------


def test_omega_zero_is_grouplike():
    em = build_current_eval(2, kmax=2, lmax=1)
    ws, wps = omega_matrices(em, 2)
    assert ws[0] == em.base.get(W(1))
    assert wps[0] == em.base.get(Wp(1))


def test_omega_negative_index_is_zero():
    em = build_current_eval(1, kmax=2, lmax=1)
    assert em.base.get(Wser(1, -2)).is_zero()


def test_omega_eigenvalue_shifted_module():
    # on the rs^-1-shifted module: w(1).v_0 = a (r-s) s^-1 v_0
    em = build_current_eval(1, use_shift=True, kmax=2, lmax=1)
    ws, _ = omega_matrices(em, 1)
    assert ws[1].apply([ONE, ZERO]) == [A * (R - S) * S**-1, ZERO]


@pytest.mark.parametrize("n", range(4))
def test_hw_eigenvalue_formulas(n):
    # Phi+_k = (r-s)(a r^-1 s^(1-n))^k [n], Phi-_-k = -(r-s)(a^-1 r^(1-n) s^-1)^k [n]
    em = build_current_eval(n, kmax=3, lmax=1)
    ws, wps = omega_matrices(em, 3)
    qn = quantum_int(n)
    for k in range(1, 4):
        plus = (R - S) * (A * R**-1 * S ** (1 - n)) ** k * qn
        minus = -(R - S) * (A**-1 * R ** (1 - n) * S**-1) ** k * qn
        assert ws[k][0, 0] == plus
        assert wps[k][0, 0] == minus


def test_omega_requires_materialized_currents():
    em = build_current_eval(1, kmax=2, lmax=1)
    with pytest.raises(WindowTooSmall):
        omega_matrices(em, 40)


# -- imaginary generators --------------------------------------------------------------


def test_trivial_module_has_zero_imaginaries():
    em = build_current_eval(0, kmax=2, lmax=3)
    apos, aneg = recover_imaginary(em, 3)
    assert all(m.is_zero() for m in apos + aneg)


def test_a1_eigenvalue_from_series_oracle():
    # independent oracle: a(1) = w(1) w(0)^-1 / (r-s) at order 1 of the log
    em = build_current_eval(1, use_shift=True, kmax=2, lmax=2)
    ws, _ = omega_matrices(em, 1)
    oracle = ws[1] @ ws[0].inverse()
    oracle = oracle.scale((R - S).inv())
    apos, _ = recover_imaginary(em, 1)
    assert apos[0] == oracle
    assert apos[0].apply([ONE, ZERO]) == [A * R**-1 * S**-1, ZERO]


def test_imaginaries_commute():
    em = build_current_eval(2, kmax=2, lmax=2)
    a1 = em.base.get(Aim(1, 1))
    am1 = em.base.get(Aim(1, -1))
    assert (a1 @ am1 - am1 @ a1).is_zero()


@pytest.mark.parametrize("n", range(3))
def test_series_exponential_roundtrip(n):
    # rebuilding the omega series from the recovered imaginaries reproduces it
    order = 4
    em = build_current_eval(n, kmax=2, lmax=order)
    ws, _ = omega_matrices(em, order)
    apos, _ = recover_imaginary(em, order)
    for i in range(n + 1):
        log_series = TruncSeries("z", order, [ZERO] + [(R - S) * m[i, i] for m in apos])
        rebuilt = log_series.exp() * ws[0][i, i]
        assert rebuilt == TruncSeries("z", order, [m[i, i] for m in ws])


@pytest.mark.parametrize("n", range(4))
def test_ladder_identity(n):
    # [a(l), x+(k)] = theta_l x+(l+k) with theta_l = (rho^l - rho^-l)/(l(r-s))
    em = build_current_eval(n, kmax=3, lmax=2)
    for l in (1, 2):
        th = (RHO**l - RHO**-l) / ((R - S) * l)
        al = em.base.get(Aim(1, l))
        for k in range(-2, 3):
            xp = em.base.get(Xp(1, k))
            lhs = al @ xp - xp @ al
            assert lhs == em.base.get(Xp(1, l + k)).scale(th)


@pytest.mark.parametrize("n", range(4))
@pytest.mark.parametrize("shift", (False, True))
def test_full_drinfeld_suite(n, shift):
    em = build_current_eval(n, shift, kmax=3, lmax=3)
    assert all_pass(check_drinfeld(em.base, kmax=3, lmax=3))


def test_module_golden_file():
    em = build_current_eval(2, kmax=1, lmax=1)
    got = em.base.to_json()
    golden = json.loads(GOLDEN.read_text())
    assert got == golden
