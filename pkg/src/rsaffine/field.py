"""Exact scalar field: Laurent monomials and rational functions in r, s, a, b.

Everything downstream (pairing tables, module matrices, series) is computed
over Q(r, s, a, b) with r- and s-exponents in the lattice (1/6)Z and
integer exponents on the two evaluation parameters.  The lattice
denominator 6 = lcm(2, 3) covers the half- and third-integer powers the
pairing tables and weight extensions need.  There is no floating point
anywhere in this module.

Values are immutable after construction and safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as _intgcd

from . import _kernel as K
from .errors import (
    DivisionByZero,
    LatticeOverflow,
    NotPolynomial,
    SpecializationPole,
)

LATTICE = 6

_ZERO_KEY = (0, 0, 0, 0)


def _to_frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


def _lattice_int(exp, what: str) -> int:
    """Scale an (1/LATTICE)-lattice exponent to an exact integer."""
    e = _to_frac(exp) * LATTICE
    if e.denominator != 1:
        raise LatticeOverflow(f"{what} exponent {exp} not in (1/{LATTICE})Z")
    return int(e)


@dataclass(frozen=True)
class LaurentMono:
    """One monomial coeff * r^exp_r * s^exp_s * a^exp_a * b^exp_b.

    exp_r and exp_s must lie in (1/6)Z; the exponents of the evaluation
    parameters a and b are integers.  A zero coefficient forces all
    exponents to zero (the canonical zero).
    """

    coeff: Fraction
    exp_r: Fraction
    exp_s: Fraction
    exp_a: int
    exp_b: int = 0

    def __post_init__(self):
        object.__setattr__(self, "coeff", _to_frac(self.coeff))
        er = _to_frac(self.exp_r)
        es = _to_frac(self.exp_s)
        _lattice_int(er, "r")
        _lattice_int(es, "s")
        if not isinstance(self.exp_a, int) or not isinstance(self.exp_b, int):
            raise TypeError("exp_a and exp_b must be integers")
        if self.coeff == 0:
            er, es = Fraction(0), Fraction(0)
            object.__setattr__(self, "exp_a", 0)
            object.__setattr__(self, "exp_b", 0)
        object.__setattr__(self, "exp_r", er)
        object.__setattr__(self, "exp_s", es)

    def key(self):
        return (
            _lattice_int(self.exp_r, "r"),
            _lattice_int(self.exp_s, "s"),
            self.exp_a,
            self.exp_b,
        )

    def as_ratfunc(self) -> "RatFunc":
        if self.coeff == 0:
            return ZERO
        return RatFunc._make({self.key(): self.coeff}, {_ZERO_KEY: Fraction(1)})


# ---------------------------------------------------------------------------
# raw polynomial helpers (dicts: (er6, es6, ea, eb) -> Fraction)
# ---------------------------------------------------------------------------


def _order_key(k):
    # graded lexicographic on (exp_r, exp_s, exp_a, exp_b)
    return (k[0] + k[1] + k[2] + k[3], k[0], k[1], k[2], k[3])


def _leading(p):
    return max(p, key=_order_key)


def _min_exps(p):
    it = iter(p)
    m0, m1, m2, m3 = next(it)
    for k in it:
        if k[0] < m0:
            m0 = k[0]
        if k[1] < m1:
            m1 = k[1]
        if k[2] < m2:
            m2 = k[2]
        if k[3] < m3:
            m3 = k[3]
    return (m0, m1, m2, m3)


def _frac_content(p) -> Fraction:
    """Positive rational c with p/c integer-coefficient primitive."""
    num_gcd = 0
    den_lcm = 1
    for c in p.values():
        num_gcd = _intgcd(num_gcd, abs(c.numerator))
        d = c.denominator
        den_lcm = den_lcm * d // _intgcd(den_lcm, d)
    return Fraction(num_gcd, den_lcm)


def _int_primitive(p):
    """Scale to integer primitive coefficients; also flip sign so the
    graded-lex leading coefficient is positive."""
    if not p:
        return {}
    c = _frac_content(p)
    if p[_leading(p)] < 0:
        c = -c
    return K.pscale(p, 1 / c)


def _divmod_exact(p, q):
    """Exact multivariate division p / q in the polynomial ring.

    Returns the quotient dict, or None when q does not divide p.  Both
    inputs must have nonnegative exponents.
    """
    if not q:
        raise DivisionByZero("polynomial division by zero")
    quot = {}
    rem = dict(p)
    lq = _leading(q)
    cq = q[lq]
    while rem:
        lr = _leading(rem)
        dk = (lr[0] - lq[0], lr[1] - lq[1], lr[2] - lq[2], lr[3] - lq[3])
        if dk[0] < 0 or dk[1] < 0 or dk[2] < 0 or dk[3] < 0:
            return None
        c = rem[lr] / cq
        piece = {dk: c}
        quot = K.padd(quot, piece)
        rem = K.psub(rem, K.pmul(piece, q))
    return quot


def _deg_axis(p, ax):
    return max(k[ax] for k in p) if p else -1


def _univ_view(p, ax):
    """View p as a univariate polynomial in axis ax: {degree: coeff-dict}."""
    out = {}
    for k, c in p.items():
        d = k[ax]
        kk = list(k)
        kk[ax] = 0
        kk = tuple(kk)
        sub = out.setdefault(d, {})
        v = sub.get(kk)
        sub[kk] = c if v is None else v + c
    return {d: {k: c for k, c in sub.items() if c} for d, sub in out.items() if sub}


def _univ_collapse(u, ax):
    out = {}
    for d, sub in u.items():
        for k, c in sub.items():
            kk = list(k)
            kk[ax] = k[ax] + d
            out[tuple(kk)] = c
    return {k: c for k, c in out.items() if c}


def _univ_mul_coeff(u, c):
    return {d: K.pmul(sub, c) for d, sub in u.items()}


def _univ_sub(u, v):
    out = dict(u)
    for d, sub in v.items():
        w = K.psub(out.get(d, {}), sub)
        if w:
            out[d] = w
        else:
            out.pop(d, None)
    return out


def _univ_shift(u, n):
    return {d + n: sub for d, sub in u.items()}


def _prem(u, v):
    """Exact pseudo-remainder prem(u, v) = lc(v)^(deg u - deg v + 1) u mod v."""
    dv = max(v)
    lv = v[dv]
    r = u
    e = max(u) - dv + 1
    while r and max(r) >= dv:
        dr = max(r)
        lr = r[dr]
        r = _univ_sub(_univ_mul_coeff(r, lv), _univ_shift(_univ_mul_coeff(v, lr), dr - dv))
        e -= 1
    for _ in range(e):
        r = _univ_mul_coeff(r, lv)
    return r


def pgcd(p, q):
    """GCD of two Laurent dicts, integer primitive with positive leading
    coefficient.  Common monomial (possibly Laurent) factors included."""
    if not p:
        return _int_primitive(q)
    if not q:
        return _int_primitive(p)

    mp, mq = _min_exps(p), _min_exps(q)
    mono = tuple(min(a, b) for a, b in zip(mp, mq))
    p = K.pshift(p, -mp[0], -mp[1], -mp[2], -mp[3])
    q = K.pshift(q, -mq[0], -mq[1], -mq[2], -mq[3])

    g = _pgcd_shifted(_int_primitive(p), _int_primitive(q))
    return K.pshift(g, *mono)


def _exp_rescale(p, q):
    """Per-axis gcd of all occurring exponents (lattice scaling makes every
    exponent a multiple of 6 in the common all-integer case)."""
    sc = [0, 0, 0, 0]
    for poly in (p, q):
        for k in poly:
            for ax in range(4):
                sc[ax] = _intgcd(sc[ax], k[ax])
    return tuple(s if s > 1 else 1 for s in sc)


def _key_scale(p, sc, mul):
    if sc == (1, 1, 1, 1):
        return p
    if mul:
        return {(k[0] * sc[0], k[1] * sc[1], k[2] * sc[2], k[3] * sc[3]): c for k, c in p.items()}
    return {(k[0] // sc[0], k[1] // sc[1], k[2] // sc[2], k[3] // sc[3]): c for k, c in p.items()}


def _pgcd_shifted(p, q):
    if len(p) == 1 or len(q) == 1:
        return {_ZERO_KEY: Fraction(1)}

    sc = _exp_rescale(p, q)
    if sc != (1, 1, 1, 1):
        g = _pgcd_shifted(_key_scale(p, sc, False), _key_scale(q, sc, False))
        return _key_scale(g, sc, True)

    common = [ax for ax in range(4) if _deg_axis(p, ax) > 0 and _deg_axis(q, ax) > 0]
    if not common:
        return {_ZERO_KEY: Fraction(1)}

    # direct divisibility covers the frequent den-divides-num case cheaply
    small, large = (p, q) if len(p) <= len(q) else (q, p)
    if _divmod_exact(large, small) is not None:
        return _int_primitive(small)

    # main variable: smallest combined degree keeps the PRS short
    ax = min(common, key=lambda a: _deg_axis(p, a) + _deg_axis(q, a))

    if _gcd_degree_bound_zero(p, q, ax):
        up, uq = _univ_view(p, ax), _univ_view(q, ax)
        return _pgcd_shifted(_coeff_gcd(list(up.values())), _coeff_gcd(list(uq.values())))

    up, uq = _univ_view(p, ax), _univ_view(q, ax)
    cp = _coeff_gcd(list(up.values()))
    cq = _coeff_gcd(list(uq.values()))
    pp = {d: _divmod_exact(s, cp) for d, s in up.items()}
    qq = {d: _divmod_exact(s, cq) for d, s in uq.items()}

    g = _prs(pp, qq, ax)
    cont = _pgcd_shifted(cp, cq)
    out = K.pmul(_univ_collapse(g, ax), cont)
    return _int_primitive(out)


_EVAL_POINTS = ((2, 3, 5, 7), (3, 7, 2, 5), (5, 2, 7, 3), (7, 5, 3, 2), (11, 13, 2, 3))


def _eval_univ(p, ax, point):
    """Evaluate all axes but ax at integer values; {deg: Fraction}."""
    out = {}
    for k, c in p.items():
        v = c
        for j in range(4):
            if j != ax and k[j]:
                v = v * point[j] ** k[j]
        d = k[ax]
        out[d] = out.get(d, Fraction(0)) + v
    return {d: v for d, v in out.items() if v}


def _gcd_degree_bound_zero(p, q, ax):
    """True when a sound evaluation certificate shows deg_ax(gcd) == 0."""
    dp, dq = _deg_axis(p, ax), _deg_axis(q, ax)
    for point in _EVAL_POINTS:
        ep = _eval_univ(p, ax, point)
        eq = _eval_univ(q, ax, point)
        # degree must not drop at the point, else the bound is unsound
        if not ep or not eq or max(ep) != dp or max(eq) != dq:
            continue
        return _univ_frac_gcd_degree(ep, eq) == 0
    return False


def _univ_frac_gcd_degree(u, v):
    """Degree of gcd of two univariate polynomials over Q ({deg: Fraction})."""
    while v:
        dv = max(v)
        lv = v[dv]
        r = dict(u)
        while r and max(r) >= dv:
            dr = max(r)
            c = r[dr] / lv
            for d, cv in v.items():
                nd = d + dr - dv
                w = r.get(nd, Fraction(0)) - c * cv
                if w:
                    r[nd] = w
                else:
                    r.pop(nd, None)
        u, v = v, r
    return max(u) if u else 0


_UNIT = {_ZERO_KEY: Fraction(1)}


def _coeff_gcd(polys):
    g = {}
    for s in polys:
        g = pgcd(g, s)
        if g == _UNIT:
            return dict(_UNIT)
    return g


def _prs(u, v, ax):
    """Primitive part of gcd via the subresultant PRS (GCL algorithm 7.3)."""
    if max(u) < max(v):
        u, v = v, u
    g = {_ZERO_KEY: Fraction(1)}
    h = {_ZERO_KEY: Fraction(1)}
    while True:
        delta = max(u) - max(v)
        r = _prem(u, v)
        if not r:
            # v divides u: gcd is the primitive part of v
            cv = _coeff_gcd(list(v.values()))
            return {d: _divmod_exact(s, cv) for d, s in v.items()}
        if max(r) == 0:
            return {0: {_ZERO_KEY: Fraction(1)}}
        u = v
        ghd = K.pmul(g, _pow_poly(h, delta))
        v = {d: _divmod_exact(s, ghd) for d, s in r.items()}
        g = u[max(u)]
        if delta >= 1:
            h = _divmod_exact(_pow_poly(g, delta), _pow_poly(h, delta - 1))
        # delta == 0 keeps h unchanged


def _pow_poly(p, n):
    out = {_ZERO_KEY: Fraction(1)}
    for _ in range(n):
        out = K.pmul(out, p)
    return out


# ---------------------------------------------------------------------------
# RatFunc
# ---------------------------------------------------------------------------


class RatFunc:
    """Rational function in r, s, a, b over Q, in a unique canonical form.

    Canonical form: numerator and denominator are coprime after clearing
    negative exponents; the denominator has minimal exponent 0 in every
    variable and graded-lex leading coefficient 1.  Equality is therefore a
    plain component comparison (and cross-multiplication agrees; the tests
    check both).  Instances are immutable.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=None, den=None):
        raise TypeError("use the constructors: RatFunc.from_int, monomial, gens, parse")

    # internal: trusted canonical components
    @classmethod
    def _make(cls, num, den):
        self = object.__new__(cls)
        self.num = num
        self.den = den
        return self

    @classmethod
    def _normalize(cls, num, den):
        if not den:
            raise DivisionByZero("zero denominator")
        if not num:
            return ZERO
        if len(den) == 1:
            # monomial denominator: shift it into the numerator
            ((k, c),) = den.items()
            num = K.pshift(num, -k[0], -k[1], -k[2], -k[3])
            if c != 1:
                num = K.pscale(num, 1 / c)
            return cls._make(num, dict(_UNIT))
        if num == den:
            return ONE
        g = pgcd(num, den)
        if g != _UNIT:
            num = _laurent_div_exact(num, g)
            den = _laurent_div_exact(den, g)
            if len(den) == 1:
                return cls._normalize(num, den)
        md = _min_exps(den)
        if md != (0, 0, 0, 0):
            num = K.pshift(num, -md[0], -md[1], -md[2], -md[3])
            den = K.pshift(den, -md[0], -md[1], -md[2], -md[3])
        lc = den[_leading(den)]
        if lc != 1:
            inv = 1 / lc
            num = K.pscale(num, inv)
            den = K.pscale(den, inv)
        return cls._make(num, den)

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_int(cls, n) -> "RatFunc":
        return cls.from_fraction(Fraction(n))

    @classmethod
    def from_fraction(cls, c) -> "RatFunc":
        c = _to_frac(c)
        if c == 0:
            return ZERO
        return cls._make({_ZERO_KEY: c}, {_ZERO_KEY: Fraction(1)})

    @classmethod
    def monomial(cls, coeff, exp_r=0, exp_s=0, exp_a=0, exp_b=0) -> "RatFunc":
        return LaurentMono(
            _to_frac(coeff), _to_frac(exp_r), _to_frac(exp_s), int(exp_a), int(exp_b)
        ).as_ratfunc()

    @classmethod
    def from_monomials(cls, monos) -> "RatFunc":
        num = {}
        for m in monos:
            if m.coeff:
                num = K.padd(num, {m.key(): m.coeff})
        return cls._normalize(num, {_ZERO_KEY: Fraction(1)}) if num else ZERO

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.num == {_ZERO_KEY: Fraction(1)} and self.den == {_ZERO_KEY: Fraction(1)}

    def is_laurent_polynomial(self) -> bool:
        return self.den == {_ZERO_KEY: Fraction(1)}

    def is_monomial(self) -> bool:
        return len(self.num) <= 1 and self.is_laurent_polynomial()

    def monomials(self):
        """The numerator terms as LaurentMono values (denominator must be 1)."""
        if not self.is_laurent_polynomial():
            raise NotPolynomial("value has a nontrivial denominator")
        return [
            LaurentMono(c, Fraction(k[0], LATTICE), Fraction(k[1], LATTICE), k[2], k[3])
            for k, c in sorted(self.num.items(), key=_order_key, reverse=True)
        ]

    def as_fraction(self) -> Fraction:
        """The value as a rational number; requires a constant."""
        if not self.num:
            return Fraction(0)
        if self.num.keys() == {_ZERO_KEY} and self.den.keys() == {_ZERO_KEY}:
            return self.num[_ZERO_KEY] / self.den[_ZERO_KEY]
        raise NotPolynomial("value is not constant")

    # -- arithmetic ----------------------------------------------------------

    @staticmethod
    def _coerce(x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, (int, Fraction)):
            return RatFunc.from_fraction(Fraction(x))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.is_zero():
            return o
        if o.is_zero():
            return self
        if self.den == o.den:
            return RatFunc._normalize(K.padd(self.num, o.num), self.den)
        num = K.padd(K.pmul(self.num, o.den), K.pmul(o.num, self.den))
        return RatFunc._normalize(num, K.pmul(self.den, o.den))

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._make(K.pneg(self.num), self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return ZERO
        return RatFunc._normalize(K.pmul(self.num, o.num), K.pmul(self.den, o.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o.is_zero():
            raise DivisionByZero("division by the zero rational function")
        if self.is_zero():
            return ZERO
        return RatFunc._normalize(K.pmul(self.num, o.den), K.pmul(self.den, o.num))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o / self

    def inv(self) -> "RatFunc":
        return ONE / self

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n == 0:
            return ONE
        if len(self.num) == 1 and self.den == _UNIT:
            ((k, c),) = self.num.items()
            return RatFunc._make({(k[0] * n, k[1] * n, k[2] * n, k[3] * n): c**n}, dict(_UNIT))
        base = self if n > 0 else self.inv()
        out = ONE
        for _ in range(abs(n)):
            out = out * base
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        return hash((frozenset(self.num.items()), frozenset(self.den.items())))

    def __bool__(self):
        return not self.is_zero()

    def cross_equal(self, other) -> bool:
        """Equality by cross-multiplication (independent of canonical form)."""
        o = self._coerce(other)
        return K.peq(K.pmul(self.num, o.den), K.pmul(o.num, self.den))

    # -- substitution --------------------------------------------------------

    def substitute(self, r=None, s=None, a=None, b=None) -> "RatFunc":
        """Exact image under r|s|a|b -> RatFunc maps (identity when None).

        Raises SpecializationPole when the denominator vanishes identically,
        LatticeOverflow when a fractional exponent meets a non-monomial image.
        """
        images = (r, s, a, b)
        ni = _subst_poly(self.num, images)
        di = _subst_poly(self.den, images)
        if di.is_zero():
            raise SpecializationPole("substitution sends the denominator to zero")
        return ni / di

    def __repr__(self):
        return f"RatFunc({render(self)!r})"

    def __str__(self):
        return render(self)


def _subst_poly(p, images) -> RatFunc:
    out = ZERO
    for key, c in p.items():
        term = RatFunc.from_fraction(c)
        for ax in range(4):
            scaled = key[ax]
            if scaled == 0:
                continue
            img = images[ax]
            if img is None:
                kk = [0, 0, 0, 0]
                kk[ax] = scaled
                term = term * RatFunc._make({tuple(kk): Fraction(1)}, dict(_UNIT))
                continue
            exp = Fraction(scaled, LATTICE) if ax < 2 else Fraction(scaled)
            if exp.denominator == 1:
                term = term * img ** int(exp)
            else:
                term = term * _mono_frac_pow(img, exp)
        out = out + term
    return out


def _mono_frac_pow(x: RatFunc, exp: Fraction) -> RatFunc:
    if not x.is_monomial() or x.is_zero():
        raise LatticeOverflow("fractional power of a non-monomial value")
    ((k, c),) = x.num.items()
    if c != 1:
        raise LatticeOverflow("fractional power of a monomial with coefficient != 1")
    es = [Fraction(kk) * exp for kk in k]
    if any(e.denominator != 1 for e in es):
        raise LatticeOverflow(f"exponent leaves the (1/{LATTICE})Z lattice")
    return RatFunc._make({tuple(int(e) for e in es): Fraction(1)}, dict(_UNIT))


# ---------------------------------------------------------------------------
# named generators and quantum numbers
# ---------------------------------------------------------------------------

ZERO = RatFunc._make({}, {_ZERO_KEY: Fraction(1)})
ONE = RatFunc._make({_ZERO_KEY: Fraction(1)}, {_ZERO_KEY: Fraction(1)})


def gens():
    """The four generators (r, s, a, b)."""
    return (
        RatFunc.monomial(1, 1, 0, 0, 0),
        RatFunc.monomial(1, 0, 1, 0, 0),
        RatFunc.monomial(1, 0, 0, 1, 0),
        RatFunc.monomial(1, 0, 0, 0, 1),
    )


R, S, A, B = gens()

rf = RatFunc.from_int


def quantum_int(n: int, base=None) -> RatFunc:
    """Two-parameter quantum integer r^(n-1) + r^(n-2) s + ... + s^(n-1).

    base is an (r_i, s_i) pair of RatFunc values, default (r, s).
    quantum_int(0) is 0.
    """
    if n < 0:
        raise ValueError("quantum_int needs n >= 0")
    br, bs = base if base is not None else (R, S)
    out = ZERO
    for j in range(n):
        out = out + br ** (n - 1 - j) * bs ** j
    return out


def quantum_factorial(n: int, base=None) -> RatFunc:
    out = ONE
    for j in range(1, n + 1):
        out = out * quantum_int(j, base)
    return out


def gauss_binom(m: int, k: int, base=None) -> RatFunc:
    """Gaussian binomial [m]! / ([k]! [m-k]!) over the given base pair.

    The quotient must come out as a Laurent polynomial; a nontrivial
    remainder signals an implementation bug and raises NotPolynomial.
    """
    if not 0 <= k <= m:
        raise ValueError("gauss_binom needs 0 <= k <= m")
    out = ONE
    for j in range(1, k + 1):
        out = out * quantum_int(m - k + j, base) / quantum_int(j, base)
    if not out.is_laurent_polynomial():
        raise NotPolynomial(f"gauss_binom({m},{k}) left a remainder")
    return out


def _laurent_div_exact(p, g):
    """Divide a Laurent dict by a Laurent dict that divides it exactly."""
    mp = _min_exps(p)
    mg = _min_exps(g)
    q = _divmod_exact(
        K.pshift(p, -mp[0], -mp[1], -mp[2], -mp[3]),
        K.pshift(g, -mg[0], -mg[1], -mg[2], -mg[3]),
    )
    if q is None:
        raise NotPolynomial("inexact division during canonicalization")
    return K.pshift(q, mp[0] - mg[0], mp[1] - mg[1], mp[2] - mg[2], mp[3] - mg[3])


# ---------------------------------------------------------------------------
# canonical text rendering and parsing
# ---------------------------------------------------------------------------

_VAR_NAMES = ("r", "s", "a", "b")


def _render_exp(e: Fraction) -> str:
    if e.denominator == 1:
        n = int(e)
        return "" if n == 1 else (f"^{n}" if n > 0 else f"^({n})")
    return f"^({e.numerator}/{e.denominator})"


def _render_poly(p) -> str:
    if not p:
        return "0"
    parts = []
    for k in sorted(p, key=_order_key, reverse=True):
        c = p[k]
        exps = (
            Fraction(k[0], LATTICE),
            Fraction(k[1], LATTICE),
            Fraction(k[2]),
            Fraction(k[3]),
        )
        factors = [
            _VAR_NAMES[ax] + _render_exp(e)
            for ax, e in enumerate(exps)
            if e != 0
        ]
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = str(mag) + "*" + "*".join(factors)
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append((" + " if c > 0 else " - ") + body)
    return "".join(parts)


def render(x: RatFunc) -> str:
    """Canonical text form; parse(render(x)) == x exactly."""
    if x.is_zero():
        return "0"
    ns = _render_poly(x.num)
    if x.is_laurent_polynomial():
        return ns
    return f"({ns})/({_render_poly(x.den)})"


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg):
        raise ValueError(f"parse error at {self.pos} in {self.text!r}: {msg}")

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expr(self) -> RatFunc:
        out = self.term()
        while True:
            c = self.peek()
            if c == "+":
                self.pos += 1
                out = out + self.term()
            elif c == "-":
                self.pos += 1
                out = out - self.term()
            else:
                return out

    def term(self) -> RatFunc:
        out = self.factor()
        while True:
            c = self.peek()
            if c == "*":
                self.pos += 1
                out = out * self.factor()
            elif c == "/":
                self.pos += 1
                out = out / self.factor()
            else:
                return out

    def factor(self) -> RatFunc:
        c = self.peek()
        if c == "-":
            self.pos += 1
            return -self.factor()
        base = self.atom()
        if self.peek() == "^":
            self.pos += 1
            e = self.exponent()
            if e.denominator == 1:
                return base ** int(e)
            return _mono_frac_pow(base, e)
        return base

    def exponent(self) -> Fraction:
        if self.peek() == "(":
            self.pos += 1
            e = self.signed_rational()
            if self.peek() != ")":
                self.error("expected ')' after exponent")
            self.pos += 1
            return e
        return self.signed_rational()

    def signed_rational(self) -> Fraction:
        sign = 1
        if self.peek() == "-":
            sign = -1
            self.pos += 1
        n = self.integer()
        if self.peek() == "/":
            self.pos += 1
            return Fraction(sign * n, self.integer())
        return Fraction(sign * n)

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected digits")
        return int(self.text[start:self.pos])

    def atom(self) -> RatFunc:
        c = self.peek()
        if c == "(":
            self.pos += 1
            out = self.expr()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return out
        if c in _VAR_NAMES:
            self.pos += 1
            return (R, S, A, B)[_VAR_NAMES.index(c)]
        if c.isdigit():
            n = self.integer()
            if self.peek() == "/":
                # lookahead: only treat as a rational literal when followed by digits
                save = self.pos
                self.pos += 1
                if self.peek().isdigit():
                    return RatFunc.from_fraction(Fraction(n, self.integer()))
                self.pos = save
            return RatFunc.from_int(n)
        self.error("expected a value")


def parse(text: str) -> RatFunc:
    """Parse the canonical text syntax back into a RatFunc."""
    p = _Parser(text)
    out = p.expr()
    p.skip()
    if p.pos != len(text):
        p.error("trailing input")
    return out
