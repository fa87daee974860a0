"""q-special functions as truncated series: q-Pochhammer symbols, truncated
basic hypergeometric series, and the normalized q-Bessel ratio series.

Conventions.  The alphabet variable t stands for q^nu throughout, so q^(nu+j)
is rendered t*q^j and the shifted q-integer [nu+j]_q is (1 - t*q^j)/(1 - q).
Both q-Bessel families are materialized only through their ratios, where the
infinite-product prefactors cancel; no infinite product is ever formed except
through Euler's q-exponential sum, whose coefficients are honest rational
functions.

The generic hypergeometric builder supports an arbitrary monomial base power
(base q^g), which is needed once for the base-q^2 tangent check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Sequence

from .exactring import (
    ONE,
    Q,
    R_ONE,
    T,
    U,
    MultiPoly,
    RatFun,
    Series,
)

_HALF = RatFun.from_fraction(Fraction(1, 2))
_MINUS_QUARTER = RatFun.from_fraction(Fraction(-1, 4))


def qpoch(a: MultiPoly | int, n: int, base_power: int = 1) -> MultiPoly:
    """(a; q^g)_n = (1-a)(1-a q^g)...(1-a q^{g(n-1)}) as a polynomial."""
    if n < 0:
        raise ValueError("Pochhammer length must be >= 0")
    a = a if isinstance(a, MultiPoly) else MultiPoly.const(a)
    out = ONE
    for k in range(n):
        out = out * (ONE - a * Q ** (base_power * k))
    return out


def qint(j: int) -> MultiPoly:
    """[j]_q = 1 + q + ... + q^(j-1)."""
    if j < 0:
        raise ValueError("q-integer index must be >= 0")
    return MultiPoly({_q_key(k): 1 for k in range(j)})


def _q_key(k: int) -> int:
    from .exactring import _pack

    return _pack({"q": k}) if k else 0


class QNuInt(NamedTuple):
    """[nu+j]_q in both working forms: the field Q(q,t) value and the
    positivity-ring element of Z[q,t,u] (u stands for [nu]_q)."""

    ratfun: RatFun
    positive: MultiPoly


def qint_shifted(j: int) -> QNuInt:
    """[nu+j]_q = (1 - t q^j)/(1 - q) = u + t*[j]_q."""
    if j < 0:
        raise ValueError("shift must be >= 0")
    rat = RatFun(ONE - T * Q**j, {ONE - Q: 1})
    pos = U + T * qint(j)
    return QNuInt(rat, pos)


def nu_shifted(j: int) -> RatFun:
    return qint_shifted(j).ratfun


# evaluation map epsilon: u -> (1-t)/(1-q), linking the two forms
def eps_u(p: MultiPoly) -> RatFun:
    """Substitute u -> (1-t)/(1-q) into a Z[q,t,u] polynomial."""
    parts = p.coeffs_in("u")
    unit = RatFun(ONE - T, {ONE - Q: 1})
    out = RatFun.zero()
    power = R_ONE
    for k in range(max(parts) + 1 if parts else 0):
        if k in parts:
            out = out + RatFun.from_poly(parts[k]) * power
        power = power * unit
    return out


@dataclass(frozen=True)
class PhiSeries:
    """Specification of a truncated r_phi_s series.

    upper/lower hold the parameter monomials (0 allowed upstairs); the
    argument is arg_scalar * var^arg_power.  base_power g means base q^g.
    """

    upper: tuple
    lower: tuple
    arg_scalar: RatFun
    arg_power: int
    order: int
    var: str = "z"
    base_power: int = 1


def phi_series(spec: PhiSeries) -> Series:
    """Expand the series of the r_phi_s definition with exact coefficients.

    The n-th coefficient is built incrementally from the (n-1)-st, so the
    denominator stays factored as explicit Pochhammer factors.
    """
    if spec.order < 1:
        raise ValueError("order must be >= 1")
    return _phi(
        list(spec.upper),
        list(spec.lower),
        spec.arg_scalar,
        spec.arg_power,
        spec.order,
        var=spec.var,
        base_power=spec.base_power,
    )


def _phi(upper, lower, arg_scalar, arg_power, order, var="z", base_power=1):
    upper = [a if isinstance(a, MultiPoly) else MultiPoly.const(a) for a in upper]
    lower = [b if isinstance(b, MultiPoly) else MultiPoly.const(b) for b in lower]
    if not isinstance(arg_scalar, RatFun):
        arg_scalar = RatFun.from_poly(arg_scalar) if isinstance(arg_scalar, (MultiPoly, int)) else RatFun.from_fraction(arg_scalar)
    g = base_power
    e = len(lower) + 1 - len(upper)
    coeffs = [RatFun.zero() for _ in range(order)]
    coeffs[0] = R_ONE
    c = R_ONE
    n = 1
    while n * arg_power < order:
        step = ONE
        for a in upper:
            step = step * (ONE - a * Q ** (g * (n - 1)))
        if e:
            sign_step = MultiPoly.const((-1) ** e) * Q ** (g * (n - 1) * e)
            step = step * sign_step
        c = c * step * arg_scalar
        for b in lower:
            fac = ONE - b * Q ** (g * (n - 1))
            if fac.is_zero():
                raise ZeroDivisionError("vanishing lower-parameter Pochhammer factor")
            c = c.div_factor(fac)
        c = c.div_factor(ONE - Q ** (g * n))
        coeffs[n * arg_power] = c
        n += 1
    return Series(var, order, coeffs)


def phi11(lower: MultiPoly, arg_scalar, order: int, var: str = "z", arg_power: int = 2, base_power: int = 1) -> Series:
    return _phi([MultiPoly.zero()], [lower], arg_scalar, arg_power, order, var, base_power)


def phi21_00(lower: MultiPoly, arg_scalar, order: int, var: str = "z", arg_power: int = 2) -> Series:
    return _phi([MultiPoly.zero(), MultiPoly.zero()], [lower], arg_scalar, arg_power, order, var)


def phi01(lower: MultiPoly, arg_scalar, order: int, var: str = "z", arg_power: int = 2) -> Series:
    return _phi([], [lower], arg_scalar, arg_power, order, var)


# ---------------------------------------------------------------------------
# Hahn-Exton family
# ---------------------------------------------------------------------------


def hahn_exton_ratio(order: int) -> Series:
    """J_{nu+1}(z; 1/q) / J_nu(z; 1/q) as an odd series in z over Q(q,t).

    Equals -t*q*z/(1-t*q) times the quotient of the two 1phi1 factors with
    q-base parameters; t stands for q^nu.
    """
    if order < 2:
        raise ValueError("order must be >= 2")
    num = phi11(T * Q**2, RatFun.from_poly(T * Q**2), order)
    den = phi11(T * Q, RatFun.from_poly(T * Q), order)
    pref = RatFun(-(T * Q), {ONE - T * Q: 1})
    return (num / den).shift(1) * pref


def hahn_exton_ratio_invbase(order: int) -> Series:
    """Same ratio built from the inverse-base 1phi1 quotient.

    The base-1/q Pochhammers are cleared to nonnegative exponents first:
    (1/q;1/q)_n = (-1)^n q^(-n(n+1)/2) (q;q)_n and
    (q^(-nu-1);1/q)_n = (-1)^n t^(-n) q^(-n-C(n,2)) (tq;q)_n, which turns the
    n-th term of 1phi1(0; q^(-nu-1); 1/q, z^2/q) into
    (-1)^n t^n q^(n(n+1)/2) z^(2n) / ((q;q)_n (tq;q)_n).
    """
    if order < 2:
        raise ValueError("order must be >= 2")

    def cleared(tpow: MultiPoly) -> Series:
        coeffs = [RatFun.zero() for _ in range(order)]
        c = R_ONE
        coeffs[0] = c
        n = 1
        while 2 * n < order:
            c = c * (MultiPoly.const(-1) * tpow * Q**n)
            c = c.div_factor(ONE - Q**n)
            c = c.div_factor(ONE - tpow * Q**n)
            coeffs[2 * n] = c
            n += 1
        return Series("z", order, coeffs)

    num = cleared(T * Q)
    den = cleared(T)
    pref = RatFun(-(T * Q), {ONE - T * Q: 1})
    return (num / den).shift(1) * pref


def hahn_exton_ratio_qbase(order: int) -> Series:
    """J_{nu+1}(z;q) / J_nu(z;q): prefactor z/(1-t*q), arguments q*z^2."""
    if order < 2:
        raise ValueError("order must be >= 2")
    num = phi11(T * Q**2, RatFun.from_poly(Q), order)
    den = phi11(T * Q, RatFun.from_poly(Q), order)
    pref = RatFun(ONE, {ONE - T * Q: 1})
    return (num / den).shift(1) * pref


def theta_series(shift: int, order: int, var: str = "x") -> Series:
    """theta_{nu+shift}(x) = 1phi1(0; t q^(1+shift); q, (1-q)^2 t q^shift x)."""
    scalar = RatFun.from_poly((ONE - Q) ** 2 * T * Q**shift)
    return phi11(T * Q ** (1 + shift), scalar, order, var=var, arg_power=1)


# ---------------------------------------------------------------------------
# Jackson family
# ---------------------------------------------------------------------------


def jackson_ratio(order: int) -> Series:
    """J^(1)_{nu+1}(z;q) / J^(1)_nu(z;q); coefficients carry exact powers of 1/2."""
    if order < 2:
        raise ValueError("order must be >= 2")
    num = phi21_00(T * Q**2, _MINUS_QUARTER, order)
    den = phi21_00(T * Q, _MINUS_QUARTER, order)
    pref = _HALF * RatFun(ONE, {ONE - T * Q: 1})
    return (num / den).shift(1) * pref


def jackson_ratio_invbase(order: int) -> Series:
    """J^(1)_{nu+1}(z;1/q) / J^(1)_nu(z;1/q) with cleared base-1/q terms.

    The n-th term of 2phi1(0,0; q^(-nu-1); 1/q, -z^2/4) clears to
    (-1)^n t^n q^(n^2+n) z^(2n) / (4^n (q;q)_n (tq;q)_n).
    """
    if order < 2:
        raise ValueError("order must be >= 2")

    def cleared(tpow: MultiPoly) -> Series:
        coeffs = [RatFun.zero() for _ in range(order)]
        c = R_ONE
        coeffs[0] = c
        n = 1
        while 2 * n < order:
            c = c * RatFun(-(tpow * Q ** (2 * n)), {MultiPoly.const(4): 1})
            c = c.div_factor(ONE - Q**n)
            c = c.div_factor(ONE - tpow * Q**n)
            coeffs[2 * n] = c
            n += 1
        return Series("z", order, coeffs)

    num = cleared(T * Q)
    den = cleared(T)
    pref = _HALF * RatFun(-(T * Q), {ONE - T * Q: 1})
    return (num / den).shift(1) * pref


def euler_qexp(scalar, order: int, var: str = "z") -> Series:
    """(-w; q)_infinity at w = scalar*var^2, via Euler's sum
    sum_n q^C(n,2) w^n / (q;q)_n."""
    if not isinstance(scalar, RatFun):
        scalar = RatFun.from_fraction(scalar) if isinstance(scalar, Fraction) else RatFun.from_poly(scalar)
    coeffs = [RatFun.zero() for _ in range(order)]
    c = R_ONE
    coeffs[0] = c
    n = 1
    while 2 * n < order:
        c = c * scalar * Q ** (n - 1)
        c = c.div_factor(ONE - Q**n)
        coeffs[2 * n] = c
        n += 1
    return Series(var, order, coeffs)


# ---------------------------------------------------------------------------
# Kishore denominators
# ---------------------------------------------------------------------------


def kishore_exponents(n: int) -> list[tuple[int, int]]:
    """The factored shape of D_{n,nu}: pairs (k, floor(n/k)) for 1 <= k <= n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return [(k, n // k) for k in range(1, n + 1)]


def kishore_denominator(n: int) -> RatFun:
    """D_{n,nu}(q) = prod_k [k+nu]_q^floor(n/k) as an element of Q(q,t)."""
    num = ONE
    total = 0
    for k, e in kishore_exponents(n):
        num = num * (ONE - T * Q**k) ** e
        total += e
    return RatFun(num, {ONE - Q: total})


def kishore_denominator_positive(n: int) -> MultiPoly:
    """Positivity-ring form of D_{n,nu}: prod_k (u + t*[k]_q)^floor(n/k)."""
    out = ONE
    for k, e in kishore_exponents(n):
        out = out * qint_shifted(k).positive ** e
    return out
