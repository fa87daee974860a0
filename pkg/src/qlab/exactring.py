"""Exact arithmetic substrate: sparse multivariate polynomials over arbitrary
precision integers, rational functions with factored denominators, and
truncated formal power series.

Variables are drawn from a fixed ten-letter alphabet

    q < t < u < x < y < z < a < b < c < nu

and a monomial is stored as a single packed integer, 16 bits per variable
(low bits = q).  Packing makes monomial products a single integer addition,
which is what keeps pure-Python polynomial multiplication affordable at the
sizes this package needs.

Design constraints honored throughout:

* coefficients are plain Python ints (exact, unbounded);
* no stored zero coefficients, so two polynomials are equal iff their
  term dicts are equal;
* there is no general multivariate gcd.  A ``RatFun`` keeps its denominator
  as a multiset of explicit factors and reduces the numerator only by trial
  exact division against those factors.  Every denominator this package ever
  builds is a product of known factors such as (1-q), (1-t*q^j), (1-c*q^j)
  or small integer constants, so this is lossless here;
* all values are immutable after construction and safe to share.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

VARS = ("q", "t", "u", "x", "y", "z", "a", "b", "c", "nu")
_VAR_INDEX = {name: i for i, name in enumerate(VARS)}
_SHIFT = 16
_MASK = (1 << _SHIFT) - 1
_EXP_LIMIT = 1 << 15  # per-variable exponent cap so packed sums never carry


class InexactDivision(Exception):
    """Raised (or used as a signal) when exact polynomial division fails."""


class PoleError(ZeroDivisionError):
    """Raised when a rational evaluation hits a vanishing denominator factor."""


def _pack(exps: Mapping[str, int]) -> int:
    key = 0
    for name, e in exps.items():
        if e < 0 or e >= _EXP_LIMIT:
            raise ValueError(f"exponent {e} for {name} out of range")
        key |= e << (_SHIFT * _VAR_INDEX[name])
    return key


def _unpack(key: int) -> tuple[int, ...]:
    return tuple((key >> (_SHIFT * i)) & _MASK for i in range(len(VARS)))


def _total_degree(key: int) -> int:
    deg = 0
    while key:
        deg += key & _MASK
        key >>= _SHIFT
    return deg


def _grlex(key: int) -> tuple:
    # graded lexicographic: total degree first, then exponents in alphabet order
    return (_total_degree(key), _unpack(key))


class MultiPoly:
    """Sparse multivariate polynomial with integer coefficients.

    ``terms`` maps packed exponent keys to nonzero ints.  Instances are
    immutable; all operators return new polynomials.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: dict[int, int] | None = None):
        self.terms = {k: c for k, c in (terms or {}).items() if c}
        self._hash = None

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero() -> "MultiPoly":
        return MultiPoly()

    @staticmethod
    def const(n: int) -> "MultiPoly":
        return MultiPoly({0: n}) if n else MultiPoly()

    @staticmethod
    def var(name: str, power: int = 1) -> "MultiPoly":
        return MultiPoly({_pack({name: power}): 1})

    @staticmethod
    def monomial(coeff: int, exps: Mapping[str, int]) -> "MultiPoly":
        return MultiPoly({_pack(exps): coeff}) if coeff else MultiPoly()

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {0: 1}

    def is_const(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def const_value(self) -> int:
        if not self.is_const():
            raise ValueError("not a constant polynomial")
        return self.terms.get(0, 0)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def variables(self) -> set[str]:
        seen = set()
        for key in self.terms:
            i = 0
            while key:
                if key & _MASK:
                    seen.add(VARS[i])
                key >>= _SHIFT
                i += 1
        return seen

    def uses_var(self, name: str) -> bool:
        shift = _SHIFT * _VAR_INDEX[name]
        acc = 0
        for key in self.terms:
            acc |= key
        return bool((acc >> shift) & _MASK)

    def total_degree(self) -> int:
        return max((_total_degree(k) for k in self.terms), default=0)

    def degree_in(self, name: str) -> int:
        shift = _SHIFT * _VAR_INDEX[name]
        return max(((k >> shift) & _MASK for k in self.terms), default=0)

    def nonneg_coeffs(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    def content(self) -> int:
        from math import gcd

        g = 0
        for c in self.terms.values():
            g = gcd(g, c)
        return g

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                del out[k]
        return MultiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _as_poly(other) + (-self)

    def __mul__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        A, B = self.terms, other.terms
        if len(A) > len(B):
            A, B = B, A
        out: dict[int, int] = {}
        get = out.get
        for ka, ca in A.items():
            for kb, cb in B.items():
                k = ka + kb
                s = get(k, 0) + ca * cb
                if s:
                    out[k] = s
                elif k in out:
                    del out[k]
        return MultiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __truediv__(self, other):
        return RatFun.from_poly(self) / other

    def __rtruediv__(self, other):
        return _as_ratfun(other) / RatFun.from_poly(self)

    def __eq__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # -- leading data under graded lex --------------------------------------

    def leading_key(self) -> int:
        return max(self.terms, key=_grlex)

    def trailing_key(self) -> int:
        return min(self.terms, key=_grlex)

    def leading_coeff(self) -> int:
        return self.terms[self.leading_key()]

    # -- division -----------------------------------------------------------

    def divide_exact(self, divisor: "MultiPoly") -> "MultiPoly | None":
        """Quotient self/divisor if the division is exact, else None.

        Single-divisor reduction under graded lex: if divisor | self over the
        integers the loop terminates with zero remainder, otherwise the first
        non-reducible leading term witnesses inexactness.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return MultiPoly()
        dk = divisor.leading_key()
        dc = divisor.terms[dk]
        dexp = _unpack(dk)
        rem = dict(self.terms)
        quot: dict[int, int] = {}
        while rem:
            rk = max(rem, key=_grlex)
            rc = rem[rk]
            rexp = _unpack(rk)
            if any(re < de for re, de in zip(rexp, dexp)):
                return None
            if rc % dc:
                return None
            qk = rk - dk
            qc = rc // dc
            quot[qk] = qc
            for k, c in divisor.terms.items():
                kk = k + qk
                s = rem.get(kk, 0) - c * qc
                if s:
                    rem[kk] = s
                elif kk in rem:
                    del rem[kk]
        return MultiPoly(quot)

    # -- evaluation and substitution -----------------------------------------

    def eval(self, point: Mapping[str, Fraction | int]) -> Fraction:
        """Exact value at a rational point; every variable present must be assigned."""
        missing = self.variables() - set(point)
        if missing:
            raise ValueError(f"unassigned variables: {sorted(missing)}")
        vals = [Fraction(point.get(name, 0)) for name in VARS]
        total = Fraction(0)
        for key, coeff in self.terms.items():
            term = Fraction(coeff)
            i = 0
            k = key
            while k:
                e = k & _MASK
                if e:
                    term *= vals[i] ** e
                k >>= _SHIFT
                i += 1
            total += term
        return total

    def coeffs_in(self, name: str) -> dict[int, "MultiPoly"]:
        """Split into {exponent of name: polynomial in the other variables}."""
        shift = _SHIFT * _VAR_INDEX[name]
        out: dict[int, dict[int, int]] = {}
        for key, coeff in self.terms.items():
            e = (key >> shift) & _MASK
            rest = key - (e << shift)
            out.setdefault(e, {})[rest] = coeff
        return {e: MultiPoly(d) for e, d in out.items()}

    def subst(self, assignments: Mapping[str, "MultiPoly"]) -> "MultiPoly":
        """Substitute polynomials for variables (unassigned variables stay)."""
        result = MultiPoly()
        for key, coeff in self.terms.items():
            term = MultiPoly.const(coeff)
            i = 0
            k = key
            while k:
                e = k & _MASK
                if e:
                    name = VARS[i]
                    if name in assignments:
                        term = term * assignments[name] ** e
                    else:
                        term = term * MultiPoly.var(name, e)
                k >>= _SHIFT
                i += 1
            result = result + term
        return result

    # -- canonical text form -------------------------------------------------

    def serialize(self) -> str:
        """Canonical text: monomials sorted graded-lex descending."""
        if not self.terms:
            return "0"
        parts = []
        for key in sorted(self.terms, key=_grlex, reverse=True):
            coeff = self.terms[key]
            mono = _mono_str(key)
            mag = abs(coeff)
            if mono == "1":
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            parts.append(("-" if coeff < 0 else "+", body))
        sign, first = parts[0]
        text = ("-" if sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"MultiPoly({self.serialize()})"


def _mono_str(key: int) -> str:
    pieces = []
    for i, name in enumerate(VARS):
        e = (key >> (_SHIFT * i)) & _MASK
        if e == 1:
            pieces.append(name)
        elif e > 1:
            pieces.append(f"{name}^{e}")
    return "*".join(pieces) if pieces else "1"


def _as_poly(value) -> "MultiPoly":
    if isinstance(value, MultiPoly):
        return value
    if isinstance(value, int):
        return MultiPoly.const(value)
    return NotImplemented


ONE = MultiPoly.const(1)


def poly_arith(p: MultiPoly, r: MultiPoly, op: str) -> MultiPoly:
    """Dispatch form of the ring operations; exact_div raises InexactDivision."""
    if op == "add":
        return p + r
    if op == "mul":
        return p * r
    if op == "exact_div":
        q = p.divide_exact(r)
        if q is None:
            raise InexactDivision(f"{r.serialize()} does not divide {p.serialize()}")
        return q
    raise ValueError(f"unknown op {op!r}")


# ---------------------------------------------------------------------------
# Rational functions with factored denominators
# ---------------------------------------------------------------------------


class RatFun:
    """Quotient of a MultiPoly by a multiset of polynomial factors.

    The denominator is a dict {factor: multiplicity}.  Normalization (a) signs
    each factor so its graded-lex *trailing* coefficient is positive, matching
    the conventional shapes (1-q), (1-t*q), ...; (b) folds all constant factors
    into one positive integer and cancels its gcd with the numerator content;
    (c) trial-divides the numerator by every factor for as long as the division
    stays exact.  A RatFun with empty denominator is a polynomial.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: MultiPoly, den: Mapping[MultiPoly, int] | None = None):
        num, den = _normalize(num, dict(den or {}))
        self.num = num
        self.den = den

    # -- constructors -------------------------------------------------------

    @staticmethod
    def from_poly(p: MultiPoly | int) -> "RatFun":
        p = _as_poly(p)
        return RatFun(p)

    @staticmethod
    def from_fraction(f: Fraction | int) -> "RatFun":
        f = Fraction(f)
        den = {} if f.denominator == 1 else {MultiPoly.const(f.denominator): 1}
        return RatFun(MultiPoly.const(f.numerator), den)

    @staticmethod
    def zero() -> "RatFun":
        return RatFun(MultiPoly())

    @staticmethod
    def one() -> "RatFun":
        return RatFun(ONE)

    # -- predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_poly(self) -> bool:
        return not self.den

    def as_poly(self) -> MultiPoly:
        if self.den:
            raise ValueError(f"not a polynomial: {self.serialize()}")
        return self.num

    def den_poly(self) -> MultiPoly:
        prod = ONE
        for f, m in self.den.items():
            prod = prod * f**m
        return prod

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        other = _as_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        den: dict[MultiPoly, int] = dict(self.den)
        for f, m in other.den.items():
            den[f] = max(den.get(f, 0), m)
        left = self.num
        for f, m in den.items():
            extra = m - self.den.get(f, 0)
            if extra:
                left = left * f**extra
        right = other.num
        for f, m in den.items():
            extra = m - other.den.get(f, 0)
            if extra:
                right = right * f**extra
        return RatFun(left + right, den)

    __radd__ = __add__

    def __neg__(self):
        out = RatFun.__new__(RatFun)
        out.num = -self.num
        out.den = self.den
        return out

    def __sub__(self, other):
        other = _as_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _as_ratfun(other) + (-self)

    def __mul__(self, other):
        other = _as_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        den = dict(self.den)
        for f, m in other.den.items():
            den[f] = den.get(f, 0) + m
        return RatFun(self.num * other.num, den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFun":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        num = self.den_poly()
        return RatFun(num, {self.num: 1})

    def __truediv__(self, other):
        other = _as_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _as_ratfun(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = RatFun.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def div_factor(self, factor: MultiPoly, mult: int = 1) -> "RatFun":
        """Divide by factor^mult, keeping the denominator factored."""
        den = dict(self.den)
        den[factor] = den.get(factor, 0) + mult
        return RatFun(self.num, den)

    def __eq__(self, other):
        other = _as_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        if self.num is other.num and self.den == other.den:
            return True
        # cross-multiplied comparison; factored forms need not be identical
        return (self - other).is_zero()

    def __hash__(self):
        raise TypeError("RatFun is not hashable")

    # -- evaluation ------------------------------------------------------------

    def eval(self, point: Mapping[str, Fraction | int]) -> Fraction:
        """Exact rational value; raises PoleError on a vanishing factor."""
        bottom = Fraction(1)
        for f, m in self.den.items():
            v = f.eval(point)
            if v == 0:
                raise PoleError(f"denominator factor {f.serialize()} vanishes")
            bottom *= v**m
        return self.num.eval(point) / bottom

    def serialize(self) -> str:
        if not self.den:
            return self.num.serialize()
        facs = sorted(self.den.items(), key=lambda fm: (_grlex(fm[0].leading_key()), fm[0].serialize()))
        body = " * ".join(
            f"({f.serialize()})" + (f"^{m}" if m > 1 else "") for f, m in facs
        )
        return f"({self.num.serialize()}) / {body}"

    def __repr__(self):
        return f"RatFun({self.serialize()})"


def _normalize(num: MultiPoly, den: dict[MultiPoly, int]) -> tuple[MultiPoly, dict[MultiPoly, int]]:
    from math import gcd

    clean: dict[MultiPoly, int] = {}
    const = 1
    sign = 1
    for f, m in den.items():
        if m == 0:
            continue
        if m < 0:
            raise ValueError("negative factor multiplicity")
        if f.is_zero():
            raise ZeroDivisionError("zero denominator factor")
        if f.is_const():
            c = f.const_value()
            if c < 0:
                sign *= (-1) ** m
                c = -c
            const *= c**m
            continue
        if f.terms[f.trailing_key()] < 0:
            f = -f
            sign *= (-1) ** m
        clean[f] = clean.get(f, 0) + m
    if sign < 0:
        num = -num
    if num.is_zero():
        return num, {}
    # fold constants against the numerator's integer content
    if const > 1:
        g = gcd(num.content(), const)
        if g > 1:
            num = MultiPoly({k: c // g for k, c in num.terms.items()})
            const //= g
    # trial division by each non-constant factor; factors here are pairwise
    # coprime in practice, so the reduction order does not affect the result
    for f in sorted(clean, key=lambda p: (p.total_degree(), len(p.terms), sorted(p.terms.items()))):
        m = clean[f]
        while m > 0:
            q = num.divide_exact(f)
            if q is None:
                break
            num = q
            m -= 1
        if m:
            clean[f] = m
        else:
            del clean[f]
    if const > 1:
        clean[MultiPoly.const(const)] = 1
    return num, clean


def _as_ratfun(value) -> "RatFun":
    if isinstance(value, RatFun):
        return value
    if isinstance(value, (MultiPoly, int)):
        return RatFun.from_poly(value)
    if isinstance(value, Fraction):
        return RatFun.from_fraction(value)
    return NotImplemented


def ratfun_normalize(num: MultiPoly, den: Mapping[MultiPoly, int]) -> RatFun:
    """Public constructor form of the normalization invariant."""
    return RatFun(num, den)


def eval_rational(value, point: Mapping[str, Fraction | int]) -> Fraction:
    """Evaluate a MultiPoly or RatFun at an exact rational point."""
    if isinstance(value, MultiPoly):
        return value.eval(point)
    if isinstance(value, RatFun):
        return value.eval(point)
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    raise TypeError(f"cannot evaluate {type(value).__name__}")


R_ZERO = RatFun.zero()
R_ONE = RatFun.one()


# ---------------------------------------------------------------------------
# Truncated power series
# ---------------------------------------------------------------------------


class Series:
    """Truncated formal power series in one alphabet variable over RatFun.

    ``coeffs`` has exactly ``order`` entries; index n is the coefficient of
    var^n.  Arithmetic is exact modulo var^order, and binary operations
    truncate to the smaller order.  Coefficients must not involve the series
    variable; construction checks this.
    """

    __slots__ = ("var", "order", "coeffs")

    def __init__(self, var: str, order: int, coeffs: Sequence[RatFun | MultiPoly | int]):
        if var not in _VAR_INDEX:
            raise ValueError(f"unknown variable {var!r}")
        if order < 1:
            raise ValueError("order must be >= 1")
        lifted = []
        for c in list(coeffs)[:order]:
            if not isinstance(c, RatFun):
                c = _as_ratfun(c)
            if c.num.uses_var(var) or any(f.uses_var(var) for f in c.den):
                raise ValueError(f"coefficient involves series variable {var}")
            lifted.append(c)
        lifted.extend([R_ZERO] * (order - len(lifted)))
        self.var = var
        self.order = order
        self.coeffs = lifted

    @staticmethod
    def zero(var: str, order: int) -> "Series":
        return Series(var, order, [])

    @staticmethod
    def one(var: str, order: int) -> "Series":
        return Series(var, order, [R_ONE])

    @staticmethod
    def variable(var: str, order: int) -> "Series":
        return Series(var, order, [R_ZERO, R_ONE])

    @staticmethod
    def from_scalar(value, var: str, order: int) -> "Series":
        return Series(var, order, [value])

    def __getitem__(self, n: int) -> RatFun:
        return self.coeffs[n] if 0 <= n < self.order else R_ZERO

    def _match(self, other) -> "tuple[Series, Series] | None":
        if isinstance(other, (RatFun, MultiPoly, int, Fraction)):
            other = Series.from_scalar(other, self.var, self.order)
        if not isinstance(other, Series):
            return None
        if other.var != self.var:
            raise ValueError(f"series variable mismatch: {self.var} vs {other.var}")
        return self, other

    def __add__(self, other):
        pair = self._match(other)
        if pair is None:
            return NotImplemented
        s, o = pair
        n = min(s.order, o.order)
        return Series(s.var, n, [s.coeffs[i] + o.coeffs[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Series(self.var, self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        pair = self._match(other)
        if pair is None:
            return NotImplemented
        s, o = pair
        n = min(s.order, o.order)
        return Series(s.var, n, [s.coeffs[i] - o.coeffs[i] for i in range(n)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (RatFun, MultiPoly, int, Fraction)):
            c = _as_ratfun(other)
            return Series(self.var, self.order, [a * c for a in self.coeffs])
        pair = self._match(other)
        if pair is None:
            return NotImplemented
        s, o = pair
        n = min(s.order, o.order)
        out = [R_ZERO] * n
        for i, ci in enumerate(s.coeffs[:n]):
            if ci.is_zero():
                continue
            for j in range(n - i):
                cj = o.coeffs[j]
                if cj.is_zero():
                    continue
                out[i + j] = out[i + j] + ci * cj
        return Series(s.var, n, out)

    __rmul__ = __mul__

    def recip(self) -> "Series":
        """Multiplicative inverse; requires an invertible constant coefficient."""
        a0 = self.coeffs[0]
        if a0.is_zero():
            raise ZeroDivisionError("series has no invertible constant term")
        inv0 = a0.inverse()
        out = [inv0]
        for n in range(1, self.order):
            acc = R_ZERO
            for k in range(1, n + 1):
                ak = self.coeffs[k]
                if ak.is_zero():
                    continue
                acc = acc + ak * out[n - k]
            out.append(-(inv0 * acc))
        return Series(self.var, self.order, out)

    def __truediv__(self, other):
        if isinstance(other, (RatFun, MultiPoly, int, Fraction)):
            inv = _as_ratfun(other).inverse()
            return Series(self.var, self.order, [c * inv for c in self.coeffs])
        pair = self._match(other)
        if pair is None:
            return NotImplemented
        s, o = pair
        return s * o.recip()

    def compose_scale(self, m) -> "Series":
        """Substitute var -> m*var for a scalar m (coefficient n picks up m^n)."""
        m = _as_ratfun(m)
        out = []
        power = R_ONE
        for c in self.coeffs:
            out.append(c * power)
            power = power * m
        return Series(self.var, self.order, out)

    def shift(self, k: int) -> "Series":
        """Multiply by var^k (k >= 0); top coefficients fall off the truncation."""
        if k < 0:
            raise ValueError("negative shift")
        return Series(self.var, self.order, [R_ZERO] * k + self.coeffs[: self.order - k])

    def spread(self, k: int) -> "Series":
        """Substitute var -> var^k: coefficient n moves to position k*n."""
        if k < 1:
            raise ValueError("spread needs k >= 1")
        out = [R_ZERO] * self.order
        for n, c in enumerate(self.coeffs):
            if n * k >= self.order:
                break
            out[n * k] = c
        return Series(self.var, self.order, out)

    def truncate(self, order: int) -> "Series":
        return Series(self.var, order, self.coeffs[:order])

    def rename(self, var: str) -> "Series":
        return Series(var, self.order, self.coeffs)

    def __eq__(self, other):
        pair = self._match(other)
        if pair is None:
            return NotImplemented
        s, o = pair
        n = min(s.order, o.order)
        return all((s.coeffs[i] - o.coeffs[i]).is_zero() for i in range(n))

    def __hash__(self):
        raise TypeError("Series is not hashable")

    def first_mismatch(self, other: "Series") -> int | None:
        """Smallest n where the coefficients differ, or None if equal."""
        n = min(self.order, other.order)
        for i in range(n):
            if not (self.coeffs[i] - other.coeffs[i]).is_zero():
                return i
        return None

    def eval_coeffs(self, point: Mapping[str, Fraction | int]) -> list[Fraction]:
        return [c.eval(point) for c in self.coeffs]

    def serialize(self) -> str:
        lines = [f"{self.var}^{n}: {c.serialize()}" for n, c in enumerate(self.coeffs)]
        return "\n".join(lines)

    def __repr__(self):
        head = ", ".join(
            f"{c.serialize()}*{self.var}^{n}" for n, c in enumerate(self.coeffs[:4]) if not c.is_zero()
        )
        return f"Series[{self.var}; O({self.var}^{self.order})]({head} + ...)"


def series_arith(f: Series, g: Series | None, op: str, scale=None) -> Series:
    """Dispatch form of the series operations used by the spec surface."""
    if op == "add":
        return f + g
    if op == "mul":
        return f * g
    if op == "recip":
        return f.recip()
    if op == "compose_scale":
        return f.compose_scale(scale)
    raise ValueError(f"unknown op {op!r}")


# conventional variable handles
Q = MultiPoly.var("q")
T = MultiPoly.var("t")
U = MultiPoly.var("u")
X = MultiPoly.var("x")
Y = MultiPoly.var("y")
Z = MultiPoly.var("z")
A = MultiPoly.var("a")
B = MultiPoly.var("b")
C = MultiPoly.var("c")
NU = MultiPoly.var("nu")
