"""List-based polynomial and power-series helpers over any exact coefficient
ring (RatFun, Fraction, or plain ints that promote on contact).

A polynomial/series is a plain list with index = degree.  These helpers are
the shared plumbing for three-term recurrences and continued fractions: the
symbolic paths run them over RatFun, the randomized identity checks run the
same code over Fraction, so a single evaluation engine serves both routes.
"""

from __future__ import annotations

from typing import Sequence


def _zero_like(x):
    return x * 0


def poly_add(a: Sequence, b: Sequence) -> list:
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        if i < len(a) and i < len(b):
            out.append(a[i] + b[i])
        elif i < len(a):
            out.append(a[i])
        else:
            out.append(b[i])
    return out

def poly_sub(a: Sequence, b: Sequence) -> list:
    return poly_add(a, [-c for c in b])


def poly_scale(a: Sequence, s) -> list:
    return [c * s for c in a]


def poly_shift(a: Sequence, k: int) -> list:
    """Multiply by x^k."""
    if not a:
        return []
    zero = _zero_like(a[0])
    return [zero] * k + list(a)


def poly_mul(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    zero = _zero_like(a[0])
    out = [zero] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] = out[i + j] + ca * cb
    return out


def poly_trim(a: Sequence, is_zero=None) -> list:
    """Drop trailing zero coefficients."""
    out = list(a)
    test = is_zero or (lambda c: not c)
    while out and test(out[-1]):
        out.pop()
    return out


def series_mul(a: Sequence, b: Sequence, order: int) -> list:
    zero = _zero_like(a[0]) if a else (_zero_like(b[0]) if b else 0)
    out = [zero] * order
    for i, ca in enumerate(a[:order]):
        for j in range(min(len(b), order - i)):
            out[i + j] = out[i + j] + ca * b[j]
    return out


def series_recip(a: Sequence, order: int) -> list:
    """Inverse of a power series with invertible constant term."""
    inv0 = a[0] ** (-1)
    out = [inv0]
    zero = _zero_like(a[0])
    for n in range(1, order):
        acc = zero
        for k in range(1, min(n, len(a) - 1) + 1):
            acc = acc + a[k] * out[n - k]
        out.append(-(inv0 * acc))
    return out


def series_div(num: Sequence, den: Sequence, order: int) -> list:
    return series_mul(list(num) + [_zero_like(den[0])] * order, series_recip(den, order), order)
