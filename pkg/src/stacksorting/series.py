"""Truncated formal power series over the rationals."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def series_sqrt(coeffs: Sequence[int | Fraction], terms: int) -> list[Fraction]:
    """First ``terms`` coefficients of the square root g of a series with constant term 1.

    Solves g*g = f one coefficient at a time: 2 g_0 g_k = f_k - sum_{0<i<k} g_i g_{k-i}.
    """
    f = [Fraction(c) for c in coeffs] + [Fraction(0)] * max(0, terms - len(coeffs))
    if f[0] != 1:
        raise ValueError("series_sqrt needs constant term 1")
    g = [Fraction(1)]
    for k in range(1, terms):
        acc = sum((g[i] * g[k - i] for i in range(1, k)), Fraction(0))
        g.append((f[k] - acc) / 2)
    return g


def boolean_catalan_sequence(n_max: int) -> list[int]:
    """Coefficients of x^1..x^n_max in (1 - 2x - sqrt(1 - 4x - 4x^2)) / (4x)."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    root = series_sqrt([1, -4, -4], n_max + 2)
    numerator = [Fraction(1) - root[0], Fraction(-2) - root[1]] + [-c for c in root[2:]]
    if numerator[0] != 0:
        raise AssertionError("numerator must vanish at x = 0")
    # Divide by 4x: coefficient of x^n is numerator[n+1] / 4.
    out = []
    for n in range(1, n_max + 1):
        c = numerator[n + 1] / 4
        if c.denominator != 1:
            raise AssertionError(f"non-integral coefficient {c} at n={n}")
        out.append(int(c))
    return out
