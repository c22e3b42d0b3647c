"""Kauffman-bracket recursion for W(n,k): the independent oracle.

Brackets live in the variable A; the Jones closed form lives in t.  The
two are tied together by t = A^-4 and the writhe normalization, so exact
agreement of this recursion with the closed form cross-checks both.

The recursion removes one column of k at a time: a level holds the
brackets <W(n,k)> for all n in a symmetric window, and the next level is
produced by the kink formula

    <W(n,k+1)> = (A^-1 - A^3) * A^n * S_n - A^(2n-1) * <W(n-2,k)>

where S_n is a signed sum over the previous level.  Each step consumes
level entries up to two indices wider than the one it produces, so the
windows shrink by two per level.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import ConversionError, WindowError
from .laurent import LaurentPoly
from .wnk import jones_wnk

_A_KINK = LaurentPoly({-1: 1, 3: -1}, "A")  # A^-1 - A^3


def torus_jones(p: int, q: int) -> LaurentPoly:
    """Jones polynomial of the (p,q) torus knot, p, q >= 1 coprime."""
    if p < 1 or q < 1:
        raise ValueError("torus parameters must be >= 1")
    if math.gcd(p, q) != 1:
        raise ValueError(f"({p},{q}) is not coprime")
    numerator = LaurentPoly([(0, 1), (p + 1, -1), (q + 1, -1), (p + q, 1)])
    denominator = LaurentPoly({0: 1, 2: -1})  # 1 - t^2
    return numerator.divide_exact(denominator).shift((p - 1) * (q - 1) // 2)


def bracket_wnk_base(n: int) -> LaurentPoly:
    """<W(n,0)>: an oval with n arrows, i.e. the torus knot T(n', n'+1).

    n' is n for n >= 0 and -1-n for n < 0; the bracket is the torus Jones
    polynomial pushed to A-world with the writhe n^2 + n.
    """
    n_eff = n if n >= 0 else -1 - n
    v = LaurentPoly.one() if n_eff == 0 else torus_jones(n_eff, n_eff + 1)
    w = n * n + n
    sign = -1 if (3 * w) % 2 else 1
    return v.substitute_power(-4, "A").scale(sign, 3 * w)


@dataclass(frozen=True)
class BracketLevel:
    """Brackets <W(n,k)> for one fixed k, over a window of n values."""

    k: int
    values: dict[int, LaurentPoly] = field(default_factory=dict)

    def bracket(self, n: int) -> LaurentPoly:
        try:
            return self.values[n]
        except KeyError:
            raise WindowError(
                f"level k={self.k} has no entry for n={n}; enlarge the window"
            ) from None

    def g(self, a: int) -> LaurentPoly:
        """g_a = <W(-a-2, k)>: the tangle closure the kink lemma sums over."""
        return self.bracket(-a - 2)


def s_sum(n: int, level: BracketLevel) -> LaurentPoly:
    """S_n = sum_{i=0..n} A^(n-2i) g_(-n+2i), extended by S_-1 = 0, S_n = -S_(|n|-2)."""
    if n == -1:
        return LaurentPoly.zero("A")
    if n < -1:
        return -s_sum(-n - 2, level)
    total = LaurentPoly.zero("A")
    for i in range(n + 1):
        total = total + level.g(-n + 2 * i).shift(n - 2 * i)
    return total


def s_prime(n: int, k: int) -> LaurentPoly:
    """Closed form for S_n * (A^-8 - 1), skew-symmetric around n = -1."""
    base = n * n - 2 * k * n - 6 * n + 2 * k * k - k - 10
    sign = -1 if k % 2 else 1
    return LaurentPoly(
        [
            (base + 4 * k * n + 12 * n + 12 * k + 16, -sign),
            (base + 4 * k * n + 8 * n + 4 * k, sign),
            (base + 4 * n + 8 * k + 8, sign),
            (base + 8 * n, -sign),
        ],
        "A",
    )


def _next_level(prev: BracketLevel, window: int) -> BracketLevel:
    values = {}
    for n in range(-window, window + 1):
        kink = _A_KINK * s_sum(n, prev).shift(n)
        values[n] = kink - prev.bracket(n - 2).shift(2 * n - 1)
    return BracketLevel(prev.k + 1, values)


def bracket_levels(n_abs_max: int, k_max: int) -> list[BracketLevel]:
    """Levels 0..k_max with windows wide enough for |n| <= n_abs_max at the top."""
    window = n_abs_max + 2 * k_max + 2
    levels = [
        BracketLevel(0, {n: bracket_wnk_base(n) for n in range(-window, window + 1)})
    ]
    for j in range(1, k_max + 1):
        window = n_abs_max + 2 * (k_max - j) + 2
        levels.append(_next_level(levels[-1], window))
    return levels


def bracket_wnk(n: int, k: int) -> LaurentPoly:
    """<W(n,k)> by the level recursion (variable A)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return bracket_wnk_base(n)
    return bracket_levels(abs(n), k)[k].bracket(n)


def _conversion_exponent(n: int, k: int) -> int:
    # <W(n,k)> = (-1)^k A^e V_{W(n,k)} with e = 3(n+1)n + 3k(2k+1-2n)
    return 3 * (n + 1) * n + 3 * k * (2 * k + 1 - 2 * n)


def bracket_to_jones(n: int, k: int, bracket: LaurentPoly) -> LaurentPoly:
    """Normalize a bracket of W(n,k) by its writhe and substitute t = A^-4."""
    if bracket.variable != "A":
        raise ConversionError("bracket must be an A-polynomial")
    sign = -1 if k % 2 else 1
    shifted = bracket.scale(sign, -_conversion_exponent(n, k))
    terms = {}
    for e, c in shifted.items():
        if e % 4:
            raise ConversionError(
                f"A-exponent {e} not divisible by 4; writhe/bracket mismatch"
            )
        terms[-e // 4] = c
    return LaurentPoly(terms, "t")


def jones_to_bracket(n: int, k: int, v: LaurentPoly) -> LaurentPoly:
    """Inverse of bracket_to_jones."""
    if v.variable != "t":
        raise ConversionError("Jones polynomial must be a t-polynomial")
    sign = -1 if k % 2 else 1
    return v.substitute_power(-4, "A").scale(sign, _conversion_exponent(n, k))


def verify_range(
    n_lo: int, n_hi: int, k_lo: int, k_hi: int
) -> list[tuple[int, int, bool]]:
    """Compare closed form and bracket recursion cell by cell.

    Levels are computed once for the whole sweep; results are ordered by
    (k, n).  Every entry should be True: disagreement means a bug, not a
    property of the knot.
    """
    if n_lo > n_hi or k_lo > k_hi or k_lo < 0:
        raise ValueError("invalid sweep ranges")
    n_abs_max = max(abs(n_lo), abs(n_hi))
    levels = bracket_levels(n_abs_max, k_hi)
    results = []
    for k in range(k_lo, k_hi + 1):
        for n in range(n_lo, n_hi + 1):
            recovered = bracket_to_jones(n, k, levels[k].bracket(n))
            results.append((n, k, recovered == jones_wnk(n, k)))
    return results
