"""Root-of-unity obstructions for Jones polynomials.

A knot Jones polynomial V satisfies V(1) = 1, V'(1) = 0, V(zeta_3) = 1,
V(i) = +-1 and V(zeta_6) = +-(i*sqrt(3))^s.  All checks here are exact:
they run in the residue rings Z[x]/(Phi_N), with i*sqrt(3) realized as
2*zeta_6 - 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from sympy import factorint

from .laurent import LaurentPoly, ResidueElement
from .wnk import f, g


@dataclass(frozen=True)
class SpecialValueReport:
    at_one: int
    derivative_at_one: int
    at_zeta3_is_one: bool
    at_i_value: Optional[int]  # +-1 when the value at i is a unit
    at_zeta6_exponent: Optional[int]  # s with V(zeta_6) = +-(i*sqrt(3))^s

    @property
    def passes_all(self) -> bool:
        return (
            self.at_one == 1
            and self.derivative_at_one == 0
            and self.at_zeta3_is_one
            and self.at_i_value is not None
            and self.at_zeta6_exponent is not None
        )

    def to_json(self) -> dict:
        return {
            "at_one": self.at_one,
            "derivative_at_one": self.derivative_at_one,
            "at_zeta3_is_one": self.at_zeta3_is_one,
            "at_i_value": self.at_i_value,
            "at_zeta6_exponent": self.at_zeta6_exponent,
            "passes_all": self.passes_all,
        }


def special_value_check(p: LaurentPoly) -> SpecialValueReport:
    """Run all special-value necessary conditions; failures are reported."""
    if not p:
        raise ValueError("cannot check the zero polynomial")
    at_one, deriv = p.value_and_derivative_at_one()
    zeta3_ok = p.evaluate_residue(3).constant_value() == 1
    at_i = p.evaluate_residue(4).constant_value()
    if at_i not in (1, -1):
        at_i = None

    # V(zeta_6) must be +-(i*sqrt(3))^s; since |V(zeta_6)| <= sum |coeffs|
    # and |i*sqrt(3)|^s = 3^(s/2), the exponent search is bounded.
    coeff_sum = sum(abs(c) for _, c in p.items())
    s_max = math.ceil(2 * math.log(coeff_sum) / math.log(3)) if coeff_sum > 1 else 0
    r6 = p.evaluate_residue(6)
    i_sqrt3 = ResidueElement.from_coeffs(6, [-1, 2])  # 2*zeta_6 - 1
    zeta6_exp = None
    power = ResidueElement.from_int(6, 1)
    for s in range(s_max + 1):
        if r6 == power or r6 == -power:
            zeta6_exp = s
            break
        power = power * i_sqrt3
    return SpecialValueReport(at_one, deriv, zeta3_ok, at_i, zeta6_exp)


def _prime_power_quotient(q: int, forbid_three: bool) -> bool:
    """True iff q == p^k for a single prime p (k >= 0), p != 3 when forbidden."""
    if q == 1:
        return True
    factors = factorint(q)
    if len(factors) != 1:
        return False
    (p,) = factors
    return not (forbid_three and p == 3)


def excluded_phi_index(order: int) -> bool:
    """True iff Phi_order provably cannot divide any knot Jones polynomial.

    The excluded shapes are p^k, 3p^k, 4p^k (any prime p) and 6p^k with
    p != 3, k >= 0 throughout; the bases themselves (1, 3, 4, 6) match
    via p^0.
    """
    if order < 1:
        raise ValueError("index must be >= 1")
    for base, forbid_three in ((1, False), (3, False), (4, False), (6, True)):
        if order % base == 0 and _prime_power_quotient(order // base, forbid_three):
            return True
    return False


def phitilde_admissible(k: int) -> bool:
    """Whether Phi~_{2k} may divide a Jones polynomial: requires 3 does not divide k."""
    if k % 2 == 0:
        raise ValueError("k must be odd")
    return k % 3 != 0


def realized_orders(bound: int) -> list[int]:
    """Orders 2m <= bound with Phi_{2m} realized as a Jones-polynomial divisor.

    These are 2f(k) and 2g(k) for k >= 2; k = 1 gives the trivial product
    and is skipped.
    """
    if bound < 2:
        raise ValueError("bound must be >= 2")
    out = set()
    k = 2
    while 2 * f(k) <= bound or 2 * g(k) <= bound:
        for order in (2 * f(k), 2 * g(k)):
            if order <= bound:
                out.add(order)
        k += 1
    return sorted(out)


def open_question_candidates(bound: int) -> list[int]:
    """Orders N <= bound neither excluded nor already realized."""
    if bound < 2:
        raise ValueError("bound must be >= 2")
    realized = set(realized_orders(bound))
    return [
        n
        for n in range(2, bound + 1)
        if not excluded_phi_index(n) and n not in realized
    ]
