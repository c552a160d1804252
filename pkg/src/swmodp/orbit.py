"""Invariants of the orbit space X/G from fixed-point data.

The Lefschetz formula gives chi(X/G) and the G-signature theorem gives
Sign(X/G); for any rational homology (V-)manifold Y,

    1 - b_1(Y) + b_+(Y) = (chi(Y) + Sign(Y)) / 2,

which with Y = X/G is the quantity m = 1 - b_1^G + b_+^G that enters the
vanishing criterion.

Signature defects Sign(g^k, X) are only evaluated where the formula is
elementary: free actions, involutions with fixed surfaces only, and
pseudofree Z_3 actions.  Anything else needs ``sign_defects_override``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import DataError, IntegralityError, UnsupportedError
from .gmanifold import ManifoldSpec, euler_of_fixed_set

__all__ = [
    "OrbitReport",
    "euler_orbit",
    "sign_defect",
    "orbit_report",
    "free_relation_check",
    "pseudofree_type_counts",
]


@dataclass(frozen=True)
class OrbitReport:
    euler_orbit: Fraction
    sign_orbit: Fraction
    half_sum: Fraction
    m_quantity: int
    b1_G: Optional[int]
    bplus_G: Optional[int]
    defects: tuple[Fraction, ...]


def euler_orbit(spec: ManifoldSpec) -> Fraction:
    """chi(X/G) = (chi(X) + (p - 1) chi(X^G)) / p.

    X^(g^k) = X^G for every k != 0 because p is prime.
    """
    p = spec.p
    return Fraction(spec.global_.euler + (p - 1) * euler_of_fixed_set(spec), p)


def pseudofree_type_counts(spec: ManifoldSpec) -> tuple[int, int]:
    """(m_+, m_-) for a pseudofree Z_3 action.

    Type (+) has weights (1, 2) and type (-) has weights (1, 1) or (2, 2).
    """
    if spec.p != 3 or any(c.kind != "isolated" for c in spec.fixed_components):
        raise ValueError("type counts are defined for pseudofree Z_3 actions")
    plus = sum(1 for c in spec.fixed_components if (c.w1 + c.w2) % 3 == 0)
    return plus, len(spec.fixed_components) - plus


def sign_defect(spec: ManifoldSpec, k: int) -> Fraction:
    """Sign(g^k, X) for 1 <= k <= p - 1."""
    p = spec.p
    if not 1 <= k <= p - 1:
        raise ValueError(f"group power k = {k} outside 1..{p - 1}")
    if spec.sign_defects_override is not None:
        return Fraction(spec.sign_defects_override[k - 1])
    comps = spec.fixed_components
    if not comps:
        return Fraction(0)
    if p == 2 and all(c.kind == "surface" for c in comps):
        return Fraction(sum(c.self_int for c in comps))
    if p == 3 and all(c.kind == "isolated" for c in comps):
        plus, minus = pseudofree_type_counts(spec)
        return Fraction(plus - minus, 3)
    raise UnsupportedError(
        "signature defect not determined for this fixed-point configuration; "
        "supply sign_defects_override"
    )


def orbit_report(spec: ManifoldSpec) -> OrbitReport:
    """chi(X/G), Sign(X/G) and m = 1 - b_1^G + b_+^G.

    When the input gives b1_G and/or bplus_G they are checked against (or
    completed from) the derived m.
    """
    p = spec.p
    gl = spec.global_
    chi = euler_orbit(spec)
    defects = tuple(sign_defect(spec, k) for k in range(1, p))
    sign = (gl.signature + sum(defects)) / p
    half = (chi + sign) / 2
    if half.denominator != 1:
        raise IntegralityError(
            f"(chi(X/G) + Sign(X/G))/2 = {half} is not an integer; "
            "fixed-point data inconsistent with chi and Sign"
        )
    m = int(half)
    b1_G, bplus_G = gl.b1_G, gl.bplus_G
    if b1_G is not None and bplus_G is not None:
        if 1 - b1_G + bplus_G != m:
            raise DataError(
                f"1 - b1_G + bplus_G = {1 - b1_G + bplus_G} but the Lefschetz and "
                f"G-signature formulas give {m}"
            )
    elif b1_G is not None:
        bplus_G = m - 1 + b1_G
    elif bplus_G is not None:
        b1_G = 1 + bplus_G - m
    elif gl.b1 == 0:
        b1_G, bplus_G = 0, m - 1
    for name, val, cap in (("b1_G", b1_G, gl.b1), ("bplus_G", bplus_G, gl.b_plus)):
        if val is not None and not 0 <= val <= cap:
            raise DataError(f"derived {name} = {val} lies outside [0, {cap}]")
    return OrbitReport(chi, sign, half, m, b1_G, bplus_G, defects)


def free_relation_check(spec: ManifoldSpec) -> bool:
    """For a free action, 1 - b_1 + b_+ must equal p (1 - b_1^G + b_+^G)."""
    if not spec.is_free:
        raise ValueError("free_relation_check needs an empty fixed set")
    gl = spec.global_
    return 1 - gl.b1 + gl.b_plus == spec.p * orbit_report(spec).m_quantity
