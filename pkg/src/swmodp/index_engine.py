"""Equivariant Dirac indices from fixed-point data.

For each Jacobian fixed component l the character of ind_G D_{A_l} at g^k
(k = 1..p-1) is the sum over fixed components X_n of

    zeta^(k * twist_n) * F_n(g^k)

where F_n is the Atiyah-Bott contribution of X_n for the untwisted lift.
The character at the identity is the ordinary index (c1^2 - Sign) / 8.
Fourier inversion then gives the multiplicities k_j^l.

Square roots of p-th roots of unity are taken to be p-th roots of unity
themselves (odd p).  At p = 2 the signs are not forced; even-type isolated
points carry an explicit ``p2_sign``.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclotomic import CycloNum, as_rational, half_power, inverse, root_of_unity
from .errors import IntegralityError, UnsupportedError
from .gmanifold import FixedComponent, IndexTable, JacobianComponent, ManifoldSpec
from .rep_ring import CharacterVector, RepElement, from_characters

__all__ = [
    "IndexTable",
    "ordinary_index",
    "contribution_isolated",
    "contribution_surface",
    "contribution",
    "character_values",
    "equivariant_index",
    "free_case_index",
    "build_index_table",
]

ODD_TYPE_WEIGHTS = (1, 3)


def ordinary_index(spec: ManifoldSpec) -> int:
    """ind D = (c1^2 - Sign) / 8, which must be an integer."""
    gl = spec.global_
    val = Fraction(gl.c1_squared - gl.signature, 8)
    if val.denominator != 1:
        raise IntegralityError(
            f"(c1^2 - Sign)/8 = {val} is not an integer: not a valid Spin^c index"
        )
    return int(val)


def _odd_factor(p, a):
    """omega^(1/2) - omega^(-1/2) for omega = zeta_p^a."""
    return half_power(p, a) - half_power(p, -a)


def contribution_isolated(c: FixedComponent, k: int, p: int, odd_type: bool = False) -> CycloNum:
    if c.kind != "isolated":
        raise ValueError("expected an isolated fixed point")
    if not 1 <= k <= p - 1:
        raise ValueError(f"group power k = {k} outside 1..{p - 1}")
    if p == 2:
        if odd_type:
            raise UnsupportedError("odd-type involutions have no isolated fixed points")
        if c.p2_sign is None:
            raise UnsupportedError(
                "p = 2 isolated fixed point needs an explicit p2_sign; "
                "the square-root signs are not determined by the fixed-point data"
            )
        # omega^(1/2) = i for both weights, so the denominator is (2i)^2 = -4
        return root_of_unity(4, c.det_weight) * Fraction(c.p2_sign, 4)
    nu = half_power(p, k * c.det_weight)
    return nu * inverse(_odd_factor(p, k * c.w1) * _odd_factor(p, k * c.w2))


def contribution_surface(c: FixedComponent, k: int, p: int, odd_type: bool = False) -> CycloNum:
    if c.kind != "surface":
        raise ValueError("expected a fixed surface")
    if not 1 <= k <= p - 1:
        raise ValueError(f"group power k = {k} outside 1..{p - 1}")
    if p == 2:
        if not odd_type:
            raise UnsupportedError("even-type involutions have no fixed surfaces")
        # omega = -1: with omega^(1/2) = i the numerator i + i^-1 vanishes,
        # and so it does for the other sign choice.
        half = root_of_unity(4, 1)
        half_inv = root_of_unity(4, -1)
        nu_half = root_of_unity(4, c.det_weight)
    else:
        a = k * c.normal_weight
        half, half_inv = half_power(p, a), half_power(p, -a)
        nu_half = half_power(p, k * c.det_weight)
    frac = (half + half_inv) * inverse((half - half_inv) ** 2)
    return -nu_half * frac * Fraction(c.self_int, 2)


def contribution(c: FixedComponent, k: int, p: int, odd_type: bool = False) -> CycloNum:
    if c.kind == "isolated":
        return contribution_isolated(c, k, p, odd_type)
    return contribution_surface(c, k, p, odd_type)


def _twisted_sum(spec: ManifoldSpec, jc: JacobianComponent, k: int) -> CycloNum:
    p = spec.p
    m = 4 if p == 2 else p
    total = CycloNum.rational(m, 0)
    for comp, tw in zip(spec.fixed_components, jc.twists):
        lam = root_of_unity(m, (m // p) * k * tw)
        total = total + lam * contribution(comp, k, p, spec.odd_type)
    return total


def character_values(spec: ManifoldSpec, jc: JacobianComponent) -> tuple[CycloNum, ...]:
    """Character of the index at g^0, g^1, ..., g^(p-1) for component ``jc``.

    For p = 2 the nontrivial value is computed in Q(zeta_4); for an odd-type
    involution it is the character at the Z_4 lift of the generator.
    """
    p = spec.p
    ind = ordinary_index(spec)
    m = 4 if p == 2 else p
    return (CycloNum.rational(m, ind),) + tuple(
        _twisted_sum(spec, jc, k) for k in range(1, p)
    )


def _odd_type_row(spec, jc):
    ind = ordinary_index(spec)
    chars = character_values(spec, jc)
    if chars[1]:
        raise UnsupportedError(
            f"odd-type component {jc.label!r} has nonvanishing fixed-point "
            "contributions; Z_4 character conventions are not fixed here, "
            "supply k_table_override"
        )
    if ind % 2:
        raise IntegralityError(f"odd-type index {ind} must split as k_1 = k_3 = ind/2")
    return (ind // 2, ind // 2)


def equivariant_index(spec: ManifoldSpec, jc: JacobianComponent):
    """Row ``k^l`` for one Jacobian component.

    Returns a :class:`RepElement` for an equivariant structure, or the pair
    ``(k_1, k_3)`` for an odd-type involution.
    """
    if spec.is_free:
        raise ValueError("free action: use free_case_index")
    if spec.odd_type:
        return _odd_type_row(spec, jc)
    p = spec.p
    vals = character_values(spec, jc)
    if p == 2:
        rational = as_rational(vals[1])
        if rational is None:
            raise IntegralityError(
                f"character at g is {vals[1]}, not rational; inconsistent p = 2 data"
            )
        vals = (vals[0].coeffs[0], rational)
    return from_characters(CharacterVector(p, tuple(vals)))


def free_case_index(spec: ManifoldSpec) -> RepElement:
    """Uniform row (c1^2 - Sign) / (8p) for a free action."""
    if not spec.is_free:
        raise ValueError("free_case_index needs an empty fixed set")
    p = spec.p
    gl = spec.global_
    val = Fraction(gl.c1_squared - gl.signature, 8 * p)
    if val.denominator != 1:
        raise IntegralityError(
            f"(c1^2 - Sign)/(8p) = {val} is not an integer: inconsistent free-action data"
        )
    return RepElement(p, (int(val),) * p)


def build_index_table(spec: ManifoldSpec) -> IndexTable:
    p = spec.p
    weights = ODD_TYPE_WEIGHTS if spec.odd_type else tuple(range(p))
    if spec.k_table_override is not None:
        table = spec.k_table_override
        ind = ordinary_index(spec)
        if table.weights != weights:
            raise UnsupportedError(f"override columns {table.weights} != {weights}")
        for label, row in zip(table.labels, table.rows):
            if sum(row) != ind:
                raise IntegralityError(
                    f"override row {label!r} has dimension {sum(row)}, expected {ind}"
                )
        return table
    labels = tuple(jc.label for jc in spec.jacobian_components)
    if spec.is_free:
        return IndexTable(p, labels, weights, [free_case_index(spec).mult])
    rows = []
    for jc in spec.jacobian_components:
        row = equivariant_index(spec, jc)
        rows.append(row if spec.odd_type else row.mult)
    return IndexTable(p, labels, weights, rows)
