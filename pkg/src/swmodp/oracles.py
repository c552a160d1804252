"""Ground truth for the worked examples.

* :func:`sw_torus_surface` -- |SW| of T^2 x Sigma_g for the spin structure,
  the central binomial coefficient C(2g-2, g-1).
* :func:`flat_twist_classes` -- divisor data D = sum d_n p_n of flat
  G-line bundles on a surface with isolated fixed points p_n.
* :func:`build_example` -- complete specs plus the values every stage of the
  pipeline must reproduce.

A flat G-line bundle L_D restricts to (T Sigma|p_n)^(d_n) at p_n, so its
weight exponent there is w_n * d_n where w_n is the tangent weight.  For a
flat bundle sum d_n = c_1 = 0 mod p.  Tensoring with the trivial bundle on
which g acts by zeta^c moves every weight by c; on divisors that is
d_n -> d_n + c / w_n.  Such a global shift only cyclically relabels the
index row, so it is quotiented out once per product -- on one factor.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Optional

from .gmanifold import (
    EQUIVARIANT,
    ODD_TYPE_P2,
    FixedComponent,
    GlobalInvariants,
    JacobianComponent,
    ManifoldSpec,
)

__all__ = [
    "EXAMPLE_NAMES",
    "DivisorClass",
    "Expected",
    "sw_torus_surface",
    "flat_twist_classes",
    "build_example",
]

EXAMPLE_NAMES = ("fermat_k3_z2", "four_torus_z2", "t2_sigma3h_z3", "t1_sigma2_z3")


def sw_torus_surface(g: int) -> int:
    """|SW(T^2 x Sigma_g, c_0)| = C(2g - 2, g - 1); the sign is not fixed."""
    if g < 2:
        raise ValueError(f"need genus >= 2, got {g}")
    return comb(2 * g - 2, g - 1)


@dataclass(frozen=True)
class DivisorClass:
    p: int
    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int:
        """c_1(L_D) mod p."""
        return sum(self.coefficients) % self.p

    def weight_exponents(self, tangent_weights) -> tuple[int, ...]:
        return tuple((w * d) % self.p for w, d in zip(tangent_weights, self.coefficients))


def flat_twist_classes(
    p: int,
    n_points: int,
    c1_mod_p: int,
    tangent_weights=None,
    quotient: bool = True,
) -> list[DivisorClass]:
    """Divisors (d_1, ..., d_n) mod p with sum d_n = c1 mod p.

    With ``quotient`` the solutions are grouped into orbits of the global
    weight shift d_n -> d_n + c / w_n, one lexicographically least
    representative per orbit.  The shift preserves the degree only when
    sum 1/w_n = 0 mod p; otherwise every solution is its own class.
    Classes are returned in lexicographic order, so the zero divisor (when
    admissible) comes first.
    """
    if n_points < 1:
        raise ValueError("need at least one fixed point")
    weights = tuple(tangent_weights) if tangent_weights is not None else (1,) * n_points
    if len(weights) != n_points or any(w % p == 0 for w in weights):
        raise ValueError("need one nonzero tangent weight per fixed point")
    sols = [
        d for d in itertools.product(range(p), repeat=n_points) if sum(d) % p == c1_mod_p % p
    ]
    inv = tuple(pow(w, -1, p) for w in weights)
    if not quotient or sum(inv) % p:
        return [DivisorClass(p, d) for d in sols]
    seen = set()
    reps = []
    for d in sols:
        if d in seen:
            continue
        seen.update(
            tuple((dn + c * iv) % p for dn, iv in zip(d, inv)) for c in range(p)
        )
        reps.append(DivisorClass(p, d))
    return reps


@dataclass(frozen=True)
class Expected:
    """Values the pipeline must reproduce for one example."""

    name: str
    p: int
    modulus: int
    n_fixed: int
    n_components: int
    euler_orbit: Fraction
    sign_orbit: Fraction
    m: int
    d_c: int
    B: int
    e: tuple[int, ...]
    status: str
    witness: Optional[tuple[int, ...]]
    uniform_row: Optional[tuple[int, ...]]
    sw_magnitude: int
    adjunction: Optional[tuple[int, int]] = None
    violating_pairs: Optional[tuple[tuple[int, str], ...]] = None
    notes: tuple[str, ...] = field(default=())


def _product_components(p, base_classes, base_weights, fibre_classes, fibre_weights):
    """Jacobian components of T x Sigma from per-factor divisor classes.

    Fixed points are ordered (p_i, q_s) with i outer; the twist at
    (p_i, q_s) is a_i + b_s with a, b the factor weight exponents.
    """
    comps = []
    for a_cls in base_classes:
        a = a_cls.weight_exponents(base_weights)
        for b_cls in fibre_classes:
            b = b_cls.weight_exponents(fibre_weights)
            label = (
                "T(" + ",".join(map(str, a_cls.coefficients)) + ")"
                "S(" + ",".join(map(str, b_cls.coefficients)) + ")"
            )
            comps.append(
                JacobianComponent(label, tuple((ai + bs) % p for ai in a for bs in b))
            )
    return tuple(comps)


def _product_fixed_points(base_weights, fibre_weights):
    return tuple(
        FixedComponent.isolated(wa, wb, 0) for wa in base_weights for wb in fibre_weights
    )


def _t2_sigma3h(h):
    p = 3
    torus_w = (1, 1, 1)  # T_1 = C/(Z + zeta Z), g acts by zeta: three fixed points of weight 1
    surface_w = (2, 1)  # q_+ has tangent weight 2, q_- weight 1
    comps = _product_components(
        p,
        flat_twist_classes(p, 3, 0, torus_w),
        torus_w,
        flat_twist_classes(p, 2, 0, surface_w, quotient=False),
        surface_w,
    )
    g = 3 * h
    spec = ManifoldSpec(
        GlobalInvariants(
            p=p,
            b1=2 + 2 * g,
            b_plus=1 + 2 * g,
            signature=0,
            euler=0,
            c1_squared=0,
            b1_G=2 * h,
            bplus_G=2 * h + 1,
            action_type=EQUIVARIANT,
        ),
        _product_fixed_points(torus_w, surface_w),
        comps,
        spin=True,
        name=f"t2_sigma3h_z3(h={h})",
    )
    exp = Expected(
        name=spec.name,
        p=p,
        modulus=3,
        n_fixed=6,
        n_components=9,
        euler_orbit=Fraction(4),
        sign_orbit=Fraction(0),
        m=2,
        d_c=0,
        B=0,
        e=(0, 0, 0),
        status="VANISHES_MOD_P",
        witness=(0, 0, 0),
        uniform_row=(0, 0, 0),
        sw_magnitude=sw_torus_surface(g),
    )
    return spec, exp


# Frozen after the first derivation and hand-checked.  Only components with
# T_1 divisor (0,0,0) can violate (otherwise sum_i zeta^a_i = 0); e.g. for
# S(0,1,1,1) the character at g is 3 zeta^2, giving row (-1, -1, 2).
_T1_SIGMA2_VIOLATIONS = (
    (2, "T(0,0,0)S(0,1,1,1)"),
    (1, "T(0,0,0)S(0,2,2,2)"),
    (2, "T(0,0,0)S(1,0,1,1)"),
    (0, "T(0,0,0)S(1,2,0,0)"),
    (1, "T(0,0,0)S(2,0,2,2)"),
    (0, "T(0,0,0)S(2,1,0,0)"),
)
_T1_SIGMA2_E = (1, 1, 1)


def _t1_sigma2():
    p = 3
    torus_w = (1, 1, 1)
    # Sigma_2 from T_1 and T_2 glued at one fixed point each: the two
    # surviving T_1 points have weight 1, the two T_2 points weight 2
    surface_w = (1, 1, 2, 2)
    comps = _product_components(
        p,
        flat_twist_classes(p, 3, 0, torus_w),
        torus_w,
        flat_twist_classes(p, 4, 0, surface_w, quotient=False),
        surface_w,
    )
    spec = ManifoldSpec(
        GlobalInvariants(
            p=p,
            b1=6,
            b_plus=5,
            signature=0,
            euler=0,
            c1_squared=0,
            b1_G=0,
            bplus_G=3,
            action_type=EQUIVARIANT,
        ),
        _product_fixed_points(torus_w, surface_w),
        comps,
        spin=True,
        name="t1_sigma2_z3",
    )
    exp = Expected(
        name=spec.name,
        p=p,
        modulus=3,
        n_fixed=12,
        n_components=81,
        euler_orbit=Fraction(8),
        sign_orbit=Fraction(0),
        m=4,
        d_c=0,
        B=1,
        e=_T1_SIGMA2_E,
        status="INCONCLUSIVE",
        witness=None,
        uniform_row=None,
        sw_magnitude=sw_torus_surface(2),
        violating_pairs=_T1_SIGMA2_VIOLATIONS,
        notes=("violating pairs derived by the index engine and frozen",),
    )
    return spec, exp


def _fermat_k3():
    spec = ManifoldSpec(
        GlobalInvariants(
            p=2,
            b1=0,
            b_plus=3,
            signature=-16,
            euler=24,
            c1_squared=0,
            b1_G=0,
            bplus_G=1,
            action_type=ODD_TYPE_P2,
        ),
        (FixedComponent.surface(genus=3, self_int=4, normal_weight=1, det_weight=0),),
        (JacobianComponent("origin", (0,)),),
        spin=True,
        name="fermat_k3_z2",
    )
    exp = Expected(
        name=spec.name,
        p=2,
        modulus=2,
        n_fixed=1,
        n_components=1,
        euler_orbit=Fraction(10),
        sign_orbit=Fraction(-6),
        m=2,
        d_c=0,
        B=0,
        e=(1, 1),
        status="INCONCLUSIVE",
        witness=None,
        uniform_row=(1, 1),
        sw_magnitude=1,
        adjunction=(4, 4),
    )
    return spec, exp


def _four_torus():
    # G = -1 on the first T^2 factor: four fixed points there, so X^G is
    # four tori {pt_i} x T^2; J^G has one component per divisor class
    classes = flat_twist_classes(2, 4, 0)
    comps = tuple(
        JacobianComponent("D(" + ",".join(map(str, c.coefficients)) + ")", c.coefficients)
        for c in classes
    )
    spec = ManifoldSpec(
        GlobalInvariants(
            p=2,
            b1=4,
            b_plus=3,
            signature=0,
            euler=0,
            c1_squared=0,
            b1_G=2,
            bplus_G=1,
            action_type=ODD_TYPE_P2,
        ),
        tuple(FixedComponent.surface(1, 0, 1, 0) for _ in range(4)),
        comps,
        spin=True,
        name="four_torus_z2",
    )
    exp = Expected(
        name=spec.name,
        p=2,
        modulus=2,
        n_fixed=4,
        n_components=4,
        euler_orbit=Fraction(0),
        sign_orbit=Fraction(0),
        m=0,
        d_c=0,
        B=-1,
        e=(1, 1),
        status="INCONCLUSIVE",
        witness=None,
        uniform_row=(0, 0),
        sw_magnitude=1,
        adjunction=(0, 0),
    )
    return spec, exp


def build_example(name: str, h: int = 1) -> tuple[ManifoldSpec, Expected]:
    """Spec and expected values for one of :data:`EXAMPLE_NAMES`.

    ``h`` selects the genus 3h of the surface factor for ``t2_sigma3h_z3``.
    """
    if name == "fermat_k3_z2":
        return _fermat_k3()
    if name == "four_torus_z2":
        return _four_torus()
    if name == "t2_sigma3h_z3":
        if h < 1:
            raise ValueError("h must be >= 1")
        return _t2_sigma3h(h)
    if name == "t1_sigma2_z3":
        return _t1_sigma2()
    raise ValueError(f"unknown example {name!r}; choose from {', '.join(EXAMPLE_NAMES)}")
