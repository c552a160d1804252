import itertools
from math import comb

import pytest
import sympy

from swmodp.gmanifold import load_spec, emit_spec
from swmodp.index_engine import build_index_table
from swmodp.oracles import EXAMPLE_NAMES, DivisorClass, build_example, flat_twist_classes, sw_torus_surface


def test_binomials():
    assert sw_torus_surface(3) == 6
    assert sw_torus_surface(2) == 2
    assert sw_torus_surface(6) == 252
    with pytest.raises(ValueError):
        sw_torus_surface(1)


@pytest.mark.parametrize("h", [1, 2, 3, 4])
def test_divisible_by_three_at_genus_3h(h):
    assert sw_torus_surface(3 * h) % 3 == 0


def test_kummer_carries():
    """3 | C(2g-2, g-1) iff adding g-1 to itself in base 3 carries."""
    for g in range(2, 40):
        n = g - 1
        digits = sympy.ntheory.digits(n, 3)[1:]
        carries = any(d >= 2 for d in digits)
        assert (comb(2 * n, n) % 3 == 0) == carries


def test_twist_class_counts():
    assert [d.coefficients for d in flat_twist_classes(3, 2, 0)] == [(0, 0), (1, 2), (2, 1)]
    assert [d.coefficients for d in flat_twist_classes(2, 1, 0)] == [(0,)]
    assert len(flat_twist_classes(3, 4, 0, (1, 1, 2, 2))) == 9
    assert len(flat_twist_classes(3, 4, 0)) == 27
    assert len(flat_twist_classes(3, 4, 0, (1, 1, 2, 2), quotient=False)) == 27
    assert len(flat_twist_classes(3, 3, 0, (1, 1, 1))) == 3
    assert len(flat_twist_classes(2, 4, 0)) == 4


def test_twist_classes_are_shift_orbit_representatives():
    p, w = 3, (1, 1, 2, 2)
    inv = [pow(x, -1, p) for x in w]
    reps = {d.coefficients for d in flat_twist_classes(p, 4, 0, w)}
    sols = [d for d in itertools.product(range(p), repeat=4) if sum(d) % p == 0]
    for d in sols:
        orbit = {tuple((a + c * i) % p for a, i in zip(d, inv)) for c in range(p)}
        assert len(orbit & reps) == 1


def test_twist_class_degree_and_weights():
    for d in flat_twist_classes(5, 3, 2):
        assert d.degree == 2
    assert DivisorClass(3, (1, 2)).weight_exponents((2, 1)) == (2, 2)
    with pytest.raises(ValueError):
        flat_twist_classes(3, 0, 0)
    with pytest.raises(ValueError):
        flat_twist_classes(3, 2, 0, (1, 3))


def test_t1_sigma2_type_counts():
    spec, exp = build_example("t1_sigma2_z3")
    plus = sum((c.w1 + c.w2) % 3 == 0 for c in spec.fixed_components)
    assert (plus, len(spec.fixed_components) - plus) == (6, 6)
    assert exp.n_components == len(spec.jacobian_components) == 81
    assert exp.sw_magnitude % 3 != 0


def test_twist_set_closed_under_galois():
    """sigma_2 (weights w -> 2w) maps the component twists onto themselves."""
    for name in ("t2_sigma3h_z3", "t1_sigma2_z3"):
        spec, _ = build_example(name)
        twists = {jc.twists for jc in spec.jacobian_components}
        shifts = lambda t: {tuple((x + c) % 3 for x in t) for c in range(3)}
        for t in twists:
            doubled = tuple((2 * x) % 3 for x in t)
            assert shifts(doubled) & set().union(*(shifts(s) for s in twists))


@pytest.mark.parametrize("name", EXAMPLE_NAMES)
def test_examples_are_loadable_documents(name):
    spec, exp = build_example(name)
    assert load_spec(emit_spec(spec)) == spec
    assert len(spec.fixed_components) == exp.n_fixed
    assert len(build_index_table(spec).rows) == exp.n_components


def test_build_example_errors():
    with pytest.raises(ValueError):
        build_example("nope")
    with pytest.raises(ValueError):
        build_example("t2_sigma3h_z3", 0)
