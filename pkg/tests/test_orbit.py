import json
import random
from dataclasses import replace
from fractions import Fraction

import pytest

from _support import DATA, load, random_free_spec, with_global
from swmodp.errors import DataError, IntegralityError, UnsupportedError
from swmodp.gmanifold import FixedComponent, spec_from_dict
from swmodp.oracles import build_example
from swmodp.orbit import (
    euler_orbit,
    free_relation_check,
    orbit_report,
    pseudofree_type_counts,
    sign_defect,
)


def test_euler_orbit_examples():
    assert euler_orbit(load("t2_sigma3.json")) == 4
    assert euler_orbit(load("fermat_k3.json")) == 10
    assert euler_orbit(load("free_spec.json")) == Fraction(9, 3)


def test_sign_defect_examples():
    assert sign_defect(load("t2_sigma3.json"), 1) == 0
    assert sign_defect(load("fermat_k3.json"), 1) == 4
    assert sign_defect(load("free_spec.json"), 2) == 0
    with pytest.raises(ValueError):
        sign_defect(load("free_spec.json"), 3)


def test_type_counts():
    assert pseudofree_type_counts(load("t2_sigma3.json")) == (3, 3)
    spec, _ = build_example("t1_sigma2_z3")
    assert pseudofree_type_counts(spec) == (6, 6)
    with pytest.raises(ValueError):
        pseudofree_type_counts(load("fermat_k3.json"))


def test_unbalanced_pseudofree_defect():
    spec = load("t2_sigma3.json")
    pts = (FixedComponent.isolated(1, 2),) * 4 + (FixedComponent.isolated(1, 1),) * 2
    assert sign_defect(replace(spec, fixed_components=pts), 1) == Fraction(2, 3)


def test_unsupported_defect_needs_override():
    spec = load("t2_sigma3.json")
    mixed = spec.fixed_components[:5] + (FixedComponent.surface(1, 0, 1),)
    spec = replace(spec, fixed_components=mixed)
    with pytest.raises(UnsupportedError):
        sign_defect(spec, 1)
    assert sign_defect(replace(spec, sign_defects_override=(3, -3)), 2) == -3


@pytest.mark.parametrize(
    "name, chi, sign, m",
    [
        ("t2_sigma3h_z3", 4, 0, 2),
        ("fermat_k3_z2", 10, -6, 2),
        ("four_torus_z2", 0, 0, 0),
        ("t1_sigma2_z3", 8, 0, 4),
    ],
)
def test_orbit_report_examples(name, chi, sign, m):
    spec, _ = build_example(name)
    rep = orbit_report(spec)
    assert (rep.euler_orbit, rep.sign_orbit, rep.m_quantity) == (chi, sign, m)
    assert rep.half_sum == m


def test_t2_sigma3_genus_6():
    spec, _ = build_example("t2_sigma3h_z3", 2)
    rep = orbit_report(spec)
    assert rep.m_quantity == 2
    assert (rep.b1_G, rep.bplus_G) == (4, 5)


def test_mismatched_betti_numbers():
    doc = json.loads((DATA / "t2_sigma3.json").read_text())
    with pytest.raises(DataError):
        orbit_report(spec_from_dict(with_global(doc, bplus_G=4)))


def test_missing_betti_numbers_completed():
    doc = json.loads((DATA / "t2_sigma3.json").read_text())
    g = dict(doc["global"])
    g.pop("bplus_G")
    rep = orbit_report(spec_from_dict({**doc, "global": g}))
    assert rep.bplus_G == 3
    g = dict(doc["global"])
    g.pop("b1_G")
    assert orbit_report(spec_from_dict({**doc, "global": g})).b1_G == 2
    g.pop("bplus_G")
    rep = orbit_report(spec_from_dict({**doc, "global": g}))
    assert (rep.b1_G, rep.bplus_G) == (None, None)


def test_b1_zero_determines_everything():
    doc = json.loads((DATA / "fermat_k3.json").read_text())
    g = {k: v for k, v in doc["global"].items() if k not in ("b1_G", "bplus_G")}
    rep = orbit_report(spec_from_dict({**doc, "global": g}))
    assert (rep.b1_G, rep.bplus_G) == (0, 1)


def test_non_integral_half_sum():
    spec = load("t2_sigma3.json")
    five = replace(spec, fixed_components=spec.fixed_components[:5])
    with pytest.raises(IntegralityError):
        orbit_report(five)


def test_derived_values_range_checked():
    doc = json.loads((DATA / "free_spec.json").read_text())
    # b1 = 0 forces b1_G = 0 and then bplus_G = m - 1 = 4 > b_plus = 3
    doc = with_global(doc, b_plus=3, euler=15, signature=15, c1_squared=15)
    with pytest.raises(DataError, match="outside"):
        orbit_report(spec_from_dict(doc))


def test_free_relation_examples():
    spec = load("free_z2_d4.json")
    assert orbit_report(spec).m_quantity == 2
    assert free_relation_check(spec)
    # a Z_3 action with 1 - b1 + b+ = 4: m = 1 and p m = 3 != 4
    doc = json.loads((DATA / "free_z2_d4.json").read_text())
    doc["p"] = 3
    doc = with_global(doc, euler=12, signature=-6, c1_squared=18)
    spec3 = spec_from_dict(doc)
    assert orbit_report(spec3).m_quantity == 1
    assert not free_relation_check(spec3)
    with pytest.raises(ValueError):
        free_relation_check(load("t2_sigma3.json"))


def test_free_relation_zero_everything():
    doc = json.loads((DATA / "free_spec.json").read_text())
    doc = with_global(doc, b1=3, b_plus=2, euler=0, signature=0, c1_squared=0)
    spec = spec_from_dict(doc)
    assert orbit_report(spec).m_quantity == 0
    assert free_relation_check(spec)


def test_free_relation_random():
    rng = random.Random(11)
    for _ in range(100):
        assert free_relation_check(random_free_spec(rng))
