import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _support import DATA, load
from swmodp.errors import SpecError
from swmodp.gmanifold import (
    FixedComponent,
    ManifoldSpec,
    GlobalInvariants,
    JacobianComponent,
    emit_spec,
    euler_of_fixed_set,
    load_spec,
    spec_digest,
    spec_from_dict,
    spec_to_dict,
)
from swmodp.oracles import EXAMPLE_NAMES, build_example


def doc(name):
    return json.loads((DATA / name).read_text())


def test_t2_sigma3_document():
    spec = load("t2_sigma3.json")
    assert spec.p == 3
    assert len(spec.fixed_components) == 6
    assert all(c.kind == "isolated" for c in spec.fixed_components)
    assert len(spec.jacobian_components) == 9


def test_zero_weight_rejected():
    d = doc("t2_sigma3.json")
    d["fixed_components"][0]["w1"] = 0
    with pytest.raises(SpecError) as err:
        spec_from_dict(d)
    assert err.value.path == "fixed_components[0].w1"


def test_weight_zero_mod_p_rejected():
    d = doc("t2_sigma3.json")
    d["fixed_components"][2]["w2"] = 6
    with pytest.raises(SpecError):
        spec_from_dict(d)


def test_non_prime_rejected():
    d = doc("t2_sigma3.json")
    d["p"] = 4
    with pytest.raises(SpecError, match="prime"):
        spec_from_dict(d)


@pytest.mark.parametrize(
    "mutate, where",
    [
        (lambda d: d.pop("global"), ""),
        (lambda d: d["global"].update(b1="8"), "global.b1"),
        (lambda d: d.update(extra=1), ""),
        (lambda d: d["fixed_components"][0].update(kind="curve"), "fixed_components"),
        (lambda d: d["jacobian_components"][1].update(twists=[0]), "jacobian_components[1]"),
        (lambda d: d["jacobian_components"][1].update(label="T(0,0,0)S(0,0)"), "jacobian_components[1]"),
        (lambda d: d["jacobian_components"][0].update(twists=[1, 0, 0, 0, 0, 0]), "jacobian_components[0]"),
        (lambda d: d["global"].update(b1_G=9), "global.b1_G"),
        (lambda d: d.update(action_type="odd_type_p2"), "action_type"),
        (lambda d: d["global"].update(signature=-8), "global.signature"),
    ],
)
def test_invalid_documents(mutate, where):
    d = doc("t2_sigma3.json")
    mutate(d)
    with pytest.raises(SpecError) as err:
        spec_from_dict(d)
    assert err.value.path.startswith(where)


def test_not_json():
    with pytest.raises(SpecError, match="JSON"):
        load_spec((DATA / "malformed.json").read_text())


def test_odd_type_rules():
    d = doc("fermat_k3.json")
    d["fixed_components"].append({"kind": "isolated", "w1": 1, "w2": 1, "det_weight": 0})
    d["jacobian_components"][0]["twists"] = [0, 0]
    with pytest.raises(SpecError):
        spec_from_dict(d)
    d = doc("fermat_k3.json")
    d["fixed_components"] = []
    d["jacobian_components"][0]["twists"] = []
    with pytest.raises(SpecError):
        spec_from_dict(d)


def test_even_type_p2_surface_rejected():
    d = doc("fermat_k3.json")
    d["action_type"] = "equivariant"
    with pytest.raises(SpecError):
        spec_from_dict(d)


def test_p2_sign_only_at_p2():
    d = doc("t2_sigma3.json")
    d["fixed_components"][0]["p2_sign"] = 1
    with pytest.raises(SpecError):
        spec_from_dict(d)


def test_free_needs_single_component():
    d = doc("free_spec.json")
    d["jacobian_components"].append({"label": "other", "twists": []})
    with pytest.raises(SpecError):
        spec_from_dict(d)


def test_override_shape_checked():
    d = doc("cut_d2.json")
    d["k_table_override"]["rows"] = [[0, 0]]
    with pytest.raises(SpecError):
        spec_from_dict(d)
    d = doc("cut_d2.json")
    d["sign_defects_override"] = [0]
    with pytest.raises(SpecError):
        spec_from_dict(d)


def test_weights_reduced_mod_p():
    d = doc("t2_sigma3.json")
    d["fixed_components"][0]["w1"] += 3
    assert spec_from_dict(d) == load("t2_sigma3.json")


def test_euler_of_fixed_set():
    assert euler_of_fixed_set(load("t2_sigma3.json")) == 6
    assert euler_of_fixed_set(load("fermat_k3.json")) == -4
    assert euler_of_fixed_set(load("free_spec.json")) == 0


@pytest.mark.parametrize("name", EXAMPLE_NAMES)
def test_roundtrip_examples(name):
    spec, _ = build_example(name)
    again = load_spec(emit_spec(spec))
    assert again == spec
    assert again.name == spec.name
    assert spec_digest(again) == spec_digest(spec)
    assert spec_to_dict(again) == spec_to_dict(spec)


def test_digest_ignores_name_and_layout():
    a = load("free_spec.json")
    d = doc("free_spec.json")
    d["name"] = "renamed"
    b = load_spec(json.dumps(d, indent=None))
    assert spec_digest(a) == spec_digest(b)
    d["global"]["b1"] = 1
    d["global"]["b_plus"] = 6
    assert spec_digest(spec_from_dict(d)) != spec_digest(a)


@settings(max_examples=60, deadline=None)
@given(
    st.sampled_from([3, 5, 7]),
    st.lists(st.tuples(st.integers(1, 20), st.integers(1, 20), st.integers(0, 20)), min_size=1, max_size=5),
)
def test_roundtrip_random_pseudofree(p, pts):
    pts = [(a, b, c) for a, b, c in pts if a % p and b % p]
    if not pts:
        return
    spec = ManifoldSpec(
        GlobalInvariants(p=p, b1=0, b_plus=3, signature=0, euler=2, c1_squared=0),
        tuple(FixedComponent.isolated(a % p, b % p, c % p) for a, b, c in pts),
        (JacobianComponent("origin", (0,) * len(pts)),),
    )
    assert load_spec(emit_spec(spec)) == spec
