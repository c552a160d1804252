"""Problem instances: a 4-manifold with a Z_p action and a Spin^c structure.

A :class:`ManifoldSpec` bundles the global invariants of X, the fixed-point
data of the action, and the twist vectors describing the fixed components of
the Jacobian torus.  Specs are read from and written to a small JSON format
(see :data:`SCHEMA`); :func:`load_spec` validates every invariant and reports
violations with a field path.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Optional

import jsonschema
from sympy import isprime

from .errors import SpecError

__all__ = [
    "EQUIVARIANT",
    "ODD_TYPE_P2",
    "GlobalInvariants",
    "FixedComponent",
    "JacobianComponent",
    "IndexTable",
    "ManifoldSpec",
    "SCHEMA",
    "load_spec",
    "spec_from_dict",
    "spec_to_dict",
    "emit_spec",
    "spec_digest",
    "euler_of_fixed_set",
]

EQUIVARIANT = "equivariant"
ODD_TYPE_P2 = "odd_type_p2"

_INT = {"type": "integer"}
_NONNEG = {"type": "integer", "minimum": 0}

SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["p", "action_type", "global", "fixed_components", "jacobian_components"],
    "properties": {
        "p": _INT,
        "action_type": {"enum": [EQUIVARIANT, ODD_TYPE_P2]},
        "global": {
            "type": "object",
            "additionalProperties": False,
            "required": ["b1", "b_plus", "signature", "euler", "c1_squared"],
            "properties": {
                "b1": _NONNEG,
                "b_plus": _NONNEG,
                "signature": _INT,
                "euler": _INT,
                "c1_squared": _INT,
                "b1_G": _NONNEG,
                "bplus_G": _NONNEG,
            },
        },
        "name": {"type": "string"},
        "spin": {"type": "boolean"},
        "fixed_components": {
            "type": "array",
            "items": {
                "oneOf": [
                    {
                        "type": "object",
                        "additionalProperties": False,
                        "required": ["kind", "w1", "w2", "det_weight"],
                        "properties": {
                            "kind": {"const": "isolated"},
                            "w1": _INT,
                            "w2": _INT,
                            "det_weight": _INT,
                            "p2_sign": {"enum": [1, -1]},
                        },
                    },
                    {
                        "type": "object",
                        "additionalProperties": False,
                        "required": ["kind", "genus", "self_int", "normal_weight", "det_weight"],
                        "properties": {
                            "kind": {"const": "surface"},
                            "genus": _NONNEG,
                            "self_int": _INT,
                            "normal_weight": _INT,
                            "det_weight": _INT,
                        },
                    },
                ]
            },
        },
        "jacobian_components": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["label", "twists"],
                "properties": {
                    "label": {"type": "string"},
                    "twists": {"type": "array", "items": _INT},
                },
            },
        },
        "k_table_override": {
            "type": "object",
            "additionalProperties": False,
            "required": ["labels", "rows"],
            "properties": {
                "labels": {"type": "array", "items": {"type": "string"}},
                "rows": {"type": "array", "items": {"type": "array", "items": _INT}},
            },
        },
        "sign_defects_override": {"type": "array", "items": _INT},
    },
}


@dataclass(frozen=True)
class GlobalInvariants:
    p: int
    b1: int
    b_plus: int
    signature: int
    euler: int
    c1_squared: int
    b1_G: Optional[int] = None
    bplus_G: Optional[int] = None
    action_type: str = EQUIVARIANT


@dataclass(frozen=True)
class FixedComponent:
    """One connected component of X^G.

    Weights are exponents of zeta_p, stored reduced mod p.  ``det_weight`` is
    the exponent of the action on the determinant line over the component.
    """

    kind: str
    det_weight: int = 0
    w1: Optional[int] = None
    w2: Optional[int] = None
    genus: Optional[int] = None
    self_int: Optional[int] = None
    normal_weight: Optional[int] = None
    p2_sign: Optional[int] = None

    @classmethod
    def isolated(cls, w1, w2, det_weight=0, p2_sign=None):
        return cls("isolated", det_weight=det_weight, w1=w1, w2=w2, p2_sign=p2_sign)

    @classmethod
    def surface(cls, genus, self_int, normal_weight, det_weight=0):
        return cls(
            "surface",
            det_weight=det_weight,
            genus=genus,
            self_int=self_int,
            normal_weight=normal_weight,
        )

    @property
    def euler(self) -> int:
        return 1 if self.kind == "isolated" else 2 - 2 * self.genus


@dataclass(frozen=True)
class JacobianComponent:
    label: str
    twists: tuple[int, ...]


@dataclass(frozen=True)
class IndexTable:
    """Multiplicities k_j^l, one row per Jacobian fixed component l.

    ``weights`` names the columns: ``(0, ..., p-1)`` for an equivariant
    structure, ``(1, 3)`` for an odd-type involution (Z_4 weights).
    """

    p: int
    labels: tuple[str, ...]
    weights: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "weights", tuple(self.weights))
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))
        if len(self.labels) != len(self.rows):
            raise ValueError("one label per row required")
        if any(len(r) != len(self.weights) for r in self.rows):
            raise ValueError(f"every row needs {len(self.weights)} entries")

    @property
    def odd_type(self) -> bool:
        return self.weights == (1, 3)

    def column_max(self) -> tuple[int, ...]:
        return tuple(max(col) for col in zip(*self.rows))

    def entry(self, l: int, j: int) -> int:
        return self.rows[l][self.weights.index(j)]


@dataclass(frozen=True)
class ManifoldSpec:
    global_: GlobalInvariants
    fixed_components: tuple[FixedComponent, ...]
    jacobian_components: tuple[JacobianComponent, ...]
    spin: bool = False
    k_table_override: Optional[IndexTable] = None
    sign_defects_override: Optional[tuple[int, ...]] = None
    name: str = field(default="", compare=False)

    @property
    def p(self) -> int:
        return self.global_.p

    @property
    def odd_type(self) -> bool:
        return self.global_.action_type == ODD_TYPE_P2

    @property
    def is_free(self) -> bool:
        return not self.fixed_components


def euler_of_fixed_set(spec: ManifoldSpec) -> int:
    """chi(X^G): one per isolated point, 2 - 2g per fixed surface."""
    return sum(c.euler for c in spec.fixed_components)


def load_spec(document: str | bytes) -> ManifoldSpec:
    """Parse and validate a JSON spec document."""
    try:
        data = json.loads(document)
    except json.JSONDecodeError as exc:
        raise SpecError(f"not valid JSON: {exc}") from exc
    return spec_from_dict(data)


def _json_path(parts) -> str:
    out = ""
    for part in parts:
        out += f"[{part}]" if isinstance(part, int) else (f".{part}" if out else str(part))
    return out


def spec_from_dict(data) -> ManifoldSpec:
    validator = jsonschema.Draft202012Validator(SCHEMA)
    errors = sorted(validator.iter_errors(data), key=lambda e: list(map(str, e.absolute_path)))
    if errors:
        err = errors[0]
        # oneOf failures hide the useful message one level down
        if err.context:
            err = min(err.context, key=lambda e: len(list(e.absolute_path)))
        raise SpecError(err.message, _json_path(err.absolute_path))

    p = data["p"]
    if not isprime(p):
        raise SpecError(f"p = {p} is not prime", "p")
    action_type = data["action_type"]
    if action_type == ODD_TYPE_P2 and p != 2:
        raise SpecError("odd-type actions only exist for p = 2", "action_type")

    g = data["global"]
    gl = GlobalInvariants(
        p=p,
        b1=g["b1"],
        b_plus=g["b_plus"],
        signature=g["signature"],
        euler=g["euler"],
        c1_squared=g["c1_squared"],
        b1_G=g.get("b1_G"),
        bplus_G=g.get("bplus_G"),
        action_type=action_type,
    )
    if gl.b1_G is not None and gl.b1_G > gl.b1:
        raise SpecError("b1_G cannot exceed b1", "global.b1_G")
    if gl.bplus_G is not None and gl.bplus_G > gl.b_plus:
        raise SpecError("bplus_G cannot exceed b_plus", "global.bplus_G")
    spin = data.get("spin", False)
    if spin:
        if gl.c1_squared != 0:
            raise SpecError("a spin structure has trivial determinant line, c1^2 = 0", "global.c1_squared")
        if (gl.euler + gl.signature) % 4:
            raise SpecError("spin requires euler + signature = 0 mod 4", "global.euler")
        if gl.signature % 16:
            raise SpecError("Rokhlin: a smooth spin 4-manifold has signature = 0 mod 16", "global.signature")

    comps = []
    for n, raw in enumerate(data["fixed_components"]):
        path = f"fixed_components[{n}]"
        if raw["kind"] == "isolated":
            for key in ("w1", "w2"):
                if raw[key] % p == 0:
                    raise SpecError(f"rotation weight must be nonzero mod {p}", f"{path}.{key}")
            if "p2_sign" in raw and p != 2:
                raise SpecError("p2_sign only applies when p = 2", f"{path}.p2_sign")
            if action_type == ODD_TYPE_P2:
                raise SpecError(
                    "an odd-type involution has a 2-dimensional fixed set", f"{path}.kind"
                )
            comps.append(
                FixedComponent.isolated(
                    raw["w1"] % p, raw["w2"] % p, raw["det_weight"] % p, raw.get("p2_sign")
                )
            )
        else:
            if raw["normal_weight"] % p == 0:
                raise SpecError(f"normal weight must be nonzero mod {p}", f"{path}.normal_weight")
            if p == 2 and action_type == EQUIVARIANT:
                raise SpecError(
                    "an even-type involution has only isolated fixed points", f"{path}.kind"
                )
            comps.append(
                FixedComponent.surface(
                    raw["genus"], raw["self_int"], raw["normal_weight"] % p, raw["det_weight"] % p
                )
            )
    if action_type == ODD_TYPE_P2 and not comps:
        raise SpecError("an odd-type involution has nonempty fixed set", "fixed_components")

    jcs = []
    seen = set()
    for l, raw in enumerate(data["jacobian_components"]):
        path = f"jacobian_components[{l}]"
        if len(raw["twists"]) != len(comps):
            raise SpecError(
                f"expected {len(comps)} twists (one per fixed component), got {len(raw['twists'])}",
                f"{path}.twists",
            )
        if raw["label"] in seen:
            raise SpecError(f"duplicate label {raw['label']!r}", f"{path}.label")
        seen.add(raw["label"])
        twists = tuple(t % p for t in raw["twists"])
        if l == 0 and any(twists):
            raise SpecError("the origin component must have all-zero twists", f"{path}.twists")
        jcs.append(JacobianComponent(raw["label"], twists))
    if not comps and len(jcs) != 1:
        raise SpecError(
            "a free action takes exactly one Jacobian component", "jacobian_components"
        )

    override = None
    if "k_table_override" in data:
        raw = data["k_table_override"]
        weights = (1, 3) if action_type == ODD_TYPE_P2 else tuple(range(p))
        if len(raw["labels"]) != len(raw["rows"]) or not raw["rows"]:
            raise SpecError("labels and rows must be nonempty and of equal length", "k_table_override")
        for i, row in enumerate(raw["rows"]):
            if len(row) != len(weights):
                raise SpecError(
                    f"row needs {len(weights)} entries", f"k_table_override.rows[{i}]"
                )
        override = IndexTable(p, raw["labels"], weights, raw["rows"])

    defects = None
    if "sign_defects_override" in data:
        defects = tuple(data["sign_defects_override"])
        if len(defects) != p - 1:
            raise SpecError(f"need p - 1 = {p - 1} values", "sign_defects_override")

    return ManifoldSpec(
        gl, tuple(comps), tuple(jcs), spin, override, defects, name=data.get("name", "")
    )


def spec_to_dict(spec: ManifoldSpec) -> dict:
    gl = spec.global_
    glob = {
        "b1": gl.b1,
        "b_plus": gl.b_plus,
        "signature": gl.signature,
        "euler": gl.euler,
        "c1_squared": gl.c1_squared,
    }
    if gl.b1_G is not None:
        glob["b1_G"] = gl.b1_G
    if gl.bplus_G is not None:
        glob["bplus_G"] = gl.bplus_G
    comps = []
    for c in spec.fixed_components:
        if c.kind == "isolated":
            d = {"kind": "isolated", "w1": c.w1, "w2": c.w2, "det_weight": c.det_weight}
            if c.p2_sign is not None:
                d["p2_sign"] = c.p2_sign
        else:
            d = {
                "kind": "surface",
                "genus": c.genus,
                "self_int": c.self_int,
                "normal_weight": c.normal_weight,
                "det_weight": c.det_weight,
            }
        comps.append(d)
    out = {
        "p": spec.p,
        "action_type": gl.action_type,
        "global": glob,
        "spin": spec.spin,
        "fixed_components": comps,
        "jacobian_components": [
            {"label": jc.label, "twists": list(jc.twists)} for jc in spec.jacobian_components
        ],
    }
    if spec.k_table_override is not None:
        t = spec.k_table_override
        out["k_table_override"] = {"labels": list(t.labels), "rows": [list(r) for r in t.rows]}
    if spec.sign_defects_override is not None:
        out["sign_defects_override"] = list(spec.sign_defects_override)
    if spec.name:
        out["name"] = spec.name
    return out


def emit_spec(spec: ManifoldSpec, indent: int | None = 2) -> str:
    return json.dumps(spec_to_dict(spec), indent=indent, sort_keys=True)


def spec_digest(spec: ManifoldSpec) -> str:
    """sha256 of the canonical (compact, key-sorted) JSON encoding; the
    name is a label and does not enter."""
    data = spec_to_dict(spec)
    data.pop("name", None)
    canon = json.dumps(data, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canon.encode()).hexdigest()
