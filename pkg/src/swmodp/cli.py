"""Command-line front end.

    swmodp check  <file> [--format text|json] [--partition] [--audit]
    swmodp index  <file> [--characters] [--format text|json]
    swmodp cut    <file> --dt N --dtg N [--invariant] [--format text|json]
    swmodp corpus [--format text|json] [--jobs N]

Exit codes: 0 the criterion gives vanishing (mod p or trivially), 1
inconclusive, 2 not applicable or a violated precondition, 3 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Any, Callable

from . import oracles, vanishing
from .cyclotomic import CycloNum, as_rational
from .errors import DataError, PreconditionError, UnsupportedError
from .gmanifold import IndexTable, ManifoldSpec, load_spec, spec_digest
from .index_engine import build_index_table, character_values
from .orbit import OrbitReport, orbit_report
from .vanishing import CutSpec, Status, Verdict

EXIT_VANISHES = 0
EXIT_INCONCLUSIVE = 1
EXIT_NOT_APPLICABLE = 2
EXIT_DATA_ERROR = 3

_STATUS_EXIT = {
    Status.VANISHES_MOD_P: EXIT_VANISHES,
    Status.VANISHES_TRIVIALLY: EXIT_VANISHES,
    Status.INCONCLUSIVE: EXIT_INCONCLUSIVE,
    Status.NOT_APPLICABLE: EXIT_NOT_APPLICABLE,
}


# -- exact serialization -----------------------------------------------------


def fmt_rational(x) -> str:
    return str(Fraction(x))


def fmt_cyclo(z: CycloNum):
    """A rational value as "a/b", anything else as its coefficient tuple."""
    r = as_rational(z)
    if r is not None:
        return fmt_rational(r)
    return {"order": z.order, "coeffs": [fmt_rational(c) for c in z.coeffs]}


def dumps(report: dict, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2)
    return _render_text(report)


def parse_report(text: str) -> dict:
    """Inverse of :func:`dumps` for the JSON format; rejects floats."""

    def no_float(s):
        raise ValueError(f"floating point value {s!r} in report")

    return json.loads(text, parse_float=no_float)


def _render_text(obj, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    for key in sorted(obj):
        val = obj[key]
        if isinstance(val, dict):
            lines.append(f"{pad}{key}:")
            lines.append(_render_text(val, indent + 1))
        elif isinstance(val, list) and val and isinstance(val[0], dict):
            lines.append(f"{pad}{key}:")
            for item in val:
                lines.append(pad + "  - " + ", ".join(f"{k}={_inline(item[k])}" for k in sorted(item)))
        elif isinstance(val, list) and val and isinstance(val[0], str) and key in ("narrative", "warnings"):
            lines.append(f"{pad}{key}:")
            lines.extend(f"{pad}  {s}" for s in val)
        else:
            lines.append(f"{pad}{key}: {_inline(val)}")
    return "\n".join(lines)


def _inline(val) -> str:
    if val is None:
        return "-"
    if isinstance(val, list):
        return "(" + ", ".join(_inline(v) for v in val) + ")"
    if isinstance(val, dict):
        return "{" + ", ".join(f"{k}: {_inline(val[k])}" for k in sorted(val)) + "}"
    if isinstance(val, bool):
        return "yes" if val else "no"
    return str(val)


# -- report sections ---------------------------------------------------------


def _spec_section(spec: ManifoldSpec) -> dict:
    gl = spec.global_
    return {
        "digest": spec_digest(spec),
        "name": spec.name,
        "p": spec.p,
        "action_type": gl.action_type,
        "b1": gl.b1,
        "b_plus": gl.b_plus,
        "signature": gl.signature,
        "euler": gl.euler,
        "c1_squared": gl.c1_squared,
        "spin": spec.spin,
        "n_fixed": len(spec.fixed_components),
        "n_components": len(spec.jacobian_components),
    }


def _table_section(table: IndexTable) -> dict:
    return {
        "weights": list(table.weights),
        "rows": [{"label": lab, "k": list(row)} for lab, row in zip(table.labels, table.rows)],
    }


def _orbit_section(orb: OrbitReport) -> dict:
    return {
        "euler_orbit": fmt_rational(orb.euler_orbit),
        "sign_orbit": fmt_rational(orb.sign_orbit),
        "sign_defects": [fmt_rational(x) for x in orb.defects],
        "m": orb.m_quantity,
        "b1_G": orb.b1_G,
        "bplus_G": orb.bplus_G,
    }


def _verdict_section(v: Verdict) -> dict:
    return {
        "status": v.status.value,
        "modulus": v.modulus,
        "d_c": v.d_c,
        "m": v.m,
        "B": v.B,
        "e": None if v.e is None else list(v.e),
        "witness_partition": None if v.witness_partition is None else list(v.witness_partition),
        "violating_pairs": [{"j": j, "label": lab} for j, lab in v.violating_pairs],
        "conclusion": v.conclusion if v.status is Status.VANISHES_MOD_P else "",
        "narrative": list(v.narrative),
    }


def _try_table(spec, warnings):
    try:
        return build_index_table(spec)
    except UnsupportedError as exc:
        warnings.append(f"index table unavailable: {exc}")
        return None


def _audit_section(table, verdict, orb, warnings):
    if table is None or verdict.e is None:
        warnings.append("audit skipped: no index table or no partition data")
        return None
    if orb.b1_G is None or orb.bplus_G is None:
        warnings.append("audit skipped: b1_G/bplus_G not determined")
        return None
    dj = verdict.witness_partition if verdict.witness_partition is not None else verdict.e
    out = []
    for label, row in zip(table.labels, table.rows):
        for j, k, d in zip(table.weights, row, dj):
            rec = vanishing.dimension_audit(max(k, 0), max(-k, 0), 0, d, orb.b1_G, orb.bplus_G)
            out.append(
                {"label": label, "j": j, "d_j": d, "dim": rec.dim, "rank": rec.rank, "gap_holds": rec.gap_holds}
            )
    return out


def build_check_report(spec: ManifoldSpec, partition: bool = False, audit: bool = False) -> dict:
    warnings: list[str] = []
    orb = orbit_report(spec)
    table = _try_table(spec, warnings)
    # without a table check_main retries lazily; the hypotheses or the
    # trivial branch may still decide
    verdict = vanishing.check_main(spec, table)
    report = {
        "command": "check",
        "spec": _spec_section(spec),
        "index_table": None if table is None else _table_section(table),
        "orbit": _orbit_section(orb),
        "verdict": _verdict_section(verdict),
        "warnings": warnings,
    }
    if partition and table is not None and verdict.d_c is not None and verdict.m is not None:
        target = verdict.d_c // 2 if verdict.d_c >= 0 and verdict.d_c % 2 == 0 else -1
        found = vanishing.partition_search(table, verdict.m, target)
        report["partition_search"] = None if found is None else list(found)
        if found != verdict.witness_partition:
            warnings.append("partition search disagrees with the closed form")
    if audit:
        report["audit"] = _audit_section(table, verdict, orb, warnings)
    return report


def build_index_report(spec: ManifoldSpec, characters: bool = False) -> dict:
    table = build_index_table(spec)
    report = {"command": "index", "spec": _spec_section(spec), "index_table": _table_section(table), "warnings": []}
    if characters:
        if spec.is_free or spec.k_table_override is not None:
            report["warnings"].append("characters are only computed from fixed-point data")
            report["characters"] = None
        else:
            report["characters"] = [
                {"label": jc.label, "values": [fmt_cyclo(z) for z in character_values(spec, jc)]}
                for jc in spec.jacobian_components
            ]
    return report


def build_cut_report(spec: ManifoldSpec, cut: CutSpec) -> dict:
    warnings: list[str] = []
    table = None if spec.is_free else _try_table(spec, warnings)
    verdict = vanishing.check_torus_cut(spec, table, cut)
    return {
        "command": "cut",
        "spec": _spec_section(spec),
        "cut": {
            "d_T": cut.d_T,
            "d_T_G": cut.d_T_G,
            "invariant": cut.invariant,
            "form": "invariant torus" if cut.invariant else "orbit sum over g^i T",
        },
        "index_table": None if table is None else _table_section(table),
        "verdict": _verdict_section(verdict),
        "warnings": warnings,
    }


# -- corpus ------------------------------------------------------------------


def _compare(exp: oracles.Expected, spec: ManifoldSpec) -> list[tuple[str, Any, Any]]:
    """(field, expected, got) for every check of one corpus entry."""
    orb = orbit_report(spec)
    table = build_index_table(spec)
    v = vanishing.check_main(spec, table)
    brute = vanishing.partition_search(table, v.m, v.d_c // 2)
    checks = [
        ("n_fixed", exp.n_fixed, len(spec.fixed_components)),
        ("n_components", exp.n_components, len(table.rows)),
        ("euler_orbit", exp.euler_orbit, orb.euler_orbit),
        ("sign_orbit", exp.sign_orbit, orb.sign_orbit),
        ("m", exp.m, v.m),
        ("d_c", exp.d_c, v.d_c),
        ("B", exp.B, v.B),
        ("e", exp.e, v.e),
        ("modulus", exp.modulus, v.modulus),
        ("status", exp.status, v.status.value),
        ("witness", exp.witness, v.witness_partition),
        ("partition_search", exp.witness, brute),
    ]
    if exp.uniform_row is not None:
        rows = {tuple(r) for r in table.rows}
        checks.append(("rows", {exp.uniform_row}, rows))
    if exp.violating_pairs is not None:
        checks.append(("violating_pairs", exp.violating_pairs, v.violating_pairs))
    if exp.adjunction is not None:
        adj = vanishing.adjunction_conclusion(spec)
        checks.append(("adjunction", exp.adjunction, (adj.lhs, adj.rhs)))
    # a vanishing verdict must never contradict a known invariant
    sound = v.status is not Status.VANISHES_MOD_P or exp.sw_magnitude % v.modulus == 0
    checks.append(("soundness", True, sound))
    return checks


def _run_entry(name: str) -> dict:
    spec, exp = oracles.build_example(name)
    try:
        checks = _compare(exp, spec)
    except Exception as exc:  # noqa: BLE001 -- a crash is a failed entry
        return {"name": name, "passed": False, "failures": [f"error: {type(exc).__name__}: {exc}"], "n_checks": 0}
    failures = [f"{f}: expected {_show(a)}, got {_show(b)}" for f, a, b in checks if a != b]
    return {"name": name, "passed": not failures, "failures": failures, "n_checks": len(checks)}


def _show(x):
    if isinstance(x, set):
        return sorted(x)
    return x


def run_corpus(jobs: int = 4) -> list[dict]:
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_entry, oracles.EXAMPLE_NAMES))


def _corpus_text(results):
    width = max(len(r["name"]) for r in results)
    lines = [f"{'example'.ljust(width)}  result  checks"]
    for r in results:
        lines.append(f"{r['name'].ljust(width)}  {'PASS' if r['passed'] else 'FAIL':6}  {r['n_checks']}")
        lines.extend(f"    {f}" for f in r["failures"])
    passed = sum(r["passed"] for r in results)
    lines.append(f"{passed}/{len(results)} examples pass")
    return "\n".join(lines)


# -- entry point -------------------------------------------------------------


def _read_spec(path: str) -> ManifoldSpec:
    with open(path, encoding="utf-8") as fh:
        return load_spec(fh.read())


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="swmodp", description="Mod p vanishing criterion for SW invariants.")
    sub = ap.add_subparsers(dest="command", required=True)

    def with_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text")
        return p

    c = with_format(sub.add_parser("check", help="run the partition criterion"))
    c.add_argument("file")
    c.add_argument("--partition", action="store_true", help="also run the brute-force partition search")
    c.add_argument("--audit", action="store_true", help="dimension/rank audit per (l, j)")

    i = with_format(sub.add_parser("index", help="print the equivariant index table"))
    i.add_argument("file")
    i.add_argument("--characters", action="store_true", help="exact character values at g^k")

    t = with_format(sub.add_parser("cut", help="criterion for invariants cut down by a subtorus"))
    t.add_argument("file")
    t.add_argument("--dt", type=int, required=True, help="dim T")
    t.add_argument("--dtg", type=int, required=True, help="dim T^G")
    t.add_argument("--invariant", action="store_true", help="T is G-invariant")

    k = with_format(sub.add_parser("corpus", help="regression run over the built-in examples"))
    k.add_argument("--jobs", type=int, default=4)
    return ap


def _emit(report: dict, fmt: str, out) -> None:
    print(dumps(report, fmt), file=out)


def _report_exit(report: dict) -> int:
    return _STATUS_EXIT[Status(report["verdict"]["status"])]


def main(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = _parser().parse_args(argv)

    if args.command == "corpus":
        results = run_corpus(args.jobs)
        if args.format == "json":
            print(json.dumps({"command": "corpus", "results": results}, sort_keys=True, indent=2), file=out)
        else:
            print(_corpus_text(results), file=out)
        return 0 if all(r["passed"] for r in results) else EXIT_INCONCLUSIVE

    handlers: dict[str, Callable[[ManifoldSpec], dict]] = {
        "check": lambda s: build_check_report(s, args.partition, args.audit),
        "index": lambda s: build_index_report(s, args.characters),
        "cut": lambda s: build_cut_report(s, CutSpec(args.dt, args.dtg, args.invariant)),
    }
    try:
        spec = _read_spec(args.file)
        report = handlers[args.command](spec)
    except PreconditionError as exc:
        print(f"swmodp: precondition not met: {exc}", file=err)
        return EXIT_NOT_APPLICABLE
    except (OSError, DataError, ValueError) as exc:
        print(f"swmodp: {exc}", file=err)
        return EXIT_DATA_ERROR
    _emit(report, args.format, out)
    return 0 if args.command == "index" else _report_exit(report)


if __name__ == "__main__":
    sys.exit(main())
