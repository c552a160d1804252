"""The mod p vanishing criterion and its variants.

Given the multiplicity table k_j^l and m = 1 - b_1^G + b_+^G, the
Seiberg-Witten invariant vanishes mod p if (d_0, ..., d_{p-1}) with
d_j >= 0 and sum d_j = d(c)/2 can be found such that

    2 k_j^l < 2 d_j + m     for every weight j and every row l.

The smallest admissible d_j is e_j = max(max_l k_j^l - B, 0) with
B = (m - 1)/2 for odd m and (m - 2)/2 for even m, so feasibility is simply
sum e_j <= d(c)/2.  :func:`partition_search` decides the same question by
enumerating partitions and is kept as an independent cross-check.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np

from .errors import DataError, PreconditionError
from .gmanifold import IndexTable, ManifoldSpec
from .index_engine import build_index_table
from .orbit import orbit_report

__all__ = [
    "Status",
    "Verdict",
    "CutSpec",
    "AuditRecord",
    "AdjunctionRecord",
    "moduli_dim",
    "b_constant",
    "e_vector",
    "compositions",
    "partition_feasible",
    "partition_search",
    "check_main",
    "check_torus_cut",
    "free_infeasibility",
    "dimension_audit",
    "adjunction_conclusion",
]


class Status(str, enum.Enum):
    VANISHES_MOD_P = "VANISHES_MOD_P"
    VANISHES_TRIVIALLY = "VANISHES_TRIVIALLY"
    INCONCLUSIVE = "INCONCLUSIVE"
    NOT_APPLICABLE = "NOT_APPLICABLE"


@dataclass(frozen=True)
class Verdict:
    status: Status
    modulus: int
    witness_partition: Optional[tuple[int, ...]] = None
    violating_pairs: tuple[tuple[int, str], ...] = ()
    narrative: tuple[str, ...] = ()
    d_c: Optional[int] = None
    m: Optional[int] = None
    B: Optional[int] = None
    e: Optional[tuple[int, ...]] = None
    weights: tuple[int, ...] = ()
    # the congruence the criterion targets (established only when it vanishes)
    conclusion: str = ""

    def __post_init__(self):
        if (self.witness_partition is not None) != (self.status is Status.VANISHES_MOD_P):
            raise ValueError("a witness partition accompanies exactly the VANISHES_MOD_P status")


@dataclass(frozen=True)
class CutSpec:
    d_T: int
    d_T_G: int
    invariant: bool = True

    def __post_init__(self):
        if self.d_T < 0 or self.d_T_G < 0:
            raise ValueError("torus dimensions must be nonnegative")
        if self.d_T_G > self.d_T:
            raise ValueError("dim T^G cannot exceed dim T")


@dataclass(frozen=True)
class AuditRecord:
    dim: int
    rank: int
    gap_holds: bool


@dataclass(frozen=True)
class AdjunctionRecord:
    lhs: int
    rhs: int
    holds: bool
    case: str
    d_c: int


def moduli_dim(spec: ManifoldSpec) -> int:
    """d(c) = (c1^2 - Sign)/4 - (1 - b1 + b_+)."""
    gl = spec.global_
    quarter = Fraction(gl.c1_squared - gl.signature, 4)
    if quarter.denominator != 1:
        raise DataError(
            f"c1^2 - Sign = {gl.c1_squared - gl.signature} is not divisible by 4; "
            "not a Spin^c structure"
        )
    return int(quarter) - (1 - gl.b1 + gl.b_plus)


def b_constant(m: int) -> int:
    return (m - 1) // 2 if m % 2 else (m - 2) // 2


def _columns(table: IndexTable, columns) -> tuple[int, ...]:
    return tuple(table.weights) if columns is None else tuple(columns)


def e_vector(table: IndexTable, B: int, columns: Sequence[int] | None = None) -> tuple[int, ...]:
    """e_j = max(max_l k_j^l - B, 0) over the table's weights.

    Weights outside ``columns`` are unconstrained and get e_j = 0.
    """
    active = set(_columns(table, columns))
    return tuple(
        max(kmax - B, 0) if j in active else 0
        for j, kmax in zip(table.weights, table.column_max())
    )


@lru_cache(maxsize=None)
def compositions(total: int, parts: int) -> np.ndarray:
    """All nonnegative integer vectors of length ``parts`` summing to
    ``total``, in lexicographic order."""
    if parts == 1:
        return np.array([[total]], dtype=np.int64)
    blocks = []
    for first in range(total + 1):
        rest = compositions(total - first, parts - 1)
        blocks.append(np.hstack([np.full((len(rest), 1), first, dtype=np.int64), rest]))
    out = np.vstack(blocks)
    out.flags.writeable = False
    return out


def _ok_matrix(tables, m, target, mask):
    # tables: (N, L, P) -> (N, C): candidate c satisfies every constrained entry
    cands = compositions(target, tables.shape[2])
    rhs = 2 * cands[None, :, None, :] + m
    ok = (2 * tables[:, None, :, :] < rhs) | ~mask[None, None, None, :]
    return ok.all(axis=(2, 3))


def partition_feasible(tables, m: int, target: int, mask=None, chunk: int = 4096) -> np.ndarray:
    """Brute-force feasibility for a batch of tables of shape (N, L, P).

    ``mask`` (length P, boolean) marks the weights the inequality applies to.
    Returns a boolean array of length N.
    """
    tables = np.asarray(tables, dtype=np.int64)
    n, _, width = tables.shape
    mask = np.ones(width, dtype=bool) if mask is None else np.asarray(mask, dtype=bool)
    if target < 0:
        return np.zeros(n, dtype=bool)
    out = np.empty(n, dtype=bool)
    for start in range(0, n, chunk):
        out[start : start + chunk] = _ok_matrix(tables[start : start + chunk], m, target, mask).any(
            axis=1
        )
    return out


def partition_search(
    table: IndexTable, m: int, target: int, columns: Sequence[int] | None = None
) -> Optional[tuple[int, ...]]:
    """Lexicographically smallest partition of ``target`` satisfying the
    strict inequality, or None.  Enumerates candidates directly."""
    if target < 0:
        return None
    active = set(_columns(table, columns))
    mask = np.array([j in active for j in table.weights])
    tables = np.asarray([table.rows], dtype=np.int64)
    ok = _ok_matrix(tables, m, target, mask)[0]
    hits = np.flatnonzero(ok)
    if not len(hits):
        return None
    return tuple(int(x) for x in compositions(target, len(table.weights))[hits[0]])


def _violating_pairs(table, m, active):
    """Entries already violating the inequality at d_j = 0 (2 k_j^l >= m)."""
    return tuple(
        (j, label)
        for label, row in zip(table.labels, table.rows)
        for j, k in zip(table.weights, row)
        if j in active and 2 * k >= m
    )


def _decide(table, m, target, columns, modulus, lines, d_c, conclusion):
    B = b_constant(m)
    e = e_vector(table, B, columns)
    active = set(_columns(table, columns))
    lines = list(lines) + [
        f"B = {B}",
        "e = (" + ", ".join(f"e_{j}={v}" for j, v in zip(table.weights, e)) + ")",
        f"sum e_j = {sum(e)} vs target {target}",
    ]
    common = dict(modulus=modulus, d_c=d_c, m=m, B=B, e=e, weights=table.weights)
    if sum(e) <= target:
        witness = list(e)
        witness[-1] += target - sum(e)
        lines.append(f"witness partition {tuple(witness)}: {conclusion}")
        return Verdict(
            Status.VANISHES_MOD_P,
            witness_partition=tuple(witness),
            narrative=tuple(lines),
            conclusion=conclusion,
            **common,
        )
    pairs = _violating_pairs(table, m, active)
    lines.append(
        "no admissible partition; entries with 2k >= m: "
        + ", ".join(f"(j={j}, l={lab})" for j, lab in pairs)
    )
    return Verdict(
        Status.INCONCLUSIVE,
        violating_pairs=pairs,
        narrative=tuple(lines),
        conclusion=conclusion,
        **common,
    )


def _bplus_G_or_reason(spec, orbit):
    if orbit.bplus_G is not None:
        return orbit.bplus_G, None
    # b1_G >= 0 gives b_+^G = m - 1 + b1_G >= m - 1
    if orbit.m_quantity - 1 >= 1:
        return None, None
    if orbit.m_quantity - 1 + spec.global_.b1 < 1:
        return 0, None
    return None, "b_+^G is not determined by the data; supply bplus_G"


def _small_b_plus(spec, modulus):
    b_plus = spec.global_.b_plus
    if b_plus < 2:
        return Verdict(Status.NOT_APPLICABLE, modulus, narrative=(f"b_+ = {b_plus} < 2",))
    return None


def _hypotheses(spec, orbit, modulus):
    bpg, reason = _bplus_G_or_reason(spec, orbit)
    if reason:
        return Verdict(Status.NOT_APPLICABLE, modulus, narrative=(reason,))
    if bpg is not None and bpg < 1:
        return Verdict(Status.NOT_APPLICABLE, modulus, narrative=(f"b_+^G = {bpg} < 1",))
    return None


def check_main(
    spec: ManifoldSpec, table: IndexTable | None = None, cross_check: bool = False
) -> Verdict:
    """Apply the partition criterion to ``spec``.

    Odd-type involutions use the (d_1, d_3) form with modulus 2.  With
    ``cross_check`` the closed form is compared against
    :func:`partition_search`.
    """
    modulus = 2 if spec.odd_type else spec.p
    # b_+ < 2 needs no orbit data, so it is decided before any consistency check
    stop = _small_b_plus(spec, modulus)
    if stop:
        return stop
    orbit = orbit_report(spec)
    stop = _hypotheses(spec, orbit, modulus)
    if stop:
        return stop
    d = moduli_dim(spec)
    m = orbit.m_quantity
    lines = [f"d(c) = {d}", f"m = 1 - b1^G + b+^G = {m}"]
    if d < 0 or d % 2:
        lines.append("d(c) negative or odd: SW_X(c) = 0 by definition")
        return Verdict(
            Status.VANISHES_TRIVIALLY, modulus, narrative=tuple(lines), d_c=d, m=m
        )
    if table is None:
        table = build_index_table(spec)
    verdict = _decide(
        table, m, d // 2, None, modulus, lines, d, f"SW_X(c) = 0 mod {modulus}"
    )
    if cross_check:
        brute = partition_search(table, m, d // 2)
        if brute != verdict.witness_partition:
            raise AssertionError(
                f"closed form {verdict.witness_partition} disagrees with search {brute}"
            )
    return verdict


def check_torus_cut(spec: ManifoldSpec, table: IndexTable | None, cut: CutSpec) -> Verdict:
    """Criterion for invariants cut down by a subtorus T of the Jacobian.

    For a G-invariant T all weights are constrained and the conclusion is
    SW_{X,c}(U^d' . PD[T]) = 0 mod p; otherwise only j = 1..p-1 are and the
    conclusion concerns the sum over the orbit g^i T.
    """
    if spec.is_free:
        raise PreconditionError("torus cuts need a nonempty fixed set X^G")
    p = spec.p
    gl = spec.global_
    if spec.odd_type:
        return Verdict(
            Status.NOT_APPLICABLE, 2, narrative=("torus cuts need a G-equivariant Spin^c structure",)
        )
    if gl.b1 < 1:
        return Verdict(Status.NOT_APPLICABLE, p, narrative=("torus cuts need b_1 >= 1",))
    if cut.d_T > gl.b1:
        raise PreconditionError(f"a {cut.d_T}-dimensional subtorus of J needs d_T <= b1 = {gl.b1}")
    stop = _small_b_plus(spec, p)
    if stop:
        return stop
    orbit = orbit_report(spec)
    if orbit.b1_G is not None and cut.d_T_G > orbit.b1_G:
        raise PreconditionError(f"dim T^G = {cut.d_T_G} exceeds dim J^G = b1_G = {orbit.b1_G}")
    stop = _hypotheses(spec, orbit, p)
    if stop:
        return stop
    bplus_G = orbit.bplus_G
    if bplus_G is None:
        raise PreconditionError("torus cuts need bplus_G; supply it in the input document")
    d = moduli_dim(spec)
    lines = [f"d(c) = {d}", f"d_T = {cut.d_T}", f"d_T^G = {cut.d_T_G}"]
    if d - cut.d_T < 0 or (d - cut.d_T) % 2:
        lines.append("d(c) - d_T negative or odd: the cut invariant vanishes")
        return Verdict(Status.VANISHES_TRIVIALLY, p, narrative=tuple(lines), d_c=d)
    m = 1 - cut.d_T_G + bplus_G
    target = (d - cut.d_T) // 2
    lines.append(f"m_T = 1 - d_T^G + b+^G = {m}, d' = {target}")
    if table is None:
        table = build_index_table(spec)
    if cut.invariant:
        columns = None
        conclusion = f"SW_X,c(U^{target} . PD[T]) = 0 mod {p}"
        lines.append("T is G-invariant: weights j = 0..p-1 constrained")
    else:
        columns = tuple(j for j in table.weights if j != 0)
        conclusion = f"sum_i SW_X,c(U^{target} . PD[g^i T]) = 0 mod {p}"
        lines.append("T is not G-invariant: weights j = 1..p-1 constrained (orbit-sum form)")
    return _decide(table, m, target, columns, p, lines, d, conclusion)


def free_infeasibility(spec: ManifoldSpec) -> Verdict:
    """A free action never admits a partition.

    Every k_j^l equals (d(c) + p m) / (2p), so the inequality reads
    d(c)/p < 2 d_j; summing over j gives d(c) < d(c).
    """
    if not spec.is_free:
        raise PreconditionError("free_infeasibility needs an empty fixed set")
    d = moduli_dim(spec)
    if d < 0 or d % 2:
        raise PreconditionError("free_infeasibility needs d(c) nonnegative and even")
    p = spec.p
    table = build_index_table(spec)
    m = orbit_report(spec).m_quantity
    k = table.rows[0][0]
    lines = (
        f"d(c) = {d}, m = {m}, k_j = {k} for all j",
        f"2k_j < 2d_j + m  <=>  d(c)/p = {Fraction(d, p)} < 2 d_j for every j",
        f"summing over j: d(c) = {d} < 2 sum d_j = {d}, impossible",
    )
    pairs = tuple((j, label) for label in table.labels for j in table.weights)
    return Verdict(
        Status.INCONCLUSIVE,
        p,
        violating_pairs=pairs,
        narrative=lines,
        d_c=d,
        m=m,
        B=b_constant(m),
        e=e_vector(table, b_constant(m)),
        weights=table.weights,
    )


def dimension_audit(
    k_plus: int, k_minus: int, a: int, d_j: int, b1_G: int, bplus_G: int
) -> AuditRecord:
    """Fixed-set dimension against obstruction rank over one (l, j) component."""
    if min(k_plus, k_minus, a) < 0:
        raise ValueError("k_plus, k_minus and a must be nonnegative")
    dim = 2 * k_plus - 1 + a + b1_G
    rank = 2 * (k_minus + d_j) + a + bplus_G
    return AuditRecord(dim, rank, dim < rank)


def adjunction_conclusion(spec: ManifoldSpec) -> AdjunctionRecord:
    """Betti-number inequality forced by odd SW for involutions without
    isolated fixed points and trivial determinant line."""
    if spec.p != 2:
        raise PreconditionError("adjunction_conclusion needs p = 2")
    if spec.global_.c1_squared != 0 or not spec.spin:
        raise PreconditionError("adjunction_conclusion needs a spin structure (trivial determinant)")
    if any(c.kind == "isolated" for c in spec.fixed_components):
        raise PreconditionError("adjunction_conclusion needs no isolated fixed points")
    d = moduli_dim(spec)
    if d < 0 or d % 2:
        raise PreconditionError(f"d(c) = {d} must be nonnegative and even")
    gl = spec.global_
    m = orbit_report(spec).m_quantity
    lhs = 1 - gl.b1 + gl.b_plus
    if d % 4 == 0:
        rhs, case = 2 * m, "d(c) = 0 mod 4: 1-b1+b+ >= 2(1-b1^G+b+^G)"
    else:
        rhs, case = 2 * (m - 1), "d(c) = 2 mod 4: 1-b1+b+ >= 2(-b1^G+b+^G)"
    return AdjunctionRecord(lhs, rhs, lhs >= rhs, case, d)
