"""Virtual representations of Z_p and their characters.

R(Z_p) = Z[t]/(t^p - 1); the element ``sum_j k_j C_j`` is stored as the
multiplicity vector ``(k_0, ..., k_{p-1})`` where C_j is the weight-j line.
The character of C_j at g^k is zeta_p^(jk), so characters and multiplicities
are related by a discrete Fourier transform over Q(zeta_p).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from sympy import isprime

from .cyclotomic import CycloNum
from .errors import IntegralityError

__all__ = ["RepElement", "CharacterVector", "character", "characters", "from_characters"]


@dataclass(frozen=True)
class RepElement:
    p: int
    mult: tuple[int, ...]

    def __post_init__(self):
        if not isprime(self.p):
            raise ValueError(f"R(Z_p) needs prime p, got {self.p}")
        mult = tuple(self.mult)
        if len(mult) != self.p:
            raise ValueError(f"expected {self.p} multiplicities, got {len(mult)}")
        if not all(isinstance(k, int) and not isinstance(k, bool) for k in mult):
            raise TypeError("multiplicities must be integers")
        object.__setattr__(self, "mult", mult)

    @property
    def dim(self) -> int:
        """Virtual dimension, i.e. the character at the identity."""
        return sum(self.mult)

    def shifted(self, c: int) -> "RepElement":
        """Tensor with C_c: weight j moves to j + c."""
        p = self.p
        return RepElement(p, tuple(self.mult[(j - c) % p] for j in range(p)))


@dataclass(frozen=True)
class CharacterVector:
    """Character values at g^0, ..., g^(p-1)."""

    p: int
    values: tuple[CycloNum, ...]

    def __post_init__(self):
        vals = tuple(
            v if isinstance(v, CycloNum) else CycloNum.rational(self.p, v)
            for v in self.values
        )
        if len(vals) != self.p:
            raise ValueError(f"expected {self.p} character values, got {len(vals)}")
        if any(v.order != self.p for v in vals):
            raise ValueError(f"character values must lie in Q(zeta_{self.p})")
        object.__setattr__(self, "values", vals)


def character(r: RepElement, k: int) -> CycloNum:
    p = r.p
    vec = [0] * p
    for j, kj in enumerate(r.mult):
        vec[(j * k) % p] += kj
    return CycloNum(p, [c - vec[p - 1] for c in vec[: p - 1]])


def characters(r: RepElement) -> CharacterVector:
    return CharacterVector(r.p, tuple(character(r, k) for k in range(r.p)))


def from_characters(cv: CharacterVector) -> RepElement:
    """Invert the character map: k_j = (1/p) sum_k chi(g^k) zeta^(-jk).

    Raises IntegralityError when some k_j is not an integer, which means the
    values are not the character of any virtual Z_p-representation.
    """
    p = cv.p
    # integer numerators over a common denominator; multiplying by
    # zeta^(-jk) is then an index rotation of the length-p cyclic vector
    den = lcm(*(c.denominator for v in cv.values for c in v.coeffs))
    cyc = [[c.numerator * (den // c.denominator) for c in v.coeffs] + [0] for v in cv.values]
    mult = []
    for j in range(p):
        acc = [sum(cyc[k][(t + j * k) % p] for k in range(p)) for t in range(p)]
        # canonical form subtracts acc[p-1]: rational iff acc[1:] is constant
        if any(x != acc[-1] for x in acc[1:]):
            raise IntegralityError(f"multiplicity k_{j} is irrational")
        val = Fraction(acc[0] - acc[-1], den * p)
        if val.denominator != 1:
            raise IntegralityError(
                f"multiplicity k_{j} = {val} is not an integer; the character "
                f"vector is not that of a virtual Z_{p}-representation"
            )
        mult.append(int(val))
    return RepElement(p, tuple(mult))
