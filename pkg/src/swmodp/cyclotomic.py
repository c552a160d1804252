"""Exact arithmetic in the cyclotomic fields Q(zeta_m), m prime or m = 4.

Elements are stored in the power basis 1, z, ..., z^(phi(m)-1) of
Q[t]/Phi_m(t), so two elements are equal exactly when their coefficient
tuples are equal.  Products are formed in Q[t]/(t^m - 1) and then reduced
with Phi_m:

* m = p prime:  Phi_p = 1 + t + ... + t^(p-1), so t^(p-1) = -(1 + ... + t^(p-2))
* m = 4:        Phi_4 = 1 + t^2, so t^2 = -1 and t^3 = -t

Rationals are :class:`fractions.Fraction`, so nothing ever overflows.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational as _RationalABC

from sympy import isprime

__all__ = [
    "CycloNum",
    "root_of_unity",
    "add",
    "sub",
    "neg",
    "mul",
    "inverse",
    "galois",
    "half_power",
    "as_rational",
    "phi",
]


@lru_cache(maxsize=None)
def phi(m: int) -> int:
    """Degree of Q(zeta_m) over Q for the supported orders."""
    _check_order(m)
    return 2 if m == 4 else m - 1


@lru_cache(maxsize=None)
def _check_order(m: int) -> None:
    if not isinstance(m, int) or isinstance(m, bool):
        raise TypeError(f"cyclotomic order must be an int, got {m!r}")
    if m != 4 and not isprime(m):
        raise ValueError(f"unsupported cyclotomic order {m}: need a prime or 4")


def _reduce(m, vec):
    """Canonical coefficients from a length-m vector in Q[t]/(t^m - 1)."""
    if m == 4:
        return (vec[0] - vec[2], vec[1] - vec[3])
    top = vec[m - 1]
    return tuple(c - top for c in vec[: m - 1])


def _as_fraction(x):
    if type(x) is Fraction:
        return x
    if type(x) is int:
        return Fraction(x)
    if isinstance(x, (int, _RationalABC)) and not isinstance(x, bool):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


class CycloNum:
    """An element of Q(zeta_m) in canonical power-basis form.

    Instances are immutable and hashable.  Arithmetic with ``int`` and
    ``Fraction`` operands embeds them as constants.
    """

    __slots__ = ("_m", "_coeffs")

    def __init__(self, m: int, coeffs):
        _check_order(m)
        coeffs = tuple(_as_fraction(c) for c in coeffs)
        if len(coeffs) != phi(m):
            raise ValueError(
                f"Q(zeta_{m}) needs {phi(m)} coefficients, got {len(coeffs)}"
            )
        self._m = m
        self._coeffs = coeffs

    @classmethod
    def rational(cls, m: int, value) -> "CycloNum":
        coeffs = [Fraction(0)] * phi(m)
        coeffs[0] = _as_fraction(value)
        return cls(m, coeffs)

    @classmethod
    def _from_cyclic(cls, m, vec):
        obj = cls.__new__(cls)
        obj._m = m
        obj._coeffs = _reduce(m, vec)
        return obj

    @property
    def order(self) -> int:
        return self._m

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    def _cyclic(self):
        return list(self._coeffs) + [Fraction(0)] * (self._m - len(self._coeffs))

    def _coerce(self, other):
        if isinstance(other, CycloNum):
            if other._m != self._m:
                raise ValueError(
                    f"order mismatch: Q(zeta_{self._m}) vs Q(zeta_{other._m})"
                )
            return other
        try:
            return CycloNum.rational(self._m, other)
        except TypeError:
            return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloNum(self._m, [a + b for a, b in zip(self._coeffs, other._coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycloNum(self._m, [-a for a in self._coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        m = self._m
        out = [Fraction(0)] * m
        for i, a in enumerate(self._coeffs):
            if not a:
                continue
            for j, b in enumerate(other._coeffs):
                if b:
                    out[(i + j) % m] += a * b
        return CycloNum._from_cyclic(m, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * inverse(other)

    def __rtruediv__(self, other):
        return inverse(self) * other

    def __pow__(self, n: int):
        if n < 0:
            return inverse(self) ** (-n)
        acc = CycloNum.rational(self._m, 1)
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def __eq__(self, other):
        if isinstance(other, CycloNum):
            return self._m == other._m and self._coeffs == other._coeffs
        try:
            other = CycloNum.rational(self._m, other)
        except TypeError:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        r = as_rational(self)
        if r is not None:
            return hash(r)
        return hash((self._m, self._coeffs))

    def __bool__(self):
        return any(self._coeffs)

    def __repr__(self):
        return f"CycloNum({self._m}, [{', '.join(str(c) for c in self._coeffs)}])"

    def __str__(self):
        terms = []
        for i, c in enumerate(self._coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append(f"-{mono}")
            else:
                terms.append(f"{c}*{mono}")
        body = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        return f"{body}  (z = zeta_{self._m})"


def root_of_unity(m: int, a: int) -> CycloNum:
    """zeta_m ** a, with the exponent reduced mod m."""
    _check_order(m)
    vec = [Fraction(0)] * m
    vec[a % m] = Fraction(1)
    return CycloNum._from_cyclic(m, vec)


def add(a: CycloNum, b: CycloNum) -> CycloNum:
    return a + b


def sub(a: CycloNum, b: CycloNum) -> CycloNum:
    return a - b


def neg(a: CycloNum) -> CycloNum:
    return -a


def mul(a: CycloNum, b: CycloNum) -> CycloNum:
    return a * b


def galois(a: CycloNum, k: int) -> CycloNum:
    """Apply the automorphism zeta_m -> zeta_m ** k (k must be a unit mod m)."""
    m = a.order
    if gcd(k, m) != 1:
        raise ValueError(f"galois exponent {k} is not coprime to {m}")
    # k is a unit, so j -> kj permutes the cyclic positions
    out = [Fraction(0)] * m
    for j, c in enumerate(a.coeffs):
        out[(k * j) % m] = c
    return CycloNum._from_cyclic(m, out)


def inverse(a: CycloNum) -> CycloNum:
    """Multiplicative inverse via the field norm.

    ``a * prod_{k != 1} sigma_k(a)`` is the norm N(a), a nonzero rational,
    so the inverse is that product of conjugates divided by N(a).
    """
    if not a:
        raise ZeroDivisionError("inverse of zero in a cyclotomic field")
    m = a.order
    cofactor = CycloNum.rational(m, 1)
    for k in range(2, m):
        if gcd(k, m) == 1:
            cofactor = cofactor * galois(a, k)
    norm = as_rational(a * cofactor)
    assert norm is not None and norm != 0, "field norm must be a nonzero rational"
    return CycloNum(m, [c / norm for c in cofactor.coeffs])


def half_power(m: int, a: int) -> CycloNum:
    """The square root of zeta_p ** a that is itself a p-th root of unity.

    For odd p this is zeta_p ** (a * (p + 1) / 2).  Orders 2 and 4 are
    refused: at p = 2 the sign of the square root is a genuine input.
    """
    _check_order(m)
    if m in (2, 4):
        raise ValueError(
            "square-root signs are not determined at p = 2; supply them explicitly"
        )
    return root_of_unity(m, a * ((m + 1) // 2))


def as_rational(a: CycloNum):
    """The value as a Fraction if ``a`` lies in Q, else ``None``."""
    if any(a.coeffs[1:]):
        return None
    return a.coeffs[0]
