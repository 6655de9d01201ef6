"""Exact arithmetic and linear algebra over prime fields GF(p).

Field elements are plain integers reduced mod p.  Matrices wrap an ``int64``
numpy array whose entries are always in ``[0, p-1]``.  All objects are
immutable once built.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field as dc_field

import numpy as np
import numpy.typing as npt

from .errors import DivisionByZero, NotPrime, NotPrimitive, NotSquare, DimensionMismatch

IntArray = npt.NDArray[np.int64]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def multiplicative_order(a: int, p: int) -> int:
    """Order of ``a`` in the multiplicative group of GF(p), by direct stepping."""
    a %= p
    if a == 0:
        raise DivisionByZero("0 has no multiplicative order")
    value, order = a, 1
    while value != 1:
        value = value * a % p
        order += 1
    return order


@dataclass(frozen=True)
class PrimeField:
    """The field GF(p) for an odd prime p, with a chosen primitive element ``gamma``."""

    p: int
    gamma: int

    def __post_init__(self) -> None:
        if self.p < 3 or not _is_prime(self.p):
            raise NotPrime(self.p)
        if not 0 < self.gamma < self.p:
            raise NotPrimitive(self.gamma, self.p, 0)
        order = multiplicative_order(self.gamma, self.p)
        if order != self.p - 1:
            raise NotPrimitive(self.gamma, self.p, order)

    @property
    def q(self) -> int:
        return self.p

    def __call__(self, value: int) -> FieldElement:
        return FieldElement(self, value)

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise DivisionByZero(f"0 has no inverse in GF({self.p})")
        return pow(a, self.p - 2, self.p)

    def neg(self, a: int) -> int:
        return -a % self.p

    def power(self, a: int, e: int) -> int:
        return pow(a % self.p, e, self.p)

    def elements(self) -> range:
        return range(self.p)

    def matrix(self, rows: Sequence[Sequence[int]] | IntArray, shape: tuple[int, int] | None = None) -> MatrixGF:
        return MatrixGF.from_rows(self, rows, shape=shape)

    def __repr__(self) -> str:
        return f"GF({self.p}, gamma={self.gamma})"


def _smallest_primitive_root(p: int) -> int:
    for g in range(1, p):
        if multiplicative_order(g, p) == p - 1:
            return g
    raise NotPrime(p)  # pragma: no cover - unreachable for primes


def field_new(p: int, gamma: int | None = None) -> PrimeField:
    """Build GF(p); ``gamma`` defaults to the smallest primitive root.

    >>> field_new(3).gamma
    2
    >>> field_new(5, gamma=3).gamma
    3
    """
    if p < 3 or not _is_prime(p):
        raise NotPrime(p)
    if gamma is None:
        gamma = _smallest_primitive_root(p)
    return PrimeField(p, gamma)


@dataclass(frozen=True)
class FieldElement:
    """A single element of GF(p); ``value`` is kept reduced."""

    field: PrimeField
    value: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", int(self.value) % self.field.p)

    def _coerce(self, other: FieldElement | int) -> int:
        if isinstance(other, FieldElement):
            if other.field.p != self.field.p:
                raise DimensionMismatch(f"GF({self.field.p}) vs GF({other.field.p})")
            return other.value
        return int(other)

    def __add__(self, other: FieldElement | int) -> FieldElement:
        return FieldElement(self.field, self.value + self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other: FieldElement | int) -> FieldElement:
        return FieldElement(self.field, self.value - self._coerce(other))

    def __rsub__(self, other: FieldElement | int) -> FieldElement:
        return FieldElement(self.field, self._coerce(other) - self.value)

    def __mul__(self, other: FieldElement | int) -> FieldElement:
        return FieldElement(self.field, self.value * self._coerce(other))

    __rmul__ = __mul__

    def __neg__(self) -> FieldElement:
        return FieldElement(self.field, -self.value)

    def __truediv__(self, other: FieldElement | int) -> FieldElement:
        return self * self.field.inv(self._coerce(other))

    def __rtruediv__(self, other: FieldElement | int) -> FieldElement:
        return FieldElement(self.field, self._coerce(other)) * inv(self)

    def __pow__(self, e: int) -> FieldElement:
        if e < 0:
            return inv(self) ** (-e)
        return FieldElement(self.field, pow(self.value, e, self.field.p))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldElement):
            return self.field.p == other.field.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.field.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field.p, self.value))

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.value} (mod {self.field.p})"


def inv(a: FieldElement) -> FieldElement:
    """Multiplicative inverse; raises :class:`DivisionByZero` for zero."""
    return FieldElement(a.field, a.field.inv(a.value))


@dataclass(frozen=True, eq=False)
class MatrixGF:
    """Dense matrix over GF(p), row-major, entries in ``[0, p-1]``."""

    field: PrimeField
    array: IntArray = dc_field(repr=False)

    def __post_init__(self) -> None:
        arr = np.array(self.array, dtype=np.int64, copy=True)
        if arr.ndim != 2:
            raise DimensionMismatch(f"expected a 2-D array, got shape {arr.shape}")
        arr %= self.field.p
        arr.setflags(write=False)
        object.__setattr__(self, "array", arr)

    @classmethod
    def from_rows(
        cls,
        field: PrimeField,
        rows: Sequence[Sequence[int]] | IntArray,
        shape: tuple[int, int] | None = None,
    ) -> MatrixGF:
        arr = np.asarray(rows, dtype=np.int64)
        if shape is not None:
            arr = arr.reshape(shape)
        elif arr.ndim == 1 and arr.size == 0:
            arr = arr.reshape(0, 0)
        return cls(field, arr)

    @classmethod
    def zeros(cls, field: PrimeField, rows: int, cols: int) -> MatrixGF:
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, field: PrimeField, size: int) -> MatrixGF:
        return cls(field, np.eye(size, dtype=np.int64))

    @property
    def rows(self) -> int:
        return self.array.shape[0]

    @property
    def cols(self) -> int:
        return self.array.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def T(self) -> MatrixGF:
        return MatrixGF(self.field, self.array.T)

    def __getitem__(self, idx):
        return self.array[idx]

    def __matmul__(self, other: MatrixGF) -> MatrixGF:
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        return MatrixGF(self.field, (self.array @ other.array) % self.field.p)

    def __add__(self, other: MatrixGF) -> MatrixGF:
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot add {self.shape} and {other.shape}")
        return MatrixGF(self.field, self.array + other.array)

    def __neg__(self) -> MatrixGF:
        return MatrixGF(self.field, -self.array)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MatrixGF):
            return NotImplemented
        return self.field.p == other.field.p and np.array_equal(self.array, other.array)

    def __hash__(self) -> int:
        return hash((self.field.p, self.shape, self.array.tobytes()))

    def tolist(self) -> list[list[int]]:
        return self.array.tolist()

    def is_zero(self) -> bool:
        return not self.array.any()

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> MatrixGF:
        return MatrixGF(self.field, self.array[np.ix_(list(rows), list(cols))])

    def delete_columns(self, cols: Iterable[int]) -> MatrixGF:
        return MatrixGF(self.field, np.delete(self.array, list(cols), axis=1))

    def __repr__(self) -> str:
        return f"MatrixGF(GF({self.field.p}), {self.tolist()})"


def _rref_array(arr: IntArray, p: int) -> tuple[IntArray, list[int]]:
    a = np.array(arr, dtype=np.int64, copy=True) % p
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = a[r] * pow(int(a[r, c]), p - 2, p) % p
        factors = a[:, c].copy()
        factors[r] = 0
        a = (a - np.outer(factors, a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots


def rref(m: MatrixGF) -> tuple[MatrixGF, int, list[int]]:
    """Reduced row echelon form over GF(p).

    Returns the reduced matrix (same shape as ``m``), its rank and the pivot
    column indices.
    """
    reduced, pivots = _rref_array(m.array, m.field.p)
    return MatrixGF(m.field, reduced), len(pivots), pivots


def rank(m: MatrixGF) -> int:
    return rref(m)[1]


def null_space(m: MatrixGF) -> list[IntArray]:
    """Basis of the right kernel ``{v : m v = 0}``, one vector per free column."""
    p = m.field.p
    reduced, pivots = _rref_array(m.array, p)
    free = [c for c in range(m.cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = np.zeros(m.cols, dtype=np.int64)
        v[f] = 1
        for i, c in enumerate(pivots):
            v[c] = -reduced[i, f] % p
        v.setflags(write=False)
        basis.append(v)
    return basis


def is_nonsingular(m: MatrixGF) -> bool:
    if m.rows != m.cols:
        raise NotSquare(f"matrix of shape {m.shape} is not square")
    return rank(m) == m.rows


def solve(m: MatrixGF, b: Sequence[int] | IntArray) -> IntArray | None:
    """One solution of ``m x = b`` or ``None`` when the system is inconsistent."""
    p = m.field.p
    b = np.asarray(b, dtype=np.int64).reshape(-1, 1)
    aug, pivots = _rref_array(np.hstack([m.array, b]), p)
    if m.cols in pivots:
        return None
    x = np.zeros(m.cols, dtype=np.int64)
    for i, c in enumerate(pivots):
        x[c] = aug[i, -1]
    return x


def inverse(m: MatrixGF) -> MatrixGF:
    if m.rows != m.cols:
        raise NotSquare(f"matrix of shape {m.shape} is not square")
    size = m.rows
    aug, pivots = _rref_array(np.hstack([m.array, np.eye(size, dtype=np.int64)]), m.field.p)
    if pivots[:size] != list(range(size)):
        raise DivisionByZero("matrix is singular")
    return MatrixGF(m.field, aug[:, size:])
