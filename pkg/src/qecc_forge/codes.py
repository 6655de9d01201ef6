"""Classical MDS codes built from the Singleton array.

The Singleton array over GF(q) is the triangular Cauchy-type array

    row 1:   1  1    1    ...  1
    row 2:   1  a_1  a_2  ...  a_{q-2}
    row 3:   1  a_2  a_3  ...
    ...
    row q:   1

with ``a_i = 1 / (1 - gamma^i)``; row ``i`` (1-indexed, ``i >= 2``) holds
``q + 1 - i`` entries.  Every square submatrix taken from inside the triangle
is nonsingular, so any rectangular top-left block ``A`` with
``rows + cols <= q + 1`` gives an MDS generator ``[I | A]``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import BudgetExceeded, NotStandardForm, OutOfRange
from .gf import IntArray, MatrixGF, PrimeField, field_new, is_nonsingular

DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class SingletonArray:
    field: PrimeField
    entries: tuple[int, ...]  # a_1 .. a_{q-2}

    def a(self, i: int) -> int:
        if not 1 <= i <= len(self.entries):
            raise OutOfRange(f"a_{i} is undefined for q={self.field.q}")
        return self.entries[i - 1]

    def row_length(self, i: int) -> int:
        q = self.field.q
        if not 1 <= i <= q:
            raise OutOfRange(f"row {i} outside the Singleton array of GF({q})")
        return q if i == 1 else q + 1 - i

    def entry(self, i: int, j: int) -> int:
        if not 1 <= j <= self.row_length(i):
            raise OutOfRange(f"entry ({i}, {j}) outside the Singleton array of GF({self.field.q})")
        if i == 1 or j == 1:
            return 1
        return self.a(i + j - 3)

    def row(self, i: int) -> tuple[int, ...]:
        return tuple(self.entry(i, j) for j in range(1, self.row_length(i) + 1))

    def block(self, rows: int, cols: int, row_offset: int = 0) -> MatrixGF:
        """Rectangular block of ``rows x cols`` starting at row ``row_offset + 1``."""
        data = [[self.entry(row_offset + i, j) for j in range(1, cols + 1)] for i in range(1, rows + 1)]
        return MatrixGF.from_rows(self.field, data, shape=(rows, cols))


def singleton_array(field: PrimeField) -> SingletonArray:
    q, g = field.q, field.gamma
    entries = tuple(field.inv(1 - pow(g, i, q)) for i in range(1, q - 1))
    return SingletonArray(field, entries)


@dataclass(frozen=True)
class GeneratorMatrix:
    """Generator matrix in standard form ``[I_k | A]``."""

    matrix: MatrixGF

    def __post_init__(self) -> None:
        k, n = self.matrix.shape
        if k > n or not np.array_equal(self.matrix.array[:, :k], np.eye(k, dtype=np.int64)):
            raise NotStandardForm(f"generator matrix is not of the form [I_{k} | A]")

    @classmethod
    def from_rows(cls, field: PrimeField, rows, n: int | None = None) -> GeneratorMatrix:
        arr = np.asarray(rows, dtype=np.int64)
        if arr.size == 0:
            arr = arr.reshape(0, n or 0)
        return cls(MatrixGF(field, arr))

    @property
    def field(self) -> PrimeField:
        return self.matrix.field

    @property
    def k(self) -> int:
        return self.matrix.rows

    @property
    def n(self) -> int:
        return self.matrix.cols

    @property
    def A(self) -> MatrixGF:
        return MatrixGF(self.field, self.matrix.array[:, self.k :])

    def tolist(self) -> list[list[int]]:
        return self.matrix.tolist()


@dataclass(frozen=True)
class ClassicalCode:
    G: GeneratorMatrix
    H: MatrixGF

    @property
    def n(self) -> int:
        return self.G.n

    @property
    def k(self) -> int:
        return self.G.k

    @property
    def d_H(self) -> int:
        """Claimed Hamming distance, the Singleton bound ``n - k + 1``."""
        return self.n - self.k + 1

    @property
    def field(self) -> PrimeField:
        return self.G.field


def classical_code(G: GeneratorMatrix) -> ClassicalCode:
    return ClassicalCode(G, parity_check(G))


def mds_generator(field: PrimeField, k: int, n: int) -> GeneratorMatrix:
    """Standard-form MDS generator ``[I_k | A]`` with ``A`` a top-left Singleton block.

    Requires ``1 <= k <= (q+1)//2`` and ``k <= n <= q+1``.
    """
    q = field.q
    if not (1 <= k <= (q + 1) // 2 and k <= n <= q + 1):
        raise OutOfRange(f"no Singleton-array MDS generator for k={k}, n={n}, q={q}")
    A = singleton_array(field).block(k, n - k).array if n > k else np.zeros((k, 0), dtype=np.int64)
    return GeneratorMatrix(MatrixGF(field, np.hstack([np.eye(k, dtype=np.int64), A])))


def parity_check(G: GeneratorMatrix | MatrixGF) -> MatrixGF:
    """``H = [-A^T | I_{n-k}]`` so that ``G H^T = 0``."""
    if isinstance(G, MatrixGF):
        G = GeneratorMatrix(G)
    k, n = G.k, G.n
    field = G.field
    return MatrixGF(field, np.hstack([-G.A.array.T, np.eye(n - k, dtype=np.int64)]).reshape(n - k, n))


def is_mds(G: GeneratorMatrix) -> bool:
    """True iff every square submatrix of ``A`` is nonsingular."""
    A = G.A
    rows, cols = A.shape
    for size in range(1, min(rows, cols) + 1):
        for r in itertools.combinations(range(rows), size):
            for c in itertools.combinations(range(cols), size):
                if not is_nonsingular(A.submatrix(r, c)):
                    return False
    return True


def messages(q: int, k: int) -> IntArray:
    """All vectors of GF(q)^k in lexicographic order (first coordinate most significant)."""
    idx = np.arange(q**k, dtype=np.int64)
    powers = q ** np.arange(k - 1, -1, -1, dtype=np.int64)
    return (idx[:, None] // powers[None, :]) % q


def enumerate_codewords(G: GeneratorMatrix, budget: int = DEFAULT_BUDGET) -> IntArray:
    """All ``q^k`` codewords ``v G`` as rows, in lexicographic order of ``v``."""
    q, k = G.field.q, G.k
    count = q**k
    if count > budget:
        raise BudgetExceeded("codeword enumeration", count, budget)
    if k == 0:
        return np.zeros((1, G.n), dtype=np.int64)
    return (messages(q, k) @ G.matrix.array) % q


def min_hamming_distance(code: ClassicalCode | GeneratorMatrix, budget: int = DEFAULT_BUDGET) -> int:
    # Linear code: minimum pairwise distance equals minimum nonzero weight.
    G = code.G if isinstance(code, ClassicalCode) else code
    words = enumerate_codewords(G, budget)
    weights = np.count_nonzero(words, axis=1)[1:]
    if weights.size == 0:
        return G.n + 1
    return int(weights.min())


def shorten_generator(G: GeneratorMatrix, r: int) -> GeneratorMatrix:
    """Drop the last ``r`` rows and the identity columns ``k-r+1 .. k``."""
    k = G.k
    if not 1 <= r <= k - 1:
        raise OutOfRange(f"cannot shorten a k={k} generator by r={r}")
    arr = np.delete(G.matrix.array[: k - r], range(k - r, k), axis=1)
    return GeneratorMatrix(MatrixGF(G.field, arr))


def format_matrix_text(G: GeneratorMatrix) -> str:
    """Text form: a ``q k n`` header line followed by the ``k`` rows."""
    lines = [f"{G.field.q} {G.k} {G.n}"]
    lines += [" ".join(str(v) for v in row) for row in G.tolist()]
    return "\n".join(lines) + "\n"


def parse_matrix_text(text: str, gamma: int | None = None) -> GeneratorMatrix:
    lines = [ln.split() for ln in text.strip().splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or len(lines[0]) != 3:
        raise ValueError("matrix text must start with a 'q k n' header")
    q, k, n = (int(t) for t in lines[0])
    rows = [[int(t) for t in ln] for ln in lines[1:]]
    if len(rows) != k or any(len(row) != n for row in rows):
        raise ValueError(f"expected {k} rows of {n} entries")
    return GeneratorMatrix.from_rows(field_new(q, gamma), rows, n=n)
