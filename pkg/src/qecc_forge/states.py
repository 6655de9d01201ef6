"""Sparse stabilizer-type states and exact overlap arithmetic.

A :class:`CodeState` is an unnormalized superposition with amplitude
``omega**phase`` on each basis string of its support, ``omega = exp(2 pi i / q)``.
Overlaps are returned as :class:`CyclotomicInt` values, so every
"is this zero / are these equal" question is decided exactly.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Iterable, Mapping, Sequence

import numpy as np

from .codes import DEFAULT_BUDGET, GeneratorMatrix, enumerate_codewords
from .errors import BudgetExceeded, DimensionMismatch
from .gf import IntArray, PrimeField, field_new

_KEY_LIMIT = 2**62


class CyclotomicInt:
    """An element ``sum_j c_j omega^j`` of Z[omega] for a prime ``q``.

    For prime q the only relation among ``1, omega, ..., omega^(q-1)`` is their
    vanishing sum, so subtracting the minimum coefficient gives a canonical
    representative and equality is coefficient-wise.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int]) -> None:
        c = [int(v) for v in coeffs]
        if not c:
            raise ValueError("need at least one coefficient")
        m = min(c)
        self.coeffs: tuple[int, ...] = tuple(v - m for v in c)

    @classmethod
    def zero(cls, q: int) -> CyclotomicInt:
        return cls([0] * q)

    @classmethod
    def integer(cls, q: int, value: int) -> CyclotomicInt:
        return cls([value] + [0] * (q - 1))

    @classmethod
    def from_exponents(cls, q: int, exponents: Iterable[int]) -> CyclotomicInt:
        """Sum of ``omega**e`` over the given exponents."""
        counts = np.bincount(np.asarray(list(exponents), dtype=np.int64) % q, minlength=q)
        return cls(counts.tolist())

    @property
    def q(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def as_integer(self) -> int | None:
        """The value if it is a rational integer, else ``None``."""
        rest = self.coeffs[1:]
        if all(v == rest[0] for v in rest):
            return self.coeffs[0] - rest[0]
        return None

    def conjugate(self) -> CyclotomicInt:
        q = self.q
        return CyclotomicInt([self.coeffs[-j % q] for j in range(q)])

    def _check(self, other: CyclotomicInt) -> None:
        if other.q != self.q:
            raise DimensionMismatch(f"Z[omega_{self.q}] vs Z[omega_{other.q}]")

    def __add__(self, other: CyclotomicInt) -> CyclotomicInt:
        self._check(other)
        return CyclotomicInt([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> CyclotomicInt:
        return CyclotomicInt([-a for a in self.coeffs])

    def __sub__(self, other: CyclotomicInt) -> CyclotomicInt:
        return self + (-other)

    def __mul__(self, other: CyclotomicInt) -> CyclotomicInt:
        self._check(other)
        q = self.q
        out = [0] * q
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[(i + j) % q] += a * b
        return CyclotomicInt(out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CyclotomicInt):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def to_complex(self) -> complex:
        q = self.q
        return complex(sum(c * np.exp(2j * np.pi * j / q) for j, c in enumerate(self.coeffs)))

    def __repr__(self) -> str:
        n = self.as_integer()
        if n is not None:
            return f"CyclotomicInt({n})"
        terms = [f"{c}*w^{j}" for j, c in enumerate(self.coeffs) if c]
        return "CyclotomicInt(" + " + ".join(terms) + ")"


def canonical_rows(counts: IntArray) -> IntArray:
    """Canonicalize a batch of coefficient vectors (last axis) at once."""
    return counts - counts.min(axis=-1, keepdims=True)


def string_keys(strings: IntArray, q: int) -> IntArray:
    """Integer key of each row, first site most significant (lexicographic order)."""
    n = strings.shape[1]
    if q**n >= _KEY_LIMIT:
        raise BudgetExceeded("basis-string keys", q**n, _KEY_LIMIT)
    powers = q ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return strings.astype(np.int64) @ powers


class CodeState:
    """Uniform-magnitude superposition over a set of basis strings.

    Terms are stored sorted lexicographically by basis string; the arrays are
    read-only.
    """

    __slots__ = ("field", "n", "strings", "phases", "_keys")

    def __init__(self, field: PrimeField, strings: IntArray | Sequence[Sequence[int]], phases=None) -> None:
        q = field.q
        arr = np.asarray(strings, dtype=np.int64)
        if arr.ndim != 2:
            raise DimensionMismatch(f"strings must be 2-D, got shape {arr.shape}")
        arr = arr % q
        ph = np.zeros(arr.shape[0], dtype=np.int64) if phases is None else np.asarray(phases, dtype=np.int64) % q
        if ph.shape != (arr.shape[0],):
            raise DimensionMismatch("one phase per support string is required")
        keys = string_keys(arr, q)
        order = np.argsort(keys, kind="stable")
        keys = keys[order]
        if keys.size > 1 and np.any(keys[1:] == keys[:-1]):
            raise ValueError("support strings must be distinct")
        # column-major: marginal and overlap code reads whole sites at a time
        arr, ph = np.asfortranarray(arr[order]), ph[order]
        for a in (arr, ph, keys):
            a.setflags(write=False)
        self.field = field
        self.n = arr.shape[1]
        self.strings = arr
        self.phases = ph
        self._keys = keys

    @classmethod
    def from_terms(cls, field: PrimeField, terms: Mapping[tuple[int, ...], int] | Iterable[tuple[Sequence[int], int]], n: int | None = None):
        items = list(terms.items()) if isinstance(terms, Mapping) else list(terms)
        if not items:
            raise ValueError("a state needs at least one term")
        strings = [list(s) for s, _ in items]
        return cls(field, strings, [p for _, p in items])

    @classmethod
    def basis(cls, field: PrimeField, string: Sequence[int], phase: int = 0) -> CodeState:
        return cls(field, [list(string)], [phase])

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def keys(self) -> IntArray:
        return self._keys

    def __len__(self) -> int:
        return self.strings.shape[0]

    def site_keys(self, sites: Sequence[int]) -> IntArray:
        """Key of each term restricted to ``sites`` (same ordering as :func:`string_keys`)."""
        q = self.q
        if q ** len(sites) >= _KEY_LIMIT:
            raise BudgetExceeded("basis-string keys", q ** len(sites), _KEY_LIMIT)
        out = np.zeros(len(self), dtype=np.int64)
        for i in sites:
            out *= q
            out += self.strings[:, i]
        return out

    def as_dict(self) -> dict[tuple[int, ...], int]:
        return {tuple(s): int(p) for s, p in zip(self.strings.tolist(), self.phases.tolist())}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CodeState):
            return NotImplemented
        return (
            self.q == other.q
            and self.n == other.n
            and np.array_equal(self._keys, other._keys)
            and np.array_equal(self.phases, other.phases)
        )

    def __hash__(self) -> int:
        return hash((self.q, self.n, self._keys.tobytes(), self.phases.tobytes()))

    def __repr__(self) -> str:
        return f"CodeState(q={self.q}, n={self.n}, terms={len(self)})"

    def to_record(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "terms": [{"string": s, "phase": p} for s, p in zip(self.strings.tolist(), self.phases.tolist())],
        }

    @classmethod
    def from_record(cls, record: Mapping, field: PrimeField | None = None) -> CodeState:
        field = field or field_new(int(record["q"]))
        terms = record["terms"]
        strings = np.array([t["string"] for t in terms], dtype=np.int64).reshape(len(terms), int(record["n"]))
        return cls(field, strings, [t["phase"] for t in terms])


def state_from_generator(G: GeneratorMatrix, budget: int = DEFAULT_BUDGET) -> CodeState:
    """Equal superposition of all codewords of ``G``."""
    return CodeState(G.field, enumerate_codewords(G, budget))


def inner_product(a: CodeState, b: CodeState) -> CyclotomicInt:
    """Unnormalized ``<a|b>``."""
    if a.q != b.q or a.n != b.n:
        raise DimensionMismatch(f"states on ({a.q}, {a.n}) and ({b.q}, {b.n})")
    _, ia, ib = np.intersect1d(a.keys, b.keys, assume_unique=True, return_indices=True)
    return CyclotomicInt.from_exponents(a.q, (b.phases[ib] - a.phases[ia]).tolist())


def _pair_indices(group_starts: IntArray, group_sizes: IntArray) -> tuple[IntArray, IntArray]:
    """All ordered pairs ``(i, j)``, ``i != j``, of positions inside each group."""
    sizes = group_sizes[group_sizes > 1]
    starts = group_starts[group_sizes > 1]
    if sizes.size == 0:
        empty = np.zeros(0, dtype=np.int64)
        return empty, empty
    # every member i of a group of size g is paired with all g members
    member = np.repeat(starts, sizes) + _ranges(sizes)
    member_size = np.repeat(sizes, sizes)
    member_start = np.repeat(starts, sizes)
    i = np.repeat(member, member_size)
    j = np.repeat(member_start, member_size) + _ranges(member_size)
    keep = i != j
    return i[keep], j[keep]


def _ranges(sizes: IntArray) -> IntArray:
    total = int(sizes.sum())
    offsets = np.repeat(np.cumsum(sizes) - sizes, sizes)
    return np.arange(total, dtype=np.int64) - offsets


def marginal_is_maximally_mixed(s: CodeState, subset: Sequence[int], budget: int = DEFAULT_BUDGET) -> bool:
    """Exact test of ``Tr_{complement} |s><s|`` being proportional to the identity.

    The reduced Gram matrix is never stored densely: its diagonal is the term
    count per restricted string and its off-diagonal entries come only from
    terms that agree on the complement.
    """
    subset = sorted(set(int(i) for i in subset))
    if any(not 0 <= i < s.n for i in subset):
        raise DimensionMismatch(f"subset {subset} outside {s.n} sites")
    if not subset:
        return True
    q = s.q
    dim = q ** len(subset)
    if dim > budget:
        raise BudgetExceeded("marginal dimension", dim, budget)
    chosen = set(subset)
    complement = [i for i in range(s.n) if i not in chosen]
    sub_keys = s.site_keys(subset)
    diag = np.bincount(sub_keys, minlength=dim)
    if diag[0] == 0 or np.any(diag != diag[0]):
        return False
    if not complement:
        # full system: rank-one projector, mixed only in the trivial dimension
        return dim == 1
    comp_keys = s.site_keys(complement)
    # off-diagonal entries need two terms agreeing on the complement
    probe = np.sort(comp_keys)
    if not np.any(probe[1:] == probe[:-1]):
        return True
    order = np.argsort(comp_keys, kind="stable")
    sorted_keys = comp_keys[order]
    boundaries = np.flatnonzero(np.diff(sorted_keys)) + 1
    starts = np.concatenate([[0], boundaries]).astype(np.int64)
    sizes = np.diff(np.concatenate([starts, [sorted_keys.size]])).astype(np.int64)
    n_pairs = int((sizes[sizes > 1] ** 2).sum())
    if n_pairs == 0:
        return True
    if n_pairs > budget:
        raise BudgetExceeded("marginal off-diagonal pairs", n_pairs, budget)
    i, j = _pair_indices(starts, sizes)
    ti, tj = order[i], order[j]
    entry = sub_keys[ti] * dim + sub_keys[tj]
    expo = (s.phases[ti] - s.phases[tj]) % q
    uniq, inverse = np.unique(entry, return_inverse=True)
    counts = np.zeros((uniq.size, q), dtype=np.int64)
    np.add.at(counts, (inverse.ravel(), expo), 1)
    return not canonical_rows(counts).any()


def uniformity(
    s: CodeState,
    sample: int | None = None,
    seed: int = 0,
    budget: int = DEFAULT_BUDGET,
) -> int:
    """Largest ``k`` such that every ``k``-site marginal is maximally mixed.

    Sizes are checked in increasing order up to ``n // 2`` and the search
    stops at the first failing size.  With ``sample`` set, at most that many
    subsets per size are drawn (deterministically from ``seed``) instead of
    all ``C(n, k)``.
    """
    rng = np.random.default_rng(seed)
    for size in range(1, s.n // 2 + 1):
        for subset in _subsets(s.n, size, sample, rng):
            if not marginal_is_maximally_mixed(s, subset, budget):
                return size - 1
    return s.n // 2


def _subsets(n: int, size: int, sample: int | None, rng: np.random.Generator):
    total = math.comb(n, size)
    if sample is None or sample >= total:
        yield from itertools.combinations(range(n), size)
        return
    seen: set[tuple[int, ...]] = set()
    while len(seen) < sample:
        subset = tuple(sorted(rng.choice(n, size=size, replace=False).tolist()))
        if subset not in seen:
            seen.add(subset)
            yield subset
