"""Generalized qudit Pauli strings in exponent-vector form.

A :class:`PauliString` stands for the operator

    omega**phase * (X^x_1 Z^z_1) (x) (X^x_2 Z^z_2) (x) ... (x) (X^x_n Z^z_n)

with ``X|j> = |j+1>`` and ``Z|j> = omega^j |j>``.  Reordering uses
``Z^a X^b = omega^(a b) X^b Z^a``.
"""

from __future__ import annotations

import itertools
import math
import re
from collections.abc import Iterator, Sequence

import numpy as np

from .codes import DEFAULT_BUDGET
from .errors import BudgetExceeded, DimensionMismatch
from .gf import IntArray, PrimeField
from .states import CodeState


class PauliString:
    __slots__ = ("field", "x", "z", "phase")

    def __init__(self, field: PrimeField, x: Sequence[int] | IntArray, z: Sequence[int] | IntArray, phase: int = 0) -> None:
        q = field.q
        xa = np.asarray(x, dtype=np.int64).ravel() % q
        za = np.asarray(z, dtype=np.int64).ravel() % q
        if xa.shape != za.shape:
            raise DimensionMismatch(f"x has {xa.size} sites but z has {za.size}")
        xa.setflags(write=False)
        za.setflags(write=False)
        self.field = field
        self.x = xa
        self.z = za
        self.phase = int(phase) % q

    @classmethod
    def identity(cls, field: PrimeField, n: int) -> PauliString:
        return cls(field, np.zeros(n, dtype=np.int64), np.zeros(n, dtype=np.int64))

    @classmethod
    def x_type(cls, field: PrimeField, exponents: Sequence[int] | IntArray) -> PauliString:
        exps = np.asarray(exponents, dtype=np.int64)
        return cls(field, exps, np.zeros_like(exps))

    @classmethod
    def z_type(cls, field: PrimeField, exponents: Sequence[int] | IntArray) -> PauliString:
        exps = np.asarray(exponents, dtype=np.int64)
        return cls(field, np.zeros_like(exps), exps)

    @classmethod
    def from_vector(cls, field: PrimeField, vec: Sequence[int] | IntArray, phase: int = 0) -> PauliString:
        """Build from a symplectic vector ``(x | z)`` of length ``2n``."""
        v = np.asarray(vec, dtype=np.int64)
        n = v.size // 2
        return cls(field, v[:n], v[n:], phase)

    @property
    def n(self) -> int:
        return self.x.size

    @property
    def q(self) -> int:
        return self.field.q

    def vector(self) -> IntArray:
        return np.concatenate([self.x, self.z])

    def __mul__(self, other: PauliString) -> PauliString:
        return multiply(self, other)

    def __pow__(self, m: int) -> PauliString:
        return power(self, m)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PauliString):
            return NotImplemented
        return (
            self.q == other.q
            and self.phase == other.phase
            and np.array_equal(self.x, other.x)
            and np.array_equal(self.z, other.z)
        )

    def __hash__(self) -> int:
        return hash((self.q, self.phase, self.x.tobytes(), self.z.tobytes()))

    def equal_up_to_phase(self, other: PauliString) -> bool:
        return np.array_equal(self.x, other.x) and np.array_equal(self.z, other.z)

    def without_phase(self) -> PauliString:
        return PauliString(self.field, self.x, self.z)

    def to_text(self, sep: str = ".") -> str:
        return format_pauli(self, sep)

    def __str__(self) -> str:
        return format_pauli(self, "⊗")

    def __repr__(self) -> str:
        return f"PauliString(q={self.q}, {format_pauli(self, '.')})"


def _check_pair(P: PauliString, Q: PauliString) -> None:
    if P.q != Q.q or P.n != Q.n:
        raise DimensionMismatch(f"Pauli strings on ({P.q}, {P.n}) and ({Q.q}, {Q.n})")


def multiply(P: PauliString, Q: PauliString) -> PauliString:
    """Operator product ``P Q`` with the reordering phase tracked exactly."""
    _check_pair(P, Q)
    phase = P.phase + Q.phase + int(P.z @ Q.x)
    return PauliString(P.field, P.x + Q.x, P.z + Q.z, phase)


def power(P: PauliString, m: int) -> PauliString:
    m %= P.q  # P^q is the identity for odd prime q
    result = PauliString.identity(P.field, P.n)
    for _ in range(m):
        result = multiply(result, P)
    return result


def symplectic(P: PauliString, Q: PauliString) -> int:
    """``P_Z . Q_X - P_X . Q_Z`` mod q, so that ``P Q = omega^value Q P``."""
    _check_pair(P, Q)
    return int(P.z @ Q.x - P.x @ Q.z) % P.q


def symplectic_matrix(rows: Sequence[PauliString], cols: Sequence[PauliString]) -> IntArray:
    out = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for i, P in enumerate(rows):
        for j, Q in enumerate(cols):
            out[i, j] = symplectic(P, Q)
    return out


def weight(P: PauliString) -> int:
    return int(np.count_nonzero((P.x != 0) | (P.z != 0)))


def apply(P: PauliString, s: CodeState) -> CodeState:
    """``P |s>``: shift every string by ``x`` and add ``z . b + phase`` to its phase."""
    if P.q != s.q or P.n != s.n:
        raise DimensionMismatch(f"operator on ({P.q}, {P.n}) applied to state on ({s.q}, {s.n})")
    phases = s.phases + s.strings @ P.z + P.phase
    return CodeState(s.field, s.strings + P.x[None, :], phases)


# -- text form ---------------------------------------------------------------

_TOKEN = re.compile(r"^(?:I|(?:X(\d+))?(?:Z(\d+))?)$")


def format_pauli(P: PauliString, sep: str = ".") -> str:
    """Site tokens ``I``, ``X2``, ``Z1``, ``X1Z3`` joined by ``sep``.

    A nonzero global phase is written as a ``w<e>*`` prefix.
    """
    tokens = []
    for a, b in zip(P.x.tolist(), P.z.tolist()):
        tok = (f"X{a}" if a else "") + (f"Z{b}" if b else "")
        tokens.append(tok or "I")
    body = sep.join(tokens)
    return f"w{P.phase}*{body}" if P.phase else body


def parse_pauli(field: PrimeField, text: str) -> PauliString:
    text = text.strip()
    phase = 0
    if text.startswith("w") and "*" in text:
        head, text = text.split("*", 1)
        phase = int(head[1:])
    tokens = re.split(r"\s*(?:⊗|\.)\s*", text)
    xs, zs = [], []
    for tok in tokens:
        m = _TOKEN.match(tok)
        if m is None or tok == "":
            raise ValueError(f"bad Pauli token {tok!r}")
        xs.append(int(m.group(1) or 0))
        zs.append(int(m.group(2) or 0))
    return PauliString(field, xs, zs, phase)


# -- error enumeration -------------------------------------------------------


def count_errors(n: int, q: int, max_weight: int, min_weight: int = 1) -> int:
    """Number of phase-free Pauli strings with weight in ``[min_weight, max_weight]``."""
    return sum(math.comb(n, w) * (q * q - 1) ** w for w in range(min_weight, max_weight + 1))


def _site_pairs(q: int) -> IntArray:
    """Nonidentity single-site exponent pairs ``(x, z)`` in lexicographic order."""
    pairs = [(a, b) for a in range(q) for b in range(q) if (a, b) != (0, 0)]
    return np.array(pairs, dtype=np.int64)


def error_chunks(n: int, q: int, w: int, chunk: int = 1 << 15) -> Iterator[tuple[tuple[int, ...], IntArray, IntArray]]:
    """Yield ``(support, xs, zs)`` blocks covering all weight-``w`` strings once.

    ``xs`` and ``zs`` have shape ``(B, w)`` and hold exponents on the support
    sites.  Order: site combinations lexicographically, then per-site exponent
    pairs lexicographically with the first support site most significant.
    """
    pairs = _site_pairs(q)
    m = pairs.shape[0]
    per_support = m**w
    # fix the leading `lead` sites per block so that blocks stay near `chunk`
    lead = 0
    while lead < w and m ** (w - lead) > chunk:
        lead += 1
    tail = w - lead
    tail_idx = _digits(m, tail)
    for support in itertools.combinations(range(n), w):
        if per_support == 0:
            continue
        for head in itertools.product(range(m), repeat=lead):
            idx = np.hstack([np.tile(np.array(head, dtype=np.int64), (tail_idx.shape[0], 1)), tail_idx])
            sel = pairs[idx]  # (B, w, 2)
            yield support, sel[:, :, 0], sel[:, :, 1]


def _digits(base: int, width: int) -> IntArray:
    idx = np.arange(base**width, dtype=np.int64)
    powers = base ** np.arange(width - 1, -1, -1, dtype=np.int64)
    return (idx[:, None] // powers[None, :]) % base


def enumerate_errors(field: PrimeField, n: int, max_weight: int, budget: int = DEFAULT_BUDGET) -> Iterator[PauliString]:
    """Every phase-free Pauli string of weight ``1 .. max_weight`` exactly once.

    Order: increasing weight, then site combination, then exponents.
    """
    total = count_errors(n, field.q, max_weight)
    if total > budget:
        raise BudgetExceeded("error enumeration", total, budget)
    for w in range(1, max_weight + 1):
        for support, xs, zs in error_chunks(n, field.q, w):
            cols = list(support)
            for xr, zr in zip(xs, zs):
                x = np.zeros(n, dtype=np.int64)
                z = np.zeros(n, dtype=np.int64)
                x[cols] = xr
                z[cols] = zr
                yield PauliString(field, x, z)
