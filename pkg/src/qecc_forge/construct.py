"""Quantum codes from MDS-built k-uniform states.

Three pipelines:

* :func:`kuniform_code` - the seed ``[[n, 0, k+1]]_q`` state itself;
* :func:`shorten` - drop ``r`` rows/columns of the seed generator to get
  ``[[n-r, r, k-r+1]]_q`` spanned by ``(k-r)``-uniform codewords;
* :func:`modified_shorten` - keep all ``n`` parties of an AME seed and shift
  it with ``M~`` to get ``[[n, 1, n//2]]_q`` spanned by AME states.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field as dc_field
from typing import Any

import numpy as np

from .codes import (
    DEFAULT_BUDGET,
    GeneratorMatrix,
    is_mds,
    mds_generator,
    messages,
    parity_check,
    shorten_generator,
    singleton_array,
)
from .errors import NotMDS, OutOfRange
from .gf import MatrixGF, PrimeField, field_new, null_space
from .pauli import PauliString, apply, format_pauli, multiply, parse_pauli, power, symplectic
from .states import CodeState, state_from_generator


@dataclass(frozen=True, eq=False)
class QuantumCode:
    """An ``[[n, k_logical, d]]_q`` code together with its explicit codewords.

    ``codewords[i]`` is labelled by the i-th logical string in lexicographic
    order (first logical qudit most significant), see :attr:`labels`.
    """

    field: PrimeField
    n: int
    k_logical: int
    distance_claimed: int
    codewords: tuple[CodeState, ...]
    stabilizers: tuple[PauliString, ...]
    logical_x: tuple[PauliString, ...] = ()
    logical_z: tuple[PauliString, ...] = ()
    provenance: Mapping[str, Any] = dc_field(default_factory=dict)

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def t(self) -> int:
        """Number of correctable errors."""
        return (self.distance_claimed - 1) // 2

    @property
    def name(self) -> str:
        return f"[[{self.n},{self.k_logical},{self.distance_claimed}]]_{self.q}"

    @property
    def labels(self) -> list[tuple[int, ...]]:
        return [tuple(m) for m in messages(self.q, self.k_logical).tolist()] if self.k_logical else [()]

    def singleton_bound(self) -> float:
        return (self.n - self.k_logical) / 2 + 1

    def to_record(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "parameters": {"q": self.q, "n": self.n, "k": self.k_logical, "d": self.distance_claimed},
            "provenance": dict(self.provenance),
            "stabilizers": [format_pauli(S) for S in self.stabilizers],
            "logical_x": [format_pauli(P) for P in self.logical_x],
            "logical_z": [format_pauli(P) for P in self.logical_z],
            "codewords": [
                {"label": list(m), "state": s.to_record()} for m, s in zip(self.labels, self.codewords)
            ],
        }

    @classmethod
    def from_record(cls, record: Mapping[str, Any]) -> QuantumCode:
        params = record["parameters"]
        gamma = record.get("provenance", {}).get("gamma")
        field = field_new(int(params["q"]), gamma)
        return cls(
            field=field,
            n=int(params["n"]),
            k_logical=int(params["k"]),
            distance_claimed=int(params["d"]),
            codewords=tuple(CodeState.from_record(c["state"], field) for c in record["codewords"]),
            stabilizers=tuple(parse_pauli(field, s) for s in record["stabilizers"]),
            logical_x=tuple(parse_pauli(field, s) for s in record["logical_x"]),
            logical_z=tuple(parse_pauli(field, s) for s in record["logical_z"]),
            provenance=dict(record.get("provenance", {})),
        )

    def replace(self, **changes: Any) -> QuantumCode:
        data = {f: getattr(self, f) for f in self.__dataclass_fields__}
        data.update(changes)
        return QuantumCode(**data)


def _provenance(G: GeneratorMatrix, construction: str, r: int, **extra: Any) -> dict[str, Any]:
    return {
        "construction": construction,
        "q": G.field.q,
        "gamma": G.field.gamma,
        "seed_n": G.n,
        "seed_k": G.k,
        "r": r,
        "seed_matrix": G.tolist(),
        **extra,
    }


def seed_stabilizers(G: GeneratorMatrix) -> list[PauliString]:
    """``k`` X-strings from the rows of ``G`` then ``n-k`` Z-strings from the rows of ``H``."""
    field = G.field
    H = parity_check(G)
    xs = [PauliString.x_type(field, row) for row in G.matrix.array]
    zs = [PauliString.z_type(field, row) for row in H.array]
    return xs + zs


def kuniform_code(G: GeneratorMatrix, budget: int = DEFAULT_BUDGET) -> QuantumCode:
    """The ``[[n, 0, k+1]]_q`` code given by the single state ``sum_v |v G>``."""
    if not is_mds(G):
        raise NotMDS("seed generator is not MDS")
    return QuantumCode(
        field=G.field,
        n=G.n,
        k_logical=0,
        distance_claimed=G.k + 1,
        codewords=(state_from_generator(G, budget),),
        stabilizers=tuple(seed_stabilizers(G)),
        provenance=_provenance(G, "ame", 0),
    )


def _removed_columns(G: GeneratorMatrix, r: int) -> list[int]:
    return list(range(G.k - r, G.k))


def shift_operators(G: GeneratorMatrix, r: int, truncate: bool = False) -> list[PauliString]:
    """The X-type operators ``M_1 .. M_r`` of an r-step shortening.

    ``M_i`` carries the exponents of row ``k-r+i`` of ``G`` with the removed
    columns deleted, hence identity on the first ``k-r`` sites.  With
    ``truncate`` (only for ``r = 1``) just the first ``k`` X factors are kept.
    """
    k = G.k
    rows = np.delete(G.matrix.array[k - r :], _removed_columns(G, r), axis=1)
    ops = []
    for row in rows:
        row = row.copy()
        if truncate:
            row[k - r + k :] = 0
        ops.append(PauliString.x_type(G.field, row))
    return ops


def code_stabilizers(G: GeneratorMatrix, r: int, shifts: Sequence[PauliString] | None = None) -> list[PauliString]:
    """Stabilizer generators of the r-step shortened code.

    X-type: the ``k-r`` rows of the shortened generator.  Z-type: the strings
    ``v H~`` with ``m_i . (v H~) = 0`` for every shift operator ``m_i``,
    one per null-space basis vector ``v``.
    """
    field = G.field
    Gs = shorten_generator(G, r)
    Hs = parity_check(Gs)
    shifts = list(shifts) if shifts is not None else shift_operators(G, r)
    mx = np.array([m.x for m in shifts], dtype=np.int64)
    constraint = MatrixGF(field, mx @ Hs.array.T)
    xs = [PauliString.x_type(field, row) for row in Gs.matrix.array]
    zs = [PauliString.z_type(field, (v @ Hs.array) % field.q) for v in null_space(constraint)]
    return xs + zs


def shorten(G: GeneratorMatrix, r: int, truncate_m: bool = False, budget: int = DEFAULT_BUDGET) -> QuantumCode:
    """r-step shortening of an MDS seed: ``[[n-r, r, k-r+1]]_q``.

    Codewords are ``M_1^m_1 ... M_r^m_r |psi_0>`` with ``|psi_0>`` the
    superposition over the shortened generator.  Logical Z's are the last
    ``r`` rows of the shortened parity check as Z-strings.
    """
    k, n = G.k, G.n
    if not 1 <= r <= k - 1:
        raise OutOfRange(f"r={r} must satisfy 1 <= r <= k-1 = {k - 1}")
    if truncate_m and r != 1:
        raise OutOfRange("the truncated shift operator is only defined for r = 1")
    if not is_mds(G):
        raise NotMDS("seed generator is not MDS")
    field = G.field
    Gs = shorten_generator(G, r)
    Hs = parity_check(Gs)
    psi0 = state_from_generator(Gs, budget)
    shifts = shift_operators(G, r, truncate=truncate_m)
    mx = np.array([m.x for m in shifts], dtype=np.int64)

    codewords = []
    for label in messages(field.q, r):
        shift = PauliString.x_type(field, label @ mx)
        codewords.append(apply(shift, psi0))

    if truncate_m:
        # the last parity row may commute with a truncated shift; take the last one that does not
        rows = [row for row in Hs.array if int(row @ shifts[0].x) % field.q]
        z_rows = rows[-1:]
    else:
        z_rows = list(Hs.array[n - k - r :])
    logical_z = [PauliString.z_type(field, row) for row in z_rows]

    return QuantumCode(
        field=field,
        n=n - r,
        k_logical=r,
        distance_claimed=k - r + 1,
        codewords=tuple(codewords),
        stabilizers=tuple(code_stabilizers(G, r, shifts)),
        logical_x=tuple(shifts),
        logical_z=tuple(logical_z),
        provenance=_provenance(G, "shorten", r, truncate_m=truncate_m),
    )


def mtilde(field: PrimeField, n: int | None = None) -> PauliString:
    """The shift operator ``M~`` of modified shortening on ``n`` sites (default ``q+1``).

    Identity on the first ``n//2`` sites, X powers from row ``n//2 + 1`` of
    the Singleton array on the next ``ceil(n/2) - 1`` sites, and a single Z
    on the last site.  For ``n = q+1`` that row has exactly the needed length.
    """
    q = field.q
    n = q + 1 if n is None else n
    if not 3 <= n <= q + 1:
        raise OutOfRange(f"modified shortening needs 3 <= n <= q+1, got n={n}, q={q}")
    half = n // 2
    row = singleton_array(field).row(half + 1)[: n - half - 1]
    x = [0] * half + list(row) + [0]
    z = [0] * (n - 1) + [1]
    return PauliString(field, x, z)


def modified_shorten(field: PrimeField, n: int | None = None, budget: int = DEFAULT_BUDGET) -> QuantumCode:
    """``[[n, 1, n//2]]_q`` spanned by the AME states ``M~^m |phi_0>``.

    Stabilizers are the seed stabilizer products that commute with ``M~``:
    a null-space basis of the single linear constraint
    ``sum_i c_i (S_i, M~) = 0`` over the ``n`` seed generators, multiplied out
    with phases.  The logical Z is the first seed generator (Z-type
    preferred) that does not commute with ``M~``; it lies in the seed group,
    so every codeword is one of its eigenvectors.
    """
    q = field.q
    n = q + 1 if n is None else n
    M = mtilde(field, n)
    G = mds_generator(field, n // 2, n)
    phi0 = state_from_generator(G, budget)
    codewords = []
    current = phi0
    for _ in range(q):
        codewords.append(current)
        current = apply(M, current)

    seeds = seed_stabilizers(G)
    pairing = MatrixGF(field, [[symplectic(S, M) for S in seeds]])
    stabilizers = []
    for c in null_space(pairing):
        S = PauliString.identity(field, n)
        for coeff, gen in zip(c.tolist(), seeds):
            if coeff:
                S = multiply(S, power(gen, coeff))
        stabilizers.append(S)

    k = G.k
    candidates = seeds[k:] + seeds[:k]
    logical_z = next(S for S in candidates if symplectic(M, S) != 0)

    return QuantumCode(
        field=field,
        n=n,
        k_logical=1,
        distance_claimed=n // 2,
        codewords=tuple(codewords),
        stabilizers=tuple(stabilizers),
        logical_x=(M,),
        logical_z=(logical_z,),
        provenance=_provenance(G, "mod-shorten", 0),
    )


def shortening_chain(G: GeneratorMatrix, budget: int = DEFAULT_BUDGET) -> list[QuantumCode]:
    """Seed code followed by every r-step shortening, ``r = 1 .. k-1``."""
    return [kuniform_code(G, budget)] + [shorten(G, r, budget=budget) for r in range(1, G.k)]
