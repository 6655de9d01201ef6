"""Independent dense-matrix reference implementations.

Nothing here reuses package arithmetic: states become complex vectors,
Pauli strings become Kronecker products of q x q clock and shift matrices,
and all checks are plain floating-point linear algebra with a tolerance.
Only suitable for tiny systems (q^n up to a few thousand).
"""

from __future__ import annotations

import itertools
from functools import reduce

import numpy as np

TOL = 1e-8


def omega(q: int) -> complex:
    return np.exp(2j * np.pi / q)


def shift(q: int) -> np.ndarray:
    X = np.zeros((q, q), dtype=complex)
    for j in range(q):
        X[(j + 1) % q, j] = 1
    return X


def clock(q: int) -> np.ndarray:
    return np.diag([omega(q) ** j for j in range(q)])


def pauli_matrix(q: int, x, z, phase: int = 0) -> np.ndarray:
    X, Z = shift(q), clock(q)
    factors = [np.linalg.matrix_power(X, int(a)) @ np.linalg.matrix_power(Z, int(b)) for a, b in zip(x, z)]
    return omega(q) ** phase * reduce(np.kron, factors)


def pauli_of(P) -> np.ndarray:
    return pauli_matrix(P.q, P.x, P.z, P.phase)


def state_vector(s) -> np.ndarray:
    """Unnormalized amplitudes of a sparse state, first site most significant."""
    q, n = s.q, s.n
    v = np.zeros(q**n, dtype=complex)
    for string, phase in zip(s.strings.tolist(), s.phases.tolist()):
        idx = 0
        for digit in string:
            idx = idx * q + digit
        v[idx] += omega(q) ** phase
    return v


def reduced_density(v: np.ndarray, q: int, n: int, keep) -> np.ndarray:
    keep = list(keep)
    rest = [i for i in range(n) if i not in keep]
    psi = v.reshape([q] * n).transpose(keep + rest).reshape(q ** len(keep), -1)
    rho = psi @ psi.conj().T
    return rho / np.trace(rho)


def is_maximally_mixed(v: np.ndarray, q: int, n: int, keep) -> bool:
    if not keep:
        return True
    rho = reduced_density(v, q, n, keep)
    return np.allclose(rho, np.eye(rho.shape[0]) / rho.shape[0], atol=TOL)


def uniformity(v: np.ndarray, q: int, n: int) -> int:
    u = 0
    for size in range(1, n // 2 + 1):
        if all(is_maximally_mixed(v, q, n, c) for c in itertools.combinations(range(n), size)):
            u = size
        else:
            break
    return u


def all_paulis(q: int, n: int, w: int):
    """Phase-free strings of exact weight ``w`` as (x, z) tuples."""
    pairs = [(a, b) for a in range(q) for b in range(q) if (a, b) != (0, 0)]
    for support in itertools.combinations(range(n), w):
        for choice in itertools.product(pairs, repeat=w):
            x = [0] * n
            z = [0] * n
            for site, (a, b) in zip(support, choice):
                x[site], z[site] = a, b
            yield x, z


def kl_holds(vectors: list[np.ndarray], W: np.ndarray, pure: bool = False) -> bool:
    """Knill-Laflamme test for one operator on normalized codewords."""
    vs = [v / np.linalg.norm(v) for v in vectors]
    gram = np.array([[a.conj() @ W @ b for b in vs] for a in vs])
    if pure:
        return abs(gram[0, 0]) < TOL
    return np.allclose(gram, gram[0, 0] * np.eye(len(vs)), atol=TOL)


def distance(vectors: list[np.ndarray], q: int, n: int, pure: bool = False) -> int:
    for w in range(1, n + 1):
        for x, z in all_paulis(q, n, w):
            if not kl_holds(vectors, pauli_matrix(q, x, z), pure):
                return w
    return n + 1


def rank_mod_p(rows, p: int) -> int:
    """Rank by counting the span: |span| = p^rank.  Tiny inputs only."""
    rows = [tuple(int(v) % p for v in r) for r in rows]
    if not rows:
        return 0
    span = {tuple([0] * len(rows[0]))}
    for r in rows:
        span = {tuple((a + c * b) % p for a, b in zip(s, r)) for s in span for c in range(p)}
    size, rank = len(span), 0
    while size > 1:
        size //= p
        rank += 1
    return rank


def min_weight(G, p: int) -> int:
    rows = [list(r) for r in G]
    best = None
    for coeffs in itertools.product(range(p), repeat=len(rows)):
        if not any(coeffs):
            continue
        word = [sum(c * r[j] for c, r in zip(coeffs, rows)) % p for j in range(len(rows[0]))]
        w = sum(1 for v in word if v)
        best = w if best is None else min(best, w)
    return best
