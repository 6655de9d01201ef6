"""Brute-force verification of quantum code claims.

Two independent routes to the distance:

* ``overlap`` - apply every Pauli string of a given weight to every codeword
  and evaluate all matrix elements ``<psi_m'| W |psi_m>`` exactly, i.e. the
  Knill-Laflamme conditions checked term by term on the explicit states;
* ``symplectic`` - search for the lightest string that commutes with every
  stabilizer generator yet lies outside their span, using only exponent
  vectors.

Sweeps run over :func:`qecc_forge.pauli.error_chunks` in its fixed order, so
the first failing operator (the witness) is reproducible.
"""

from __future__ import annotations

import os
import time
from collections.abc import Callable, Iterable, Iterator
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
from typing import Any

import numpy as np

from .codes import DEFAULT_BUDGET
from .construct import QuantumCode
from .errors import BudgetExceeded
from .gf import IntArray, MatrixGF, inverse, null_space, rank
from .pauli import (
    PauliString,
    apply,
    count_errors,
    error_chunks,
    format_pauli,
    symplectic,
    symplectic_matrix,
)
from .states import canonical_rows, inner_product

THREADS_ENV = "QECC_FORGE_THREADS"
_DENSE_TABLE_LIMIT = 1 << 24
_CELL_LIMIT = 1 << 22


@dataclass
class Check:
    name: str
    result: str  # "pass", "fail" or "budget"
    parameters: dict[str, Any] = dc_field(default_factory=dict)
    witness: dict[str, Any] | None = None
    examined: int = 0
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.result == "pass"

    def to_dict(self, timing: bool = False) -> dict[str, Any]:
        out = {
            "name": self.name,
            "result": self.result,
            "parameters": self.parameters,
            "witness": self.witness,
            "examined": self.examined,
        }
        if timing:
            out["elapsed"] = round(self.elapsed, 6)
        return out


@dataclass
class VerificationReport:
    code: str
    checks: list[Check] = dc_field(default_factory=list)
    kl_diagonal: dict[str, list[int]] = dc_field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def status(self) -> str:
        if any(c.result == "fail" for c in self.checks):
            return "fail"
        if any(c.result == "budget" for c in self.checks):
            return "budget"
        return "pass"

    def extend(self, other: VerificationReport) -> None:
        self.checks.extend(other.checks)
        self.kl_diagonal.update(other.kl_diagonal)

    def check(self, name: str) -> Check:
        return next(c for c in self.checks if c.name == name)

    def to_dict(self, timing: bool = False) -> dict[str, Any]:
        """JSON-ready form; timings are left out unless asked for so records stay reproducible."""
        return {
            "code": self.code,
            "status": self.status,
            "checks": [c.to_dict(timing) for c in self.checks],
            # f(W) for every examined W not listed here is zero
            "kl_diagonal_nonzero": dict(sorted(self.kl_diagonal.items())),
        }

    def summary_lines(self) -> list[str]:
        lines = []
        for c in self.checks:
            line = f"{c.result.upper():6s} {c.name} ({c.examined} examined)"
            if c.witness:
                line += f" witness={c.witness}"
            lines.append(line)
        return lines


def _threads() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def _ordered_map(fn: Callable, items: Iterable) -> Iterator:
    """``map`` that keeps input order; threaded when the env var asks for it."""
    threads = _threads()
    if threads == 1:
        yield from map(fn, items)
        return
    with ThreadPoolExecutor(max_workers=threads) as pool:
        yield from pool.map(fn, items)


def _expand(n: int, support: tuple[int, ...], xs: IntArray, zs: IntArray) -> tuple[IntArray, IntArray]:
    x = np.zeros((xs.shape[0], n), dtype=np.int64)
    z = np.zeros_like(x)
    x[:, list(support)] = xs
    z[:, list(support)] = zs
    return x, z


def _operator(code: QuantumCode, support, xr, zr) -> PauliString:
    x, z = _expand(code.n, support, xr[None, :], zr[None, :])
    return PauliString(code.field, x[0], z[0])


# -- overlap engine ------------------------------------------------------------


class OverlapEngine:
    """Evaluates ``<psi_m'| W |psi_m>`` for batches of Pauli strings at once.

    Result of :meth:`amplitudes` has shape ``(B, M, M, q)``: the count of
    matching terms per power of omega, indexed ``[b, m, m', e]``.
    """

    def __init__(self, code: QuantumCode) -> None:
        self.code = code
        q, n = code.q, code.n
        self.q, self.n = q, n
        self.M = len(code.codewords)
        self.powers = q ** np.arange(n - 1, -1, -1, dtype=np.int64)
        keys = np.concatenate([c.keys for c in code.codewords])
        owners = np.concatenate([np.full(len(c), i, dtype=np.int64) for i, c in enumerate(code.codewords)])
        phases = np.concatenate([c.phases for c in code.codewords])
        order = np.argsort(keys, kind="stable")
        keys, owners, phases = keys[order], owners[order], phases[order]
        # layer j holds the j-th occurrence of each key (one layer unless supports overlap)
        first = np.searchsorted(keys, keys, side="left")
        occurrence = np.arange(keys.size) - first
        self.layers = []
        self.dense = q**n <= _DENSE_TABLE_LIMIT
        for j in range(int(occurrence.max()) + 1 if keys.size else 0):
            sel = occurrence == j
            lk, lo, lp = keys[sel], owners[sel], phases[sel]
            if self.dense:
                table = np.full(q**n, -1, dtype=np.int64)
                table[lk] = np.arange(lk.size)
                self.layers.append((table, lk, lo, lp))
            else:
                self.layers.append((None, lk, lo, lp))

    def batch_size(self) -> int:
        return max(1, _CELL_LIMIT // (self.M * self.M * self.q))

    def _lookup(self, layer, newkey: IntArray) -> IntArray:
        table, lk, _, _ = layer
        if table is not None:
            return table[newkey]
        pos = np.searchsorted(lk, newkey)
        pos_c = np.minimum(pos, lk.size - 1)
        return np.where(lk[pos_c] == newkey, pos_c, -1)

    def amplitudes(self, support: tuple[int, ...], xs: IntArray, zs: IntArray) -> IntArray:
        """Counts per power of omega, shape ``(B, M, M, q)``.

        Where a shifted term lands depends only on the X part, so lookups run
        once per distinct X pattern; the Z part only sets phases of the hits.
        """
        q, M = self.q, self.M
        B = xs.shape[0]
        cols = list(support)
        pw = self.powers[cols]
        ux, inv = np.unique(xs, axis=0, return_inverse=True)
        inv = inv.ravel()
        # rows of the batch grouped by X pattern
        rows = np.argsort(inv, kind="stable")
        group_size = np.bincount(inv, minlength=ux.shape[0])
        group_start = np.cumsum(group_size) - group_size
        flat_parts = []
        for m, cw in enumerate(self.code.codewords):
            sub = cw.strings[:, cols]  # (T, w)
            step = max(1, _CELL_LIMIT // max(1, len(cw)))
            for u0 in range(0, ux.shape[0], step):
                block = ux[u0 : u0 + step]
                shift = ((sub[None, :, :] + block[:, None, :]) % q - sub[None, :, :]) @ pw
                newkey = cw.keys[None, :] + shift  # (U, T)
                for layer in self.layers:
                    idx = self._lookup(layer, newkey)
                    u, t = np.nonzero(idx >= 0)
                    if u.size == 0:
                        continue
                    entry = idx[u, t]
                    u = u + u0
                    # expand every hit over the batch rows sharing its X pattern
                    reps = group_size[u]
                    hit = np.repeat(np.arange(u.size), reps)
                    offs = np.arange(hit.size) - np.repeat(np.cumsum(reps) - reps, reps)
                    b = rows[group_start[u][hit] + offs]
                    th, eh = t[hit], entry[hit]
                    expo = (np.einsum("ij,ij->i", zs[b], sub[th]) + cw.phases[th] - layer[3][eh]) % q
                    owner = layer[2][eh]
                    flat_parts.append(((b * M + m) * M + owner) * q + expo)
        if not flat_parts:
            return np.zeros((B, M, M, q), dtype=np.int64)
        flat = np.concatenate(flat_parts)
        return np.bincount(flat, minlength=B * M * M * q).reshape(B, M, M, q)


def _chunks_for(engine_batch: int, n: int, q: int, w: int):
    for support, xs, zs in error_chunks(n, q, w):
        for start in range(0, xs.shape[0], engine_batch):
            yield support, xs[start : start + engine_batch], zs[start : start + engine_batch]


@dataclass
class _SweepResult:
    examined: int
    witness: dict[str, Any] | None
    nonzero_f: dict[str, list[int]]


def _kl_sweep(code: QuantumCode, engine: OverlapEngine, w: int, record_f: bool = True) -> _SweepResult:
    """Knill-Laflamme test for every weight-``w`` string; stops at the first violation.

    For ``k_logical = 0`` the single-state convention applies: the
    expectation of every such string must vanish.
    """
    M = engine.M
    off = ~np.eye(M, dtype=bool)

    def work(block):
        support, xs, zs = block
        amps = canonical_rows(engine.amplitudes(support, xs, zs))  # (B, M, M, q)
        diag = amps[:, np.arange(M), np.arange(M), :]  # (B, M, q)
        if code.k_logical == 0:
            bad = diag.any(axis=(1, 2))
        else:
            bad_off = amps[:, off, :].any(axis=(1, 2)) if M > 1 else np.zeros(xs.shape[0], dtype=bool)
            bad_diag = (diag != diag[:, :1, :]).any(axis=(1, 2))
            bad = bad_off | bad_diag
        return support, xs, zs, amps, diag, bad

    examined = 0
    nonzero: dict[str, list[int]] = {}
    for support, xs, zs, amps, diag, bad in _ordered_map(work, _chunks_for(engine.batch_size(), code.n, code.q, w)):
        if record_f:
            for b in np.flatnonzero(diag[:, 0, :].any(axis=1) & ~bad):
                nonzero[format_pauli(_operator(code, support, xs[b], zs[b]))] = diag[b, 0].tolist()
        if bad.any():
            b = int(np.flatnonzero(bad)[0])
            examined += b + 1
            W = _operator(code, support, xs[b], zs[b])
            return _SweepResult(examined, _kl_witness(code, W, amps[b]), nonzero)
        examined += xs.shape[0]
    return _SweepResult(examined, None, nonzero)


def _kl_witness(code: QuantumCode, W: PauliString, amps: IntArray) -> dict[str, Any]:
    labels = code.labels
    M = len(labels)
    for m in range(M):
        for mp in range(M):
            if m != mp and amps[m, mp].any():
                return {
                    "operator": format_pauli(W),
                    "kind": "off-diagonal",
                    "ket": list(labels[m]),
                    "bra": list(labels[mp]),
                    "value": amps[m, mp].tolist(),
                }
    if code.k_logical == 0:
        return {"operator": format_pauli(W), "kind": "expectation", "value": amps[0, 0].tolist()}
    for m in range(M):
        if not np.array_equal(amps[m, m], amps[0, 0]):
            return {
                "operator": format_pauli(W),
                "kind": "diagonal",
                "codeword": list(labels[m]),
                "value": amps[m, m].tolist(),
                "reference": amps[0, 0].tolist(),
            }
    raise AssertionError("no violation found in witness amplitudes")  # pragma: no cover


def check_knill_laflamme(code: QuantumCode, d: int | None = None, budget: int = DEFAULT_BUDGET) -> VerificationReport:
    """Knill-Laflamme conditions for every phase-free string of weight ``1 .. d-1``."""
    d = code.distance_claimed if d is None else d
    report = VerificationReport(code.name)
    start = time.perf_counter()
    total = count_errors(code.n, code.q, d - 1)
    params = {"d": d, "operators": total}
    if total > budget:
        report.checks.append(Check("knill_laflamme", "budget", params, None, 0, time.perf_counter() - start))
        return report
    engine = OverlapEngine(code)
    examined = 0
    witness = None
    for w in range(1, d):
        res = _kl_sweep(code, engine, w)
        examined += res.examined
        report.kl_diagonal.update(res.nonzero_f)
        if res.witness is not None:
            witness = res.witness
            break
    result = "pass" if witness is None else "fail"
    report.checks.append(Check("knill_laflamme", result, params, witness, examined, time.perf_counter() - start))
    return report


# -- symplectic engine ------------------------------------------------------------


class NormalizerEngine:
    """Classifies strings as outside / inside the normalizer / inside the stabilizer span."""

    def __init__(self, code: QuantumCode) -> None:
        self.code = code
        q, n = code.q, code.n
        if code.stabilizers:
            self.sx = np.array([S.x for S in code.stabilizers], dtype=np.int64)
            self.sz = np.array([S.z for S in code.stabilizers], dtype=np.int64)
            span = MatrixGF(code.field, np.hstack([self.sx, self.sz]))
            annihilator = null_space(span)
        else:
            self.sx = self.sz = np.zeros((0, n), dtype=np.int64)
            annihilator = [np.eye(2 * n, dtype=np.int64)[i] for i in range(2 * n)]
        self.annihilator = (
            np.array(annihilator, dtype=np.int64) if annihilator else np.zeros((0, 2 * n), dtype=np.int64)
        )
        self.q, self.n = q, n

    def classify(self, support, xs: IntArray, zs: IntArray) -> tuple[IntArray, IntArray]:
        """Boolean arrays ``(in_normalizer, in_span)`` for the batch."""
        q = self.q
        x, z = _expand(self.n, support, xs, zs)
        comm = (z @ self.sx.T - x @ self.sz.T) % q
        in_norm = ~comm.any(axis=1)
        in_span = ~((np.hstack([x, z]) @ self.annihilator.T) % q).any(axis=1)
        return in_norm, in_span


def _symplectic_sweep(code: QuantumCode, engine: NormalizerEngine, w: int) -> tuple[int, PauliString | None]:
    examined = 0

    def work(block):
        support, xs, zs = block
        in_norm, in_span = engine.classify(support, xs, zs)
        hit = in_norm if code.k_logical == 0 else in_norm & ~in_span
        return support, xs, zs, hit

    for support, xs, zs, hit in _ordered_map(work, _chunks_for(1 << 16, code.n, code.q, w)):
        if hit.any():
            b = int(np.flatnonzero(hit)[0])
            return examined + b + 1, _operator(code, support, xs[b], zs[b])
        examined += xs.shape[0]
    return examined, None


def _distance_search(code: QuantumCode, budget: int, max_weight: int | None, sweep) -> tuple[int, int, Any]:
    max_weight = code.n if max_weight is None else max_weight
    examined = 0
    for w in range(1, max_weight + 1):
        needed = count_errors(code.n, code.q, w)
        if needed > budget:
            raise BudgetExceeded(f"distance search through weight {w}", needed, budget)
        count, witness = sweep(w)
        examined += count
        if witness is not None:
            return w, examined, witness
    return max_weight + 1, examined, None


def distance_overlap(code: QuantumCode, budget: int = DEFAULT_BUDGET, max_weight: int | None = None) -> tuple[int, dict | None]:
    """Smallest weight at which the explicit-state Knill-Laflamme test fails."""
    engine = OverlapEngine(code)

    def sweep(w):
        res = _kl_sweep(code, engine, w, record_f=False)
        return res.examined, res.witness

    d, _, witness = _distance_search(code, budget, max_weight, sweep)
    return d, witness


def distance_symplectic(code: QuantumCode, budget: int = DEFAULT_BUDGET, max_weight: int | None = None) -> tuple[int, PauliString | None]:
    """Lightest string in the normalizer but outside the stabilizer span (any nonidentity one if ``k = 0``)."""
    engine = NormalizerEngine(code)
    d, _, witness = _distance_search(code, budget, max_weight, lambda w: _symplectic_sweep(code, engine, w))
    return d, witness


def code_distance(code: QuantumCode, method: str = "auto", budget: int = DEFAULT_BUDGET) -> int:
    """Distance of ``code``; ``auto`` uses overlaps up to six sites, symplectic above."""
    if method == "auto":
        method = "overlap" if code.n <= 6 else "symplectic"
    if method == "overlap":
        return distance_overlap(code, budget)[0]
    if method == "symplectic":
        return distance_symplectic(code, budget)[0]
    raise ValueError(f"unknown distance method {method!r}")


def check_distance(code: QuantumCode, method: str = "auto", budget: int = DEFAULT_BUDGET) -> VerificationReport:
    report = VerificationReport(code.name)
    start = time.perf_counter()
    if method == "auto":
        method = "overlap" if code.n <= 6 else "symplectic"
    params: dict[str, Any] = {"method": method, "claimed": code.distance_claimed}
    try:
        if method == "overlap":
            d, witness = distance_overlap(code, budget)
        else:
            d, op = distance_symplectic(code, budget)
            witness = {"operator": format_pauli(op)} if op is not None else None
    except BudgetExceeded as exc:
        params["needed"] = exc.needed
        report.checks.append(Check("distance", "budget", params, None, 0, time.perf_counter() - start))
        return report
    params["measured"] = d
    params["singleton_bound"] = code.singleton_bound()
    ok = d == code.distance_claimed and d <= code.singleton_bound()
    report.checks.append(
        Check("distance", "pass" if ok else "fail", params, witness, count_errors(code.n, code.q, d), time.perf_counter() - start)
    )
    return report


# -- algebraic checks ------------------------------------------------------------


def _vectors(ops) -> IntArray:
    return np.array([P.vector() for P in ops], dtype=np.int64)


def check_stabilizes(code: QuantumCode) -> VerificationReport:
    """Every generator fixes every codeword; generators commute and are independent."""
    report = VerificationReport(code.name)
    start = time.perf_counter()
    witness = None
    examined = 0
    for i, S in enumerate(code.stabilizers):
        for label, cw in zip(code.labels, code.codewords):
            examined += 1
            if apply(S, cw) != cw:
                witness = {"stabilizer": i, "operator": format_pauli(S), "codeword": list(label)}
                break
        if witness:
            break
    report.checks.append(
        Check("stabilizes", "pass" if witness is None else "fail", {"generators": len(code.stabilizers)}, witness, examined, time.perf_counter() - start)
    )

    start = time.perf_counter()
    witness = None
    pairs = 0
    for i in range(len(code.stabilizers)):
        for j in range(i + 1, len(code.stabilizers)):
            pairs += 1
            if symplectic(code.stabilizers[i], code.stabilizers[j]):
                witness = {"pair": [i, j]}
                break
        if witness:
            break
    report.checks.append(Check("stabilizers_commute", "pass" if witness is None else "fail", {}, witness, pairs, time.perf_counter() - start))

    start = time.perf_counter()
    count = len(code.stabilizers)
    r = rank(MatrixGF(code.field, _vectors(code.stabilizers))) if count else 0
    expected = code.n - code.k_logical
    ok = r == count == expected
    report.checks.append(
        Check("stabilizers_independent", "pass" if ok else "fail", {"rank": r, "generators": count, "expected": expected}, None, count, time.perf_counter() - start)
    )
    return report


def check_orthonormal(code: QuantumCode) -> VerificationReport:
    """Equal support sizes, pairwise zero overlaps, and ``q^k`` codewords."""
    report = VerificationReport(code.name)
    start = time.perf_counter()
    cws = code.codewords
    witness = None
    examined = 0
    sizes = {len(c) for c in cws}
    if len(cws) != code.q**code.k_logical:
        witness = {"codewords": len(cws), "expected": code.q**code.k_logical}
    elif len(sizes) != 1:
        witness = {"support_sizes": sorted(sizes)}
    else:
        for i in range(len(cws)):
            for j in range(i + 1, len(cws)):
                examined += 1
                if not inner_product(cws[i], cws[j]).is_zero():
                    witness = {"pair": [list(code.labels[i]), list(code.labels[j])]}
                    break
            if witness:
                break
    params = {"support_size": len(cws[0]) if cws else 0}
    report.checks.append(Check("orthonormal", "pass" if witness is None else "fail", params, witness, examined, time.perf_counter() - start))
    return report


def _phase_offset(before, after) -> int | None:
    """``c`` with ``after == omega^c before``, or ``None`` if not proportional."""
    if not np.array_equal(before.keys, after.keys):
        return None
    diff = (after.phases - before.phases) % before.q
    if diff.size and np.any(diff != diff[0]):
        return None
    return int(diff[0]) if diff.size else 0


def check_logical_algebra(code: QuantumCode, strict: bool = False) -> VerificationReport:
    """Logical operators commute with the stabilizers and act correctly on codewords.

    The X/Z pairing matrix must be nonsingular (the logicals generate the
    logical Pauli group); with ``strict`` it must also be diagonal, i.e.
    ``(X_i, Z_j) != 0`` iff ``i == j``.  Use :func:`dual_logical_z` to
    rebase a nonsingular pairing into a diagonal one.  Each X_i must map codeword ``m`` to ``m + e_i`` (up to a global
    phase), and each Z_j must act diagonally with phase
    ``c_j + sum_i m_i (Z_j, X_i)``.
    """
    report = VerificationReport(code.name)
    k, q = code.k_logical, code.q
    xs, zs = list(code.logical_x), list(code.logical_z)

    start = time.perf_counter()
    witness = None
    for kind, ops in (("X", xs), ("Z", zs)):
        for i, L in enumerate(ops):
            for j, S in enumerate(code.stabilizers):
                if symplectic(L, S):
                    witness = {"logical": f"{kind}{i + 1}", "stabilizer": j}
                    break
            if witness:
                break
        if witness:
            break
    report.checks.append(Check("logicals_commute_with_stabilizers", "pass" if witness is None else "fail", {}, witness, (len(xs) + len(zs)) * len(code.stabilizers), time.perf_counter() - start))

    start = time.perf_counter()
    omega_xx = symplectic_matrix(xs, xs)
    omega_zz = symplectic_matrix(zs, zs)
    pairing = symplectic_matrix(xs, zs)
    ok = len(xs) == len(zs) == k and not omega_xx.any() and not omega_zz.any()
    nonsingular = bool(k) and ok and rank(MatrixGF(code.field, pairing)) == k
    diagonal = bool(k) and not (pairing - np.diag(np.diag(pairing))).any() and bool(np.all(np.diag(pairing)))
    params = {"pairing": pairing.tolist(), "diagonal": diagonal, "strict": strict}
    passed = nonsingular and (diagonal or not strict)
    report.checks.append(Check("logical_pairing", "pass" if passed else "fail", params, None, k * k, time.perf_counter() - start))

    start = time.perf_counter()
    index = {tuple(m): i for i, m in enumerate(code.labels)}
    witness = None
    examined = 0
    for i, X in enumerate(xs):
        for label, cw in zip(code.labels, code.codewords):
            examined += 1
            target = list(label)
            target[i] = (target[i] + 1) % q
            if _phase_offset(code.codewords[index[tuple(target)]], apply(X, cw)) is None:
                witness = {"logical": f"X{i + 1}", "codeword": list(label)}
                break
        if witness:
            break
    report.checks.append(Check("logical_x_shift", "pass" if witness is None else "fail", {}, witness, examined, time.perf_counter() - start))

    start = time.perf_counter()
    witness = None
    examined = 0
    for j, Z in enumerate(zs):
        base = None
        for label, cw in zip(code.labels, code.codewords):
            examined += 1
            c = _phase_offset(cw, apply(Z, cw))
            if c is not None and base is None:
                base = c
            expected = None if base is None else (base + sum(m * symplectic(Z, X) for m, X in zip(label, xs))) % q
            if c is None or c != expected:
                witness = {"logical": f"Z{j + 1}", "codeword": list(label), "phase": c, "expected": expected}
                break
        if witness:
            break
    report.checks.append(Check("logical_z_diagonal", "pass" if witness is None else "fail", {}, witness, examined, time.perf_counter() - start))
    return report


def dual_logical_z(code: QuantumCode) -> QuantumCode:
    """Same code with the logical Z's recombined so that ``(X_i, Z_j) = delta_ij``.

    ``Z'_j = prod_l Z_l^{c_lj}`` with ``C = P^{-1}`` for the pairing matrix
    ``P_il = (X_i, Z_l)``, which must be nonsingular.
    """
    pairing = MatrixGF(code.field, symplectic_matrix(code.logical_x, code.logical_z))
    coeffs = inverse(pairing).array
    zs = []
    for j in range(code.k_logical):
        Z = PauliString.identity(code.field, code.n)
        for l, L in enumerate(code.logical_z):
            if coeffs[l, j]:
                Z = Z * L ** int(coeffs[l, j])
        zs.append(Z)
    return code.replace(logical_z=tuple(zs))


def verify_code(
    code: QuantumCode,
    budget: int = DEFAULT_BUDGET,
    skip_distance: bool = False,
    distance_method: str = "auto",
) -> VerificationReport:
    """Run every applicable check; budget overruns become ``budget`` entries.

    ``skip_distance`` drops both sweeps that test the distance claim (the
    Knill-Laflamme conditions below ``d`` and the distance search), leaving
    the distance as claimed.
    """
    report = VerificationReport(code.name)
    report.extend(check_stabilizes(code))
    report.extend(check_orthonormal(code))
    if code.k_logical:
        report.extend(check_logical_algebra(code))
    if not skip_distance:
        report.extend(check_knill_laflamme(code, code.distance_claimed, budget))
        report.extend(check_distance(code, distance_method, budget))
    return report
