"""``qecc-forge`` command line.

Verbs::

    construct {ame,shorten,mod-shorten}   build a code, verify it, write a JSON record
    verify RECORD                         re-run the checks on a record
    distance RECORD                       measure the distance of a record
    table1                                shortening chain of one seed
    table2                                shortening vs modified shortening rows
    export                                seed generator in matrix text form

Exit status: 0 pass, 1 fail (or bad input), 2 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .codes import DEFAULT_BUDGET, GeneratorMatrix, format_matrix_text, mds_generator, parse_matrix_text
from .construct import QuantumCode, kuniform_code, modified_shorten, shorten
from .errors import BudgetExceeded, QeccError
from .gf import field_new
from .states import uniformity
from .verify import VerificationReport, code_distance, verify_code

EXIT = {"pass": 0, "fail": 1, "budget": 2}
_UNIFORMITY_SAMPLE = 50


@dataclass(frozen=True)
class RunConfig:
    command: str
    q: int | None = None
    gamma: int | None = None
    n: int | None = None
    k: int | None = None
    r: int | None = None
    budget: int = DEFAULT_BUDGET
    out: str | None = None
    seed_matrix: str | None = None
    skip_distance: bool = False
    construction: str | None = None
    record: str | None = None
    method: str = "auto"

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> RunConfig:
        fields = {f: getattr(args, f) for f in cls.__dataclass_fields__ if hasattr(args, f)}
        return cls(**fields)

    def seed(self) -> GeneratorMatrix:
        """Seed generator from ``--seed-matrix`` or the Singleton array."""
        if self.seed_matrix:
            G = parse_matrix_text(Path(self.seed_matrix).read_text(), self.gamma)
            if self.q is not None and G.field.q != self.q:
                raise QeccError(f"seed matrix is over GF({G.field.q}), not GF({self.q})")
            return G
        field = field_new(self._need("q"), self.gamma)
        n = self.n if self.n is not None else field.q + 1
        k = self.k if self.k is not None else n // 2
        return mds_generator(field, k, n)

    def _need(self, name: str) -> int:
        value = getattr(self, name)
        if value is None:
            raise QeccError(f"--{name} is required for '{self.command}'")
        return value


def _emit(text: str, out: str | None) -> None:
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def build_code(cfg: RunConfig) -> QuantumCode:
    kind = cfg.construction
    if kind == "ame":
        return kuniform_code(cfg.seed(), cfg.budget)
    if kind == "shorten":
        return shorten(cfg.seed(), cfg.r if cfg.r is not None else 1, budget=cfg.budget)
    if kind == "mod-shorten":
        field = field_new(cfg._need("q"), cfg.gamma)
        return modified_shorten(field, cfg.n, cfg.budget)
    raise QeccError(f"unknown construction {kind!r}")


def code_record(code: QuantumCode, report: VerificationReport, budget: int, skip_distance: bool) -> dict[str, Any]:
    record = code.to_record()
    record["verification"] = {"budget": budget, "skip_distance": skip_distance, "report": report.to_dict()}
    return record


def _print_report(report: VerificationReport, stream=None) -> None:
    stream = stream or sys.stdout
    for line in report.summary_lines():
        print(f"  {line}", file=stream)


def cmd_construct(cfg: RunConfig) -> int:
    code = build_code(cfg)
    report = verify_code(code, cfg.budget, cfg.skip_distance)
    record = code_record(code, report, cfg.budget, cfg.skip_distance)
    _emit(_dumps(record), cfg.out)
    info = sys.stderr if cfg.out in (None, "-") else sys.stdout
    print(code.name, file=info)
    _print_report(report, info)
    return EXIT[report.status]


def cmd_verify(cfg: RunConfig) -> int:
    record = json.loads(Path(cfg.record).read_text())
    code = QuantumCode.from_record(record)
    report = verify_code(code, cfg.budget, cfg.skip_distance)
    print(code.name)
    _print_report(report)
    status = report.status
    stored = record.get("verification")
    if stored and stored.get("budget") == cfg.budget and stored.get("skip_distance") == cfg.skip_distance:
        if stored["report"] != json.loads(json.dumps(report.to_dict())):
            print("  FAIL   transcript differs from the one embedded in the record")
            status = "fail" if status == "pass" else status
        else:
            print("  PASS   transcript matches the embedded record")
    return EXIT[status]


def cmd_distance(cfg: RunConfig) -> int:
    code = QuantumCode.from_record(json.loads(Path(cfg.record).read_text()))
    d = code_distance(code, cfg.method, cfg.budget)
    print(f"{code.name} distance {d}")
    return 0 if d == code.distance_claimed else 1


def _uniformity(code: QuantumCode, budget: int) -> int:
    sample = _UNIFORMITY_SAMPLE if code.q > 7 else None
    return min(uniformity(c, sample=sample, budget=budget) for c in code.codewords)


def _table_row(code: QuantumCode, expected_uniformity: int, cfg: RunConfig) -> tuple[str, str]:
    """One formatted row and its status."""
    if cfg.skip_distance:
        report = verify_code(code, cfg.budget, skip_distance=True)
        dist = f"d={code.distance_claimed} claimed"
    else:
        report = verify_code(code, cfg.budget)
        check = report.check("distance")
        if check.result == "pass":
            dist = f"d={check.parameters['measured']} verified"
        elif check.result == "budget":
            dist = f"d={code.distance_claimed} claimed (budget)"
        else:
            dist = f"d={check.parameters['measured']} MISMATCH (claimed {code.distance_claimed})"
    u = _uniformity(code, cfg.budget)
    status = report.status
    if u != expected_uniformity:
        status = "fail"
    row = f"{code.name:<16s} uniformity {u} (expected {expected_uniformity})  {dist}  [{status}]"
    return row, status


def _worst(statuses: list[str]) -> int:
    return max((EXIT[s] for s in statuses), default=0)


def cmd_table1(cfg: RunConfig) -> int:
    G = cfg.seed()
    statuses = []
    print(f"seed [[{G.n},0,{G.k + 1}]]_{G.field.q}  (gamma={G.field.gamma})")
    for r in range(G.k):
        code = kuniform_code(G, cfg.budget) if r == 0 else shorten(G, r, budget=cfg.budget)
        row, status = _table_row(code, G.k - r, cfg)
        print(f"  r={r}  {row}")
        statuses.append(status)
    return _worst(statuses)


def cmd_table2(cfg: RunConfig) -> int:
    field = field_new(cfg._need("q"), cfg.gamma)
    q = field.q
    statuses = []
    print(f"GF({q}), gamma={field.gamma}")
    for n in range(4, q + 2):
        seed = mds_generator(field, n // 2, n)
        print(f"  seed [[{n},0,{n // 2 + 1}]]_{q}")
        row, status = _table_row(shorten(seed, 1, budget=cfg.budget), (n - 2) // 2, cfg)
        print(f"    shortening           {row}")
        statuses.append(status)
        row, status = _table_row(modified_shorten(field, n, cfg.budget), n // 2, cfg)
        print(f"    modified shortening  {row}")
        statuses.append(status)
    return _worst(statuses)


def cmd_export(cfg: RunConfig) -> int:
    if cfg.record:
        record = json.loads(Path(cfg.record).read_text())
        prov = record["provenance"]
        G = GeneratorMatrix.from_rows(field_new(prov["q"], prov.get("gamma")), prov["seed_matrix"])
    else:
        G = cfg.seed()
    _emit(format_matrix_text(G), cfg.out)
    return 0


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", type=int, help="field size (odd prime)")
    common.add_argument("--gamma", type=int, help="primitive element (default: smallest primitive root)")
    common.add_argument("--n", type=int, help="number of sites of the seed")
    common.add_argument("--k", type=int, help="dimension of the classical seed code")
    common.add_argument("--r", type=int, help="number of shortening steps")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="operator-count ceiling (default 10^7)")
    common.add_argument("--out", help="output path (default stdout)")
    common.add_argument("--skip-distance", action="store_true", help="skip the distance search")
    common.add_argument("--seed-matrix", help="seed generator in 'q k n' matrix text form")

    p = argparse.ArgumentParser(prog="qecc-forge", description="Quantum codes from MDS-built k-uniform states.")
    sub = p.add_subparsers(dest="command", required=True)
    c = sub.add_parser("construct", parents=[common], help="build, verify and record a code")
    c.add_argument("construction", choices=["ame", "shorten", "mod-shorten"])
    for name, text in (("verify", "re-verify a code record"), ("distance", "measure the distance of a code record")):
        s = sub.add_parser(name, parents=[common], help=text)
        s.add_argument("record")
        if name == "distance":
            s.add_argument("--method", choices=["auto", "overlap", "symplectic"], default="auto")
    sub.add_parser("table1", parents=[common], help="shortening chain of one seed")
    sub.add_parser("table2", parents=[common], help="shortening vs modified shortening for n = 4 .. q+1")
    e = sub.add_parser("export", parents=[common], help="write a seed generator as matrix text")
    e.add_argument("record", nargs="?", help="take the seed from this code record")
    return p


COMMANDS = {
    "construct": cmd_construct,
    "verify": cmd_verify,
    "distance": cmd_distance,
    "table1": cmd_table1,
    "table2": cmd_table2,
    "export": cmd_export,
}


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    cfg = RunConfig.from_args(args)
    try:
        return COMMANDS[cfg.command](cfg)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT["budget"]
    except (QeccError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT["fail"]


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
