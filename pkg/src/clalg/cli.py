"""Command-line driver.

Subcommands: validate, derive-imp, identities, ideals, quotient,
theorems, search, export-dot.  Exit codes: 0 all requested checks pass,
1 a checked property fails (witnesses printed), 2 parse or usage error.

Machine-readable (--json) and human output are rendered from the same
payload structure, so they cannot diverge; --replay re-checks every
printed witness against the tables before reporting it.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .core import AlgebraCandidate, NoResidual, NotALattice, derive_implication
from .fileformat import ParseError, export_dot, parse_algebra, serialize_algebra
from .identities import run_identity_suite
from .ideals import (
    EmptySubset,
    NotAnIdeal,
    Subset,
    all_ideals,
    certify_ideal,
    classify,
    generated_ideal,
    is_ideal,
)
from .quotient import (
    NotACongruence,
    NotEquivalence,
    QuotientInvalid,
    build_quotient,
    congruence_from_ideal,
    theorem_suite,
)
from .replay import confirm_witness
from .search import SearchConfig, render_search_result, run_search
from .validator import Verdict, validate

SCHEMA_VERSION = 1


class _Usage(Exception):
    pass


def _render_index(alg: AlgebraCandidate, value) -> object:
    if isinstance(value, tuple):
        return [_render_index(alg, v) for v in value]
    if isinstance(value, int):
        return alg.name_of(value)
    return value


def _witness_payload(alg: AlgebraCandidate, witness: tuple | None) -> list | None:
    if witness is None:
        return None
    out = []
    for part in witness:
        if isinstance(part, str):
            out.append(part)
        elif isinstance(part, bool):
            out.append(part)
        elif isinstance(part, tuple):
            out.append([_render_index(alg, p) for p in part])
        else:
            out.append(alg.name_of(part))
    return out


class _Run:
    """Collects payload entries plus the contexts needed for --replay."""

    def __init__(self, args, command: list[str]):
        self.args = args
        self.payload: dict = {
            "schema_version": SCHEMA_VERSION,
            "command": command,
        }
        self.human: list[str] = []
        self.replayable: list[tuple[AlgebraCandidate, Verdict, int | None, tuple | None]] = []
        self.exit_code = 0

    def fail(self):
        self.exit_code = max(self.exit_code, 1)

    def verdict_entry(self, alg, verdict: Verdict, ideal_bits=None, class_index=None) -> dict:
        status = "skipped" if verdict.skipped else ("pass" if verdict.ok else "fail")
        entry = {
            "check": verdict.law,
            "status": status,
            "witness": _witness_payload(alg, verdict.witness),
        }
        if verdict.detail:
            entry["detail"] = verdict.detail
        if not verdict.ok:
            self.fail()
        if verdict.witness is not None:
            self.replayable.append((alg, verdict, ideal_bits, class_index))
            if self.args.replay:
                ok = confirm_witness(alg, verdict, ideal_bits, class_index)
                entry["replay"] = "confirmed" if ok else "NOT REPRODUCIBLE"
                if not ok:
                    self.fail()
        return entry

    def render_verdict_line(self, entry: dict) -> str:
        line = f"check {entry['check']}: {entry['status'].upper() if entry['status'] != 'pass' else 'pass'}"
        if entry.get("witness") is not None:
            line += f"  witness={entry['witness']}"
        if entry.get("detail"):
            line += f"  [{entry['detail']}]"
        if entry.get("replay"):
            line += f"  replay={entry['replay']}"
        return line


def _read_candidate(path: str) -> AlgebraCandidate:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _Usage(f"cannot read {path}: {exc}") from exc
    return parse_algebra(text)


def _ideal_subset(alg: AlgebraCandidate, names: str) -> Subset:
    try:
        return Subset.from_names(alg, names)
    except KeyError as exc:
        raise _Usage(str(exc)) from None


def _cmd_validate(run: _Run) -> None:
    alg = _read_candidate(run.args.file)
    report = validate(alg)
    run.payload["algebra"] = alg.name
    entries = [run.verdict_entry(alg, v) for v in report.verdicts]
    run.payload["verdicts"] = entries
    run.payload["promoted"] = report.algebra is not None
    run.human.append(f"algebra {alg.name} ({alg.n} elements)")
    run.human.extend(run.render_verdict_line(e) for e in entries)
    if report.algebra is not None:
        flags = report.flags
        run.payload["top"] = alg.name_of(report.top)
        run.payload["flags"] = {
            "is_linear": flags.is_linear,
            "is_distributive_lattice": flags.is_distributive_lattice,
            "is_idempotent": flags.is_idempotent,
            "is_residuated_lattice": flags.is_residuated_lattice,
        }
        run.human.append(f"top: {alg.name_of(report.top)}")
        run.human.append(
            "flags: " + " ".join(f"{k}={v}" for k, v in run.payload["flags"].items())
        )
        run.human.append("result: CL-algebra")
    else:
        run.human.append("result: not a CL-algebra")


def _cmd_derive_imp(run: _Run) -> None:
    alg = _read_candidate(run.args.file)
    run.payload["algebra"] = alg.name
    try:
        derived = derive_implication(alg.order, alg.mult_table)
    except NoResidual as exc:
        witness = ["no_residual", alg.name_of(exc.x), alg.name_of(exc.y),
                   [alg.name_of(m) for m in exc.frontier]]
        run.payload["derived"] = None
        run.payload["witness"] = witness
        run.human.append(f"no residual implication exists: witness={witness}")
        run.fail()
        return
    rows = [[alg.name_of(v) for v in row] for row in derived]
    run.payload["derived"] = rows
    run.human.append("derived implication table:")
    run.human.extend("  " + " ".join(r) for r in rows)
    if alg.imp_table is not None:
        mismatches = [
            {
                "x": alg.name_of(x),
                "y": alg.name_of(y),
                "supplied": alg.name_of(alg.imp_table[x][y]),
                "derived": alg.name_of(derived[x][y]),
            }
            for x in range(alg.n)
            for y in range(alg.n)
            if alg.imp_table[x][y] != derived[x][y]
        ]
        run.payload["mismatches"] = mismatches
        if mismatches:
            run.fail()
            run.human.append(f"{len(mismatches)} mismatches against the supplied table:")
            run.human.extend(
                f"  at ({m['x']},{m['y']}): supplied {m['supplied']}, derived {m['derived']}"
                for m in mismatches
            )
        else:
            run.human.append("supplied table matches the derived table")


def _cmd_identities(run: _Run) -> None:
    alg = _read_candidate(run.args.file)
    run.payload["algebra"] = alg.name
    report = validate(alg)
    if report.algebra is None:
        entries = [run.verdict_entry(alg, v) for v in report.verdicts]
        run.payload["verdicts"] = entries
        run.human.append(f"algebra {alg.name} is not a CL-algebra; identities not run")
        run.human.extend(run.render_verdict_line(e) for e in entries)
        run.fail()
        return
    sealed = report.algebra
    suite = run_identity_suite(sealed)
    entries = [run.verdict_entry(sealed, v) for v in suite.values()]
    run.payload["identities"] = entries
    run.human.append(f"algebra {alg.name}: identity suite")
    run.human.extend(run.render_verdict_line(e) for e in entries)
    passed = sum(1 for e in entries if e["status"] == "pass")
    run.human.append(f"result: {passed}/{len(entries)} identities hold")


def _classification_payload(alg, ideal) -> dict:
    flags = classify(alg, ideal)
    return {
        "is_prime": flags.is_prime,
        "is_distributive": flags.is_distributive,
        "is_implicative": flags.is_implicative,
        "is_affine": flags.is_affine,
        "is_zero_downset": flags.is_zero_downset,
    }


def _cmd_ideals(run: _Run) -> None:
    alg = _read_candidate(run.args.file)
    run.payload["algebra"] = alg.name
    if alg.imp_table is None:
        alg = alg.with_imp(derive_implication(alg.order, alg.mult_table))
    if run.args.generate is not None:
        seed = _ideal_subset(alg, run.args.generate)
        ideal = generated_ideal(alg, seed)
        entry = {"ideal": ideal.subset.render(alg)}
        if run.args.classify:
            entry["classification"] = _classification_payload(alg, ideal)
        run.payload["generated"] = entry
        run.human.append(f"generated ideal: {entry['ideal']}")
        if run.args.classify:
            run.human.append("  " + " ".join(f"{k}={v}" for k, v in entry["classification"].items()))
        return
    items = []
    for ideal in all_ideals(alg):
        entry = {"ideal": ideal.subset.render(alg)}
        if run.args.classify:
            entry["classification"] = _classification_payload(alg, ideal)
        items.append(entry)
    run.payload["ideals"] = items
    run.human.append(f"algebra {alg.name}: {len(items)} ideals")
    for entry in items:
        line = f"ideal {entry['ideal']}"
        if run.args.classify:
            line += "  " + " ".join(f"{k}={v}" for k, v in entry["classification"].items())
        run.human.append(line)


def _certified(run: _Run, alg: AlgebraCandidate, names: str):
    subset = _ideal_subset(alg, names)
    verdict = is_ideal(alg, subset)
    if not verdict:
        entry = run.verdict_entry(alg, verdict, ideal_bits=subset.bits)
        run.payload["ideal_check"] = entry
        run.human.append(f"{subset.render(alg)} is not an ideal")
        run.human.append(run.render_verdict_line(entry))
        run.fail()
        return None
    return certify_ideal(alg, subset)


def _cmd_quotient(run: _Run) -> None:
    alg = _read_candidate(run.args.file)
    run.payload["algebra"] = alg.name
    ideal = _certified(run, alg, run.args.ideal)
    if ideal is None:
        return
    try:
        cong = congruence_from_ideal(alg, ideal)
    except NotEquivalence as exc:
        run.payload["congruence"] = {"error": "not_an_equivalence",
                                     "witness": _witness_payload(alg, exc.witness)}
        run.human.append(f"relation is not an equivalence: witness={exc.witness}")
        run.fail()
        return
    classes = [cls.render(alg) for cls in cong.classes]
    cert_entry = run.verdict_entry(alg, cong.certificate,
                                   ideal_bits=ideal.bits, class_index=cong.class_index)
    run.payload["congruence"] = {"classes": classes, "certificate": cert_entry}
    run.human.append(f"congruence modulo {ideal.subset.render(alg)}: {len(classes)} classes")
    for i, cls in enumerate(classes):
        run.human.append(f"  [{alg.name_of(cong.representatives()[i])}] = {cls}")
    run.human.append("certificate: " + cert_entry["status"]
                     + (f" witness={cert_entry['witness']}" if cert_entry["witness"] else "")
                     + (f" replay={cert_entry['replay']}" if cert_entry.get("replay") else ""))
    if not cong.certificate:
        return
    if not (run.args.verify or run.args.dot):
        return
    try:
        quot = build_quotient(alg, ideal, cong)
    except QuotientInvalid as exc:
        detail: dict = {"error": str(exc)}
        if exc.witness is not None:
            detail["witness"] = _witness_payload(alg, exc.witness)
        if exc.report is not None:
            detail["verdicts"] = [run.verdict_entry(alg, v) for v in exc.report.verdicts]
        run.payload["quotient"] = detail
        run.human.append(f"quotient invalid: {exc}")
        run.fail()
        return
    qalg = quot.algebra
    run.payload["quotient"] = {
        "elements": list(qalg.elements),
        "valid": True,
        "text": serialize_algebra(qalg),
    }
    run.human.append(f"quotient algebra ({qalg.n} classes) passes validation")
    if run.args.verify:
        run.human.extend("  " + ln for ln in serialize_algebra(qalg).rstrip().splitlines())
    if run.args.dot:
        Path(run.args.dot).write_text(export_dot(quot), encoding="utf-8")
        run.human.append(f"DOT written to {run.args.dot}")


def _cmd_theorems(run: _Run) -> None:
    alg = _read_candidate(run.args.file)
    run.payload["algebra"] = alg.name
    ideal = _certified(run, alg, run.args.ideal)
    if ideal is None:
        return
    try:
        report = theorem_suite(alg, ideal)
    except (NotEquivalence, NotACongruence) as exc:
        run.payload["error"] = str(exc)
        run.human.append(f"congruence construction failed: {exc}")
        run.fail()
        return
    class_names = [
        f"[{alg.name_of(r)}]" for r in report.congruence.representatives()
    ]

    def claim_witness(c):
        # claim witnesses index quotient classes, not base elements,
        # except the singleton claim which carries a base subset mask
        if c.witness is None:
            return None
        if c.claim == "zero_downset_singleton_classes":
            return [c.witness[0], alg.render_subset(c.witness[1])]
        return [class_names[i] if isinstance(i, int) else i for i in c.witness]

    claims = [
        {"claim": c.claim, "status": c.status, "witness": claim_witness(c)}
        for c in report.claims
    ]
    run.payload["theorems"] = {
        "ideal": ideal.subset.render(alg),
        "certificate": "pass" if report.certificate else "fail",
        "quotient_valid": report.quotient_valid,
        "claims": claims,
    }
    run.human.append(f"theorem suite for ideal {ideal.subset.render(alg)}")
    run.human.append(f"quotient valid: {report.quotient_valid}")
    for c in claims:
        line = f"claim {c['claim']}: {c['status']}"
        if c["witness"]:
            line += f"  witness={c['witness']}"
        run.human.append(line)
    if not report.ok:
        run.fail()


def _cmd_search(run: _Run) -> None:
    config = SearchConfig(
        size=run.args.size,
        max_results=run.args.max_results,
        count_only=run.args.count_only,
    )
    result = run_search(config)
    text = render_search_result(result)
    run.payload["census"] = [
        {"size": r.size, "lattice": r.lattice_index, "count": r.count}
        for r in result.rows
    ]
    run.payload["total"] = result.total
    if not config.count_only:
        run.payload["algebras"] = [serialize_algebra(a) for a in result.algebras]
    run.human.extend(text.rstrip("\n").splitlines())


def _cmd_export_dot(run: _Run) -> None:
    alg = _read_candidate(run.args.file)
    run.payload["algebra"] = alg.name
    text = export_dot(alg)
    run.payload["dot"] = text
    if run.args.output:
        Path(run.args.output).write_text(text, encoding="utf-8")
        run.human.append(f"DOT written to {run.args.output}")
    else:
        run.human.extend(text.rstrip("\n").splitlines())


_HANDLERS = {
    "validate": _cmd_validate,
    "derive-imp": _cmd_derive_imp,
    "identities": _cmd_identities,
    "ideals": _cmd_ideals,
    "quotient": _cmd_quotient,
    "theorems": _cmd_theorems,
    "search": _cmd_search,
    "export-dot": _cmd_export_dot,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clalg",
        description="Finite CL-algebra workbench: validate tables, compute "
                    "ideals and quotients, and enumerate models.",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    def common(p, with_file=True):
        if with_file:
            p.add_argument("file", help="algebra file (.cla)")
        p.add_argument("--json", action="store_true", help="emit the machine-readable report")
        p.add_argument("--replay", action="store_true",
                       help="re-check every printed witness against the tables")

    common(sub.add_parser("validate", help="run the four axiom checks"))
    common(sub.add_parser("derive-imp", help="derive the implication table from residuation"))
    common(sub.add_parser("identities", help="check the derived-law suite"))

    p = sub.add_parser("ideals", help="enumerate (or generate) ideals")
    common(p)
    p.add_argument("--classify", action="store_true", help="classify each ideal")
    p.add_argument("--generate", metavar="LIST",
                   help="comma-separated element names to generate from")

    p = sub.add_parser("quotient", help="congruence and quotient by an ideal")
    common(p)
    p.add_argument("--ideal", metavar="LIST", required=True,
                   help="comma-separated element names of the ideal")
    p.add_argument("--verify", action="store_true",
                   help="build the quotient and print its validated tables")
    p.add_argument("--dot", metavar="PATH", help="write the quotient Hasse diagram")

    p = sub.add_parser("theorems", help="check the quotient theorems for an ideal")
    common(p)
    p.add_argument("--ideal", metavar="LIST", required=True)

    p = sub.add_parser("search", help="enumerate CL-algebras up to isomorphism")
    p.add_argument("--size", type=int, required=True, choices=range(2, 9),
                   metavar="N", help="universe size (2..8)")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--max-results", type=int, metavar="K")
    p.add_argument("--json", action="store_true")
    p.add_argument("--replay", action="store_true")

    p = sub.add_parser("export-dot", help="emit the Hasse diagram as DOT")
    common(p)
    p.add_argument("-o", "--output", metavar="PATH")

    return parser


def run_command(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2

    run = _Run(args, list(argv))
    t0 = time.perf_counter()
    try:
        _HANDLERS[args.cmd](run)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (_Usage, EmptySubset) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NotAnIdeal as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (NoResidual, NotALattice) as exc:
        # the candidate's own structure blocks the requested computation
        print(f"property failure: {exc}", file=sys.stderr)
        return 1
    run.payload["timing_ms"] = round((time.perf_counter() - t0) * 1000.0, 3)
    run.payload["exit_code"] = run.exit_code

    if args.json:
        print(json.dumps(run.payload, indent=2))
    else:
        for line in run.human:
            print(line)
        print(f"exit: {run.exit_code}")
    return run.exit_code


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
