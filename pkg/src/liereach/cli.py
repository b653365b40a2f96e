"""Batch command-line front end.

Each invocation reads one analysis document, runs one command and emits a
JSON result on stdout plus a human-readable summary on stderr (or plain text
on stdout with ``--output text``).  Exit codes: 0 for definite results, 2
for an inconclusive reachability verdict, 1 for any error.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from dataclasses import dataclass

import numpy as np

from .centralizer import transitive_by_dimension
from .document import AnalysisDocument, DocumentOptions, ParseError, parse_document
from .errors import UnresolvedRankError, ValidationError
from .groups import analyze_system
from .reachability import VerdictStatus, decide_reachability
from .states import classify_state, kinematically_equivalent, spectrum

__all__ = ["CommandResult", "main", "run_command"]

COMMANDS = ("analyze-group", "find-j", "classify-state", "kinematic", "reachable", "transitive")


@dataclass(frozen=True)
class CommandResult:
    payload: dict
    summary: str
    exit_code: int


class CommandError(ValueError):
    pass


def _matrix_json(m: np.ndarray) -> list:
    return [[[float(v.real), float(v.imag)] for v in row] for row in m]


def _matrix_text(m: np.ndarray) -> str:
    display = np.asarray(m)
    if np.abs(display.imag).max() < 1e-12:
        display = display.real
    display = np.where(np.abs(display) < 1e-12, 0.0, display)
    return np.array2string(display, precision=6, suppress_small=True)


def _require_system(doc: AnalysisDocument):
    if doc.system is None:
        raise CommandError("this command needs a system block in the document")
    return doc.system


def _require_state(doc: AnalysisDocument, name: str) -> np.ndarray:
    if name not in doc.states:
        known = ", ".join(sorted(doc.states)) or "none"
        raise CommandError(f"unknown state {name!r}; document defines: {known}")
    return doc.states[name]


def _form_json(form) -> dict | None:
    if form is None:
        return None
    return {
        "matrix": _matrix_json(form.matrix),
        "symmetry": form.symmetry.value,
        "nullspace_dim": form.nullspace_dim,
    }


def _cmd_analyze_group(doc: AnalysisDocument, args: list[str]) -> CommandResult:
    system = _require_system(doc)
    analysis = analyze_system(system, tol=doc.options.tolerances)
    group = analysis.group
    payload = {
        "group": {
            "kind": group.kind.value,
            "label": group.label,
            "dim_space": group.dim_space,
            "central_u1": group.central_u1,
            "algebra_dim": group.algebra_dim,
            "diagnostic": group.diagnostic,
        },
        "form": _form_json(analysis.form),
    }
    summary = f"dynamical group: {group.label}, algebra dimension {group.algebra_dim}"
    if analysis.form is not None:
        summary += ("\ninvariant form (" + analysis.form.symmetry.value + "):\n"
                    + _matrix_text(analysis.form.matrix))
    else:
        summary += f"\nno invariant form: {analysis.detail}"
    return CommandResult(payload, summary, 0)


def _cmd_find_j(doc: AnalysisDocument, args: list[str]) -> CommandResult:
    from .groups import invariant_form_search
    from .lie_algebra import traceless_generators

    system = _require_system(doc)
    search = invariant_form_search(traceless_generators(system), tol=doc.options.tolerances)
    payload = {
        "form": _form_json(search.form),
        "nullspace_dim": search.nullspace_dim,
        "detail": search.detail,
    }
    if search.form is not None:
        summary = ("invariant form (" + search.form.symmetry.value + "):\n"
                   + _matrix_text(search.form.matrix))
    else:
        summary = search.detail
    return CommandResult(payload, summary, 0)


def _cmd_classify_state(doc: AnalysisDocument, args: list[str]) -> CommandResult:
    (name,) = args
    rho = _require_state(doc, name)
    tol = doc.options.tolerances
    kind = classify_state(rho, tol=tol)
    spec = spectrum(rho, tol=tol)
    payload = {
        "state": name,
        "class": kind.value,
        "spectrum": {"values": list(spec.values), "multiplicities": list(spec.multiplicities)},
        "ambiguous": spec.ambiguous,
    }
    pairs = ", ".join(f"{w:.6g} (x{m})" for w, m in spec.clusters)
    return CommandResult(payload, f"{name}: {kind.value}; spectrum {pairs}", 0)


def _cmd_kinematic(doc: AnalysisDocument, args: list[str]) -> CommandResult:
    name0, name1 = args
    equal = kinematically_equivalent(
        _require_state(doc, name0), _require_state(doc, name1),
        tol=doc.options.tolerances)
    payload = {"states": [name0, name1], "kinematically_equivalent": equal}
    word = "are" if equal else "are not"
    return CommandResult(payload, f"{name0} and {name1} {word} kinematically equivalent", 0)


def _cmd_reachable(doc: AnalysisDocument, args: list[str]) -> CommandResult:
    name0, name1 = args
    system = _require_system(doc)
    opts = doc.options
    analysis = analyze_system(system, tol=opts.tolerances)
    verdict = decide_reachability(
        analysis, _require_state(doc, name0), _require_state(doc, name1),
        budget=opts.budget, seed=opts.seed, word_length=opts.word_length,
        tol=opts.tolerances)
    payload = {
        "states": [name0, name1],
        "group": analysis.group.label,
        "status": verdict.status.value,
        "witness": None if verdict.witness is None else _matrix_json(verdict.witness),
        "certificate": None if verdict.certificate is None else {
            "kind": verdict.certificate.kind.value,
            "data": json.loads(json.dumps(dict(verdict.certificate.data), default=str)),
        },
        "narrative": verdict.narrative,
    }
    summary = f"{name0} -> {name1}: {verdict.status.value}\n{verdict.narrative}"
    if verdict.witness is not None:
        summary += "\nwitness:\n" + _matrix_text(verdict.witness)
    code = 2 if verdict.status is VerdictStatus.INCONCLUSIVE else 0
    return CommandResult(payload, summary, code)


def _cmd_transitive(doc: AnalysisDocument, args: list[str]) -> CommandResult:
    (name,) = args
    system = _require_system(doc)
    analysis = analyze_system(system, tol=doc.options.tolerances)
    report = transitive_by_dimension(
        _require_state(doc, name), analysis.basis, tol=doc.options.tolerances)
    payload = {
        "state": name,
        "group": analysis.group.label,
        "dim_unitary": report.dim_unitary,
        "dim_algebra": report.dim_algebra,
        "dim_centralizer": report.dim_centralizer,
        "dim_intersection": report.dim_intersection,
        "transitive": report.transitive,
    }
    summary = (f"{name}: dim U(n) - dim S = {report.dim_unitary - report.dim_algebra}, "
               f"dim C - dim(C n S) = {report.dim_centralizer - report.dim_intersection}; "
               f"transitive: {report.transitive}")
    return CommandResult(payload, summary, 0)


_HANDLERS = {
    "analyze-group": (_cmd_analyze_group, 0),
    "find-j": (_cmd_find_j, 0),
    "classify-state": (_cmd_classify_state, 1),
    "kinematic": (_cmd_kinematic, 2),
    "reachable": (_cmd_reachable, 2),
    "transitive": (_cmd_transitive, 1),
}


def run_command(command: str, document: AnalysisDocument,
                args: list[str] | None = None) -> CommandResult:
    """Run one command against a parsed document, returning payload, summary and exit code."""
    args = list(args or [])
    if command not in _HANDLERS:
        raise CommandError(f"unknown command {command!r}; expected one of {COMMANDS}")
    handler, arity = _HANDLERS[command]
    if len(args) != arity:
        raise CommandError(f"{command} takes {arity} state name(s), got {len(args)}")
    result = handler(document, args)
    payload = {"command": command, **result.payload}
    return CommandResult(payload, result.summary, result.exit_code)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liereach",
        description="Classify the dynamical Lie group of a controlled quantum system "
                    "and decide reachability between density matrices.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--file", "-f", default="-",
                        help="analysis document path, or - for stdin (default)")
    common.add_argument("--output", choices=("json", "text"), default="json",
                        help="json: result on stdout, summary on stderr; text: summary only")
    common.add_argument("--tolerance-rank", type=float, default=None)
    common.add_argument("--tolerance-verdict", type=float, default=None)
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--budget", type=int, default=None)

    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("analyze-group", parents=[common],
                   help="closure dimension, group kind and invariant form")
    sub.add_parser("find-j", parents=[common],
                   help="invariant form of the trace-removed generators")
    p = sub.add_parser("classify-state", parents=[common], help="spectral type of one state")
    p.add_argument("name")
    p = sub.add_parser("kinematic", parents=[common],
                       help="kinematical equivalence of two states")
    p.add_argument("name0")
    p.add_argument("name1")
    p = sub.add_parser("reachable", parents=[common],
                       help="dynamical reachability verdict for two states")
    p.add_argument("name0")
    p.add_argument("name1")
    p = sub.add_parser("transitive", parents=[common],
                       help="centralizer dimension formula for one state")
    p.add_argument("name")
    return parser


def _apply_overrides(options: DocumentOptions, ns: argparse.Namespace) -> DocumentOptions:
    tols = options.tolerances
    if ns.tolerance_rank is not None:
        tols = dataclasses.replace(tols, rank=ns.tolerance_rank)
    if ns.tolerance_verdict is not None:
        tols = dataclasses.replace(tols, verdict=ns.tolerance_verdict)
    return DocumentOptions(
        seed=options.seed if ns.seed is None else ns.seed,
        budget=options.budget if ns.budget is None else ns.budget,
        word_length=options.word_length,
        tolerances=tols,
    )


def main(argv: list[str] | None = None) -> int:
    ns = _build_parser().parse_args(argv)
    try:
        text = sys.stdin.read() if ns.file == "-" else open(ns.file, encoding="utf-8").read()
        document = parse_document(text)
        document = AnalysisDocument(
            system=document.system, states=document.states,
            options=_apply_overrides(document.options, ns))
        names = [getattr(ns, key) for key in ("name", "name0", "name1") if hasattr(ns, key)]
        result = run_command(ns.command, document, names)
    except (ParseError, ValidationError, CommandError, UnresolvedRankError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if ns.output == "json":
        print(json.dumps(result.payload, indent=2))
        print(result.summary, file=sys.stderr)
    else:
        print(result.summary)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
