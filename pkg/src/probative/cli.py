"""Command-line front end.

Subcommands: ``validate``, ``infer``, ``lr``, ``fixtures`` and ``serve``.
Models come from a ``.bn`` / ``.json`` file path or from a bundled fixture
via ``--fixture``. Evidence is given as repeated ``--evidence node=state``
flags, the hypothesis as ``--hypothesis node[:positive_state]``.

Exit codes: 0 success, 1 usage error, 2 validation error, 3 inference
error (impossible evidence and kin). Human output rounds to 4 significant
figures; ``--format records`` emits one JSON record per result line with
full precision.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Sequence

from . import service
from .dsl import ModelDocument, load_model_file
from .errors import (
    ImpossibleEvidenceError,
    ModelValidationError,
    ParseError,
    PriorOverrideError,
    ProbativeError,
    SchemaError,
    StructureError,
    UnknownFixtureError,
    UnknownNodeError,
    UnknownStateError,
    ZeroOverZeroError,
)
from .fixtures import fixture_names, load_fixture
from .inference import posterior
from .likelihood import COMPLEMENT, HypothesisQuery, lr_via_inference
from .network import validate_network

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_INFERENCE = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); usage errors are exit 1 here
        raise _UsageError(message)


def _sig4(x: float) -> str:
    if math.isinf(x):
        return "infinite"
    return f"{x:.4g}"


def _parse_probability(text: str) -> float:
    if "/" in text:
        num, _, denom = text.partition("/")
        return float(num) / float(denom)
    return float(text)


def _parse_evidence(pairs: list[str]) -> dict[str, str]:
    evidence: dict[str, str] = {}
    for pair in pairs:
        node, sep, state = pair.partition("=")
        if not sep or not node or not state:
            raise _UsageError(f"evidence must look like node=state, got {pair!r}")
        if node in evidence:
            raise _UsageError(f"evidence lists node {node!r} twice")
        evidence[node] = state
    return evidence


def _load(args) -> ModelDocument:
    if getattr(args, "fixture", None):
        return load_fixture(args.fixture)
    if getattr(args, "model", None):
        return load_model_file(args.model)
    raise _UsageError("give a model file or --fixture NAME")


def _emit_record(payload: dict) -> None:
    print(json.dumps(payload, allow_nan=False))


def _cmd_validate(args) -> int:
    try:
        doc = _load(args)
    except (ParseError, SchemaError) as exc:
        if args.format == "records":
            _emit_record({"type": "validation", "ok": False,
                          "findings": [{"severity": "error", "code": "SYNTAX",
                                        "message": str(exc), "location": ""}]})
        else:
            print(f"syntax error: {exc}")
        return EXIT_VALIDATION
    except ModelValidationError as exc:
        _print_findings(exc.report, args.format)
        return EXIT_VALIDATION
    report = validate_network(doc.model)
    _print_findings(report, args.format)
    return EXIT_OK if report.ok else EXIT_VALIDATION


def _print_findings(report, fmt: str) -> None:
    if fmt == "records":
        _emit_record({
            "type": "validation",
            "ok": report.ok,
            "findings": [
                {"severity": f.severity, "code": f.code,
                 "message": f.message, "location": f.location}
                for f in report.findings
            ],
        })
        return
    if report.ok:
        print("ok")
        return
    for f in report.findings:
        print(f"{f.severity}: {f.code} at {f.location}: {f.message}")


def _cmd_infer(args) -> int:
    doc = _load(args)
    evidence = _parse_evidence(args.evidence)
    queries = args.query or [n.id for n in doc.model.nodes]
    reports = [posterior(doc.model, evidence, q) for q in queries]
    if args.format == "records":
        for rep in reports:
            _emit_record({
                "type": "posterior",
                "model": doc.model.name,
                "node": rep.query_node,
                "distribution": rep.distribution,
                "evidence": rep.evidence,
                "p_evidence": rep.p_evidence,
            })
        return EXIT_OK
    print(f"model: {doc.model.name}")
    shown = " ".join(f"{k}={v}" for k, v in evidence.items()) or "(none)"
    print(f"evidence: {shown}")
    print(f"P(evidence) = {_sig4(reports[0].p_evidence)}")
    for rep in reports:
        states = "  ".join(f"{s}={_sig4(p)}" for s, p in rep.distribution.items())
        print(f"{rep.query_node}: {states}")
    return EXIT_OK


def _cmd_lr(args) -> int:
    doc = _load(args)
    evidence = _parse_evidence(args.evidence)
    node, sep, positive = args.hypothesis.partition(":")
    node_def = doc.model.node(node)
    positive = positive if sep else node_def.states[0]
    negative = args.negative if args.negative else COMPLEMENT
    hypothesis = HypothesisQuery(node=node, positive_state=positive, negative_spec=negative)
    prior = _parse_probability(args.prior) if args.prior else None
    report = lr_via_inference(doc.model, evidence, hypothesis, prior_override=prior)

    if args.format == "records":
        _emit_record({
            "type": "lr",
            "model": doc.model.name,
            "evidence": evidence,
            "hypothesis": {"node": node, "positive_state": positive,
                           "negative_spec": negative},
            "prior_override": prior,
            **report.as_dict(),
        })
        return EXIT_OK

    versus = f"not {positive}" if negative == COMPLEMENT else negative
    print(f"model: {doc.model.name}")
    shown = " ".join(f"{k}={v}" for k, v in evidence.items()) or "(none)"
    print(f"evidence: {shown}")
    print(f"hypothesis: {node}={positive} vs {node}={versus}")
    print(f"LR: {_sig4(report.lr)}")
    if report.log10_lr is not None:
        print(f"log10 LR: {_sig4(report.log10_lr)}")
    print(f"class: {report.probative_class.value}")
    print(f"P(Hp): prior {_sig4(report.prior_positive)} -> posterior {_sig4(report.posterior_positive)}")
    print(f"odds: prior {_sig4(report.prior_odds)} -> posterior {_sig4(report.posterior_odds)}")
    if report.warnings:
        print(f"warnings: {', '.join(report.warnings)}")
    return EXIT_OK


def _cmd_fixtures(args) -> int:
    for name in fixture_names():
        doc = load_fixture(name)
        if args.format == "records":
            _emit_record({
                "type": "fixture",
                "name": name,
                "nodes": len(doc.model.nodes),
                "description": doc.metadata.get("description", ""),
            })
        else:
            print(f"{name}: {doc.metadata.get('description', '')}")
    return EXIT_OK


def _cmd_serve(args) -> int:
    import uvicorn

    app = service.create_app(static_dir=args.ui_dir)
    uvicorn.run(app, host=args.bind, port=args.port, log_level="info")
    return EXIT_OK


def _build_parser() -> _Parser:
    parser = _Parser(prog="probative",
                     description="Bayesian-network evidence evaluation toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_model_source(p, fixture_only=False):
        if not fixture_only:
            p.add_argument("model", nargs="?", help="path to a .bn or .json model file")
        p.add_argument("--fixture", help="name of a bundled fixture")
        p.add_argument("--format", choices=("human", "records"), default="human")

    p = sub.add_parser("validate", help="check a model file and list findings")
    add_model_source(p)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("infer", help="posterior distributions given evidence")
    add_model_source(p)
    p.add_argument("--evidence", action="append", default=[], metavar="NODE=STATE")
    p.add_argument("--query", action="append", default=[], metavar="NODE",
                   help="node(s) to report; default: all nodes")
    p.set_defaults(func=_cmd_infer)

    p = sub.add_parser("lr", help="likelihood ratio of the evidence for a hypothesis")
    add_model_source(p)
    p.add_argument("--evidence", action="append", default=[], metavar="NODE=STATE")
    p.add_argument("--hypothesis", required=True, metavar="NODE[:STATE]",
                   help="hypothesis node; positive state defaults to the first declared state")
    p.add_argument("--negative", metavar="STATE",
                   help="explicit negative state (non-exhaustive pair) instead of the complement")
    p.add_argument("--prior", metavar="P",
                   help="prior override for a parentless hypothesis (decimal or fraction)")
    p.set_defaults(func=_cmd_lr)

    p = sub.add_parser("fixtures", help="list bundled fixtures")
    p.add_argument("--format", choices=("human", "records"), default="human")
    p.set_defaults(func=_cmd_fixtures)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--bind", default="127.0.0.1")
    p.add_argument("--ui-dir", default=None,
                   help="serve a built UI directory at / (optional)")
    p.set_defaults(func=_cmd_serve)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UnknownFixtureError, UnknownNodeError, UnknownStateError,
            PriorOverrideError, StructureError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, SchemaError) as exc:
        print(f"syntax error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except ModelValidationError as exc:
        for f in exc.report.findings:
            print(f"{f.severity}: {f.code} at {f.location}: {f.message}", file=sys.stderr)
        return EXIT_VALIDATION
    except (ImpossibleEvidenceError, ZeroOverZeroError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFERENCE
    except ProbativeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFERENCE


if __name__ == "__main__":
    sys.exit(main())
