"""Textual and JSON model formats.

The text language (``.bn`` files) is deliberately tiny::

    network island {
      node H "source of the trace" {
        states: true, false;
        cpt {
          [1/1001, 1000/1001];
        }
      }
      node E {
        states: match, no_match;
        parents: H;
        cpt {
          H=true: [1, 0];
          H=false: [1/100, 99/100];
        }
      }
    }

Numbers may be decimals or fractions. A node with parents must list one
row per parent configuration, each prefixed with a full assignment of the
parents; there are no implicit defaults. Parentless nodes carry a single
bare probability list.

Syntax problems raise :class:`ParseError` with a position; anything that
parses but does not form a valid network raises
:class:`ModelValidationError` carrying the full finding list, so a parsed
document always holds a model that passes :func:`validate_network`.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field
from typing import Any

from .errors import ModelValidationError, ParseError, SchemaError
from .network import (
    ConditionalTable,
    Finding,
    NetworkModel,
    NodeDef,
    ValidationReport,
    validate_network,
)

FORMAT_VERSION = 1

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<number>\d+(?:\.\d*)?(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?)
  | (?P<string>"(?:[^"\\\n]|\\.)*")
  | (?P<punct>[{}\[\]:;,=/])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str  # ident | number | string | punct | eof
    value: str
    line: int
    column: int


@dataclass
class ModelDocument:
    """A network plus format version and free-form metadata."""

    model: NetworkModel
    format_version: int = FORMAT_VERSION
    metadata: dict[str, Any] = field(default_factory=dict)


def _lex(source: str) -> list[Token]:
    tokens: list[Token] = []
    line, col = 1, 1
    i = 0
    while i < len(source):
        m = _TOKEN_RE.match(source, i)
        if m is None:
            raise ParseError(line, col, "a token", repr(source[i]))
        text = m.group(0)
        if m.lastgroup != "ws":
            tokens.append(Token(m.lastgroup, text, line, col))
        newlines = text.count("\n")
        if newlines:
            line += newlines
            col = len(text) - text.rfind("\n")
        else:
            col += len(text)
        i = m.end()
    tokens.append(Token("eof", "", line, col))
    return tokens


class _Parser:
    def __init__(self, source: str):
        self.tokens = _lex(source)
        self.pos = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def _fail(self, expected: str) -> ParseError:
        tok = self.current
        found = "end of input" if tok.kind == "eof" else repr(tok.value)
        return ParseError(tok.line, tok.column, expected, found)

    def take(self, kind: str, value: str | None = None) -> Token:
        tok = self.current
        if tok.kind != kind or (value is not None and tok.value != value):
            raise self._fail(repr(value) if value is not None else kind)
        self.pos += 1
        return tok

    def at(self, kind: str, value: str | None = None) -> bool:
        tok = self.current
        return tok.kind == kind and (value is None or tok.value == value)

    def keyword(self, word: str) -> Token:
        if not self.at("ident", word):
            raise self._fail(repr(word))
        return self.take("ident")

    def number(self) -> float:
        tok = self.take("number")
        value = float(tok.value)
        if self.at("punct", "/"):
            self.take("punct", "/")
            denom = float(self.take("number").value)
            value = math.inf if denom == 0.0 else value / denom
        return value

    def ident_list(self, minimum: int) -> list[str]:
        items = [self.take("ident").value]
        while self.at("punct", ","):
            self.take("punct", ",")
            items.append(self.take("ident").value)
        if len(items) < minimum:
            raise self._fail(f"at least {minimum} identifiers")
        return items

    def problist(self) -> list[float]:
        self.take("punct", "[")
        values = [self.number()]
        while self.at("punct", ","):
            self.take("punct", ",")
            values.append(self.number())
        self.take("punct", "]")
        return values

    def row(self) -> tuple[dict[str, str] | None, list[float], Token]:
        start = self.current
        assignments: dict[str, str] | None = None
        if self.at("ident"):
            assignments = {}
            while True:
                name = self.take("ident").value
                self.take("punct", "=")
                state = self.take("ident").value
                assignments[name] = state
                if self.at("punct", ","):
                    self.take("punct", ",")
                    continue
                break
            self.take("punct", ":")
        probs = self.problist()
        self.take("punct", ";")
        return assignments, probs, start

    def node(self) -> tuple[NodeDef, list[tuple[dict[str, str] | None, list[float], Token]]]:
        self.keyword("node")
        node_id = self.take("ident").value
        label = ""
        if self.at("string"):
            raw = self.take("string").value
            label = raw[1:-1].replace('\\"', '"').replace("\\\\", "\\")
        self.take("punct", "{")
        self.keyword("states")
        self.take("punct", ":")
        states = self.ident_list(minimum=2)
        self.take("punct", ";")
        parents: list[str] = []
        if self.at("ident", "parents"):
            self.keyword("parents")
            self.take("punct", ":")
            parents = self.ident_list(minimum=1)
            self.take("punct", ";")
        self.keyword("cpt")
        self.take("punct", "{")
        rows = [self.row()]
        while not self.at("punct", "}"):
            rows.append(self.row())
        self.take("punct", "}")
        self.take("punct", "}")
        node = NodeDef(id=node_id, states=tuple(states), parents=tuple(parents), label=label)
        return node, rows

    def network(self) -> tuple[str, list]:
        self.keyword("network")
        name = self.take("ident").value
        self.take("punct", "{")
        parsed = [self.node()]
        while not self.at("punct", "}"):
            parsed.append(self.node())
        self.take("punct", "}")
        if self.current.kind != "eof":
            raise self._fail("end of input")
        return name, parsed


def _assemble_tables(
    nodes: list[NodeDef],
    raw: list[list[tuple[dict[str, str] | None, list[float], Token]]],
) -> tuple[list[ConditionalTable], list[Finding]]:
    node_map = {n.id: n for n in nodes}
    tables: list[ConditionalTable] = []
    findings: list[Finding] = []

    def err(code: str, message: str, location: str) -> None:
        findings.append(Finding("error", code, message, location))

    for node, rows in zip(nodes, raw):
        loc = f"table {node.id}"
        if not node.parents:
            if len(rows) != 1 or rows[0][0] is not None:
                err("ROW_ASSIGNMENT",
                    f"parentless node {node.id!r} needs exactly one bare probability row", loc)
                continue
            tables.append(ConditionalTable(node=node.id, rows=(tuple(rows[0][1]),)))
            continue

        unknown = [p for p in node.parents if p not in node_map]
        if unknown:
            err("DANGLING_PARENT",
                f"node {node.id!r} references undeclared parent(s): {', '.join(unknown)}", loc)
            continue
        cards = [len(node_map[p].states) for p in node.parents]
        expected = math.prod(cards)
        placed: dict[int, tuple[float, ...]] = {}
        trouble = False
        for assignments, probs, tok in rows:
            where = f"{loc} (line {tok.line})"
            if assignments is None:
                err("ROW_ASSIGNMENT",
                    f"node {node.id!r} has parents; every row needs a parent assignment", where)
                trouble = True
                continue
            if set(assignments) != set(node.parents):
                err("ROW_ASSIGNMENT",
                    f"row must assign exactly the parents {list(node.parents)}; "
                    f"got {sorted(assignments)}", where)
                trouble = True
                continue
            index = 0
            bad_state = False
            for p in node.parents:
                parent = node_map[p]
                if assignments[p] not in parent.states:
                    err("ROW_ASSIGNMENT",
                        f"{assignments[p]!r} is not a state of parent {p!r}", where)
                    bad_state = True
                    break
                index = index * len(parent.states) + parent.states.index(assignments[p])
            if bad_state:
                trouble = True
                continue
            if index in placed:
                err("DUPLICATE_ROW", "parent configuration listed twice", where)
                trouble = True
                continue
            placed[index] = tuple(probs)
        if len(placed) != expected and not trouble:
            err("MISSING_ROW",
                f"node {node.id!r} lists {len(placed)} of {expected} parent configurations; "
                "all must be given explicitly", loc)
            trouble = True
        if trouble:
            continue
        tables.append(ConditionalTable(node=node.id, rows=tuple(placed[i] for i in range(expected))))
    return tables, findings


def parse_text(source: str) -> ModelDocument:
    """Parse the text language into a validated document."""
    name, parsed = _Parser(source).network()
    nodes = [node for node, _ in parsed]
    tables, findings = _assemble_tables(nodes, [rows for _, rows in parsed])
    if findings:
        raise ModelValidationError(ValidationReport(findings=tuple(findings)))
    model = NetworkModel(name=name, nodes=tuple(nodes), tables=tuple(tables))
    report = validate_network(model)
    if not report.ok:
        raise ModelValidationError(report)
    return ModelDocument(model=model)


def _quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _format_probs(row: tuple[float, ...]) -> str:
    return "[" + ", ".join(repr(v) for v in row) + "]"


def serialize_text(doc: ModelDocument) -> str:
    """Canonical text form; parsing it back reproduces the model."""
    model = doc.model
    lines = [f"network {model.name} {{"]
    for node in model.nodes:
        head = f"  node {node.id}"
        if node.label:
            head += f" {_quote(node.label)}"
        lines.append(head + " {")
        lines.append(f"    states: {', '.join(node.states)};")
        if node.parents:
            lines.append(f"    parents: {', '.join(node.parents)};")
        lines.append("    cpt {")
        table = model.table(node.id)
        if not node.parents:
            lines.append(f"      {_format_probs(table.rows[0])};")
        else:
            configs = [[]]
            for p in node.parents:
                states = model.node(p).states
                configs = [c + [(p, s)] for c in configs for s in states]
            for i, config in enumerate(configs):
                prefix = ", ".join(f"{p}={s}" for p, s in config)
                lines.append(f"      {prefix}: {_format_probs(table.rows[i])};")
        lines.append("    }")
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"


# --- JSON document format ---------------------------------------------------


def _want(value: Any, kind: type, path: str, what: str) -> Any:
    if not isinstance(value, kind) or (kind is int and isinstance(value, bool)):
        raise SchemaError(path, f"expected {what}")
    return value


def _probability(value: Any, path: str) -> float:
    if isinstance(value, bool):
        raise SchemaError(path, "expected a number or fraction string")
    if isinstance(value, (int, float)):
        return float(value)
    if isinstance(value, str):
        m = re.fullmatch(r"\s*(\d+(?:\.\d*)?)\s*/\s*(\d+(?:\.\d*)?)\s*", value)
        if m:
            denom = float(m.group(2))
            return math.inf if denom == 0.0 else float(m.group(1)) / denom
        raise SchemaError(path, f"not a fraction string: {value!r}")
    raise SchemaError(path, "expected a number or fraction string")


def parse_json(document: str) -> ModelDocument:
    """Parse the JSON document format into a validated document."""
    try:
        data = json.loads(document)
    except json.JSONDecodeError as exc:
        raise SchemaError("", f"not valid JSON: {exc.msg}") from None
    _want(data, dict, "", "an object")
    if "format_version" not in data:
        raise SchemaError("/format_version", "missing")
    version = _want(data["format_version"], int, "/format_version", "an integer")
    if version != FORMAT_VERSION:
        raise SchemaError("/format_version", f"unsupported version {version}")
    if "model" not in data:
        raise SchemaError("/model", "missing")
    raw_model = _want(data["model"], dict, "/model", "an object")
    name = _want(raw_model.get("name", ""), str, "/model/name", "a string")

    if "nodes" not in raw_model:
        raise SchemaError("/model/nodes", "missing")
    raw_nodes = _want(raw_model["nodes"], list, "/model/nodes", "an array")
    nodes = []
    for i, raw in enumerate(raw_nodes):
        path = f"/model/nodes/{i}"
        _want(raw, dict, path, "an object")
        if "id" not in raw:
            raise SchemaError(f"{path}/id", "missing")
        node_id = _want(raw["id"], str, f"{path}/id", "a string")
        states = _want(raw.get("states", []), list, f"{path}/states", "an array")
        states = tuple(_want(s, str, f"{path}/states/{j}", "a string") for j, s in enumerate(states))
        parents = _want(raw.get("parents", []), list, f"{path}/parents", "an array")
        parents = tuple(
            _want(p, str, f"{path}/parents/{j}", "a string") for j, p in enumerate(parents)
        )
        label = _want(raw.get("label", ""), str, f"{path}/label", "a string")
        nodes.append(NodeDef(id=node_id, states=states, parents=parents, label=label))

    if "tables" not in raw_model:
        raise SchemaError("/model/tables", "missing")
    raw_tables = _want(raw_model["tables"], list, "/model/tables", "an array")
    tables = []
    for i, raw in enumerate(raw_tables):
        path = f"/model/tables/{i}"
        _want(raw, dict, path, "an object")
        if "node" not in raw:
            raise SchemaError(f"{path}/node", "missing")
        node_id = _want(raw["node"], str, f"{path}/node", "a string")
        raw_rows = _want(raw.get("rows", []), list, f"{path}/rows", "an array")
        rows = []
        for j, raw_row in enumerate(raw_rows):
            _want(raw_row, list, f"{path}/rows/{j}", "an array")
            rows.append(
                tuple(_probability(v, f"{path}/rows/{j}/{k}") for k, v in enumerate(raw_row))
            )
        tables.append(ConditionalTable(node=node_id, rows=tuple(rows)))

    metadata = _want(data.get("metadata", {}), dict, "/metadata", "an object")

    model = NetworkModel(name=name, nodes=tuple(nodes), tables=tuple(tables))
    report = validate_network(model)
    if not report.ok:
        raise ModelValidationError(report)
    return ModelDocument(model=model, format_version=version, metadata=dict(metadata))


def document_payload(doc: ModelDocument) -> dict[str, Any]:
    """The document as plain JSON-ready data (probabilities as numbers)."""
    model = doc.model
    return {
        "format_version": doc.format_version,
        "model": {
            "name": model.name,
            "nodes": [
                {
                    "id": n.id,
                    "label": n.label,
                    "states": list(n.states),
                    "parents": list(n.parents),
                }
                for n in model.nodes
            ],
            "tables": [
                {"node": t.node, "rows": [list(row) for row in t.rows]} for t in model.tables
            ],
        },
        "metadata": doc.metadata,
    }


def serialize_json(doc: ModelDocument) -> str:
    """Lossless JSON form of a document."""
    return json.dumps(document_payload(doc), indent=2)


def load_model_file(path: str) -> ModelDocument:
    """Read a ``.bn`` or ``.json`` model file, chosen by extension."""
    with open(path, "r", encoding="utf-8") as fh:
        source = fh.read()
    if path.endswith(".json"):
        return parse_json(source)
    return parse_text(source)
