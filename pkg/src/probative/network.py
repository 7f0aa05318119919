"""Core data model for discrete Bayesian networks.

A network is a directed acyclic graph of named nodes. Each node carries an
ordered list of state labels and a conditional probability table with one
row (a distribution over the node's states) per configuration of its
parents. Rows are ordered lexicographically by declared parent order and
declared state order, so the layout of a table is canonical.

All types are immutable after construction and safe to share between
threads. Problems with a model are *reported* by :func:`validate_network`,
never raised, so that a single pass can surface every defect at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Mapping, Sequence

from .errors import (
    CycleError,
    MissingParentError,
    UnknownNodeError,
    UnknownStateError,
)

ROW_SUM_TOLERANCE = 1e-9

# Hard evidence: node id -> observed state label.
Evidence = Mapping[str, str]


@dataclass(frozen=True)
class NodeDef:
    """A single discrete variable: id, display label, states and parents."""

    id: str
    states: tuple[str, ...]
    parents: tuple[str, ...] = ()
    label: str = ""

    def state_index(self, state: str) -> int:
        try:
            return self.states.index(state)
        except ValueError:
            raise UnknownStateError(f"node {self.id!r} has no state {state!r}") from None


@dataclass(frozen=True)
class ConditionalTable:
    """P(node | parents) as one probability row per parent configuration.

    Rows are ordered with the first declared parent as the most significant
    digit: row index = (((s1 * |p2|) + s2) * |p3| + s3) ... where s_i is the
    index of parent i's state in its declaration order.
    """

    node: str
    rows: tuple[tuple[float, ...], ...]


@dataclass(frozen=True)
class Finding:
    severity: str  # "error" or "warning"
    code: str
    message: str
    location: str


@dataclass(frozen=True)
class ValidationReport:
    findings: tuple[Finding, ...] = ()

    @property
    def ok(self) -> bool:
        return not any(f.severity == "error" for f in self.findings)

    def errors(self) -> list[Finding]:
        return [f for f in self.findings if f.severity == "error"]


@dataclass(frozen=True)
class NetworkModel:
    """An immutable Bayesian network: nodes plus one table per node."""

    name: str
    nodes: tuple[NodeDef, ...]
    tables: tuple[ConditionalTable, ...]

    @cached_property
    def node_map(self) -> dict[str, NodeDef]:
        return {n.id: n for n in self.nodes}

    @cached_property
    def table_map(self) -> dict[str, ConditionalTable]:
        return {t.node: t for t in self.tables}

    @cached_property
    def children(self) -> dict[str, tuple[str, ...]]:
        out: dict[str, list[str]] = {n.id: [] for n in self.nodes}
        for n in self.nodes:
            for p in n.parents:
                if p in out:
                    out[p].append(n.id)
        return {k: tuple(v) for k, v in out.items()}

    def node(self, node_id: str) -> NodeDef:
        try:
            return self.node_map[node_id]
        except KeyError:
            raise UnknownNodeError(f"model {self.name!r} has no node {node_id!r}") from None

    def table(self, node_id: str) -> ConditionalTable:
        self.node(node_id)
        return self.table_map[node_id]

    def card(self, node_id: str) -> int:
        return len(self.node(node_id).states)

    def row_index(self, node_id: str, parent_states: Sequence[int]) -> int:
        """Row number for the given tuple of parent state indexes."""
        node = self.node(node_id)
        idx = 0
        for parent_id, s in zip(node.parents, parent_states):
            idx = idx * self.card(parent_id) + s
        return idx


def replace_table(model: NetworkModel, table: ConditionalTable) -> NetworkModel:
    """A copy of the model with one node's table swapped out."""
    tables = tuple(table if t.node == table.node else t for t in model.tables)
    return NetworkModel(name=model.name, nodes=model.nodes, tables=tables)


def cpt_lookup(
    model: NetworkModel,
    node_id: str,
    state: str,
    parent_assignment: Mapping[str, str],
) -> float:
    """The table entry P(node=state | parents as assigned).

    ``parent_assignment`` must supply a state for every parent of the node;
    entries for other nodes are ignored.
    """
    node = model.node(node_id)
    parent_states = []
    for parent_id in node.parents:
        if parent_id not in parent_assignment:
            raise MissingParentError(
                f"lookup on {node_id!r} is missing a state for parent {parent_id!r}"
            )
        parent_states.append(model.node(parent_id).state_index(parent_assignment[parent_id]))
    row = model.table(node_id).rows[model.row_index(node_id, parent_states)]
    return row[node.state_index(state)]


def check_evidence(model: NetworkModel, evidence: Evidence) -> None:
    """Raise if any evidence entry references an unknown node or state."""
    for node_id, state in evidence.items():
        model.node(node_id).state_index(state)


def topological_order(model: NetworkModel) -> list[str]:
    """Node ids with every node after all of its parents.

    Deterministic: among ready nodes, declaration order wins.
    """
    order: list[str] = []
    placed: set[str] = set()
    remaining = [n for n in model.nodes]
    known = {n.id for n in model.nodes}
    while remaining:
        progressed = False
        still: list[NodeDef] = []
        for n in remaining:
            if all(p in placed or p not in known for p in n.parents):
                order.append(n.id)
                placed.add(n.id)
                progressed = True
            else:
                still.append(n)
        remaining = still
        if not progressed:
            cyclic = ", ".join(n.id for n in remaining)
            raise CycleError(f"graph is cyclic; unresolvable nodes: {cyclic}")
    return order


def validate_network(model: NetworkModel) -> ValidationReport:
    """Check structure and tables, reporting every violation found."""
    findings: list[Finding] = []

    def err(code: str, message: str, location: str) -> None:
        findings.append(Finding("error", code, message, location))

    seen_ids: set[str] = set()
    for node in model.nodes:
        loc = f"node {node.id}"
        if node.id in seen_ids:
            err("DUPLICATE_ID", f"node id {node.id!r} declared more than once", loc)
        seen_ids.add(node.id)
        if len(node.states) < 2:
            err("STATE_COUNT", f"node {node.id!r} declares {len(node.states)} state(s); need at least 2", loc)
        if len(set(node.states)) != len(node.states):
            err("DUPLICATE_STATE", f"node {node.id!r} has repeated state labels", loc)
        seen_parents: set[str] = set()
        for p in node.parents:
            if p == node.id:
                err("SELF_PARENT", f"node {node.id!r} lists itself as a parent", loc)
            elif p in seen_parents:
                err("DUPLICATE_PARENT", f"node {node.id!r} lists parent {p!r} twice", loc)
            seen_parents.add(p)

    ids = {n.id for n in model.nodes}
    for node in model.nodes:
        for p in node.parents:
            if p not in ids:
                err("DANGLING_PARENT", f"parent {p!r} of node {node.id!r} does not exist",
                    f"node {node.id}")

    try:
        topological_order(model)
    except CycleError as exc:
        err("CYCLE", str(exc), "graph")

    tabled: set[str] = set()
    for table in model.tables:
        loc = f"table {table.node}"
        if table.node not in ids:
            err("UNKNOWN_TABLE_NODE", f"table refers to unknown node {table.node!r}", loc)
            continue
        if table.node in tabled:
            err("DUPLICATE_TABLE", f"node {table.node!r} has more than one table", loc)
            continue
        tabled.add(table.node)
        node = model.node_map[table.node]
        expected_rows = 1
        for p in node.parents:
            if p in ids:
                expected_rows *= len(model.node_map[p].states)
        if len(table.rows) != expected_rows:
            err("ARITY_MISMATCH",
                f"table for {table.node!r} has {len(table.rows)} row(s); "
                f"parent configurations require {expected_rows}", loc)
        for i, row in enumerate(table.rows):
            if len(row) != len(node.states):
                err("ROW_WIDTH",
                    f"row {i} of {table.node!r} has {len(row)} entries for {len(node.states)} states",
                    f"{loc} row {i}")
                continue
            if any(not (0.0 <= v <= 1.0) for v in row):
                err("PROB_RANGE", f"row {i} of {table.node!r} has entries outside [0, 1]",
                    f"{loc} row {i}")
            elif abs(sum(row) - 1.0) > ROW_SUM_TOLERANCE:
                err("ROW_SUM", f"row {i} of {table.node!r} sums to {sum(row)!r}, not 1",
                    f"{loc} row {i}")

    for node in model.nodes:
        if node.id not in tabled:
            err("MISSING_TABLE", f"node {node.id!r} has no probability table", f"node {node.id}")

    return ValidationReport(findings=tuple(findings))
