"""Shared builders for the test suite.

Random networks are generated with a cap on the size of the joint state
space so that brute-force enumeration stays cheap; evidence is drawn by
forward sampling, which guarantees it has positive probability.
"""

from __future__ import annotations

import random

from probative import ConditionalTable, NetworkModel, NodeDef


def random_row(rng: random.Random, width: int, allow_zero: bool = False) -> tuple[float, ...]:
    values = [rng.random() + 0.05 for _ in range(width)]
    if allow_zero and width > 1 and rng.random() < 0.15:
        values[rng.randrange(width)] = 0.0
    total = sum(values)
    row = [v / total for v in values]
    row[-1] = 1.0 - sum(row[:-1])
    return tuple(row)


def random_network(
    rng: random.Random,
    max_nodes: int = 12,
    max_states: int = 4,
    max_joint: int = 4096,
    root_binary: bool = False,
    allow_zero: bool = False,
    name: str = "random",
) -> NetworkModel:
    """A random valid DAG whose joint state space has at most ``max_joint`` cells.

    With ``root_binary`` the first node is a parentless binary hypothesis
    with a prior kept away from 0 and 1.
    """
    n = rng.randint(2, max_nodes)
    cards = [2] * n
    joint = 2 ** n
    for i in range(n):
        c = rng.randint(2, max_states)
        if joint // cards[i] * c <= max_joint:
            joint = joint // cards[i] * c
            cards[i] = c
    if root_binary:
        joint = joint // cards[0] * 2
        cards[0] = 2

    nodes = []
    for i in range(n):
        pool = list(range(i))
        k = min(len(pool), rng.choice((0, 1, 1, 2, 2, 3)))
        if root_binary and i == 0:
            k = 0
        parents = tuple(f"n{j}" for j in sorted(rng.sample(pool, k)))
        states = tuple(f"s{s}" for s in range(cards[i]))
        nodes.append(NodeDef(id=f"n{i}", states=states, parents=parents))

    tables = []
    for i, node in enumerate(nodes):
        rows = 1
        for p in node.parents:
            rows *= cards[int(p[1:])]
        if root_binary and i == 0:
            p0 = rng.uniform(0.05, 0.95)
            table_rows = ((p0, 1.0 - p0),)
        else:
            table_rows = tuple(random_row(rng, cards[i], allow_zero) for _ in range(rows))
        tables.append(ConditionalTable(node=node.id, rows=table_rows))
    return NetworkModel(name=name, nodes=tuple(nodes), tables=tuple(tables))


def forward_sample(rng: random.Random, model: NetworkModel) -> dict[str, str]:
    """One full assignment drawn from the network's joint distribution."""
    assignment: dict[str, str] = {}
    for node in model.nodes:  # generator declares parents before children
        idx = model.row_index(
            node.id, [model.node(p).state_index(assignment[p]) for p in node.parents]
        )
        row = model.table(node.id).rows[idx]
        r = rng.random()
        acc = 0.0
        chosen = len(row) - 1
        for s, p in enumerate(row):
            acc += p
            if r < acc:
                chosen = s
                break
        assignment[node.id] = node.states[chosen]
    return assignment


def random_evidence(
    rng: random.Random, model: NetworkModel, exclude: set[str] = frozenset()
) -> dict[str, str]:
    """Evidence with guaranteed positive probability (restriction of a sample)."""
    sample = forward_sample(rng, model)
    candidates = [n.id for n in model.nodes if n.id not in exclude]
    k = rng.randint(0, len(candidates))
    return {node: sample[node] for node in rng.sample(candidates, k)}


def neutralize_hypothesis(model: NetworkModel, hypothesis: str) -> NetworkModel:
    """Remove all influence of one node by duplicating CPT rows across it.

    Every child's rows for other states of the hypothesis are overwritten
    by the rows for its first state, which makes the evidence exactly
    uninformative about the hypothesis.
    """
    new_tables = []
    for table in model.tables:
        node = model.node(table.node)
        if hypothesis not in node.parents:
            new_tables.append(table)
            continue
        parent_cards = [model.card(p) for p in node.parents]
        h_pos = node.parents.index(hypothesis)
        rows = list(table.rows)
        for index in range(len(rows)):
            digits = []
            rest = index
            for c in reversed(parent_cards):
                digits.append(rest % c)
                rest //= c
            digits.reverse()
            if digits[h_pos] != 0:
                digits[h_pos] = 0
                source = 0
                for d, c in zip(digits, parent_cards):
                    source = source * c + d
                rows[index] = table.rows[source]
        new_tables.append(ConditionalTable(node=table.node, rows=tuple(rows)))
    return NetworkModel(name=model.name, nodes=model.nodes, tables=tuple(new_tables))


def relative_trap_model() -> NetworkModel:
    """Three possible trace sources with a marker typical of the relative.

    The marker is equally likely for the suspect and for an unrelated
    person, so the suspect-versus-unrelated ratio is exactly 1 even though
    observing the marker moves both posteriors substantially.
    """
    source = NodeDef(
        id="S",
        states=("suspect", "relative", "unrelated"),
        label="who left the trace",
    )
    marker = NodeDef(
        id="M",
        states=("flagged", "not_flagged"),
        parents=("S",),
        label="familial screening marker flagged",
    )
    return NetworkModel(
        name="relative_trap",
        nodes=(source, marker),
        tables=(
            ConditionalTable(node="S", rows=((0.1, 0.2, 0.7),)),
            ConditionalTable(node="M", rows=((0.1, 0.9), (0.8, 0.2), (0.1, 0.9))),
        ),
    )
