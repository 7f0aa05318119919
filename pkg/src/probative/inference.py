"""Exact posterior computation.

Two independent routes are provided on purpose:

* :func:`enumerate_posterior` sums the chain-rule joint probability over
  every completion of the evidence. It is transparent, slow, and serves
  as the ground-truth oracle in tests.
* :func:`posterior` runs variable elimination with a min-fill ordering.
  It must agree with the oracle to 1e-10 per state.

Both raise :class:`ImpossibleEvidenceError` when the evidence has
(effectively) zero probability; factor products are computed in linear
space and anything below 1e-300 is treated as impossible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .errors import ImpossibleEvidenceError, IncompleteAssignmentError
from .network import Evidence, NetworkModel, check_evidence, cpt_lookup

P_EVIDENCE_FLOOR = 1e-300


@dataclass(frozen=True)
class PosteriorReport:
    """Posterior distribution of one node plus the evidence probability."""

    query_node: str
    distribution: dict[str, float]
    evidence: dict[str, str]
    p_evidence: float


@dataclass(frozen=True)
class Factor:
    """Non-negative table over the joint state space of ``scope``."""

    scope: tuple[str, ...]
    values: np.ndarray


def joint_probability(model: NetworkModel, full_assignment: Mapping[str, str]) -> float:
    """Chain-rule probability of one complete assignment.

    The product over all nodes of P(node = assigned state | parents as
    assigned). Every node must be assigned.
    """
    missing = [n.id for n in model.nodes if n.id not in full_assignment]
    if missing:
        raise IncompleteAssignmentError(f"assignment missing nodes: {', '.join(missing)}")
    p = 1.0
    for node in model.nodes:
        p *= cpt_lookup(model, node.id, full_assignment[node.id], full_assignment)
    return p


def _grid(model: NetworkModel):
    """Index-based evaluator structures for fast brute-force enumeration."""
    pos = {n.id: i for i, n in enumerate(model.nodes)}
    per_node = []
    for n in model.nodes:
        parent_pos = [pos[p] for p in n.parents]
        parent_cards = [len(model.node(p).states) for p in n.parents]
        rows = model.table(n.id).rows
        per_node.append((parent_pos, parent_cards, rows))
    return pos, per_node


def _enumerate_query_mass(
    model: NetworkModel, evidence: Evidence, query_node: str
) -> tuple[list[float], float]:
    """Per-query-state evidence-consistent mass and its total."""
    pos, per_node = _grid(model)
    fixed: dict[int, int] = {
        pos[node_id]: model.node(node_id).state_index(state) for node_id, state in evidence.items()
    }
    q = pos[query_node]
    free = [i for i in range(len(model.nodes)) if i not in fixed]
    cards = [len(n.states) for n in model.nodes]

    assignment = [0] * len(model.nodes)
    for i, s in fixed.items():
        assignment[i] = s

    mass = [0.0] * cards[q]
    for combo in itertools.product(*(range(cards[i]) for i in free)):
        for i, s in zip(free, combo):
            assignment[i] = s
        p = 1.0
        for i, (parent_pos, parent_cards, rows) in enumerate(per_node):
            row = 0
            for j, c in zip(parent_pos, parent_cards):
                row = row * c + assignment[j]
            p *= rows[row][assignment[i]]
            if p == 0.0:
                break
        mass[assignment[q]] += p
    return mass, sum(mass)


def enumerate_posterior(model: NetworkModel, evidence: Evidence, query_node: str) -> PosteriorReport:
    """Brute-force posterior: sum the joint over all evidence completions.

    This is the testing oracle; it shares no code with the elimination
    engine beyond CPT storage.
    """
    check_evidence(model, evidence)
    states = model.node(query_node).states
    mass, total = _enumerate_query_mass(model, evidence, query_node)
    if total < P_EVIDENCE_FLOOR:
        raise ImpossibleEvidenceError(f"evidence {dict(evidence)!r} has probability {total!r}")
    return PosteriorReport(
        query_node=query_node,
        distribution={s: m / total for s, m in zip(states, mass)},
        evidence=dict(evidence),
        p_evidence=1.0 if not evidence else min(total, 1.0),
    )


# --- variable elimination -------------------------------------------------


def _node_factor(model: NetworkModel, node_id: str) -> Factor:
    node = model.node(node_id)
    shape = [model.card(p) for p in node.parents] + [len(node.states)]
    values = np.asarray(model.table(node_id).rows, dtype=np.float64).reshape(shape)
    return Factor(scope=tuple(node.parents) + (node_id,), values=values)


def _reduce(factor: Factor, evidence: Evidence, model: NetworkModel) -> Factor:
    """Slice observed variables out of a factor's scope."""
    scope = list(factor.scope)
    values = factor.values
    for node_id in [v for v in scope if v in evidence]:
        axis = scope.index(node_id)
        values = np.take(values, model.node(node_id).state_index(evidence[node_id]), axis=axis)
        scope.pop(axis)
    return Factor(scope=tuple(scope), values=values)


def _expand(factor: Factor, union: tuple[str, ...], model: NetworkModel) -> np.ndarray:
    perm = [factor.scope.index(v) for v in union if v in factor.scope]
    arr = np.transpose(factor.values, perm)
    shape = [model.card(v) if v in factor.scope else 1 for v in union]
    return arr.reshape(shape)


def _multiply(factors: list[Factor], model: NetworkModel) -> Factor:
    union: list[str] = []
    for f in factors:
        for v in f.scope:
            if v not in union:
                union.append(v)
    scope = tuple(union)
    values = _expand(factors[0], scope, model)
    for f in factors[1:]:
        values = values * _expand(f, scope, model)
    return Factor(scope=scope, values=values)


def _sum_out(factor: Factor, var: str) -> Factor:
    axis = factor.scope.index(var)
    return Factor(
        scope=factor.scope[:axis] + factor.scope[axis + 1:],
        values=factor.values.sum(axis=axis),
    )


def _min_fill_order(model: NetworkModel, factors: list[Factor], hidden: list[str]) -> list[str]:
    """Elimination order by the min-fill heuristic, declaration order on ties."""
    adjacency: dict[str, set[str]] = {}
    for f in factors:
        for v in f.scope:
            adjacency.setdefault(v, set()).update(u for u in f.scope if u != v)
    order: list[str] = []
    remaining = [v for v in hidden if v in adjacency]
    isolated = [v for v in hidden if v not in adjacency]

    def fill_count(v: str) -> int:
        neighbors = [u for u in adjacency[v]]
        count = 0
        for i, a in enumerate(neighbors):
            for b in neighbors[i + 1:]:
                if b not in adjacency[a]:
                    count += 1
        return count

    while remaining:
        best = min(remaining, key=fill_count)  # stable: declaration order breaks ties
        order.append(best)
        neighbors = adjacency.pop(best)
        for a in neighbors:
            adjacency[a].discard(best)
            adjacency[a].update(u for u in neighbors if u != a)
        remaining.remove(best)
    return order + isolated


def _eliminate(
    model: NetworkModel, evidence: Evidence, keep: tuple[str, ...]
) -> list[Factor]:
    """Reduce by evidence, then sum out everything outside evidence and keep."""
    factors = [_reduce(_node_factor(model, n.id), evidence, model) for n in model.nodes]
    hidden = [n.id for n in model.nodes if n.id not in evidence and n.id not in keep]
    for var in _min_fill_order(model, factors, hidden):
        involved = [f for f in factors if var in f.scope]
        if not involved:
            continue
        factors = [f for f in factors if var not in f.scope]
        factors.append(_sum_out(_multiply(involved, model), var))
    return factors


def probability_of_evidence(model: NetworkModel, evidence: Evidence) -> float:
    """Marginal probability of the evidence; exactly 1 for no evidence.

    Zero is a legal return here; the posterior operations are the ones
    that convert it into an error.
    """
    check_evidence(model, evidence)
    if not evidence:
        return 1.0
    factors = _eliminate(model, evidence, keep=())
    p = 1.0
    for f in factors:
        p *= float(f.values.sum())
    return min(max(p, 0.0), 1.0)


def posterior(model: NetworkModel, evidence: Evidence, query_node: str) -> PosteriorReport:
    """Posterior of one node by variable elimination (min-fill ordering)."""
    check_evidence(model, evidence)
    node = model.node(query_node)

    factors = _eliminate(model, evidence, keep=(query_node,))
    scalar = 1.0
    over_query: np.ndarray | None = None
    for f in factors:
        if f.scope == ():
            scalar *= float(f.values)
        else:
            arr = f.values if over_query is None else over_query * f.values
            over_query = arr

    if query_node in evidence:
        p_e = scalar if over_query is None else scalar * float(over_query.sum())
        if p_e < P_EVIDENCE_FLOOR:
            raise ImpossibleEvidenceError(f"evidence {dict(evidence)!r} has probability {p_e!r}")
        distribution = {s: 0.0 for s in node.states}
        distribution[evidence[query_node]] = 1.0
    else:
        assert over_query is not None and over_query.shape == (len(node.states),)
        unnormalized = over_query * scalar
        p_e = float(unnormalized.sum())
        if p_e < P_EVIDENCE_FLOOR:
            raise ImpossibleEvidenceError(f"evidence {dict(evidence)!r} has probability {p_e!r}")
        distribution = {s: float(v / p_e) for s, v in zip(node.states, unnormalized)}

    return PosteriorReport(
        query_node=query_node,
        distribution=distribution,
        evidence=dict(evidence),
        p_evidence=1.0 if not evidence else min(p_e, 1.0),
    )
