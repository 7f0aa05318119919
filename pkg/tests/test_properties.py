"""Property-based checks of the core invariants."""

import itertools
import math

import pytest
from hypothesis import given, settings, strategies as st

from probative import (
    ConditionalTable,
    HypothesisQuery,
    ModelDocument,
    ModelValidationError,
    NetworkModel,
    NodeDef,
    ParseError,
    cpt_lookup,
    enumerate_posterior,
    joint_probability,
    lr_via_inference,
    parse_text,
    posterior,
    serialize_text,
    topological_order,
    validate_network,
)


@st.composite
def networks(draw, max_nodes=6, max_states=3, root_binary=False):
    n = draw(st.integers(2, max_nodes))
    cards = [draw(st.integers(2, max_states)) for _ in range(n)]
    if root_binary:
        cards[0] = 2
    nodes = []
    tables = []
    for i in range(n):
        if i == 0 or (root_binary and i == 0):
            parents: tuple[str, ...] = ()
        else:
            k = draw(st.integers(0, min(i, 2)))
            picks = draw(st.permutations(range(i)))[:k]
            parents = tuple(f"n{j}" for j in sorted(picks))
        states = tuple(f"s{s}" for s in range(cards[i]))
        nodes.append(NodeDef(id=f"n{i}", states=states, parents=parents))
        row_count = 1
        for p in parents:
            row_count *= cards[int(p[1:])]
        rows = []
        for _ in range(row_count):
            raw = draw(st.lists(
                st.floats(0.05, 1.0, allow_nan=False), min_size=cards[i], max_size=cards[i]
            ))
            total = sum(raw)
            row = [v / total for v in raw]
            row[-1] = 1.0 - sum(row[:-1])
            rows.append(tuple(row))
        tables.append(ConditionalTable(node=f"n{i}", rows=tuple(rows)))
    return NetworkModel(name="prop", nodes=tuple(nodes), tables=tuple(tables))


def draw_evidence(draw, model, exclude=frozenset()):
    candidates = [n for n in model.nodes if n.id not in exclude]
    chosen = draw(st.lists(st.sampled_from(candidates), unique_by=lambda n: n.id,
                           max_size=len(candidates))) if candidates else []
    return {
        n.id: n.states[draw(st.integers(0, len(n.states) - 1))] for n in chosen
    }


@st.composite
def networks_with_evidence(draw, **kwargs):
    model = draw(networks(**kwargs))
    exclude = {"n0"} if kwargs.get("root_binary") else frozenset()
    return model, draw_evidence(draw, model, exclude)


@given(networks())
def test_generated_networks_validate(model):
    assert validate_network(model).ok


@given(networks())
def test_topological_order_is_edge_respecting_permutation(model):
    order = topological_order(model)
    assert sorted(order) == sorted(n.id for n in model.nodes)
    position = {node: i for i, node in enumerate(order)}
    for node in model.nodes:
        for p in node.parents:
            assert position[p] < position[node.id]


@given(networks(max_nodes=5))
def test_joint_distribution_sums_to_one(model):
    spaces = [n.states for n in model.nodes]
    ids = [n.id for n in model.nodes]
    total = sum(
        joint_probability(model, dict(zip(ids, combo)))
        for combo in itertools.product(*spaces)
    )
    assert total == pytest.approx(1.0, abs=1e-9)


@given(networks())
def test_every_cpt_row_reachable_and_normalized(model):
    for node in model.nodes:
        parent_spaces = [model.node(p).states for p in node.parents]
        for combo in itertools.product(*parent_spaces):
            assignment = dict(zip(node.parents, combo))
            total = sum(cpt_lookup(model, node.id, s, assignment) for s in node.states)
            assert total == pytest.approx(1.0, abs=1e-9)


@settings(deadline=None)
@given(networks_with_evidence())
def test_elimination_agrees_with_enumeration(case):
    model, evidence = case
    for node in model.nodes:
        fast = posterior(model, evidence, node.id)
        slow = enumerate_posterior(model, evidence, node.id)
        for state in node.states:
            assert abs(fast.distribution[state] - slow.distribution[state]) <= 1e-10
        assert fast.p_evidence == pytest.approx(slow.p_evidence, rel=1e-9)


@settings(deadline=None)
@given(networks_with_evidence(root_binary=True))
def test_lr_sign_matches_posterior_shift(case):
    model, evidence = case
    report = lr_via_inference(model, evidence, HypothesisQuery("n0", "s0"))
    if not math.isfinite(report.lr):
        return
    if report.lr > 1 + 1e-9:
        assert report.posterior_positive > report.prior_positive - 1e-9
    elif report.lr < 1 - 1e-9:
        assert report.posterior_positive < report.prior_positive + 1e-9
    else:
        assert report.posterior_positive == pytest.approx(report.prior_positive, abs=1e-9)


@settings(deadline=None)
@given(networks_with_evidence(root_binary=True))
def test_lr_invariant_under_prior_override(case):
    model, evidence = case
    hq = HypothesisQuery("n0", "s0")
    values = [
        lr_via_inference(model, evidence, hq, prior_override=p).lr
        for p in (1e-4, 0.5, 0.9)
    ]
    base = values[0]
    for v in values[1:]:
        assert v == pytest.approx(base, rel=1e-9)


@given(networks())
def test_text_serialization_round_trips(model):
    doc = ModelDocument(model=model)
    again = parse_text(serialize_text(doc)).model
    assert [n.id for n in again.nodes] == [n.id for n in model.nodes]
    for ta, tb in zip(model.tables, again.tables):
        for ra, rb in zip(ta.rows, tb.rows):
            for x, y in zip(ra, rb):
                assert x == pytest.approx(y, abs=1e-12)


@given(st.text(max_size=200))
def test_parser_never_crashes(text):
    try:
        parse_text(text)
    except (ParseError, ModelValidationError):
        pass
