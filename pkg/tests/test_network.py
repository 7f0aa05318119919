import random

import pytest

from probative import (
    ConditionalTable,
    CycleError,
    MissingParentError,
    NetworkModel,
    NodeDef,
    UnknownStateError,
    cpt_lookup,
    load_fixture,
    topological_order,
    validate_network,
)
from util import random_network


def codes(report):
    return {f.code for f in report.findings}


class TestValidation:
    def test_fixture_is_well_formed(self):
        report = validate_network(load_fixture("fig3_island").model)
        assert report.ok
        assert report.findings == ()

    def test_two_cycle(self):
        model = NetworkModel(
            name="loop",
            nodes=(
                NodeDef(id="H", states=("t", "f"), parents=("E",)),
                NodeDef(id="E", states=("t", "f"), parents=("H",)),
            ),
            tables=(
                ConditionalTable(node="H", rows=((0.5, 0.5), (0.5, 0.5))),
                ConditionalTable(node="E", rows=((0.5, 0.5), (0.5, 0.5))),
            ),
        )
        report = validate_network(model)
        assert not report.ok
        assert "CYCLE" in codes(report)

    def test_bad_row_sum_names_row(self):
        model = NetworkModel(
            name="bad",
            nodes=(NodeDef(id="A", states=("a", "b")),),
            tables=(ConditionalTable(node="A", rows=((0.5, 0.6),)),),
        )
        report = validate_network(model)
        assert not report.ok
        finding = next(f for f in report.findings if f.code == "ROW_SUM")
        assert "row 0" in finding.location

    def test_structural_defects_all_reported(self):
        model = NetworkModel(
            name="mess",
            nodes=(
                NodeDef(id="A", states=("x",)),                  # too few states
                NodeDef(id="A", states=("x", "x")),              # duplicate id + state
                NodeDef(id="B", states=("x", "y"), parents=("Z", "B")),  # dangling + self
            ),
            tables=(
                ConditionalTable(node="A", rows=((1.0,),)),
                ConditionalTable(node="B", rows=((0.5, 0.5),)),  # arity unknown, Z dangles
            ),
        )
        report = validate_network(model)
        assert not report.ok
        found = codes(report)
        for expected in ("STATE_COUNT", "DUPLICATE_ID", "DUPLICATE_STATE",
                         "DANGLING_PARENT", "SELF_PARENT"):
            assert expected in found

    def test_arity_and_missing_table(self):
        model = NetworkModel(
            name="m",
            nodes=(
                NodeDef(id="A", states=("a", "b")),
                NodeDef(id="B", states=("a", "b"), parents=("A",)),
            ),
            tables=(ConditionalTable(node="B", rows=((0.5, 0.5),)),),  # needs 2 rows
        )
        report = validate_network(model)
        found = codes(report)
        assert "ARITY_MISMATCH" in found
        assert "MISSING_TABLE" in found

    def test_probability_out_of_range(self):
        model = NetworkModel(
            name="m",
            nodes=(NodeDef(id="A", states=("a", "b")),),
            tables=(ConditionalTable(node="A", rows=((1.5, -0.5),)),),
        )
        assert "PROB_RANGE" in codes(validate_network(model))


class TestTopologicalOrder:
    def test_single_edge(self):
        assert topological_order(load_fixture("fig3_island").model) == ["H", "E"]

    def test_partial_order_constraints(self):
        order = topological_order(load_fixture("fig6_dna_errors").model)
        assert sorted(order) == ["E1", "E2", "H", "H1", "H2"]
        assert order.index("H2") < order.index("H1") < order.index("E1")
        assert order.index("H2") < order.index("E2")
        assert order.index("H") < order.index("E1")

    def test_empty_network(self):
        assert topological_order(NetworkModel(name="empty", nodes=(), tables=())) == []

    def test_cycle_raises(self):
        model = NetworkModel(
            name="loop",
            nodes=(
                NodeDef(id="A", states=("a", "b"), parents=("B",)),
                NodeDef(id="B", states=("a", "b"), parents=("A",)),
            ),
            tables=(),
        )
        with pytest.raises(CycleError):
            topological_order(model)

    def test_random_networks_respect_edges(self):
        rng = random.Random(7)
        for _ in range(50):
            model = random_network(rng, max_nodes=10)
            order = topological_order(model)
            assert sorted(order) == sorted(n.id for n in model.nodes)
            position = {node_id: i for i, node_id in enumerate(order)}
            for node in model.nodes:
                for p in node.parents:
                    assert position[p] < position[node.id]


class TestCptLookup:
    def test_island_values(self):
        model = load_fixture("fig3_island").model
        assert cpt_lookup(model, "E", "match", {"H": "true"}) == 1.0
        assert cpt_lookup(model, "E", "match", {"H": "false"}) == 0.01

    def test_witness_value(self):
        model = load_fixture("fig4b_independent").model
        assert cpt_lookup(model, "E2", "true", {"H": "true"}) == 0.5

    def test_unknown_state(self):
        model = load_fixture("fig3_island").model
        with pytest.raises(UnknownStateError):
            cpt_lookup(model, "E", "maybe", {"H": "true"})
        with pytest.raises(UnknownStateError):
            cpt_lookup(model, "E", "match", {"H": "sideways"})

    def test_missing_parent(self):
        model = load_fixture("fig3_island").model
        with pytest.raises(MissingParentError):
            cpt_lookup(model, "E", "match", {})

    def test_extra_assignments_ignored(self):
        model = load_fixture("fig4b_independent").model
        full = {"H": "false", "E1": "true", "E2": "true"}
        assert cpt_lookup(model, "E2", "true", full) == 0.1

    def test_every_distribution_sums_to_one(self):
        rng = random.Random(11)
        for _ in range(30):
            model = random_network(rng, max_nodes=8)
            for node in model.nodes:
                for row in model.table(node.id).rows:
                    assert abs(sum(row) - 1.0) <= 1e-9


def test_types_are_immutable():
    model = load_fixture("fig3_island").model
    with pytest.raises(AttributeError):
        model.name = "other"
    with pytest.raises(AttributeError):
        model.nodes[0].id = "X"
