"""Bundled example networks.

Each fixture models a well-known style of evidence-evaluation scenario:
a lone trace match, independent and dependent corroborating evidence,
indirect evidence behind error hypotheses, and offence-level questions.

Fixture metadata records, table by table, which entries are fixed by the
scenario ("stated"), which were chosen freely to complete the model
("reconstructed"), and which were tuned so that a posterior the scenario
fixes is reproduced ("calibrated"). Tests must only pin down numbers that
rest on "stated" entries.
"""

from __future__ import annotations

from importlib import resources
from typing import Any

from .dsl import ModelDocument, parse_text
from .errors import UnknownFixtureError

_METADATA: dict[str, dict[str, Any]] = {
    "fig3_island": {
        "description": "Single trace match on a closed island of 1001 possible sources.",
        "node_roles": {"H": "hypothesis", "E": "evidence"},
        "provenance": {
            "H": "stated: 1 of 1001 candidates",
            "E": "stated: certain match if the trace is the suspect's; 1-in-100 profile otherwise",
        },
        "reconstruction_notes": [],
    },
    "fig4b_independent": {
        "description": "Trace match plus an eye witness; items independent given the hypothesis.",
        "node_roles": {"H": "hypothesis", "E1": "evidence", "E2": "evidence"},
        "provenance": {
            "H": "stated: 1 of 1001 candidates",
            "E1": "stated: trace-match table as in fig3_island",
            "E2": "stated: 0.5 vs 0.1 chance the witness places the defendant at the scene",
        },
        "reconstruction_notes": [],
    },
    "fig5_dependent": {
        "description": "Eye witness already knows the trace-match result (confirmation bias).",
        "node_roles": {"H": "hypothesis", "E1": "evidence", "E2": "evidence"},
        "provenance": {
            "H": "stated: 1 of 1001 candidates",
            "E1": "stated: trace-match table as in fig3_island",
            "E2": "rows with E1=true stated (0.9 / 0.3); rows with E1=false reconstructed "
                  "(0.3 / 0.05) keeping the witness less likely to agree absent a match",
        },
        "reconstruction_notes": [
            "E2 rows for E1=false are not fixed by the scenario; the reconstruction keeps "
            "confirmation more likely after a reported match than without one, under both "
            "hypothesis states.",
        ],
    },
    "fig6_dna_errors": {
        "description": "Trace match filtered through collection and sample-handling uncertainty.",
        "node_roles": {
            "H": "hypothesis", "H1": "hypothesis", "H2": "hypothesis",
            "E1": "evidence", "E2": "evidence",
        },
        "provenance": {
            "H": "stated: 1 of 1001 candidates",
            "H2": "reconstructed: 0.9 that collection was sound",
            "H1": "reconstructed: sample provenance given collection quality",
            "E1": "match row for a true source stated; random-match rate 1/100 stated; "
                  "rows with H1=false reconstructed as the random-match rate",
            "E2": "reconstructed: anomaly on record is rare under sound collection",
        },
        "reconstruction_notes": [
            "Interior tables are not fixed by the scenario, so posterior values computed "
            "from this fixture are illustrative only; ratio identities (prior invariance, "
            "oracle agreement) are what tests may assert.",
        ],
    },
    "fig8_offence": {
        "description": "Offence-level hypothesis above a source-level trace match.",
        "node_roles": {
            "H1": "hypothesis", "H": "hypothesis",
            "E1": "evidence", "E2": "evidence",
        },
        "provenance": {
            "H1": "stated: even prior",
            "H": "row for H1=true reconstructed as certain; row for H1=false calibrated "
                 "(0.2021) so the match evidence alone moves H1 to about 0.8264",
            "E1": "stated: trace-match table with random-match rate 1/100",
            "E2": "rows with H=true stated (tiny trace: 0.1 if the assault occurred, "
                  "0.8 if it did not); rows with H=false reconstructed as uninformative",
        },
        "reconstruction_notes": [
            "The 0.2021 entry is calibrated: with it, observing only the match evidence "
            "puts the offence hypothesis near 82.64%, and adding the tiny-trace evidence "
            "drops it near 37.65%, matching the scenario's reported what-if posteriors.",
        ],
    },
    "fig11_pub": {
        "description": "Pub crime: opportunity priors, error hypotheses, and three witnesses.",
        "node_roles": {
            "A": "hypothesis", "H1": "hypothesis", "H": "hypothesis",
            "C": "hypothesis", "L": "hypothesis",
            "E1": "evidence", "W1": "evidence", "W2": "evidence", "W3": "evidence",
        },
        "provenance": {
            "A": "stated: 1/10 prior of being in the pub (extended scene of 1000)",
            "H1": "stated via decomposition: 1/100 given presence among 100 patrons, "
                  "impossible otherwise; marginal prior 1/1000",
            "H": "calibrated: certain if the suspect offended; 116/999 otherwise, making "
                 "the marginal prior exactly 0.117 as stated",
            "C": "reconstructed: 5% prior of corruption",
            "L": "reconstructed: 2% prior of laboratory error",
            "E1": "profile frequency 1/10000 stated for a clean non-matching source; "
                  "corrupted/error rows reconstructed",
            "W1": "reconstructed: possibly reliable witness",
            "W2": "reconstructed: very reliable witness",
            "W3": "reconstructed: possibly reliable witness",
        },
        "reconstruction_notes": [
            "Witness tables are reconstructed so the what-if narrative behaves as described: "
            "match evidence alone is weakly probative of the offence, adding witnesses 1 "
            "and 3 pushes the offence posterior near 90%, and the very reliable contrary "
            "witness pulls it back down.",
        ],
    },
}

FIXTURE_NAMES = tuple(_METADATA)


def fixture_names() -> tuple[str, ...]:
    return FIXTURE_NAMES


def fixture_source(name: str) -> str:
    """The bundled ``.bn`` source text of a fixture."""
    if name not in _METADATA:
        raise UnknownFixtureError(
            f"unknown fixture {name!r}; available: {', '.join(FIXTURE_NAMES)}"
        )
    return (resources.files(__package__) / "fixtures" / f"{name}.bn").read_text("utf-8")


def load_fixture(name: str) -> ModelDocument:
    """Parse and return a bundled fixture with its provenance metadata."""
    doc = parse_text(fixture_source(name))
    doc.metadata = dict(_METADATA[name])
    return doc
