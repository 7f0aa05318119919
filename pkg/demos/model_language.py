"""
Defining models in text and JSON
================================

Networks are written in a small text language: one block per node with
its states, parents, and one probability row per parent configuration.
Numbers may be exact fractions. Every parse is validated, so a document
in hand always holds a sound network.
"""

from probative import (
    ModelValidationError,
    parse_text,
    posterior,
    serialize_json,
    serialize_text,
)

SOURCE = """
network sprinkler {
  node rain "it rained overnight" {
    states: yes, no;
    cpt {
      [1/5, 4/5];
    }
  }
  node sprinkler "the sprinkler ran" {
    states: on, off;
    parents: rain;
    cpt {
      rain=yes: [0.01, 0.99];
      rain=no: [0.4, 0.6];
    }
  }
  node grass "the grass is wet" {
    states: wet, dry;
    parents: rain, sprinkler;
    cpt {
      rain=yes, sprinkler=on: [0.99, 0.01];
      rain=yes, sprinkler=off: [0.8, 0.2];
      rain=no, sprinkler=on: [0.9, 0.1];
      rain=no, sprinkler=off: [0, 1];
    }
  }
}
"""

doc = parse_text(SOURCE)
print(f"parsed {doc.model.name!r} with nodes", [n.id for n in doc.model.nodes])

# wet grass: did it rain, or did the sprinkler run?
for node in ("rain", "sprinkler"):
    dist = posterior(doc.model, {"grass": "wet"}, node).distribution
    print(f"P({node} | grass wet) =", {s: round(p, 4) for s, p in dist.items()})

# documents round-trip through the canonical text form and through JSON
print("\ncanonical text form:\n")
print(serialize_text(doc))
print("JSON form (first lines):\n")
print("\n".join(serialize_json(doc).splitlines()[:8]), "\n  ...")

# validation failures carry every finding at once
broken = SOURCE.replace("[0.01, 0.99]", "[0.5, 0.6]")
try:
    parse_text(broken)
except ModelValidationError as exc:
    for finding in exc.report.findings:
        print(f"\nrejected: {finding.code} at {finding.location}: {finding.message}")
