"""
Evidence connected only indirectly to the hypothesis
====================================================

Once collection quality and sample provenance enter the picture, the
evidence nodes are no longer children of the hypothesis and no simple
product formula applies. The ratio is recovered from two inference runs
instead, and it does not depend on the prior placed on the hypothesis.
"""

from probative import (
    HypothesisQuery,
    StructureError,
    combine_dependent,
    load_fixture,
    lr_via_inference,
    posterior,
)

doc = load_fixture("fig6_dna_errors")
model = doc.model
hypothesis = HypothesisQuery("H", "true")
evidence = {"E1": "true", "E2": "false"}

print(doc.metadata["description"])
print()

# the CPT-local route refuses: E1 also depends on an unobserved hypothesis
try:
    combine_dependent(model, evidence, hypothesis)
except StructureError as exc:
    print(f"local formula rejected: {exc}")

# the engine runs the network with and without the evidence and recovers
# the ratio from how the odds moved
report = lr_via_inference(model, evidence, hypothesis)
print(f"\nrecovered LR = {report.lr:.2f}")
print(f"P(H) {report.prior_positive:.4%} -> P(H | evidence) {report.posterior_positive:.4%}")

# The recovered ratio is prior-invariant: sweep the prior and watch the
# posterior move while the LR stays put.
print("\nprior      posterior   LR")
for prior in (1e-4, 1 / 1001, 0.1, 0.5, 0.9):
    swept = lr_via_inference(model, evidence, hypothesis, prior_override=prior)
    print(f"{prior:<10.6f} {swept.posterior_positive:<11.6f} {swept.lr:.6f}")

# For the curious: the full posterior over every node under this evidence.
print()
for node in model.nodes:
    dist = posterior(model, evidence, node.id).distribution
    shown = ", ".join(f"{s}: {p:.4f}" for s, p in dist.items())
    print(f"{node.id:3} {shown}")
