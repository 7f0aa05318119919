"""
Combining several pieces of evidence
====================================

When every item of evidence is independent given the hypothesis, the
combined likelihood ratio is just the product of the individual ones.
When one item influences another (say, a witness who already knows the
forensic result), the product must use localized ratios instead; both
are read straight off the conditional tables.
"""

from probative import (
    HypothesisQuery,
    combine_dependent,
    combine_independent,
    load_fixture,
    lr_from_cpt,
    lr_via_inference,
)

hypothesis = HypothesisQuery("H", "true")

# --- independent case: a trace match and an eye witness -------------------
independent = load_fixture("fig4b_independent").model
lr_match = lr_from_cpt(independent, "E1", "true", hypothesis).lr
lr_witness = lr_from_cpt(independent, "E2", "true", hypothesis).lr
print(f"trace match alone:  LR = {lr_match:.0f}")
print(f"eye witness alone:  LR = {lr_witness:.0f}")
print(f"product:            LR = {combine_independent([lr_match, lr_witness]):.0f}")

# the inference engine agrees, as it must
engine = lr_via_inference(independent, {"E1": "true", "E2": "true"}, hypothesis)
print(f"inference route:    LR = {engine.lr:.0f}")

# --- dependent case: the witness knows the forensic result ----------------
# Confirmation bias makes agreement cheaper, so the combined evidence is
# weaker than the independent product (300 versus 500).
dependent = load_fixture("fig5_dependent").model
both = combine_dependent(dependent, {"E1": "true", "E2": "true"}, hypothesis)
print(f"\ndependent witness, both items observed: LR = {both.lr:.0f}")

# --- conflicting evidence --------------------------------------------------
# The witness, despite knowing about the match, does not place the
# defendant at the scene. The same machinery handles the conflict.
conflict = combine_dependent(dependent, {"E1": "true", "E2": "false"}, hypothesis)
print(f"dependent witness disagrees:            LR = {conflict.lr:.1f}")

conflict_indep = combine_independent([
    lr_match,
    lr_from_cpt(independent, "E2", "false", hypothesis).lr,
])
print(f"(if they had been independent:          LR = {conflict_indep:.1f})")
