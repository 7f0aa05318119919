"""
A single piece of evidence: posteriors, fallacies, and the likelihood ratio
===========================================================================

A trace is recovered at a crime scene and its partial profile occurs in
about 1 in 100 people. The suspect matches. On a closed island with 1000
other candidates, what should that match do to our belief?
"""

from probative import (
    HypothesisQuery,
    cpt_lookup,
    load_fixture,
    lr_from_cpt,
    odds_update,
    posterior,
)

doc = load_fixture("fig3_island")
model = doc.model
print(doc.metadata["description"])
print()

# The model has two nodes: the source hypothesis H and the match evidence E.
# Both likelihoods live in E's conditional table.
p_match_if_source = cpt_lookup(model, "E", "match", {"H": "true"})
p_match_if_not = cpt_lookup(model, "E", "match", {"H": "false"})
print(f"P(match | source)     = {p_match_if_source}")
print(f"P(match | not source) = {p_match_if_not}")

# The prosecutor's fallacy reads P(match | not source) = 1% as
# "P(not source | match) = 1%". Conditioning properly tells another story:
report = posterior(model, {"E": "match"}, "H")
print(f"\nP(source | match)     = {report.distribution['true']:.4f}")
print(f"P(not source | match) = {report.distribution['false']:.4f}   (10/11, not 1/100!)")

# The likelihood ratio packages the evidence's force without the prior.
lr = lr_from_cpt(model, "E", "match", HypothesisQuery("H", "true"))
print(f"\nLR = {lr.lr:.1f} ({lr.probative_class.value})")

# Odds form: posterior odds = prior odds x LR. With 1000 other islanders
# the prior odds are 1/1000, so a LR of 100 leaves the odds at 1 to 10.
posterior_odds = odds_update(1 / 1000, lr.lr)
print(f"posterior odds = 1/1000 x {lr.lr:.0f} = {posterior_odds:.3f}")
print(f"as a probability: {posterior_odds / (1 + posterior_odds):.4f}")

# Strong evidence, and still 10 to 1 against: the prior cannot be ignored.
