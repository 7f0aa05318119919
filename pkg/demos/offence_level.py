"""
Source-level versus offence-level hypotheses
============================================

Evidence can be strongly probative of "the trace came from the defendant"
while simultaneously undermining "the defendant committed the offence".
The only safe way to read combined evidence against several hypotheses is
to put all of them in one network and ask about each.
"""

from probative import HypothesisQuery, load_fixture, lr_via_inference

# --- a tiny trace cuts both ways -------------------------------------------
doc = load_fixture("fig8_offence")
model = doc.model
source = HypothesisQuery("H", "true")     # defendant is the source
offence = HypothesisQuery("H1", "true")   # defendant committed the assault

print(doc.metadata["description"])
match_only = {"E1": "match"}
full = {"E1": "match", "E2": "tiny"}

for hypothesis, title in ((source, "source"), (offence, "offence")):
    first = lr_via_inference(model, match_only, hypothesis)
    both = lr_via_inference(model, full, hypothesis)
    print(f"\n{title}-level hypothesis:")
    print(f"  match alone:        LR = {first.lr:8.2f}  ({first.probative_class.value})")
    print(f"  match + tiny trace: LR = {both.lr:8.2f}  ({both.probative_class.value})")

# The match supports both hypotheses, but adding the fact that only a tiny
# trace was recovered flips the offence-level reading to the defence side,
# while remaining probative at the source level.

# --- a fuller case: accumulating evidence ----------------------------------
doc = load_fixture("fig11_pub")
model = doc.model
print(f"\n{doc.metadata['description']}")
print(f"prior P(offender) = {1 / 1000}")

stages = [
    ("clean profile match", {"E1": "true", "C": "false", "L": "false"}),
    ("+ witnesses 1 and 3 for the prosecution",
     {"E1": "true", "C": "false", "L": "false", "W1": "similar", "W3": "admission"}),
    ("+ a very reliable contrary witness",
     {"E1": "true", "C": "false", "L": "false", "W1": "similar", "W3": "admission",
      "W2": "not_similar"}),
]
offender = HypothesisQuery("H1", "true")
for title, evidence in stages:
    report = lr_via_inference(model, evidence, offender)
    print(f"{title:42} LR = {report.lr:10.2f}   "
          f"P(offender | evidence) = {report.posterior_positive:.4f}")
