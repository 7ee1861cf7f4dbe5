"""Deciding attainability of a sequence without searching for a matrix.

Over Z2 the attainable epr words are exactly the instances of twenty
anchored templates; over any characteristic-2 field the attainable
pr words of order >= 2 come from three templates.  The classifier also
explains rejections through a rule engine listing every violated
prohibition.
"""

from eprseq import (
    accepted_epr_sequences,
    classify_epr_z2,
    classify_pr_char2,
    rule_violations,
)

for word in ("NSNA", "ASASA", "SSSAN", "NSA", "AAN", "SASSA"):
    print(f"{word:8s} ->", classify_epr_z2(word).render())

print()
print("why is ANSA impossible?")
for hit in rule_violations("ANSA"):
    print("  violated:", hit)

print()
for text in ("0]110", "1]010", "1]00", "0]01"):
    print(f"{text:8s} ->", classify_pr_char2(text).render())

# The accepted sets are tiny: the attainable words thin out quickly
# compared with the 3^n possible words.
print()
for n in range(1, 9):
    count = len(accepted_epr_sequences(n))
    print(f"order {n}: {count:3d} attainable of {3 ** n} words")
