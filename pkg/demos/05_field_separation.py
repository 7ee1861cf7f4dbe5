"""Not every characteristic-2 field attains the same epr words.

pr-sequences cannot tell characteristic-2 fields apart, but epr words
can: AAN is attainable over GF(4) and impossible over Z2 (a Z2 matrix
whose word starts AA must be the identity).  Six GF(4) fixtures attain
words that the Z2 classifier provably rejects.
"""

from pathlib import Path

from eprseq import GF4, classify_epr_z2, compute_epr, enumerate_epr, read_matrix

DATA = Path(__file__).resolve().parent.parent / "tests" / "data"

for name in ("aan", "assan", "nansnn", "saaa", "sasn", "sassa"):
    matrix = read_matrix((DATA / f"{name}.txt").read_text())
    word = compute_epr(matrix)
    verdict = classify_epr_z2(word)
    print(f"{word:8s} attained over gf4, over Z2: {verdict.render()}")

# The separation is visible in the order-3 catalogs themselves.
gf4 = enumerate_epr(3, GF4)
gf2 = enumerate_epr(3)
only_gf4 = sorted(set(gf4.counts) - set(gf2.counts))
print()
print("order-3 words attained over gf4 but not gf2:", only_gf4)
