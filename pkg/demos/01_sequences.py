"""Computing epr- and pr-sequences of symmetric matrices.

The epr-sequence of an order-n symmetric matrix records, for each order
k, whether All / Some-but-not-all / None of the order-k principal minors
are nonzero.  The pr-sequence keeps one bit per order plus a flag for a
zero diagonal entry.
"""

from eprseq import (
    GF4,
    SymMatrix,
    complete_graph,
    compute_epr,
    compute_pr,
    identity,
    loop_split_graph,
    perfect_matching,
    pr_of_epr,
)

# The identity has every principal minor equal to 1: all letters A.
eye = identity(4)
print("identity(4)           ", compute_epr(eye), compute_pr(eye))

# The complete graph alternates: odd orders singular, even orders not.
k5 = complete_graph(5)
print("complete_graph(5)     ", compute_epr(k5), compute_pr(k5))

# A perfect matching has no odd nonzero minors at all.
m = perfect_matching(6)
print("perfect_matching(6)   ", compute_epr(m), compute_pr(m))

# One unit diagonal entry among zeros makes the first letter S.
r = loop_split_graph(4, 1)
print("loop_split_graph(4,1) ", compute_epr(r), compute_pr(r))

# The pr-sequence is always the letterwise shadow of the epr-sequence.
word = compute_epr(r)
assert compute_pr(r) == pr_of_epr(word, r.has_zero_diagonal())

# Everything works the same over GF(4) = {0, 1, z, w}; entries are the
# integers 0..3 with z = 2 and w = z + 1 = 3.
z, w = 2, 3
gf4_matrix = SymMatrix(GF4, [[1, z, w], [z, 1, 0], [w, 0, 1]])
print("gf4 3x3               ", compute_epr(gf4_matrix))
