"""
The central extension by (defect, excess)
=========================================

"""

from linrel import gen
from linrel import relcore as rc
from linrel import wwcat as ww
from linrel.exactalg import GF

F7 = GF(7)
rng = gen.rng_from_seed(2024)

# a WW morphism is a shadow plus two counters
a, b, c = gen.random_ww_chain(rng, F7, "ILREL", 3, 2)
for m in (a, b, c):
    print(m.tag.value, "dims", m.target.dim, "<-", m.source.dim, " D, E =", m.defect, m.excess)

# composition adds the pair indices as a cocycle, and it is associative
left = (a @ b) @ c
right = a @ (b @ c)
print("associative:", left == right, " D, E =", left.defect, left.excess)

# a chain collapses to its composite and its sequence indices
links = gen.random_tagged_chain(rng, F7, 3, 2, "CLREL")
m = ww.ww_from_chain(links, "CLREL")
print("chain ->", (m.defect, m.excess), "shadow dim", m.shadow.space.dim)

# every morphism is a reduction followed by a coreduction
A, B = ww.ww_two_term(m)
print("middle object dim:", A.source.dim)
print(ww.verify_two_term(m, A, B))

# unit endomorphisms: a free commutative monoid on two generators
u = ww.UnitEndo("CLREL", 1, 4)
print("generators:", [g.as_pair() for g in ww.unit_generators("CLREL")])
print("(1, 4) =", {g.as_pair(): k for g, k in ww.decompose_unit(u).items()})
assert rc.compose(A, B) == m.shadow
