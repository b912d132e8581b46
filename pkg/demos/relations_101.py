"""
Linear relations, excess and defect
===================================

"""

from linrel import exactalg as ea
from linrel import relcore as rc
from linrel.exactalg import GF, QQ

# a relation X <- Y is a subspace of X + Y, stored by its RREF basis
X = rc.space(2, QQ, "X")
Y = rc.space(2, QQ, "Y")
f = rc.graph_of_map([[1, 2], [2, 4]], X, Y)
print("f =", f.space)

# the four canonical subspaces
print("ker  f:", rc.kernel(f))
print("Dom  f:", rc.domain(f))
print("Im   f:", rc.image(f))
print("Ind  f:", rc.indeterminacy(f))

# composing with the transpose
g = rc.transpose(f)
print("f g  =", rc.compose(f, g).space)
print("E(f, g) =", rc.excess_pair(f, g), " D(f, g) =", rc.defect_pair(f, g))

# over GF(2) the excess counts trajectories: 2**E paths join 0 to 0
F2 = GF(2)
x = rc.space(1, F2)
full = rc.full_relation(x, x)
chain = [full, full, full]
print("excess of (full, full, full):", rc.excess_seq(chain))

# every bracketing accumulates the same indices
for br in rc.parenthesizations(3):
    h, e, d = rc.accumulate(chain, br)
    print(br, "->", (e, d))

# the dual swaps excess and defect
zero = rc.zero_relation(x, x)
pair = [zero, zero]
duals = [rc.dual(r) for r in reversed(pair)]
print("E, D of (0, 0):", rc.excess_seq(pair), rc.defect_seq(pair))
print("E, D of duals :", rc.excess_seq(duals), rc.defect_seq(duals))

# factor f through its image and domain
c, i, r = rc.natural_factorization(f)
print("middle dims:", c.source.dim, r.target.dim)
assert rc.compose_chain([c, i, r]) == f
print("six invariants:", rc.iso_invariants(f).as_tuple())

# annihilators are the coordinate picture of dual spaces
print("annihilator of Im f:", ea.annihilator(rc.image(f)))
