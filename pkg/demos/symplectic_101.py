"""
Isotropic, coisotropic and canonical relations
==============================================

"""

from linrel import exactalg as ea
from linrel import relcore as rc
from linrel import symplin as sp
from linrel.exactalg import QQ

# standard form on (q1, q2, p1, p2)
X = sp.standard_space(2, QQ, "X")
q1 = ea.span([[1, 0, 0, 0]], 4)
print("q1 orthogonal:", sp.symp_orthogonal(X, q1))

# relations live in X + Ybar, the source form negated
S = sp.standard_space(1, QQ, "S")
lag = rc.relation(S, S, [[1, 0, 1, 0], [0, 1, 0, 1]])
iso = rc.relation(S, S, [[1, 0, 0, 0]])
coiso = rc.full_relation(S, S)
for name, h in [("diagonal", lag), ("line", iso), ("full", coiso)]:
    print(f"{name:9s}", sp.classify(h))

# isotropic chains never have more excess than defect
chain = [iso, rc.transpose(iso)]
print("isotropic (E, D):", rc.excess_seq(chain), rc.defect_seq(chain))

# the contravariant bridge from isotropic to coisotropic
d = sp.iso_coiso_dual(iso)
print("dual of the line:", sp.classify(d), "dim", d.space.dim)
assert sp.iso_coiso_dual(d) == iso

# cotangent lift of a plain relation is canonical
V = rc.space(1, QQ, "V")
full = rc.full_relation(V, V)
tf = sp.cotangent(full)
print("T*full is", sp.classify(tf))
print("D, E of (T*full, T*full):", rc.defect_pair(tf, tf), rc.excess_pair(tf, tf))
