"""Multiplicities of elementary types in subspace triples and isotropic pairs.

For a triple ``(V, A, B, C)`` with ``B <= A`` only the six one-dimensional
types tau_1, tau_2, tau_4, tau_6, tau_7, tau_8 occur, and their
multiplicities are fixed by the dimensions of a few sums and intersections.
Likewise a pair of isotropic subspaces splits into five symplectic types.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple, Union

from . import exactalg as ea
from . import relcore as rc
from . import symplin as sp
from .exactalg import FieldSpec, LinRelError, Subspace
from .relcore import LinearRelation
from .symplin import SymplecticSpace


class DecompositionError(LinRelError, ValueError):
    pass


@dataclass(frozen=True)
class TripleMultiplicities:
    n1: int
    n2: int
    n4: int
    n6: int
    n7: int
    n8: int

    @property
    def total(self) -> int:
        return self.n1 + self.n2 + self.n4 + self.n6 + self.n7 + self.n8


@dataclass(frozen=True)
class IsoPairMultiplicities:
    n1: int
    n2: int
    n3: int
    n4: int
    n5: int

    @property
    def total(self) -> int:
        return self.n1 + self.n2 + self.n3 + self.n4 + self.n5


def triple_multiplicities(v_dim: int, a: Subspace, b: Subspace, c: Subspace) -> TripleMultiplicities:
    for s in (a, b, c):
        if s.ambient_dim != v_dim:
            raise ea.DimensionMismatchError(f"subspace of dim {s.ambient_dim} in V of dim {v_dim}")
    if not ea.subspace_contains(a, b):
        raise DecompositionError("triple decomposition needs B <= A")
    n8 = ea.intersect(b, c).dim
    a_c = ea.intersect(a, c).dim
    n7 = b.dim - n8
    n6 = a_c - n8
    n4 = a.dim - b.dim - n6
    n2 = c.dim - a_c
    n1 = v_dim - ea.subspace_sum(a, c).dim
    m = TripleMultiplicities(n1, n2, n4, n6, n7, n8)
    if min(n1, n2, n4, n6, n7, n8) < 0 or m.total != v_dim:
        raise DecompositionError(f"inconsistent triple: {m}")
    return m


def isotropic_pair_multiplicities(x: SymplecticSpace, a: Subspace, b: Subspace) -> IsoPairMultiplicities:
    if not (sp.is_isotropic(x, a) and sp.is_isotropic(x, b)):
        raise DecompositionError("isotropic pair decomposition needs isotropic A and B")
    n1 = ea.intersect(a, b).dim
    n2 = ea.intersect(a, sp.symp_orthogonal(x, b)).dim - n1
    n3 = ea.intersect(b, sp.symp_orthogonal(x, a)).dim - n1
    n4 = a.dim - n1 - n2
    n5 = x.half_dim - n1 - n2 - n3 - n4
    if b.dim - n1 - n3 != n4:
        raise DecompositionError("dim B disagrees with the extracted multiplicities")
    m = IsoPairMultiplicities(n1, n2, n3, n4, n5)
    if min(n1, n2, n3, n4, n5) < 0:
        raise DecompositionError(f"negative multiplicity: {m}")
    return m


def ww_indices_from_multiplicities(m: Union[TripleMultiplicities, IsoPairMultiplicities]
                                   ) -> Tuple[int, int, int]:
    """``(defect, excess, shadow dimension)`` predicted by the type tables."""
    if isinstance(m, TripleMultiplicities):
        return m.n1, m.n8, m.n6
    if isinstance(m, IsoPairMultiplicities):
        return m.n1 + m.n2, m.n1, m.n3
    raise TypeError(f"unsupported multiplicities {m!r}")


# -- the subspace configurations attached to a composable pair -------------------

def pair_triple(f: LinearRelation, g: LinearRelation):
    """``(dim V, X x Diag_Y x Z, 0 x Diag_Y x 0, f x g)`` in ``V = X + Y + Y + Z``."""
    rc._check_composable(f, g)
    dims = [f.target.dim, f.source.dim, g.source.dim]
    fld = f.field
    outer = rc._diagonal_block(fld, dims, True)
    inner = rc._diagonal_block(fld, dims, False)
    prod = ea.direct_sum(f.space, g.space)
    return prod.ambient_dim, outer, inner, prod


def pair_isotropic(f: LinearRelation, g: LinearRelation):
    """``(X + Ybar + Y + Zbar, 0 x Diag_Y x 0, f x g)`` for a composable pair."""
    rc._check_composable(f, g)
    amb = sp.ambient_space(f).oplus(sp.ambient_space(g))
    inner = rc._diagonal_block(f.field, [f.target.dim, f.source.dim, g.source.dim], False)
    return amb, inner, ea.direct_sum(f.space, g.space)


def lrel_pair_indices(f: LinearRelation, g: LinearRelation) -> Tuple[int, int, int]:
    return ww_indices_from_multiplicities(triple_multiplicities(*pair_triple(f, g)))


def ilrel_pair_indices(f: LinearRelation, g: LinearRelation) -> Tuple[int, int, int]:
    return ww_indices_from_multiplicities(isotropic_pair_multiplicities(*pair_isotropic(f, g)))


# -- elementary models ---------------------------------------------------------

_TRIPLE_TYPES = {
    # (A, B, C) on a line: True means the whole line
    "n1": (False, False, False),
    "n2": (False, False, True),
    "n4": (True, False, False),
    "n6": (True, False, True),
    "n7": (True, True, False),
    "n8": (True, True, True),
}


def elementary_triple(m: TripleMultiplicities, fld: FieldSpec):
    """A coordinate model ``(dim V, A, B, C)`` realising ``m``."""
    n = m.total
    coords = {"A": [], "B": [], "C": []}
    i = 0
    for name, (in_a, in_b, in_c) in _TRIPLE_TYPES.items():
        for _ in range(getattr(m, name)):
            for key, flag in zip("ABC", (in_a, in_b, in_c)):
                if flag:
                    coords[key].append(i)
            i += 1
    a, b, c = (ea.coordinate_subspace(n, coords[k], fld) for k in "ABC")
    return n, a, b, c


def elementary_isotropic_pair(m: IsoPairMultiplicities, fld: FieldSpec):
    """A model ``(standard space, A, B)`` realising ``m`` on Darboux pairs ``(q_i, p_i)``."""
    n = m.total
    x = sp.standard_space(n, fld)
    a, b = [], []
    i = 0
    for name in ("n1", "n2", "n3", "n4", "n5"):
        for _ in range(getattr(m, name)):
            q, p = i, n + i
            if name in ("n1", "n2", "n4"):
                a.append(q)
            if name in ("n1", "n3"):
                b.append(q)
            elif name == "n4":
                b.append(p)
            i += 1
    return x, ea.coordinate_subspace(2 * n, a, fld), ea.coordinate_subspace(2 * n, b, fld)
