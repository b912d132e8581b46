"""Seeded random instances for property suites.

Every generator takes a ``random.Random`` (Mersenne Twister) so equal seeds
give equal instances on every platform.  Scalars are drawn from a small,
zero-heavy set so that random relations are degenerate often enough to
exercise nonzero excess and defect.
"""
from __future__ import annotations

import random
from fractions import Fraction
from typing import List, Optional

from . import exactalg as ea
from . import relcore as rc
from . import symplin as sp
from . import wwcat as ww
from .exactalg import FieldSpec, Subspace
from .relcore import LinearRelation, VectorSpaceObj
from .symplin import SymplecticSpace

_Q_POOL = (0, 0, 0, 0, 1, 1, -1, 2, -2, 3, Fraction(1, 2), Fraction(-2, 3))


def rng_from_seed(seed: int) -> random.Random:
    if not 0 <= seed < 2 ** 64:
        raise ValueError("seed must be a 64-bit unsigned integer")
    return random.Random(seed)


def random_scalar(rng: random.Random, fld: FieldSpec, nonzero: bool = False):
    p = fld.characteristic
    while True:
        if p == 0:
            v = fld(rng.choice(_Q_POOL))
        else:
            v = 0 if rng.random() < 0.4 else rng.randrange(p)
        if v or not nonzero:
            return v


def random_vector(rng: random.Random, fld: FieldSpec, n: int) -> list:
    return [random_scalar(rng, fld) for _ in range(n)]


def random_subspace(rng: random.Random, fld: FieldSpec, n: int, dim: Optional[int] = None) -> Subspace:
    """Row space of ``dim`` random vectors (so possibly smaller than ``dim``)."""
    if dim is None:
        dim = rng.randint(0, n)
    return ea.span([random_vector(rng, fld, n) for _ in range(dim)], n, fld)


def random_vector_in(rng: random.Random, sub: Subspace) -> list:
    fld = sub.field
    v = [fld.zero] * sub.ambient_dim
    p = fld.characteristic
    for row in sub.basis:
        c = random_scalar(rng, fld)
        if c:
            v = [x + c * y for x, y in zip(v, row)]
    return [x % p for x in v] if p else v


def random_invertible(rng: random.Random, fld: FieldSpec, n: int, steps: int = None) -> tuple:
    """Product of random elementary row operations applied to the identity."""
    m = [list(r) for r in ea.unit_vectors(n, fld)]
    p = fld.characteristic
    for _ in range(steps if steps is not None else 3 * n):
        if n < 2:
            break
        i, j = rng.sample(range(n), 2)
        kind = rng.random()
        if kind < 0.2:
            m[i], m[j] = m[j], m[i]
        elif kind < 0.35:
            c = random_scalar(rng, fld, nonzero=True)
            m[i] = [(c * x) % p if p else c * x for x in m[i]]
        else:
            c = random_scalar(rng, fld, nonzero=True)
            m[i] = [((x + c * y) % p if p else x + c * y) for x, y in zip(m[i], m[j])]
    return tuple(tuple(r) for r in m)


def random_object(rng: random.Random, fld: FieldSpec, max_dim: int, name: str = "") -> VectorSpaceObj:
    return VectorSpaceObj(rng.randint(0, max_dim), fld, name)


def random_relation(rng: random.Random, x: VectorSpaceObj, y: VectorSpaceObj) -> LinearRelation:
    fld = x.field
    roll = rng.random()
    if roll < 0.06:
        return rc.zero_relation(x, y)
    if roll < 0.12:
        return rc.full_relation(x, y)
    if roll < 0.2 and x.dim == y.dim:
        return rc.identity(x)
    if roll < 0.25:
        return rc.graph_of_map([random_vector(rng, fld, y.dim) for _ in range(x.dim)], x, y)
    if roll < 0.3:
        back = rc.graph_of_map([random_vector(rng, fld, x.dim) for _ in range(y.dim)], y, x)
        return rc.transpose(back)
    return LinearRelation(x, y, random_subspace(rng, fld, x.dim + y.dim))


def random_chain(rng: random.Random, fld: FieldSpec, length: int, max_dim: int) -> List[LinearRelation]:
    objs = [random_object(rng, fld, max_dim, f"X{i}") for i in range(length + 1)]
    return [random_relation(rng, objs[i], objs[i + 1]) for i in range(length)]


# -- symplectic ---------------------------------------------------------------

def random_symplectomorphism(rng: random.Random, x: SymplecticSpace, steps: int = None) -> tuple:
    """Product of symplectic transvections ``v -> v + c omega(u, v) u``."""
    fld = x.field
    n = x.dim
    p = fld.characteristic
    m = ea.unit_vectors(n, fld)
    for _ in range(steps if steps is not None else 2 * n):
        u = random_vector(rng, fld, n)
        if not any(u):
            continue
        c = random_scalar(rng, fld, nonzero=True)
        wu = ea.mat_vec(ea.transpose_matrix(x.form), u, fld)  # row vector u^T form
        t = tuple(tuple((int(i == j) + c * u[i] * wu[j]) % p if p else
                        fld(int(i == j)) + c * u[i] * wu[j] for j in range(n)) for i in range(n))
        m = ea.mat_mul(t, m, fld)
    return m


def random_symplectic_space(rng: random.Random, fld: FieldSpec, half_dim: int,
                            name: str = "", twist: float = 0.0) -> SymplecticSpace:
    """Standard space, with probability ``twist`` rewritten in a random basis."""
    x = sp.standard_space(half_dim, fld, name)
    if half_dim and rng.random() < twist:
        pm = random_invertible(rng, fld, x.dim)
        form = ea.mat_mul(ea.mat_mul(ea.transpose_matrix(pm), x.form, fld), pm, fld)
        x = SymplecticSpace(x.dim, fld, name, form)
    return x


def random_isotropic(rng: random.Random, x: SymplecticSpace, dim: Optional[int] = None) -> Subspace:
    """Grow an isotropic subspace one vector at a time inside its own orthogonal."""
    fld = x.field
    if dim is None:
        dim = rng.randint(0, x.half_dim)
    a = ea.zero_subspace(x.dim, fld)
    while a.dim < dim:
        orth = sp.symp_orthogonal(x, a)
        v = None
        for _ in range(8):
            cand = random_vector_in(rng, orth)
            if not ea.contains(a, cand):
                v = cand
                break
        if v is None:
            v = next(r for r in orth.basis if not ea.contains(a, r))
        a = ea.subspace_sum(a, ea.span([v], x.dim, fld))
    return a


def random_coisotropic(rng: random.Random, x: SymplecticSpace, codim: Optional[int] = None) -> Subspace:
    return sp.symp_orthogonal(x, random_isotropic(rng, x, codim))


def random_lagrangian(rng: random.Random, x: SymplecticSpace) -> Subspace:
    return random_isotropic(rng, x, x.half_dim)


def random_symp_relation(rng: random.Random, x: SymplecticSpace, y: SymplecticSpace,
                         tag: str) -> LinearRelation:
    amb = x.oplus(y.opposite())
    tag = ww.Category.parse(tag)
    roll = rng.random()
    if roll < 0.1 and x == y:
        return rc.identity(x)
    if tag is ww.Category.ILREL:
        s = random_isotropic(rng, amb)
    elif tag is ww.Category.CLREL:
        s = random_coisotropic(rng, amb)
    elif tag is ww.Category.SLREL:
        s = random_lagrangian(rng, amb)
    else:
        s = random_subspace(rng, x.field, amb.dim)
    return LinearRelation(x, y, s)


def random_symp_chain(rng: random.Random, fld: FieldSpec, length: int, max_half: int,
                      tag: str, twist: float = 0.0) -> List[LinearRelation]:
    objs = [random_symplectic_space(rng, fld, rng.randint(0, max_half), f"X{i}", twist)
            for i in range(length + 1)]
    return [random_symp_relation(rng, objs[i], objs[i + 1], tag) for i in range(length)]


def random_tagged_chain(rng: random.Random, fld: FieldSpec, length: int, max_dim: int,
                        tag) -> List[LinearRelation]:
    """A chain of morphisms of ``tag``; ``max_dim`` bounds plain dims or symplectic half-dims."""
    tag = ww.Category.parse(tag)
    if tag is ww.Category.LREL:
        return random_chain(rng, fld, length, max_dim)
    return random_symp_chain(rng, fld, length, max_dim, tag.value)


def random_indices(rng: random.Random, tag, bound: int = 3):
    tag = ww.Category.parse(tag)
    while True:
        d, e = rng.randint(0, bound), rng.randint(0, bound)
        if tag.allows(d, e):
            return d, e


def random_ww(rng: random.Random, fld: FieldSpec, tag, max_dim: int, bound: int = 3) -> ww.WWMorphism:
    f = random_tagged_chain(rng, fld, 1, max_dim, tag)[0]
    d, e = random_indices(rng, tag, bound)
    return ww.WWMorphism(ww.Category.parse(tag), f, d, e)


def random_ww_chain(rng: random.Random, fld: FieldSpec, tag, length: int, max_dim: int,
                    bound: int = 2) -> List[ww.WWMorphism]:
    links = random_tagged_chain(rng, fld, length, max_dim, tag)
    out = []
    for f in links:
        d, e = random_indices(rng, tag, bound)
        out.append(ww.WWMorphism(ww.Category.parse(tag), f, d, e))
    return out
