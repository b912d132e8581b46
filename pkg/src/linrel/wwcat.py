"""Wehrheim-Woodward categories of linear relations in normal form.

A WW morphism over LREL, SLREL, ILREL or CLREL is determined by its shadow
(the composite relation), its defect and its excess.  Composition adds the
indices of both factors plus the defect and excess of the pair of shadows.
"""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from functools import reduce
from typing import List, Tuple

from . import exactalg as ea
from . import relcore as rc
from . import symplin as sp
from .exactalg import FieldSpec, LinRelError
from .relcore import LinearRelation, RelationChain, VectorSpaceObj


class Category(str, enum.Enum):
    LREL = "LREL"
    SLREL = "SLREL"
    ILREL = "ILREL"
    CLREL = "CLREL"

    @classmethod
    def parse(cls, tag) -> "Category":
        if isinstance(tag, Category):
            return tag
        try:
            return cls(str(tag).upper())
        except ValueError:
            raise ValueError(f"unknown category {tag!r}") from None

    def allows(self, defect: int, excess: int) -> bool:
        if defect < 0 or excess < 0:
            return False
        if self is Category.ILREL:
            return excess <= defect
        if self is Category.CLREL:
            return defect <= excess
        if self is Category.SLREL:
            return defect == excess
        return True

    @property
    def symplectic(self) -> bool:
        return self is not Category.LREL


class WWError(LinRelError, ValueError):
    pass


@dataclass(frozen=True)
class WWMorphism:
    """``(shadow, defect, excess)`` in the WW extension of ``tag``."""

    tag: Category
    shadow: LinearRelation
    defect: int = 0
    excess: int = 0

    def __post_init__(self):
        object.__setattr__(self, "tag", Category.parse(self.tag))
        if not self.tag.allows(self.defect, self.excess):
            raise WWError(f"(defect, excess) = ({self.defect}, {self.excess}) "
                          f"is not allowed in {self.tag.value}")
        if not sp.check_morphism(self.shadow, self.tag.value):
            raise WWError(f"shadow is not a morphism of {self.tag.value}")

    @property
    def target(self) -> VectorSpaceObj:
        return self.shadow.target

    @property
    def source(self) -> VectorSpaceObj:
        return self.shadow.source

    def __matmul__(self, other: "WWMorphism") -> "WWMorphism":
        return ww_compose(self, other)


@dataclass(frozen=True)
class UnitEndo:
    """An endomorphism of the unit object, recorded by its indices."""

    tag: Category
    defect: int
    excess: int

    def __post_init__(self):
        object.__setattr__(self, "tag", Category.parse(self.tag))
        if not self.tag.allows(self.defect, self.excess):
            raise WWError(f"({self.defect}, {self.excess}) is not a unit endomorphism "
                          f"of WW({self.tag.value})")

    def __add__(self, other: "UnitEndo") -> "UnitEndo":
        if other.tag is not self.tag:
            raise WWError("unit endomorphisms of different categories")
        return UnitEndo(self.tag, self.defect + other.defect, self.excess + other.excess)

    def as_pair(self) -> Tuple[int, int]:
        return (self.defect, self.excess)


def ww_embed(f: LinearRelation, tag) -> WWMorphism:
    return WWMorphism(Category.parse(tag), f, 0, 0)


def ww_compose(m: WWMorphism, n: WWMorphism) -> WWMorphism:
    if m.tag is not n.tag:
        raise WWError(f"cannot compose {m.tag.value} with {n.tag.value}")
    f, g = m.shadow, n.shadow
    return WWMorphism(m.tag, rc.compose(f, g),
                      m.defect + n.defect + rc.defect_pair(f, g),
                      m.excess + n.excess + rc.excess_pair(f, g))


def ww_from_chain(chain, tag) -> WWMorphism:
    """The class ``[f_1, ..., f_r]`` as ``(f_1 ... f_r, D, E)``."""
    links = chain.links if isinstance(chain, RelationChain) else RelationChain(tuple(chain)).links
    tag = Category.parse(tag)
    for f in links:
        if not sp.check_morphism(f, tag.value):
            raise WWError(f"chain entry is not a morphism of {tag.value}")
    return WWMorphism(tag, rc.compose_chain(links), rc.defect_seq(links), rc.excess_seq(links))


def ww_fold(chain, tag) -> WWMorphism:
    """Left fold of :func:`ww_compose` over the embedded links."""
    links = chain.links if isinstance(chain, RelationChain) else tuple(chain)
    return reduce(ww_compose, (ww_embed(f, tag) for f in links))


def ww_transpose(m: WWMorphism) -> WWMorphism:
    return WWMorphism(m.tag, rc.transpose(m.shadow), m.defect, m.excess)


def ww_tensor(m: WWMorphism, n: WWMorphism) -> WWMorphism:
    if m.tag is not n.tag:
        raise WWError(f"cannot tensor {m.tag.value} with {n.tag.value}")
    return WWMorphism(m.tag, rc.tensor(m.shadow, n.shadow),
                      m.defect + n.defect, m.excess + n.excess)


# -- unit endomorphisms --------------------------------------------------------

_GENERATORS = {
    Category.LREL: ((0, 1), (1, 0)),
    Category.ILREL: ((1, 1), (1, 0)),
    Category.CLREL: ((0, 1), (1, 1)),
    Category.SLREL: ((1, 1),),
}


def unit_generators(tag) -> List[UnitEndo]:
    tag = Category.parse(tag)
    return [UnitEndo(tag, d, e) for d, e in _GENERATORS[tag]]


def decompose_unit(e: UnitEndo) -> Counter:
    """Unique multiset of generators summing to ``e``."""
    tag, d, x = e.tag, e.defect, e.excess
    if tag is Category.LREL:
        counts = {(0, 1): x, (1, 0): d}
    elif tag is Category.ILREL:
        counts = {(1, 1): x, (1, 0): d - x}
    elif tag is Category.CLREL:
        counts = {(1, 1): d, (0, 1): x - d}
    else:
        counts = {(1, 1): d}
    return Counter({UnitEndo(tag, *g): k for g, k in counts.items() if k})


def compose_generators(tag, gens: Counter) -> UnitEndo:
    tag = Category.parse(tag)
    total = UnitEndo(tag, 0, 0)
    for g, k in gens.items():
        if g.tag is not tag or g.as_pair() not in _GENERATORS[tag]:
            raise WWError(f"{g} is not a generator of WW({tag.value})")
        for _ in range(k):
            total = total + g
    return total


def unit_object(tag, fld: FieldSpec) -> VectorSpaceObj:
    tag = Category.parse(tag)
    if tag.symplectic:
        return sp.standard_space(0, fld, "1")
    return VectorSpaceObj(0, fld, "1")


def unit_morphism(e: UnitEndo, fld: FieldSpec) -> WWMorphism:
    one = unit_object(e.tag, fld)
    return WWMorphism(e.tag, rc.zero_relation(one, one), e.defect, e.excess)


# -- two-term representation ---------------------------------------------------

def _generator_block(tag: Category, gen: Tuple[int, int], fld: FieldSpec, symplectic: bool):
    """A pair ``(unit <- K, K <- unit)`` realising one generator."""
    if not symplectic:
        k = VectorSpaceObj(1, fld, "K")
        one = VectorSpaceObj(0, fld, "1")
        full, zero = ea.full_space(1, fld), ea.zero_subspace(1, fld)
        t, s = {(1, 0): (zero, zero), (0, 1): (full, full)}[gen]
    else:
        k = sp.standard_space(1, fld, "K")
        one = sp.standard_space(0, fld, "1")
        q = ea.span([[fld.one, fld.zero]], 2, fld)
        full, zero = ea.full_space(2, fld), ea.zero_subspace(2, fld)
        table = {
            Category.LREL: {(1, 0): (q, zero), (0, 1): (full, q)},
            Category.ILREL: {(1, 0): (q, zero), (1, 1): (q, q)},
            Category.CLREL: {(0, 1): (full, q), (1, 1): (q, q)},
            Category.SLREL: {(1, 1): (q, q)},
        }
        t, s = table[tag][gen]
    # A-block is 0 x T inside 1 x K, B-block is S x 0 inside K x 1
    return LinearRelation(one, k, t), LinearRelation(k, one, s)


def ww_two_term(m: WWMorphism) -> Tuple[LinearRelation, LinearRelation]:
    """A reduction ``A : X <- Q`` and coreduction ``B : Q <- Y`` with ``[A, B] = m``.

    The shadow is factored through ``Q = X (+) Ybar (+) Y``; each generator of
    the unit index ``(D, E)`` contributes one block tensored on.
    """
    a, b = rc.st_factorization(m.shadow)
    fld = m.shadow.field
    # LREL shadows between symplectic spaces take the 2-dim blocks
    symplectic = isinstance(a.source, sp.SymplecticSpace)
    for gen, count in sorted(decompose_unit(UnitEndo(m.tag, m.defect, m.excess)).items(),
                             key=lambda kv: kv[0].as_pair()):
        block_a, block_b = _generator_block(m.tag, gen.as_pair(), fld, symplectic)
        for _ in range(count):
            a, b = rc.tensor(a, block_a), rc.tensor(b, block_b)
    return a, b


def verify_two_term(m: WWMorphism, a: LinearRelation, b: LinearRelation) -> dict:
    """The postconditions of :func:`ww_two_term`, by name."""
    tag = m.tag.value
    return {
        "valid_in_category": sp.check_morphism(a, tag) and sp.check_morphism(b, tag),
        "A_is_reduction": rc.is_reduction(a),
        "B_is_coreduction": rc.is_coreduction(b),
        "composite_is_shadow": rc.compose(a, b) == m.shadow,
        "defect_matches": rc.defect_pair(a, b) == m.defect,
        "excess_matches": rc.excess_pair(a, b) == m.excess,
    }
