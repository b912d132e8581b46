"""Symplectic coordinate spaces and (co)isotropic relations.

A relation ``X <- Y`` between symplectic spaces lives in ``X (+) Ybar``
where ``Ybar`` carries the negated form.  It is a morphism of ILREL, CLREL
or SLREL when that subspace is isotropic, coisotropic or lagrangian.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence, Tuple

from . import exactalg as ea
from . import relcore as rc
from .exactalg import FieldSpec, LinRelError, Matrix, QQ, Subspace
from .relcore import LinearRelation, ObjectMismatchError, VectorSpaceObj


class NotInCategoryError(LinRelError, ValueError):
    pass


@dataclass(frozen=True)
class SymplecticSpace(VectorSpaceObj):
    """``field ** dim`` with a nondegenerate alternating form (Gram matrix ``form``)."""

    form: Matrix = ()
    _entries: Tuple[Tuple[int, int, object], ...] = dc_field(
        default=(), init=False, repr=False, compare=False)

    def __post_init__(self):
        super().__post_init__()
        fld = self.field
        form = tuple(tuple(fld(v) for v in row) for row in self.form)
        object.__setattr__(self, "form", form)
        n = self.dim
        if len(form) != n or any(len(r) != n for r in form):
            raise ea.DimensionMismatchError(f"form must be {n} x {n}")
        for i in range(n):
            if form[i][i]:
                raise ValueError("form is not alternating: nonzero diagonal")
            for j in range(i):
                if form[i][j] != fld.neg(form[j][i]):
                    raise ValueError("form is not skew-symmetric")
        if n and ea.rank(form, fld, n) != n:
            raise ValueError("form is degenerate")
        entries = tuple((i, j, v) for i, r in enumerate(form) for j, v in enumerate(r) if v)
        object.__setattr__(self, "_entries", entries)

    @property
    def half_dim(self) -> int:
        return self.dim // 2

    def apply_form(self, v: Sequence) -> list:
        """``form @ v``; the form is sparse so only its nonzero entries are visited."""
        fld = self.field
        out = [fld.zero] * self.dim
        for i, j, c in self._entries:
            if v[j]:
                out[i] += c * v[j]
        p = fld.characteristic
        return [x % p for x in out] if p else out

    def omega(self, u: Sequence, v: Sequence):
        fld = self.field
        s = fld.zero
        for a, b in zip(u, self.apply_form(v)):
            if a and b:
                s += a * b
        return s % fld.characteristic if fld.characteristic else s

    def opposite(self) -> "SymplecticSpace":
        fld = self.field
        name = self.name[:-1] if self.name.endswith("~") else (self.name + "~" if self.name else "")
        return SymplecticSpace(self.dim, fld, name,
                               tuple(tuple(fld.neg(v) for v in r) for r in self.form))

    def unit(self) -> "SymplecticSpace":
        return SymplecticSpace(0, self.field, "1", ())

    def oplus(self, other: VectorSpaceObj) -> "SymplecticSpace":
        if not isinstance(other, SymplecticSpace):
            raise ObjectMismatchError(f"cannot sum {self!r} with {other!r}")
        ea.check_same_field(self.field, other.field)
        return SymplecticSpace(self.dim + other.dim, self.field,
                               rc._join_names(self.name, other.name),
                               _block_diag(self.form, other.form, self.field))

    def dual(self) -> VectorSpaceObj:
        return VectorSpaceObj(self.dim, self.field, self.name + "*" if self.name else "")


def _block_diag(a: Matrix, b: Matrix, fld: FieldSpec) -> Matrix:
    n, m = len(a), len(b)
    z = fld.zero
    rows = [tuple(r) + (z,) * m for r in a]
    rows += [(z,) * n + tuple(r) for r in b]
    return tuple(rows)


def standard_space(n: int, fld: FieldSpec = QQ, name: str = "") -> SymplecticSpace:
    """``2n`` coordinates ``(q_1..q_n, p_1..p_n)`` with form ``[[0, I], [-I, 0]]``."""
    z, o, mo = fld.zero, fld.one, fld.neg(fld.one)
    rows = []
    for i in range(2 * n):
        r = [z] * (2 * n)
        if i < n:
            r[n + i] = o
        else:
            r[i - n] = mo
        rows.append(tuple(r))
    return SymplecticSpace(2 * n, fld, name, tuple(rows))


def opposite(x: SymplecticSpace) -> SymplecticSpace:
    return x.opposite()


def symp_orthogonal(x: SymplecticSpace, a: Subspace) -> Subspace:
    """``{v : omega(v, w) = 0 for all w in a}``."""
    if a.ambient_dim != x.dim:
        raise ea.DimensionMismatchError(f"subspace of dim {a.ambient_dim} in a {x.dim}-dim space")
    ea.check_same_field(x.field, a.field)
    # omega(v, w) = v . (form w), so a^omega annihilates the vectors form.w
    images = ea.span([x.apply_form(w) for w in a.basis], x.dim, x.field)
    return ea.annihilator(images)


def is_isotropic(x: SymplecticSpace, a: Subspace) -> bool:
    p = x.field.characteristic
    images = [x.apply_form(w) for w in a.basis]
    for i, u in enumerate(a.basis):
        nz = [(j, c) for j, c in enumerate(u) if c]
        for w in images[i + 1:]:
            s = sum(c * w[j] for j, c in nz)
            if (s % p if p else s):
                return False
    return True


def is_coisotropic(x: SymplecticSpace, a: Subspace) -> bool:
    return ea.subspace_contains(a, symp_orthogonal(x, a))


def is_lagrangian(x: SymplecticSpace, a: Subspace) -> bool:
    return 2 * a.dim == x.dim and is_isotropic(x, a)


# -- relations -------------------------------------------------------------

LREL, SLREL, ILREL, CLREL = "LREL", "SLREL", "ILREL", "CLREL"


def _require_symplectic(f: LinearRelation) -> None:
    if not (isinstance(f.target, SymplecticSpace) and isinstance(f.source, SymplecticSpace)):
        raise ObjectMismatchError("relation is not between symplectic spaces")


def ambient_space(f: LinearRelation) -> SymplecticSpace:
    """``X (+) Ybar``, the symplectic space containing ``f``."""
    _require_symplectic(f)
    return f.target.oplus(f.source.opposite())


def symp_relation(target: SymplecticSpace, source: SymplecticSpace, rows) -> LinearRelation:
    if not (isinstance(target, SymplecticSpace) and isinstance(source, SymplecticSpace)):
        raise ObjectMismatchError("symplectic relations need symplectic objects")
    return rc.relation(target, source, rows)


def classify(f: LinearRelation) -> str:
    """One of ``Lagrangian``, ``Isotropic``, ``Coisotropic`` or ``Unclassified``."""
    amb = ambient_space(f)
    iso = is_isotropic(amb, f.space)
    coiso = is_coisotropic(amb, f.space)
    if iso and coiso:
        return "Lagrangian"
    if iso:
        return "Isotropic"
    if coiso:
        return "Coisotropic"
    return "Unclassified"


def check_morphism(f: LinearRelation, category: str) -> bool:
    """Is ``f`` a morphism of ``category`` (one of LREL, SLREL, ILREL, CLREL)?"""
    category = category.upper()
    if category == LREL:
        return True
    if not (isinstance(f.target, SymplecticSpace) and isinstance(f.source, SymplecticSpace)):
        return False
    amb = ambient_space(f)
    if category == ILREL:
        return is_isotropic(amb, f.space)
    if category == CLREL:
        return is_coisotropic(amb, f.space)
    if category == SLREL:
        return is_lagrangian(amb, f.space)
    raise ValueError(f"unknown category {category!r}")


def iso_coiso_dual(f: LinearRelation) -> LinearRelation:
    """Contravariant bijection ILREL -> CLREL: transpose of ``f^omega`` in ``X (+) Ybar``.

    The same formula maps CLREL back to ILREL and inverts it; lagrangian
    relations go to their transposes.
    """
    amb = ambient_space(f)
    iso, coiso = is_isotropic(amb, f.space), is_coisotropic(amb, f.space)
    if not (iso or coiso):
        raise NotInCategoryError("relation is neither isotropic nor coisotropic")
    orth = LinearRelation(f.target, f.source, symp_orthogonal(amb, f.space))
    return rc.transpose(orth)


coiso_iso_dual = iso_coiso_dual


# -- cotangent functor ---------------------------------------------------------

def cotangent_space(v: VectorSpaceObj) -> SymplecticSpace:
    """``V (+) V*`` with the standard form, positions first then covectors."""
    name = f"T*{v.name}" if v.name else ""
    return standard_space(v.dim, v.field, name)


def cotangent(f: LinearRelation) -> LinearRelation:
    """Conormal of ``f`` with the ``W*`` components negated.

    ``T*f = {((v, xi), (w, eta)) : (v, w) in f, xi(v') = eta(w') on f}``, a
    canonical relation ``T*V <- T*W``.
    """
    fld = f.field
    nv, nw = f.target.dim, f.source.dim
    zv, zw = (fld.zero,) * nv, (fld.zero,) * nw
    rows = []
    for r in f.space.basis:
        v, w = r[:nv], r[nv:]
        rows.append(v + zv + w + zw)
    ann = ea.annihilator(f.space)
    for r in ann.basis:
        # (xi, -eta) in the annihilator, so eta = -(second block)
        xi, eta = r[:nv], tuple(fld.neg(c) for c in r[nv:])
        rows.append(zv + xi + zw + eta)
    return rc.relation(cotangent_space(f.target), cotangent_space(f.source), rows)
