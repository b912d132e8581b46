"""Exact scalars and canonical subspaces of coordinate spaces.

Scalars are either rationals (``fractions.Fraction``) or residues modulo a
prime ``p`` (plain ``int`` in ``range(p)``).  A :class:`Subspace` stores the
reduced row-echelon form of a spanning set, so two subspaces are equal as
sets exactly when their stored bases are equal.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Tuple, Union

Scalar = Union[int, Fraction]
Vector = Tuple[Scalar, ...]
Matrix = Tuple[Vector, ...]


class LinRelError(Exception):
    """Base class for errors raised by this package."""


class FieldMismatchError(LinRelError, ValueError):
    pass


class DimensionMismatchError(LinRelError, ValueError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """A ground field: the rationals (``characteristic == 0``) or GF(p)."""

    characteristic: int = 0

    def __post_init__(self):
        if self.characteristic != 0 and not _is_prime(self.characteristic):
            raise ValueError(f"GF(p) needs a prime p, got {self.characteristic}")

    @property
    def kind(self) -> str:
        return "Rational" if self.characteristic == 0 else "PrimeField"

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    @property
    def zero(self) -> Scalar:
        return Fraction(0) if self.characteristic == 0 else 0

    @property
    def one(self) -> Scalar:
        return Fraction(1) if self.characteristic == 0 else 1

    def __call__(self, x) -> Scalar:
        """Coerce ``x`` (int, Fraction, or an ``"a/b"`` string) into the field."""
        p = self.characteristic
        if p == 0:
            if type(x) is Fraction:
                return x
        elif type(x) is int and 0 <= x < p:
            return x
        if isinstance(x, str):
            x = Fraction(x.strip())
        if p == 0:
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % p == 0:
                raise ZeroDivisionError(f"{x} has no image in GF({p})")
            return x.numerator * pow(x.denominator, -1, p) % p
        if isinstance(x, bool) or not isinstance(x, int):
            x = int(x)
        return x % p

    def neg(self, a: Scalar) -> Scalar:
        return -a if self.characteristic == 0 else (-a) % self.characteristic

    def inv(self, a: Scalar) -> Scalar:
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.characteristic == 0:
            return 1 / a
        return pow(a, -1, self.characteristic)

    def elements(self) -> Iterator[Scalar]:
        if self.characteristic == 0:
            raise ValueError("cannot enumerate the rationals")
        return iter(range(self.characteristic))

    def format(self, a: Scalar) -> Union[str, int]:
        return str(a) if self.characteristic == 0 else int(a)

    def __str__(self):
        return "Q" if self.characteristic == 0 else f"GF({self.characteristic})"


QQ = FieldSpec(0)


def GF(p: int) -> FieldSpec:
    return FieldSpec(p)


def parse_field(text: str) -> FieldSpec:
    """Parse ``"q"`` or ``"gf:P"``."""
    t = text.strip().lower()
    if t in ("q", "qq", "rational", "rationals"):
        return QQ
    if t.startswith("gf:"):
        return GF(int(t[3:]))
    raise ValueError(f"unknown field {text!r}; expected 'q' or 'gf:P'")


def check_same_field(*fields: FieldSpec) -> FieldSpec:
    first = fields[0]
    for f in fields[1:]:
        if f != first:
            raise FieldMismatchError(f"mixed fields {first} and {f}")
    return first


# -- row reduction ---------------------------------------------------------

def _rref_rational(rows: list, ncols: int) -> list:
    m = [list(r) for r in rows if any(r)]
    out = []
    for col in range(ncols):
        if not m:
            break
        piv = next((i for i, r in enumerate(m) if r[col]), None)
        if piv is None:
            continue
        prow = m.pop(piv)
        c = prow[col]
        if c != 1:
            prow = [v / c for v in prow]
        for r in itertools.chain(out, m):
            a = r[col]
            if a:
                for j in range(col, ncols):
                    if prow[j]:
                        r[j] -= a * prow[j]
        out.append(prow)
        m = [r for r in m if any(r)]
    return out


def _rref_modp(rows: list, ncols: int, p: int) -> list:
    m = [list(r) for r in rows if any(r)]
    out = []
    for col in range(ncols):
        if not m:
            break
        piv = next((i for i, r in enumerate(m) if r[col]), None)
        if piv is None:
            continue
        prow = m.pop(piv)
        c = prow[col]
        if c != 1:
            ci = pow(c, -1, p)
            prow = [v * ci % p for v in prow]
        for r in itertools.chain(out, m):
            a = r[col]
            if a:
                for j in range(col, ncols):
                    if prow[j]:
                        r[j] = (r[j] - a * prow[j]) % p
        out.append(prow)
        m = [r for r in m if any(r)]
    return out


def _pack(row: Sequence[int], ncols: int) -> int:
    # column j lives at bit (ncols - 1 - j) so the leading column is the top bit
    x = 0
    for v in row:
        x = (x << 1) | (v & 1)
    return x


def _unpack(x: int, ncols: int) -> list:
    return [(x >> (ncols - 1 - j)) & 1 for j in range(ncols)]


def _rref_gf2(rows: list, ncols: int) -> list:
    """Packed-bit elimination over GF(2); each row is one Python int."""
    m = [_pack(r, ncols) for r in rows]
    m = [x for x in m if x]
    out = []
    for col in range(ncols):
        if not m:
            break
        bit = 1 << (ncols - 1 - col)
        piv = next((i for i, x in enumerate(m) if x & bit), None)
        if piv is None:
            continue
        prow = m.pop(piv)
        out = [x ^ prow if x & bit else x for x in out]
        m = [x ^ prow if x & bit else x for x in m]
        m = [x for x in m if x]
        out.append(prow)
    return [_unpack(x, ncols) for x in out]


def rref(rows: Iterable[Sequence], fld: FieldSpec, ncols: int = None,
         packed: bool = True) -> Matrix:
    """Reduced row-echelon form of ``rows`` with zero rows dropped.

    ``packed=False`` forces the generic modular path for GF(2); both paths
    return identical matrices.
    """
    rows = [[fld(v) for v in r] for r in rows]
    if ncols is None:
        if not rows:
            raise DimensionMismatchError("ncols is required for an empty matrix")
        ncols = len(rows[0])
    for r in rows:
        if len(r) != ncols:
            raise DimensionMismatchError(f"row of length {len(r)} in a {ncols}-column matrix")
    p = fld.characteristic
    if p == 0:
        out = _rref_rational(rows, ncols)
    elif p == 2 and packed:
        out = _rref_gf2(rows, ncols)
    else:
        out = _rref_modp(rows, ncols, p)
    return tuple(tuple(r) for r in out)


def _leading(row: Sequence) -> int:
    for j, v in enumerate(row):
        if v:
            return j
    return -1


def _is_rref(basis: Matrix, ncols: int) -> bool:
    pivots = []
    for r in basis:
        if len(r) != ncols:
            return False
        j = _leading(r)
        if j < 0 or r[j] != 1 or (pivots and j <= pivots[-1]):
            return False
        pivots.append(j)
    for i, j in enumerate(pivots):
        if any(basis[k][j] for k in range(len(basis)) if k != i):
            return False
    return True


# -- subspaces -------------------------------------------------------------

@dataclass(frozen=True)
class Subspace:
    """A subspace of ``field ** ambient_dim`` held by its RREF basis.

    Build instances with :func:`span`; the constructor only accepts a basis
    that is already in canonical form.
    """

    ambient_dim: int
    basis: Matrix
    field: FieldSpec = QQ
    pivots: Tuple[int, ...] = dc_field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.ambient_dim < 0:
            raise DimensionMismatchError("negative ambient dimension")
        if not _is_rref(self.basis, self.ambient_dim):
            raise ValueError("basis is not in reduced row-echelon form; use span()")
        object.__setattr__(self, "pivots", tuple(_leading(r) for r in self.basis))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def codim(self) -> int:
        return self.ambient_dim - len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return len(self.basis) == self.ambient_dim

    def __contains__(self, v) -> bool:
        return contains(self, v)

    def __le__(self, other: "Subspace") -> bool:
        return subspace_contains(other, self)

    def __add__(self, other: "Subspace") -> "Subspace":
        return subspace_sum(self, other)

    def __and__(self, other: "Subspace") -> "Subspace":
        return intersect(self, other)

    def __repr__(self):
        rows = [[self.field.format(v) for v in r] for r in self.basis]
        return f"Subspace(dim={self.dim}/{self.ambient_dim}, {self.field}, {rows})"


def _canonical(ambient_dim: int, basis, fld: FieldSpec) -> Subspace:
    return Subspace(ambient_dim, tuple(tuple(r) for r in basis), fld)


def span(vectors: Iterable[Sequence], ambient_dim: int, fld: FieldSpec = QQ) -> Subspace:
    """Row space of ``vectors`` inside ``fld ** ambient_dim``."""
    vectors = list(vectors)
    for v in vectors:
        if len(v) != ambient_dim:
            raise DimensionMismatchError(
                f"vector of length {len(v)} in ambient dimension {ambient_dim}")
    return _canonical(ambient_dim, rref(vectors, fld, ambient_dim), fld)


def zero_subspace(n: int, fld: FieldSpec = QQ) -> Subspace:
    return _canonical(n, (), fld)


def full_space(n: int, fld: FieldSpec = QQ) -> Subspace:
    return _canonical(n, unit_vectors(n, fld), fld)


def unit_vectors(n: int, fld: FieldSpec = QQ) -> Matrix:
    z, o = fld.zero, fld.one
    return tuple(tuple(o if i == j else z for j in range(n)) for i in range(n))


def coordinate_subspace(n: int, coords: Iterable[int], fld: FieldSpec = QQ) -> Subspace:
    e = unit_vectors(n, fld)
    return _canonical(n, [e[i] for i in sorted(set(coords))], fld)


def _check_pair(a: Subspace, b: Subspace) -> None:
    check_same_field(a.field, b.field)
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatchError(
            f"ambient dimensions differ: {a.ambient_dim} vs {b.ambient_dim}")


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_pair(a, b)
    if not b.basis:
        return a
    if not a.basis:
        return b
    return span(a.basis + b.basis, a.ambient_dim, a.field)


def annihilator(a: Subspace) -> Subspace:
    """``{xi : xi . v = 0 for all v in a}`` in dual-basis coordinates.

    Read off the RREF: each free column ``j`` gives the functional
    ``e_j - sum_i basis[i][j] e_{pivot_i}``.
    """
    n, fld = a.ambient_dim, a.field
    pivset = set(a.pivots)
    rows = []
    for j in range(n):
        if j in pivset:
            continue
        v = [fld.zero] * n
        v[j] = fld.one
        for i, pc in enumerate(a.pivots):
            v[pc] = fld.neg(a.basis[i][j])
        rows.append(v)
    return span(rows, n, fld)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    _check_pair(a, b)
    if a.is_zero() or b.is_full():
        return a
    if b.is_zero() or a.is_full():
        return b
    return annihilator(subspace_sum(annihilator(a), annihilator(b)))


def reduce_vector(a: Subspace, v: Sequence) -> list:
    """Residue of ``v`` after clearing the pivot columns of ``a``."""
    fld = a.field
    if len(v) != a.ambient_dim:
        raise DimensionMismatchError(
            f"vector of length {len(v)} in ambient dimension {a.ambient_dim}")
    r = [fld(x) for x in v]
    p = fld.characteristic
    for row, pc in zip(a.basis, a.pivots):
        c = r[pc]
        if c:
            if p:
                r = [(x - c * y) % p for x, y in zip(r, row)]
            else:
                r = [x - c * y for x, y in zip(r, row)]
    return r


def contains(a: Subspace, v: Sequence) -> bool:
    return not any(reduce_vector(a, v))


def subspace_contains(a: Subspace, b: Subspace) -> bool:
    """True when ``b`` is a subspace of ``a``."""
    _check_pair(a, b)
    return all(contains(a, v) for v in b.basis)


def direct_sum(*subs: Subspace) -> Subspace:
    """Block concatenation: ``a (+) b`` inside the concatenated ambient space."""
    if not subs:
        raise ValueError("direct_sum needs at least one subspace")
    fld = check_same_field(*(s.field for s in subs))
    total = sum(s.ambient_dim for s in subs)
    rows = []
    offset = 0
    z = fld.zero
    for s in subs:
        before = (z,) * offset
        after = (z,) * (total - offset - s.ambient_dim)
        rows.extend(before + r + after for r in s.basis)
        offset += s.ambient_dim
    # block rows of RREF pieces are already in RREF
    return _canonical(total, rows, fld)


def pivot_complement(a: Subspace) -> Subspace:
    """Span of the coordinate axes that are not pivot columns of ``a``."""
    piv = set(a.pivots)
    return coordinate_subspace(a.ambient_dim, [j for j in range(a.ambient_dim) if j not in piv],
                               a.field)


def complement_in(a: Subspace, within: Subspace) -> Subspace:
    """Complement of ``a`` inside ``within`` (requires ``a <= within``).

    Residues of ``within``'s basis modulo ``a``; for ``within`` the whole space
    this is exactly :func:`pivot_complement`.
    """
    _check_pair(a, within)
    if not subspace_contains(within, a):
        raise ValueError("complement_in needs a <= within")
    return span([reduce_vector(a, v) for v in within.basis], a.ambient_dim, a.field)


def project(a: Subspace, coords: Sequence[int]) -> Subspace:
    """Image of ``a`` under the coordinate projection onto ``coords`` (in that order)."""
    return span([[r[j] for j in coords] for r in a.basis], len(coords), a.field)


def restrict_zero(a: Subspace, zero_coords: Sequence[int]) -> Subspace:
    """``{v in a : v[zero_coords] = 0}`` written in the remaining coordinates.

    One elimination with ``zero_coords`` ordered first: the echelon rows whose
    pivot falls past that block span exactly the vectors vanishing on it.
    """
    zs = list(zero_coords)
    zset = set(zs)
    rest = [j for j in range(a.ambient_dim) if j not in zset]
    order = zs + rest
    red = rref([[r[j] for j in order] for r in a.basis], a.field, len(order))
    k = len(zs)
    keep = [r[k:] for r in red if _leading(r) >= k]
    return _canonical(len(rest), keep, a.field)


def permute(a: Subspace, order: Sequence[int]) -> Subspace:
    """Reorder coordinates: new coordinate ``i`` is old coordinate ``order[i]``."""
    if sorted(order) != list(range(a.ambient_dim)):
        raise DimensionMismatchError("order must be a permutation of the coordinates")
    return span([[r[j] for j in order] for r in a.basis], a.ambient_dim, a.field)


def mat_vec(m: Sequence[Sequence], v: Sequence, fld: FieldSpec) -> list:
    p = fld.characteristic
    out = [sum(x * y for x, y in zip(row, v)) for row in m]
    return [x % p for x in out] if p else out


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence], fld: FieldSpec) -> Matrix:
    cols = list(zip(*b)) if b else []
    p = fld.characteristic
    out = []
    for row in a:
        r = [sum(x * y for x, y in zip(row, c)) for c in cols]
        out.append(tuple(x % p for x in r) if p else tuple(r))
    return tuple(out)


def transpose_matrix(m: Sequence[Sequence]) -> Matrix:
    return tuple(zip(*m))


def apply_linear(a: Subspace, m: Sequence[Sequence], out_dim: int = None) -> Subspace:
    """Image ``m(a)`` where ``m`` is an ``out_dim x ambient_dim`` matrix."""
    if out_dim is None:
        out_dim = len(m)
    return span([mat_vec(m, r, a.field) for r in a.basis], out_dim, a.field)


def rank(rows: Sequence[Sequence], fld: FieldSpec, ncols: int = None) -> int:
    return len(rref(rows, fld, ncols))


def is_invertible(m: Sequence[Sequence], fld: FieldSpec) -> bool:
    n = len(m)
    return all(len(r) == n for r in m) and rank(m, fld, n) == n


def elements(a: Subspace) -> Iterator[Vector]:
    """Every vector of ``a``; finite fields only."""
    fld = a.field
    p = fld.characteristic
    if p == 0:
        raise ValueError("cannot enumerate a subspace over Q")
    n = a.ambient_dim
    for coeffs in itertools.product(range(p), repeat=a.dim):
        v = [0] * n
        for c, row in zip(coeffs, a.basis):
            if c:
                v = [(x + c * y) % p for x, y in zip(v, row)]
        yield tuple(v)
