"""The category of linear relations between coordinate spaces.

A relation ``X <- Y`` is a subspace of ``X (+) Y`` with the target block
first.  Composition, transpose and duality are computed exactly, together
with the excess (failure of monicity) and defect (failure of
transversality) of composable pairs and sequences.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import reduce
from typing import Iterator, Sequence, Tuple

from . import exactalg as ea
from .exactalg import FieldSpec, LinRelError, QQ, Subspace


class ObjectMismatchError(LinRelError, ValueError):
    pass


@dataclass(frozen=True)
class VectorSpaceObj:
    """A coordinate space ``field ** dim``.  ``name`` is a label only."""

    dim: int
    field: FieldSpec = QQ
    name: str = dc_field(default="", compare=False)

    def __post_init__(self):
        if self.dim < 0:
            raise ValueError("dimension must be nonnegative")

    def opposite(self) -> "VectorSpaceObj":
        return self

    def unit(self) -> "VectorSpaceObj":
        return VectorSpaceObj(0, self.field, "1")

    def oplus(self, other: "VectorSpaceObj") -> "VectorSpaceObj":
        if type(other) is not VectorSpaceObj:
            raise ObjectMismatchError(f"cannot sum {self!r} with {other!r}")
        ea.check_same_field(self.field, other.field)
        return VectorSpaceObj(self.dim + other.dim, self.field, _join_names(self.name, other.name))

    def dual(self) -> "VectorSpaceObj":
        return VectorSpaceObj(self.dim, self.field, self.name + "*" if self.name else "")


def _join_names(a: str, b: str) -> str:
    if a and b:
        return f"{a}+{b}"
    return a or b


def space(dim: int, fld: FieldSpec = QQ, name: str = "") -> VectorSpaceObj:
    return VectorSpaceObj(dim, fld, name)


@dataclass(frozen=True)
class LinearRelation:
    """A morphism ``target <- source``: a subspace of ``target (+) source``."""

    target: VectorSpaceObj
    source: VectorSpaceObj
    space: Subspace

    def __post_init__(self):
        ea.check_same_field(self.target.field, self.source.field, self.space.field)
        if self.space.ambient_dim != self.target.dim + self.source.dim:
            raise ea.DimensionMismatchError(
                f"relation space has ambient dim {self.space.ambient_dim}, "
                f"expected {self.target.dim} + {self.source.dim}")

    @property
    def field(self) -> FieldSpec:
        return self.space.field

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def target_coords(self) -> range:
        return range(self.target.dim)

    @property
    def source_coords(self) -> range:
        return range(self.target.dim, self.target.dim + self.source.dim)

    def __contains__(self, pair) -> bool:
        x, y = pair
        return ea.contains(self.space, tuple(x) + tuple(y))

    def __matmul__(self, other: "LinearRelation") -> "LinearRelation":
        return compose(self, other)


def relation(target: VectorSpaceObj, source: VectorSpaceObj, rows: Sequence[Sequence]) -> LinearRelation:
    """The relation spanned by ``rows``, each row being ``x + y`` concatenated."""
    fld = ea.check_same_field(target.field, source.field)
    return LinearRelation(target, source, ea.span(rows, target.dim + source.dim, fld))


def identity(x: VectorSpaceObj) -> LinearRelation:
    e = ea.unit_vectors(x.dim, x.field)
    return LinearRelation(x, x, ea.span([r + r for r in e], 2 * x.dim, x.field))


def zero_relation(x: VectorSpaceObj, y: VectorSpaceObj) -> LinearRelation:
    return LinearRelation(x, y, ea.zero_subspace(x.dim + y.dim, x.field))


def full_relation(x: VectorSpaceObj, y: VectorSpaceObj) -> LinearRelation:
    return LinearRelation(x, y, ea.full_space(x.dim + y.dim, x.field))


def graph_of_map(matrix: Sequence[Sequence], x: VectorSpaceObj, y: VectorSpaceObj) -> LinearRelation:
    """The relation ``{(M y, y)}`` of a linear map ``X <- Y`` given as a ``dim X x dim Y`` matrix."""
    fld = x.field
    rows = []
    for e in ea.unit_vectors(y.dim, fld):
        rows.append(tuple(ea.mat_vec(matrix, e, fld)) + e)
    return relation(x, y, rows)


def _check_composable(f: LinearRelation, g: LinearRelation) -> None:
    if f.source != g.target:
        raise ObjectMismatchError(f"source {f.source!r} does not match target {g.target!r}")


def compose(f: LinearRelation, g: LinearRelation) -> LinearRelation:
    """``f g = {(x, z) : (x, y) in f and (y, z) in g for some y}``.

    Stack rows ``(y | x | 0)`` for ``f`` and ``(-y | 0 | z)`` for ``g``; after
    elimination with the middle block first, the rows pivoting past it have
    vanishing middle part and carry the composite.
    """
    _check_composable(f, g)
    fld = f.field
    nx, ny, nz = f.target.dim, f.source.dim, g.source.dim
    zx, zz = (fld.zero,) * nx, (fld.zero,) * nz
    rows = [r[nx:] + r[:nx] + zz for r in f.space.basis]
    rows += [tuple(fld.neg(v) for v in r[:ny]) + zx + r[ny:] for r in g.space.basis]
    red = ea.rref(rows, fld, ny + nx + nz)
    keep = [r[ny:] for r in red if ea._leading(r) >= ny]
    return LinearRelation(f.target, g.source, ea._canonical(nx + nz, keep, fld))


def compose_by_intersection(f: LinearRelation, g: LinearRelation) -> LinearRelation:
    """Composite via ``(f x g) & (X x Diag_Y x Z)`` projected to ``X x Z``."""
    _check_composable(f, g)
    nx, ny, nz = f.target.dim, f.source.dim, g.source.dim
    prod = ea.direct_sum(f.space, g.space)
    meet = ea.intersect(prod, _diagonal_block(f.field, [nx, ny, nz], outer_free=True))
    coords = list(range(nx)) + list(range(nx + 2 * ny, nx + 2 * ny + nz))
    return LinearRelation(f.target, g.source, ea.project(meet, coords))


def compose_chain(links: Sequence[LinearRelation]) -> LinearRelation:
    return reduce(compose, links)


def transpose(f: LinearRelation) -> LinearRelation:
    nx = f.target.dim
    order = list(f.source_coords) + list(range(nx))
    return LinearRelation(f.source, f.target, ea.permute(f.space, order))


def kernel(f: LinearRelation) -> Subspace:
    """``{y : (0, y) in f}``."""
    return ea.restrict_zero(f.space, f.target_coords)


def indeterminacy(f: LinearRelation) -> Subspace:
    """``{x : (x, 0) in f}``."""
    return ea.restrict_zero(f.space, f.source_coords)


def domain(f: LinearRelation) -> Subspace:
    return ea.project(f.space, f.source_coords)


def image(f: LinearRelation) -> Subspace:
    return ea.project(f.space, f.target_coords)


def dual(f: LinearRelation) -> LinearRelation:
    """``f* : Y* <- X*``, the pairs ``(eta, xi)`` with ``eta(y) = xi(x)`` on ``f``.

    The annihilator of ``f`` consists of ``(a, b)`` with ``a.x + b.y = 0``;
    setting ``xi = a`` and ``eta = -b`` gives the dual.
    """
    fld = f.field
    nx = f.target.dim
    ann = ea.annihilator(f.space)
    rows = [tuple(fld.neg(v) for v in r[nx:]) + r[:nx] for r in ann.basis]
    return relation(f.source.dual(), f.target.dual(), rows)


def excess_pair(f: LinearRelation, g: LinearRelation) -> int:
    _check_composable(f, g)
    return ea.intersect(kernel(f), indeterminacy(g)).dim


def defect_pair(f: LinearRelation, g: LinearRelation) -> int:
    _check_composable(f, g)
    return f.source.dim - ea.subspace_sum(domain(f), image(g)).dim


# -- predicates ------------------------------------------------------------

def is_monic(f: LinearRelation, g: LinearRelation) -> bool:
    return excess_pair(f, g) == 0


def is_transversal(f: LinearRelation, g: LinearRelation) -> bool:
    return defect_pair(f, g) == 0


def is_strongly_transversal(f: LinearRelation, g: LinearRelation) -> bool:
    return is_monic(f, g) and is_transversal(f, g)


def is_injective(f: LinearRelation) -> bool:
    return kernel(f).is_zero()


def is_coinjective(f: LinearRelation) -> bool:
    return indeterminacy(f).is_zero()


def is_surjective(f: LinearRelation) -> bool:
    return image(f).is_full()


def is_cosurjective(f: LinearRelation) -> bool:
    return domain(f).is_full()


def is_reduction(f: LinearRelation) -> bool:
    return is_surjective(f) and is_coinjective(f)


def is_coreduction(f: LinearRelation) -> bool:
    return is_cosurjective(f) and is_injective(f)


def is_isomorphism(f: LinearRelation) -> bool:
    return is_reduction(f) and is_coreduction(f)


# -- sequences -------------------------------------------------------------

@dataclass(frozen=True)
class RelationChain:
    """A composable sequence ``(f_1, ..., f_r)`` with ``source(f_j) = target(f_{j+1})``."""

    links: Tuple[LinearRelation, ...]
    tag: str = "LREL"

    def __post_init__(self):
        object.__setattr__(self, "links", tuple(self.links))
        if not self.links:
            raise ValueError("a chain needs at least one relation")
        for f, g in zip(self.links, self.links[1:]):
            _check_composable(f, g)

    def __len__(self):
        return len(self.links)

    def __iter__(self):
        return iter(self.links)

    @property
    def objects(self) -> Tuple[VectorSpaceObj, ...]:
        return (self.links[0].target,) + tuple(f.source for f in self.links)

    def composite(self) -> LinearRelation:
        return compose_chain(self.links)

    def excess(self) -> int:
        return excess_seq(self)

    def defect(self) -> int:
        return defect_seq(self)


def _links(chain) -> Tuple[LinearRelation, ...]:
    if isinstance(chain, RelationChain):
        return chain.links
    return RelationChain(tuple(chain)).links


def _diagonal_block(fld: FieldSpec, dims: Sequence[int], outer_free: bool) -> Subspace:
    """``X_0 x Diag_1 x ... x Diag_{r-1} x X_r`` (or ``0 x ... x 0``) in ``X_0 + 2 X_1 + ... + X_r``."""
    total = dims[0] + 2 * sum(dims[1:-1]) + dims[-1]
    rows = []
    z, o = fld.zero, fld.one

    def unit(positions):
        v = [z] * total
        for p in positions:
            v[p] = o
        return v

    offset = 0
    if outer_free:
        rows += [unit([i]) for i in range(dims[0])]
    offset += dims[0]
    for d in dims[1:-1]:
        rows += [unit([offset + i, offset + d + i]) for i in range(d)]
        offset += 2 * d
    if outer_free:
        rows += [unit([offset + i]) for i in range(dims[-1])]
    return ea.span(rows, total, fld)


def _product_and_diagonals(links):
    dims = [links[0].target.dim] + [f.source.dim for f in links]
    prod = ea.direct_sum(*(f.space for f in links))
    fld = links[0].field
    return prod, _diagonal_block(fld, dims, False), _diagonal_block(fld, dims, True)


def excess_seq(chain) -> int:
    """Dimension of ``(f_1 x ... x f_r) & (0 x Diag x ... x Diag x 0)``."""
    links = _links(chain)
    if len(links) == 1:
        return 0
    prod, inner, _ = _product_and_diagonals(links)
    return ea.intersect(prod, inner).dim


def defect_seq(chain) -> int:
    """Codimension of ``(f_1 x ... x f_r) + (X_0 x Diag x ... x Diag x X_r)``."""
    links = _links(chain)
    if len(links) == 1:
        return 0
    prod, _, outer = _product_and_diagonals(links)
    return ea.subspace_sum(prod, outer).codim


def excess_split(chain, j: int) -> int:
    """Excess computed through the split after the ``j``-th link (``1 <= j < r``)."""
    links = _links(chain)
    left, right = links[:j], links[j:]
    return (excess_seq(left) + excess_pair(compose_chain(left), compose_chain(right))
            + excess_seq(right))


def defect_split(chain, j: int) -> int:
    links = _links(chain)
    left, right = links[:j], links[j:]
    return (defect_seq(left) + defect_pair(compose_chain(left), compose_chain(right))
            + defect_seq(right))


def parenthesizations(n: int) -> Iterator:
    """All binary bracketings of ``n`` leaves, as nested tuples of leaf indices."""
    def build(lo, hi):
        if hi - lo == 1:
            yield lo
            return
        for mid in range(lo + 1, hi):
            for left in build(lo, mid):
                for right in build(mid, hi):
                    yield (left, right)
    return build(0, n)


def accumulate(chain, bracketing) -> Tuple[LinearRelation, int, int]:
    """Compose along ``bracketing`` summing pairwise (excess, defect)."""
    links = _links(chain)

    def walk(node):
        if isinstance(node, int):
            return links[node], 0, 0
        (f, e1, d1), (g, e2, d2) = walk(node[0]), walk(node[1])
        return compose(f, g), e1 + e2 + excess_pair(f, g), d1 + d2 + defect_pair(f, g)

    return walk(bracketing)


# -- factorizations --------------------------------------------------------

def _basis_relation(target: VectorSpaceObj, sub_basis, source: VectorSpaceObj,
                    extra: Subspace, block_first: bool) -> LinearRelation:
    """``{(sum t_i c_i + w, t)}`` (or its transpose) for basis ``c`` and ``w in extra``."""
    fld = target.field
    z_src = (fld.zero,) * source.dim
    e = ea.unit_vectors(source.dim, fld)
    rows = [tuple(c) + t for c, t in zip(sub_basis, e)]
    rows += [tuple(w) + z_src for w in extra.basis]
    rel = relation(target, source, rows)
    return rel if block_first else transpose(rel)


def natural_factorization(f: LinearRelation):
    """Split ``f`` as ``c i r`` through ``Im f / Indet f`` and ``Dom f / ker f``.

    ``c : X <- M`` is a coreduction, ``i : M <- N`` an isomorphism and
    ``r : N <- Y`` a reduction.  The quotients are realised as pivot
    complements ``Im f = C (+) Indet f`` and ``Dom f = D (+) ker f``.
    """
    fld = f.field
    im, ind = image(f), indeterminacy(f)
    dom, ker = domain(f), kernel(f)
    comp_im = ea.complement_in(ind, im)
    comp_dom = ea.complement_in(ker, dom)
    m = VectorSpaceObj(comp_im.dim, fld, "M")
    n = VectorSpaceObj(comp_dom.dim, fld, "N")
    c = _basis_relation(f.target, comp_im.basis, m, ind, True)
    # r = {(s, y) : y = sum s_j d_j + k, k in ker f}
    r = _basis_relation(f.source, comp_dom.basis, n, ker, False)
    i = compose(transpose(c), compose(f, transpose(r)))
    return c, i, r


def st_factorization(f: LinearRelation):
    """Factor ``f = A B`` through ``Q = X (+) Ybar (+) Y`` with a strongly transversal pair.

    ``A = {(x, (x, y, y))}`` is a reduction and
    ``B = {((x, y, y''), y'') : (x, y) in f}`` a coreduction.
    """
    x, y = f.target, f.source
    fld = f.field
    q = x.oplus(y.opposite()).oplus(y)
    z = fld.zero
    ex, ey = ea.unit_vectors(x.dim, fld), ea.unit_vectors(y.dim, fld)
    zx, zy = (z,) * x.dim, (z,) * y.dim
    a_rows = [e + e + zy + zy for e in ex] + [zx + zx + e + e for e in ey]
    b_rows = [r + zy + zy for r in f.space.basis] + [zx + zy + e + e for e in ey]
    return relation(x, q, a_rows), relation(q, y, b_rows)


# -- invariants, tensor and graphs -------------------------------------------

@dataclass(frozen=True)
class IsoInvariants:
    """The six dimensions classifying a relation up to isomorphism."""

    dim_target: int
    dim_source: int
    dim_dom: int
    dim_ker: int
    dim_im: int
    dim_indet: int

    def __post_init__(self):
        if not (self.dim_ker <= self.dim_dom <= self.dim_source
                and self.dim_indet <= self.dim_im <= self.dim_target
                and self.dim_dom - self.dim_ker == self.dim_im - self.dim_indet):
            raise ValueError(f"inconsistent invariants {self}")

    def as_tuple(self) -> Tuple[int, ...]:
        return (self.dim_target, self.dim_source, self.dim_dom, self.dim_ker,
                self.dim_im, self.dim_indet)


def iso_invariants(f: LinearRelation) -> IsoInvariants:
    return IsoInvariants(f.target.dim, f.source.dim, domain(f).dim, kernel(f).dim,
                         image(f).dim, indeterminacy(f).dim)


def tensor(f: LinearRelation, g: LinearRelation) -> LinearRelation:
    """``f (x) g : X (+) X' <- Y (+) Y'`` with coordinates ``(X, X', Y, Y')``."""
    nx, ny = f.target.dim, f.source.dim
    mx, my = g.target.dim, g.source.dim
    s = ea.direct_sum(f.space, g.space)
    order = (list(range(nx)) + list(range(nx + ny, nx + ny + mx))
             + list(range(nx, nx + ny)) + list(range(nx + ny + mx, nx + ny + mx + my)))
    return LinearRelation(f.target.oplus(g.target), f.source.oplus(g.source), ea.permute(s, order))


def tensor_all(rels: Sequence[LinearRelation]) -> LinearRelation:
    return reduce(tensor, rels)


def graph_of(f: LinearRelation) -> LinearRelation:
    """``f`` re-typed as a morphism ``X (+) Ybar <- 1``."""
    return LinearRelation(f.target.oplus(f.source.opposite()), f.target.unit(), f.space)


def ungraph(h: LinearRelation, target: VectorSpaceObj, source: VectorSpaceObj) -> LinearRelation:
    if h.source.dim != 0 or h.target.dim != target.dim + source.dim:
        raise ObjectMismatchError("not the graph of a relation between the given objects")
    return LinearRelation(target, source, h.space)
