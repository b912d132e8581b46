from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from linrel import exactalg as ea
from linrel.exactalg import GF, QQ

F2, F7 = GF(2), GF(7)


def test_field_coercion_and_parsing():
    assert QQ("3/6") == Fraction(1, 2)
    assert F7(Fraction(1, 2)) == 4
    assert F7(-1) == 6
    assert ea.parse_field("q") == QQ and ea.parse_field("gf:7") == F7
    with pytest.raises(ValueError):
        GF(6)
    with pytest.raises(ValueError):
        ea.parse_field("real")
    with pytest.raises(ZeroDivisionError):
        F7(Fraction(1, 7))
    assert list(GF(3).elements()) == [0, 1, 2]


def test_rref_examples():
    ident = ((1, 0), (0, 1))
    assert ea.rref(ident, QQ) == ident
    assert ea.rref([[2, 4], [1, 2]], QQ) == ((1, 2),)
    assert ea.rref([[1, 1], [0, 1]], F2) == ((1, 0), (0, 1))
    assert ea.rref([], QQ, 3) == ()


def test_span_examples():
    assert ea.span([], 3).dim == 0
    assert ea.span(ea.unit_vectors(2), 2) == ea.full_space(2)
    assert ea.span([[1, 1], [1, 0], [0, 1]], 2, F2) == ea.full_space(2, F2)


def test_sum_intersect_examples():
    e1, e2 = ea.span([[1, 0]], 2, F2), ea.span([[0, 1]], 2, F2)
    a = ea.span([[1, 1]], 2, F2)
    assert ea.subspace_sum(a, ea.zero_subspace(2, F2)) == a
    assert ea.subspace_sum(e1, e2) == ea.full_space(2, F2)
    assert ea.subspace_sum(e1, a) == ea.full_space(2, F2)
    assert ea.intersect(a, ea.full_space(2, F2)) == a
    assert ea.intersect(e1, e2).dim == 0
    b = ea.span([[1, 0, 0], [0, 1, 0]], 3)
    c = ea.span([[0, 1, 0], [0, 0, 1]], 3)
    assert ea.intersect(b, c) == ea.span([[0, 1, 0]], 3)


def test_annihilator_examples():
    assert ea.annihilator(ea.zero_subspace(3)) == ea.full_space(3)
    assert ea.annihilator(ea.full_space(3)).dim == 0
    assert ea.annihilator(ea.span([[1, 1]], 2, F2)) == ea.span([[1, 1]], 2, F2)


def test_contains_examples():
    a = ea.span([[0, 1]], 2)
    assert ea.contains(a, [0, 0])
    assert not ea.contains(a, [1, 0])
    assert ea.contains(ea.full_space(2, F2), [1, 1])
    assert [1, 1] in ea.full_space(2, F2)


def test_direct_sum_examples():
    assert ea.direct_sum(ea.zero_subspace(2), ea.zero_subspace(1)) == ea.zero_subspace(3)
    assert ea.direct_sum(ea.full_space(2), ea.full_space(1)) == ea.full_space(3)
    got = ea.direct_sum(ea.span([[1, 0]], 2), ea.span([[1]], 1))
    assert got.basis == ((1, 0, 0), (0, 0, 1))


def test_pivot_complement_examples():
    assert ea.pivot_complement(ea.zero_subspace(2)) == ea.full_space(2)
    assert ea.pivot_complement(ea.full_space(2)).dim == 0
    assert ea.pivot_complement(ea.span([[1, 1]], 2)) == ea.span([[0, 1]], 2)


def test_subspace_validation():
    with pytest.raises(ValueError):
        ea.Subspace(2, ((2, 0),), QQ)
    with pytest.raises(ea.DimensionMismatchError):
        ea.subspace_sum(ea.full_space(2), ea.full_space(3))
    with pytest.raises(ea.FieldMismatchError):
        ea.subspace_sum(ea.full_space(2), ea.full_space(2, F7))


def test_complement_in_and_projection():
    within = ea.span([[1, 0, 0], [0, 1, 0]], 3)
    a = ea.span([[1, 1, 0]], 3)
    c = ea.complement_in(a, within)
    assert ea.subspace_sum(a, c) == within and ea.intersect(a, c).dim == 0
    assert ea.project(ea.span([[1, 2, 3]], 3), [0, 2]) == ea.span([[1, 3]], 2)


# -- properties -------------------------------------------------------------

FIELDS = st.sampled_from([QQ, F2, GF(3), F7])


@st.composite
def subspace_pairs(draw):
    fld = draw(FIELDS)
    n = draw(st.integers(0, 5))
    p = fld.characteristic or 5
    vec = st.lists(st.integers(-2, p), min_size=n, max_size=n)
    a = ea.span(draw(st.lists(vec, max_size=4)), n, fld)
    b = ea.span(draw(st.lists(vec, max_size=4)), n, fld)
    return a, b


@settings(max_examples=150, deadline=None)
@given(subspace_pairs())
def test_modular_law(pair):
    a, b = pair
    assert ea.subspace_sum(a, b).dim + ea.intersect(a, b).dim == a.dim + b.dim


@settings(max_examples=150, deadline=None)
@given(subspace_pairs())
def test_annihilator_is_an_order_reversing_involution(pair):
    a, b = pair
    assert ea.annihilator(ea.annihilator(a)) == a
    assert ea.annihilator(a).dim == a.codim
    assert ea.subspace_contains(a, b) == ea.subspace_contains(ea.annihilator(b), ea.annihilator(a))


@settings(max_examples=100, deadline=None)
@given(subspace_pairs(), st.randoms(use_true_random=False))
def test_rref_is_canonical(pair, rnd):
    a, _ = pair
    fld = a.field
    rows = [list(r) for r in a.basis]
    # random invertible row operations
    for _ in range(6):
        if len(rows) < 2:
            break
        i, j = rnd.sample(range(len(rows)), 2)
        c = fld(rnd.randint(1, 4)) if fld.characteristic != 2 else 1
        rows[i] = [x + c * y for x, y in zip(rows[i], rows[j])]
    rnd.shuffle(rows)
    assert ea.span(rows, a.ambient_dim, fld) == a


@settings(max_examples=150, deadline=None)
@given(st.lists(st.lists(st.integers(0, 1), min_size=7, max_size=7), max_size=8))
def test_gf2_packed_path_matches_generic(rows):
    assert ea.rref(rows, F2, 7) == ea.rref(rows, F2, 7, packed=False)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 6).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.lists(st.integers(0, 1), min_size=n, max_size=n), max_size=4),
    st.lists(st.lists(st.integers(0, 1), min_size=n, max_size=n), max_size=4))))
def test_gf2_enumeration(data):
    n, ra, rb = data
    a, b = ea.span(ra, n, F2), ea.span(rb, n, F2)
    ea_, eb = set(ea.elements(a)), set(ea.elements(b))
    assert len(ea_) == 2 ** a.dim
    assert set(ea.elements(ea.intersect(a, b))) == ea_ & eb
    sums = {tuple((x + y) % 2 for x, y in zip(u, v)) for u in ea_ for v in eb}
    assert set(ea.elements(ea.subspace_sum(a, b))) == sums


def test_invertibility_and_rank():
    assert ea.is_invertible(((1, 1), (0, 1)), F2)
    assert not ea.is_invertible(((1, 1), (1, 1)), QQ)
    assert not ea.is_invertible(((1, 0, 0),), QQ)
    assert ea.rank(((1, 2), (2, 4)), QQ) == 1
    assert ea.rank(((1, 2), (2, 4)), GF(3)) == 1
