import itertools

import pytest

from linrel import exactalg as ea
from linrel import gen
from linrel import relcore as rc
from linrel.checks import case_seed
from linrel.exactalg import GF, QQ

F2, F7 = GF(2), GF(7)
FIELDS = [QQ, F2, F7]


def sp1(fld=F2, name=""):
    return rc.space(1, fld, name)


def rngs(n, salt=0):
    for i in range(n):
        yield i, gen.rng_from_seed(case_seed(77 + salt, i))


def test_identity_examples():
    assert rc.identity(rc.space(0)).space.dim == 0
    assert rc.identity(rc.space(1)).space.basis == ((1, 1),)
    assert rc.identity(rc.space(2)).space.basis == ((1, 0, 1, 0), (0, 1, 0, 1))


def test_compose_examples():
    x, y, z = sp1(name="X"), sp1(name="Y"), sp1(name="Z")
    f = rc.zero_relation(x, y)
    g = rc.full_relation(y, z)
    assert rc.compose(f, g).space == ea.span([[0, 1]], 2, F2)
    h = rc.relation(x, y, [[1, 1]])
    assert rc.compose(h, rc.identity(y)) == h
    zero_map = rc.graph_of_map([[0, 0]], rc.space(1), rc.space(2))
    g = rc.graph_of_map([[1, 2], [3, 4]], rc.space(2), rc.space(2))
    assert rc.compose(zero_map, g) == rc.graph_of_map([[0, 0]], rc.space(1), rc.space(2))


def test_compose_rejects_mismatch():
    with pytest.raises(rc.ObjectMismatchError):
        rc.compose(rc.identity(rc.space(1)), rc.identity(rc.space(2)))
    with pytest.raises(ea.DimensionMismatchError):
        rc.relation(rc.space(1), rc.space(1), [[1, 0, 0]])


def test_compose_agrees_with_intersection():
    for i, rng in rngs(150):
        f, g = gen.random_chain(rng, FIELDS[i % 3], 2, 4)
        assert rc.compose(f, g) == rc.compose_by_intersection(f, g)


def test_transpose_examples():
    x = rc.space(2)
    assert rc.transpose(rc.identity(x)) == rc.identity(x)
    assert rc.transpose(rc.zero_relation(x, x)) == rc.zero_relation(x, x)
    f = rc.relation(x, x, [[1, 0, 1, 1]])
    assert rc.transpose(f).space == ea.span([[1, 1, 1, 0]], 4)


def test_canonical_subspaces():
    x = rc.space(2)
    d = rc.identity(x)
    assert rc.kernel(d).dim == 0 and rc.indeterminacy(d).dim == 0
    assert rc.domain(d).is_full() and rc.image(d).is_full()
    full = rc.full_relation(rc.space(2), rc.space(3))
    assert rc.kernel(full).dim == 3 and rc.indeterminacy(full).dim == 2
    f = rc.relation(sp1(), sp1(), [[1, 1], [1, 0]])
    assert all(s.is_full() for s in (rc.kernel(f), rc.indeterminacy(f), rc.domain(f), rc.image(f)))


def test_dual_examples():
    x = rc.space(2)
    assert rc.dual(rc.identity(x)) == rc.identity(x)
    assert rc.dual(rc.full_relation(sp1(), sp1())) == rc.zero_relation(sp1(), sp1())
    assert rc.dual(rc.zero_relation(sp1(QQ), sp1(QQ))) == rc.full_relation(sp1(QQ), sp1(QQ))


def test_pair_index_examples():
    x = sp1()
    d = rc.identity(x)
    assert (rc.excess_pair(d, d), rc.defect_pair(d, d)) == (0, 0)
    full = rc.full_relation(x, x)
    assert (rc.excess_pair(full, full), rc.defect_pair(full, full)) == (1, 0)
    y = rc.space(2, F2)
    z1, z2 = rc.zero_relation(x, y), rc.zero_relation(y, x)
    assert (rc.excess_pair(z1, z2), rc.defect_pair(z1, z2)) == (0, 2)


def test_sequence_index_examples():
    x = sp1()
    f = rc.relation(x, x, [[1, 1]])
    assert (rc.excess_seq([f]), rc.defect_seq([f])) == (0, 0)
    full = rc.full_relation(x, x)
    assert (rc.excess_seq([full] * 3), rc.defect_seq([full] * 3)) == (2, 0)
    zero = rc.zero_relation(x, x)
    assert (rc.excess_seq([zero, zero]), rc.defect_seq([zero, zero])) == (0, 1)
    chain = rc.RelationChain((full, full, full))
    assert (chain.excess(), chain.defect(), chain.composite()) == (2, 0, full)
    with pytest.raises(rc.ObjectMismatchError):
        rc.RelationChain((full, rc.identity(rc.space(2, F2))))


def test_predicates():
    d = rc.identity(rc.space(2))
    assert rc.is_reduction(d) and rc.is_coreduction(d) and rc.is_isomorphism(d)
    full = rc.full_relation(rc.space(1), rc.space(1))
    assert rc.is_surjective(full) and rc.is_cosurjective(full)
    assert not rc.is_injective(full) and not rc.is_coinjective(full)
    for i, rng in rngs(100, 1):
        f, g = gen.random_chain(rng, FIELDS[i % 3], 2, 3)
        if rc.is_cosurjective(f) or rc.is_surjective(g):
            assert rc.is_transversal(f, g)
        # highly selective: coreduction on the left or reduction on the right
        if rc.is_coreduction(f) or rc.is_reduction(g):
            assert rc.is_strongly_transversal(f, g)
        assert rc.is_monic(f, g) == (rc.excess_pair(f, g) == 0)


def test_duality_identities():
    for i, rng in rngs(120, 2):
        f, g = gen.random_chain(rng, FIELDS[i % 3], 2, 4)
        df, dg = rc.dual(f), rc.dual(g)
        assert rc.dual(rc.compose(f, g)) == rc.compose(dg, df)
        assert rc.dual(df) == f
        assert rc.dual(rc.transpose(f)) == rc.transpose(df)
        assert rc.kernel(df) == ea.annihilator(rc.image(f))
        assert rc.image(df) == ea.annihilator(rc.kernel(f))
        assert rc.indeterminacy(df) == ea.annihilator(rc.domain(f))
        assert rc.domain(df) == ea.annihilator(rc.indeterminacy(f))
        assert rc.is_reduction(f) == rc.is_coreduction(df)
        meet = ea.intersect(rc.kernel(f), rc.indeterminacy(g))
        assert ea.annihilator(meet) == ea.subspace_sum(rc.domain(dg), rc.image(df))
        join = ea.subspace_sum(rc.domain(f), rc.image(g))
        assert ea.annihilator(join) == ea.intersect(rc.kernel(dg), rc.indeterminacy(df))


def test_transpose_preserves_indices():
    for i, rng in rngs(120, 3):
        f, g = gen.random_chain(rng, FIELDS[i % 3], 2, 4)
        ft, gt = rc.transpose(f), rc.transpose(g)
        assert rc.excess_pair(gt, ft) == rc.excess_pair(f, g)
        assert rc.defect_pair(gt, ft) == rc.defect_pair(f, g)


def test_selective_axiom_five():
    for i, rng in rngs(120, 4):
        f, g, h = gen.random_chain(rng, FIELDS[i % 3], 3, 2)
        fg, gh = rc.compose(f, g), rc.compose(g, h)

        def congenial(a, b):
            return rc.excess_pair(a, b) == 0 and rc.defect_pair(a, b) == 0

        left = congenial(f, g) and congenial(fg, h)
        right = congenial(g, h) and congenial(f, gh)
        assert left == right
        assert left == (rc.excess_seq([f, g, h]) == 0 == rc.defect_seq([f, g, h]))


def test_parenthesizations_count():
    catalan = [1, 1, 2, 5, 14]
    for n in range(1, 6):
        assert len(list(rc.parenthesizations(n))) == catalan[n - 1]


def test_natural_factorization_examples():
    x = rc.space(2)
    c, i, r = rc.natural_factorization(rc.identity(x))
    assert rc.compose_chain([c, i, r]) == rc.identity(x)
    full = rc.full_relation(sp1(), sp1())
    c, i, r = rc.natural_factorization(full)
    assert c.source.dim == 0 and r.target.dim == 0
    assert rc.compose_chain([c, i, r]) == full
    f = rc.graph_of_map([[1, 2], [2, 4]], x, x)
    c, i, r = rc.natural_factorization(f)
    assert c.source.dim == 1 and r.target.dim == 1


def test_natural_factorization_random():
    for k, rng in rngs(100, 5):
        f = gen.random_chain(rng, FIELDS[k % 3], 1, 4)[0]
        c, i, r = rc.natural_factorization(f)
        assert rc.compose_chain([c, i, r]) == f
        assert rc.is_coreduction(c) and rc.is_isomorphism(i) and rc.is_reduction(r)
        assert c.source.dim == rc.image(f).dim - rc.indeterminacy(f).dim
        assert r.target.dim == rc.domain(f).dim - rc.kernel(f).dim
        assert rc.is_strongly_transversal(c, i) and rc.is_strongly_transversal(i, r)
        assert rc.is_strongly_transversal(c, rc.compose(i, r))


def test_st_factorization():
    x = sp1()
    cases = [rc.identity(rc.space(1)), rc.zero_relation(x, x), rc.full_relation(x, x)]
    cases += [gen.random_chain(rng, FIELDS[k % 3], 1, 3)[0] for k, rng in rngs(60, 6)]
    for f in cases:
        a, b = rc.st_factorization(f)
        assert a.source.dim == f.target.dim + 2 * f.source.dim
        assert rc.is_reduction(a) and rc.is_coreduction(b)
        assert rc.compose(a, b) == f
        assert rc.excess_pair(a, b) == 0 == rc.defect_pair(a, b)


def test_st_factorization_by_enumeration():
    x = sp1()
    for f in (rc.zero_relation(x, x), rc.full_relation(x, x)):
        a, b = rc.st_factorization(f)
        mids = list(itertools.product((0, 1), repeat=a.source.dim))
        for xv, yv in itertools.product([(0,), (1,)], repeat=2):
            hits = [q for q in mids if (xv, q) in a and (q, yv) in b]
            assert len(hits) == (1 if (xv, yv) in f else 0)


def test_iso_invariants_examples():
    x = rc.space(1)
    assert rc.iso_invariants(rc.identity(x)).as_tuple() == (1, 1, 1, 0, 1, 0)
    assert rc.iso_invariants(rc.zero_relation(x, x)).as_tuple() == (1, 1, 0, 0, 0, 0)
    assert rc.iso_invariants(rc.full_relation(x, x)).as_tuple() == (1, 1, 1, 1, 1, 1)
    with pytest.raises(ValueError):
        rc.IsoInvariants(1, 1, 1, 0, 0, 0)


def test_iso_invariants_classify():
    """Relations with equal invariants are conjugate by isomorphisms."""
    for k, rng in rngs(40, 7):
        fld = FIELDS[k % 3]
        f = gen.random_chain(rng, fld, 1, 3)[0]
        p = gen.random_invertible(rng, fld, f.target.dim)
        q = gen.random_invertible(rng, fld, f.source.dim)
        moved = rc.compose_chain([rc.graph_of_map(p, f.target, f.target), f,
                                  rc.graph_of_map(q, f.source, f.source)])
        assert rc.iso_invariants(moved) == rc.iso_invariants(f)


def test_tensor_examples():
    f = rc.relation(rc.space(1), rc.space(2), [[1, 0, 1]])
    unit = rc.identity(rc.space(0))
    assert rc.tensor(f, unit) == f
    d1 = rc.identity(rc.space(1))
    assert rc.tensor(d1, d1) == rc.identity(rc.space(2))
    x = rc.space(1)
    t = rc.tensor(rc.zero_relation(x, x), rc.full_relation(x, x))
    # a 0-dim and a 2-dim subspace: the sum has dim 2 inside the 4-dim product
    assert t.space.dim == 2 and t.space.ambient_dim == 4
    inv = [a + b for a, b in zip(rc.iso_invariants(rc.zero_relation(x, x)).as_tuple(),
                                 rc.iso_invariants(rc.full_relation(x, x)).as_tuple())]
    assert rc.iso_invariants(t).as_tuple() == tuple(inv)


def test_graph_examples():
    d1 = rc.identity(rc.space(1))
    g = rc.graph_of(d1)
    assert g.source.dim == 0 and g.space.basis == ((1, 1),)
    f = rc.relation(rc.space(1), rc.space(2), [[1, 0, 1]])
    assert rc.ungraph(rc.graph_of(f), f.target, f.source) == f
    z = rc.zero_relation(rc.space(1), rc.space(1))
    assert rc.graph_of(z).space.dim == 0
