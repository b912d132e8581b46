import pytest

from linrel import checks, gen
from linrel import exactalg as ea
from linrel import relcore as rc
from linrel import symplin as sp
from linrel.exactalg import GF, QQ


def test_case_seed_is_64_bit_and_distinct():
    seeds = {checks.case_seed(2 ** 64 - 1, i) for i in range(100)}
    assert len(seeds) == 100 and all(0 <= s < 2 ** 64 for s in seeds)


def test_generation_is_reproducible():
    a = gen.random_chain(gen.rng_from_seed(7), GF(7), 4, 4)
    b = gen.random_chain(gen.rng_from_seed(7), GF(7), 4, 4)
    assert a == b


@pytest.mark.parametrize("fld", [QQ, GF(2), GF(7)])
def test_symplectic_generators(fld):
    rng = gen.rng_from_seed(3)
    for _ in range(20):
        x = gen.random_symplectic_space(rng, fld, rng.randint(0, 3))
        assert sp.is_isotropic(x, gen.random_isotropic(rng, x))
        assert sp.is_coisotropic(x, gen.random_coisotropic(rng, x))
        assert sp.is_lagrangian(x, gen.random_lagrangian(rng, x))
        m = gen.random_symplectomorphism(rng, x)
        assert ea.is_invertible(m, fld) if x.dim else True
        for tag in ("ILREL", "CLREL", "SLREL"):
            f, = gen.random_symp_chain(rng, fld, 1, 2, tag)
            assert sp.check_morphism(f, tag)


def test_random_chains_hit_nonzero_indices():
    seen = set()
    for i in range(60):
        chain = gen.random_chain(gen.rng_from_seed(i), GF(2), 2, 3)
        seen.add((rc.excess_seq(chain) > 0, rc.defect_seq(chain) > 0))
    assert len(seen) >= 3


def test_trajectory_oracle_on_known_chain():
    x = rc.space(1, GF(2))
    full = rc.full_relation(x, x)
    counts = checks.trajectory_counts([full, full, full])
    assert counts[((0,), (0,))] == 4
    zero = rc.zero_relation(x, x)
    assert checks.oracle_defect([zero, zero]) == 1


@pytest.mark.parametrize("name", sorted(checks.SUITES))
def test_every_suite_passes_quickly(name):
    report = checks.run_suite(name, 123, 8, GF(7), 3)
    assert report["failed"] == 0, report["failures"]
    assert report["suite"] == name and report["field"] == "GF(7)"


def test_unknown_suite():
    with pytest.raises(KeyError):
        checks.run_suite("nope", 0, 1, QQ, 2)
