"""Seeded property suites over random instances.

Each suite checks one family of identities on ``cases`` random instances.
Case ``i`` of a run with seed ``s`` draws from its own generator seeded with
:func:`case_seed`, so a failing case can be replayed alone.
"""
from __future__ import annotations

import itertools
from typing import Callable, Dict, List

import numpy as np

from . import decomp as dc
from . import exactalg as ea
from . import gen
from . import relcore as rc
from . import symplin as sp
from . import wwcat as ww
from .exactalg import FieldSpec, GF

_GOLDEN = 0x9E3779B97F4A7C15


def case_seed(seed: int, case: int) -> int:
    return (seed + case * _GOLDEN) % 2 ** 64


class _Failures(list):
    def check(self, ok: bool, message: str) -> None:
        if not ok:
            self.append(message)


def _tags(tag, default):
    return [ww.Category.parse(tag)] if tag else [ww.Category.parse(t) for t in default]


# -- suites -------------------------------------------------------------------

def suite_duality(rng, fld, max_dim, tag=None):
    out = _Failures()
    f, g = gen.random_chain(rng, fld, 2, max_dim)
    df, dg = rc.dual(f), rc.dual(g)
    out.check(rc.dual(rc.compose(f, g)) == rc.compose(dg, df), "(fg)* != g* f*")
    out.check(rc.dual(df) == f, "f** != f")
    out.check(rc.dual(rc.transpose(f)) == rc.transpose(df), "(f^t)* != (f*)^t")
    out.check(rc.kernel(df) == ea.annihilator(rc.image(f)), "ker f* != (Im f)°")
    out.check(rc.image(df) == ea.annihilator(rc.kernel(f)), "Im f* != (ker f)°")
    out.check(rc.indeterminacy(df) == ea.annihilator(rc.domain(f)), "Indet f* != (Dom f)°")
    out.check(rc.domain(df) == ea.annihilator(rc.indeterminacy(f)), "Dom f* != (Indet f)°")
    out.check(rc.is_reduction(f) == rc.is_coreduction(df), "reductions not exchanged")
    meet = ea.intersect(rc.kernel(f), rc.indeterminacy(g))
    out.check(ea.annihilator(meet) == ea.subspace_sum(rc.domain(dg), rc.image(df)),
              "(ker f & Indet g)° != Dom g* + Im f*")
    join = ea.subspace_sum(rc.domain(f), rc.image(g))
    out.check(ea.annihilator(join) == ea.intersect(rc.kernel(dg), rc.indeterminacy(df)),
              "(Dom f + Im g)° != ker g* & Indet f*")
    return out


def suite_additivity(rng, fld, max_dim, tag=None):
    out = _Failures()
    chain = gen.random_chain(rng, fld, rng.randint(3, 5), max_dim)
    e, d = rc.excess_seq(chain), rc.defect_seq(chain)
    for j in range(1, len(chain)):
        out.check(rc.excess_split(chain, j) == e, f"excess split at {j}")
        out.check(rc.defect_split(chain, j) == d, f"defect split at {j}")
    composite = rc.compose_chain(chain)
    for br in rc.parenthesizations(len(chain)):
        h, e2, d2 = rc.accumulate(chain, br)
        out.check((h, e2, d2) == (composite, e, d), f"bracketing {br}")
    return out


def suite_duality_exchange(rng, fld, max_dim, tag=None):
    out = _Failures()
    chain = gen.random_chain(rng, fld, rng.randint(2, 5), max_dim)
    duals = [rc.dual(f) for f in reversed(chain)]
    out.check(rc.excess_seq(chain) == rc.defect_seq(duals), "E(f..) != D(f*..)")
    out.check(rc.defect_seq(chain) == rc.excess_seq(duals), "D(f..) != E(f*..)")
    f, g = chain[0], chain[1]
    out.check(rc.is_strongly_transversal(f, g) == rc.is_strongly_transversal(rc.dual(g), rc.dual(f)),
              "strong transversality not preserved")
    return out


def suite_inequality(rng, fld, max_dim, tag=None):
    out = _Failures()
    for t in _tags(tag, ["ILREL", "CLREL", "SLREL"]):
        chain = gen.random_tagged_chain(rng, fld, rng.randint(2, 4), max_dim, t)
        e, d = rc.excess_seq(chain), rc.defect_seq(chain)
        out.check(t.allows(d, e), f"{t.value}: (D, E) = ({d}, {e})")
        composite = rc.compose_chain(chain)
        out.check(sp.check_morphism(composite, t.value), f"{t.value}: composite left the category")
    return out


def suite_ww_assoc(rng, fld, max_dim, tag=None):
    out = _Failures()
    for t in _tags(tag, ["LREL", "ILREL", "CLREL", "SLREL"]):
        a, b, c = gen.random_ww_chain(rng, fld, t, 3, max_dim)
        out.check(ww.ww_compose(ww.ww_compose(a, b), c) == ww.ww_compose(a, ww.ww_compose(b, c)),
                  f"{t.value}: associativity")
        f, g = a.shadow, b.shadow
        out.check(ww.ww_embed(f, t).shadow == f, f"{t.value}: shadow of iota")
        if rc.is_strongly_transversal(f, g):
            out.check(ww.ww_compose(ww.ww_embed(f, t), ww.ww_embed(g, t))
                      == ww.ww_embed(rc.compose(f, g), t), f"{t.value}: congenial pair")
        links = [m.shadow for m in (a, b, c)]
        out.check(ww.ww_from_chain(links, t) == ww.ww_fold(links, t), f"{t.value}: chain fold")
    return out


def suite_two_term(rng, fld, max_dim, tag=None):
    out = _Failures()
    for t in _tags(tag, ["LREL", "ILREL", "CLREL", "SLREL"]):
        m = gen.random_ww(rng, fld, t, max_dim)
        a, b = ww.ww_two_term(m)
        for name, ok in ww.verify_two_term(m, a, b).items():
            out.check(ok, f"{t.value}: {name}")
        out.check(ww.ww_from_chain([a, b], t) == m, f"{t.value}: [A, B] != m")
    return out


def suite_tables(rng, fld, max_dim, tag=None):
    out = _Failures()
    f, g = gen.random_chain(rng, fld, 2, max_dim)
    want = (rc.defect_pair(f, g), rc.excess_pair(f, g), rc.compose(f, g).dim)
    out.check(dc.lrel_pair_indices(f, g) == want, "LREL table")
    f, g = gen.random_symp_chain(rng, fld, 2, max(1, max_dim // 2), "ILREL")
    want = (rc.defect_pair(f, g), rc.excess_pair(f, g), rc.compose(f, g).dim)
    out.check(dc.ilrel_pair_indices(f, g) == want, "ILREL table")
    # round trip through a random change of basis
    tm = dc.TripleMultiplicities(*(rng.randint(0, 2) for _ in range(6)))
    n, a, b, c = dc.elementary_triple(tm, fld)
    pm = gen.random_invertible(rng, fld, n)
    moved = [ea.apply_linear(s, pm, n) for s in (a, b, c)]
    out.check(dc.triple_multiplicities(n, *moved) == tm, "triple round trip")
    im = dc.IsoPairMultiplicities(*(rng.randint(0, 2) for _ in range(5)))
    x, a, b = dc.elementary_isotropic_pair(im, fld)
    sm = gen.random_symplectomorphism(rng, x)
    out.check(dc.isotropic_pair_multiplicities(x, ea.apply_linear(a, sm), ea.apply_linear(b, sm)) == im,
              "isotropic pair round trip")
    return out


def suite_cotangent(rng, fld, max_dim, tag=None):
    out = _Failures()
    f, g = gen.random_chain(rng, fld, 2, max_dim)
    tf, tg = sp.cotangent(f), sp.cotangent(g)
    out.check(sp.cotangent(rc.compose(f, g)) == rc.compose(tf, tg), "T*(fg) != T*f T*g")
    out.check(sp.check_morphism(tf, "SLREL") and sp.check_morphism(tg, "SLREL"), "T*f not lagrangian")
    s = rc.defect_pair(f, g) + rc.excess_pair(f, g)
    out.check(rc.defect_pair(tf, tg) == s and rc.excess_pair(tf, tg) == s, "T* indices")
    return out


def suite_iso_coiso(rng, fld, max_dim, tag=None):
    out = _Failures()
    f, g = gen.random_symp_chain(rng, fld, 2, max(1, max_dim // 2), "ILREL")
    dual = sp.iso_coiso_dual
    df, dg = dual(f), dual(g)
    out.check(sp.check_morphism(df, "CLREL"), "dual not coisotropic")
    out.check(dual(df) == f, "inverse does not recover f")
    out.check(dual(rc.compose(f, g)) == rc.compose(dg, df), "not contravariant")
    out.check(rc.excess_pair(f, g) == rc.defect_pair(dg, df), "E(f,g) != D(g', f')")
    out.check(rc.defect_pair(f, g) == rc.excess_pair(dg, df), "D(f,g) != E(g', f')")
    return out


# -- GF(2) brute force ----------------------------------------------------------

def _to_int(v) -> int:
    x = 0
    for b in v:
        x = (x << 1) | int(b)
    return x


def _span_table(gens: List[int], n: int) -> np.ndarray:
    """Membership table of the GF(2) span of ``gens`` over all ``2**n`` vectors."""
    table = np.zeros(2 ** n, dtype=bool)
    table[0] = True
    idx = np.arange(2 ** n)
    for g in gens:
        table = table | table[idx ^ g]
    return table


def trajectory_counts(chain) -> Dict[tuple, int]:
    """``{(x_0, x_r): number of trajectories}`` by exhaustive enumeration over GF(2)."""
    dims = [chain[0].target.dim] + [f.source.dim for f in chain]
    members = [set(ea.elements(f.space)) for f in chain]
    spaces = [list(itertools.product((0, 1), repeat=d)) for d in dims]
    counts = {}
    for x0 in spaces[0]:
        for xr in spaces[-1]:
            k = 0
            for mid in itertools.product(*spaces[1:-1]):
                pts = (x0,) + mid + (xr,)
                if all(pts[i] + pts[i + 1] in members[i] for i in range(len(chain))):
                    k += 1
            counts[(x0, xr)] = k
    return counts


def oracle_defect(chain) -> int:
    """Codimension of ``(f_1 x ... x f_r) + (X_0 x Diag x ... x X_r)`` by enumeration."""
    dims = [chain[0].target.dim] + [f.source.dim for f in chain]
    n = dims[0] + 2 * sum(dims[1:-1]) + dims[-1]
    gens = []
    offset = 0
    for f in chain:
        for r in f.space.basis:
            gens.append(_to_int((0,) * offset + tuple(r) + (0,) * (n - offset - len(r))))
        offset += f.space.ambient_dim

    def bit(pos):
        return 1 << (n - 1 - pos)

    gens += [bit(i) for i in range(dims[0])]
    offset = dims[0]
    for d in dims[1:-1]:
        gens += [bit(offset + i) | bit(offset + d + i) for i in range(d)]
        offset += 2 * d
    gens += [bit(offset + i) for i in range(dims[-1])]
    size = int(_span_table(gens, n).sum())
    return n - (size.bit_length() - 1)


def sum_subspace_elements_match(chain) -> bool:
    """Compare the enumerated sum with the elements of the computed sum subspace."""
    prod, _, outer = rc._product_and_diagonals(tuple(chain))
    s = ea.subspace_sum(prod, outer)
    n = s.ambient_dim
    gens = [_to_int(r) for r in prod.basis] + [_to_int(r) for r in outer.basis]
    table = _span_table(gens, n)
    computed = np.zeros(2 ** n, dtype=bool)
    computed[[_to_int(v) for v in ea.elements(s)]] = True
    return bool((table == computed).all())


def suite_oracle_gf2(rng, fld, max_dim, tag=None):
    out = _Failures()
    chain = gen.random_chain(rng, GF(2), rng.randint(1, 3), min(max_dim, 4))
    e = rc.excess_seq(chain)
    composite = rc.compose_chain(chain)
    counts = trajectory_counts(chain)
    out.check(counts[(tuple([0] * composite.target.dim), tuple([0] * composite.source.dim))] == 2 ** e,
              "trajectories 0 -> 0")
    for (x0, xr), k in counts.items():
        expected = 2 ** e if (x0, xr) in composite else 0
        out.check(k == expected, f"trajectories {x0} -> {xr}: {k} != {expected}")
    out.check(oracle_defect(chain) == rc.defect_seq(chain), "defect by enumeration")
    if len(chain) > 1:
        out.check(sum_subspace_elements_match(chain), "sum subspace elements")
    return out


SUITES: Dict[str, Callable] = {
    "duality": suite_duality,
    "additivity": suite_additivity,
    "duality-exchange": suite_duality_exchange,
    "inequality": suite_inequality,
    "ww-assoc": suite_ww_assoc,
    "two-term": suite_two_term,
    "tables": suite_tables,
    "oracle-gf2": suite_oracle_gf2,
    "cotangent": suite_cotangent,
    "iso-coiso": suite_iso_coiso,
}


def run_suite(name: str, seed: int, cases: int, fld: FieldSpec, max_dim: int, tag=None) -> dict:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    if not 0 <= seed < 2 ** 64:
        raise ValueError("seed must be a 64-bit unsigned integer")
    suite = SUITES[name]
    failures = []
    for i in range(cases):
        s = case_seed(seed, i)
        try:
            msgs = suite(gen.rng_from_seed(s), fld, max_dim, tag)
        except ea.LinRelError as exc:
            msgs = [f"error: {exc}"]
        failures += [{"case": i, "seed": s, "message": m} for m in msgs]
    failed_cases = len({f["case"] for f in failures})
    return {
        "suite": name,
        "seed": seed,
        "cases": cases,
        "field": str(fld),
        "max_dim": max_dim,
        "tag": ww.Category.parse(tag).value if tag else None,
        "passed": cases - failed_cases,
        "failed": failed_cases,
        "failures": failures,
    }
