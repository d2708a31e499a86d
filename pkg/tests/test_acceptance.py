"""Acceptance suite: one PASS/FAIL line per criterion 1-9.

Tolerances are all exact (integer dimensions, exact F_p equalities); time
budgets are 1 s for criteria 1 and 2, 10 min for the sweep of criterion 3 and
5 s for criterion 6. Run directly (``python tests/test_acceptance.py``) or via
pytest, which echoes the lines in its terminal summary.
"""
import collections
import time

import numpy as np
import pytest

from elemtilt.algebra import block_cartan, hom_basis, make_algebra, quiver_of_block
from elemtilt.catalog import build_map, catalog_instances, mid, verify_catalog
from elemtilt.endo import (
    cartan_matrix,
    compose_chain_maps,
    det,
    endomorphism_algebra,
    generation_report,
    quiver_of_endo,
)
from elemtilt.tilt import arc_decomposition, build_tilting_complex, clear_cache, is_null_homotopic, verify_tilting

from conftest import ACCEPTANCE_LINES, sweep_configs

SWEEP_BUDGET = 600.0


def report(n, ok, detail):
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line, flush=True)
    return ok


def note(n, detail):
    line = f"criterion {n}: NOTE  {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line, flush=True)


# ---------------------------------------------------------------- 1, 2: small exact checks

def test_criterion_1_block_quiver():
    t0 = time.perf_counter()
    Q = quiver_of_block(make_algebra(5, 4))
    elapsed = time.perf_counter() - t0
    want = {(t, (t + 1) % 4, 1) for t in range(4)} | {(t, (t - 1) % 4, 1) for t in range(4)}
    ok = set(Q.arrows()) == want and Q.total == 8 and elapsed < 1.0
    report(1, ok, f"4-cycle, {Q.total} arrows, one each way between t and t+-1 ({elapsed:.3f}s)")
    assert ok


def test_criterion_2_worked_example_tilting_complex():
    t0 = time.perf_counter()
    P = make_algebra(5, 4)
    T = build_tilting_complex(P, (0, 1, 3))
    elapsed = time.perf_counter() - t0
    T2 = T[2]
    d = T2.d % 5
    unit = lambda e: np.count_nonzero(e) == 1
    ok = (
        T2.deg0 == (1, 3) and T2.deg1 == (2,)
        and unit(d[0, 0]) and d[0, 0, 1, 0] != 0  # x, routed from the P1 summand
        and unit(d[1, 0]) and d[1, 0, 0, 1] != 0  # y, routed from the P3 summand
        and all(T[i].kind == "stalk" and T[i].deg0 == (i,) for i in (0, 1, 3))
        and elapsed < 1.0
    )
    report(2, ok, f"{T2.describe()}; T0, T1, T3 stalks ({elapsed:.3f}s)")
    assert ok


# ---------------------------------------------------------------- the sweep (3, 4, 5, 9)

class Sweep:
    def __init__(self):
        self.configs = list(sweep_configs())
        self.tilting = {}
        self.cartan = {}
        self.catalog = {}
        self.gen_base = {}
        self.gen_ext = {}
        self.times = collections.Counter()
        for p, r, I0 in self.configs:
            P = make_algebra(p, r)
            t0 = time.perf_counter()
            T = build_tilting_complex(P, I0)
            self.tilting[p, r, I0] = verify_tilting(T)
            t1 = time.perf_counter()
            self.catalog[p, r, I0] = verify_catalog(P, I0)
            t2 = time.perf_counter()
            E = endomorphism_algebra(T)
            self.cartan[p, r, I0] = (det(cartan_matrix(E)), det(block_cartan(P)))
            t3 = time.perf_counter()
            if arc_decomposition(P, I0).m == 1:
                self.gen_base[p, r, I0] = generation_report(E, [i.map for i in catalog_instances(P, I0)])
                self.gen_ext[p, r, I0] = generation_report(
                    E, [i.map for i in catalog_instances(P, I0, extended=True)]
                )
            t4 = time.perf_counter()
            self.times["tilting"] += t1 - t0
            self.times["catalog"] += t2 - t1
            self.times["endo"] += t3 - t2
            self.times["generation"] += t4 - t3


@pytest.fixture(scope="module")
def sweep():
    return Sweep()


def test_criterion_3_tilting_condition(sweep):
    bad = [k for k, rep in sweep.tilting.items() if not rep.shifts_vanish]
    k0 = sum(1 for rep in sweep.tilting.values() if rep.k0_unimodular)
    elapsed = sweep.times["tilting"]
    ok = not bad and elapsed < SWEEP_BUDGET
    report(3, ok, f"Hom_K(T,T[+-1]) = 0 in {len(sweep.configs) - len(bad)}/{len(sweep.configs)} configurations, "
                  f"|det K0| = 1 in {k0}; {elapsed:.1f}s")
    assert ok, bad[:5]


def test_criterion_4_catalog_soundness(sweep):
    total = 0
    not_chain = []
    wrong = collections.Counter()
    wrong_examples = {}
    for key, rep in sweep.catalog.items():
        for v in rep.verdicts:
            total += 1
            if not v.chain:
                not_chain.append((key, str(v.id)))
            elif not v.ok:
                kind = f"{v.id.tag} {'null' if v.null else 'not null'} (expected {'null' if v.expect_null else 'not null'})"
                wrong[kind] += 1
                wrong_examples.setdefault(kind, (key, str(v.id)))
    c1 = collections.Counter()
    for rep in sweep.catalog.values():
        for name, (a, n) in rep.c1_threshold_agreement().items():
            c1[name, "agree"] += a
            c1[name, "total"] += n
    ok = not not_chain and not wrong
    breakdown = "; ".join(f"{k}: {n}" for k, n in sorted(wrong.items())) or "none"
    report(4, ok, f"{total} instances, {len(not_chain)} not chain maps, unexpected homotopy status: {breakdown}")
    note(4, f"C1 null threshold q >= (t-u) [presentation exponent] matches "
            f"{c1['presentation', 'agree']}/{c1['presentation', 'total']}; q >= (u-t) matches "
            f"{c1['complement', 'agree']}/{c1['complement', 'total']}")
    for kind, (key, ident) in sorted(wrong_examples.items()):
        note(4, f"first {kind}: p,r,I0={key} {ident}")
    assert not not_chain
    assert ok, breakdown


def test_criterion_5_generation(sweep):
    base_ok = sum(1 for g in sweep.gen_base.values() if g.complete)
    ext_ok = sum(1 for g in sweep.gen_ext.values() if g.complete)
    n = len(sweep.gen_base)
    ok = base_ok == n
    report(5, ok, f"catalog maps generate Hom_K for all pairs in {base_ok}/{n} single-arc configurations "
                  f"({sweep.times['generation']:.1f}s with the extended run)")
    note(5, f"adding the projections and single-summand stalk maps (ProjU/V, StalkIn/Out): {ext_ok}/{n} complete")
    missing = collections.Counter()
    for g in sweep.gen_base.values():
        missing[sum(1 for _ in g.missing())] += 1
    note(5, f"incomplete pairs per configuration (count: configurations): {dict(sorted(missing.items()))}")
    assert ext_ok == n
    assert ok, f"{n - base_ok} configurations not generated by the catalog alone"


def test_criterion_9_cartan_determinant(sweep):
    bad = [k for k, (a, b) in sweep.cartan.items() if a != b]
    ok = not bad
    report(9, ok, f"det Cartan(End T) = det Cartan(A) in {len(sweep.cartan) - len(bad)}/{len(sweep.cartan)} configurations")
    assert ok, bad[:5]


# ---------------------------------------------------------------- 6, 7: the worked example

def _power(f, n):
    g = f
    for _ in range(n - 1):
        g = compose_chain_maps(g, f)
    return g


def test_criterion_6_worked_example_relations():
    clear_cache()
    t0 = time.perf_counter()
    P, I0 = make_algebra(5, 4), (0, 1, 3)
    b = lambda tag, **s: build_map(P, I0, mid(tag, **s)).map
    eps1, eps3 = b("EpsilonU", arc=2, side="u"), b("EpsilonV", arc=2, side="v")
    pi1, pi3 = b("Adjacent", arc=2, kind="pi", side="u"), b("Adjacent", arc=2, kind="pi", side="v")
    gamma = b("C2", arc=2, t=2, q=1)
    eta1, eta3 = b("D1", arc=2, t=2), b("D2", arc=2, t=2)
    g4 = _power(gamma, 4)
    # eps_1 o pi_1: first pi_1 (T2 -> T1), then eps_1 (T1 -> T2)
    ep1, ep3 = compose_chain_maps(pi1, eps1), compose_chain_maps(pi3, eps3)
    checks = {
        "eps1 pi1 + eps3 pi3 ~ 0": is_null_homotopic(ep1 + ep3),
        "gamma^5 ~ 0": is_null_homotopic(_power(gamma, 5)),
        "eta1 eta3 ~ gamma^4": is_null_homotopic(compose_chain_maps(eta3, eta1) - g4),
        "eta3 eta1 ~ gamma^4": is_null_homotopic(compose_chain_maps(eta1, eta3) - g4),
    }
    elapsed = time.perf_counter() - t0
    ok = all(checks.values()) and elapsed < 5.0
    report(6, ok, "; ".join(f"{k}: {'yes' if v else 'NO'}" for k, v in checks.items()) + f" ({elapsed:.2f}s)")
    note(6, f"eps1 pi1 - eps3 pi3 ~ 0: {'yes' if is_null_homotopic(ep1 - ep3) else 'no'} "
            "(the two composites are equal in K, so the sum is twice a nonzero class)")
    d1 = eta1 - b("E3", arc=2, t=2, tt=2, side="u", h=1)
    d3 = eta3 - b("E3", arc=2, t=2, tt=2, side="v", h=1)
    note(6, f"with eta = D - E3 instead of the displayed D maps, eta1 eta3 ~ gamma^4: "
            f"{'yes' if is_null_homotopic(compose_chain_maps(d1, d3) - g4) else 'no'}")
    assert elapsed < 5.0
    assert ok, checks


REFERENCE_ARROWS = {
    (2, 2): 5, (1, 2): 2, (2, 1): 1, (3, 2): 2, (2, 3): 1,
    (0, 1): 1, (1, 0): 1, (0, 3): 1, (3, 0): 1, (1, 3): 1, (3, 1): 1,
}


def test_criterion_7_worked_example_quiver():
    P, I0 = make_algebra(5, 4), (0, 1, 3)
    Q = quiver_of_endo(endomorphism_algebra(build_tilting_complex(P, I0)))
    got = {(a, b): c for a, b, c in Q.arrows()}
    keys = sorted(set(got) | set(REFERENCE_ARROWS))
    diff = [f"{a}->{b}: expected {REFERENCE_ARROWS.get((a, b), 0)}, computed {got.get((a, b), 0)}"
            for a, b in keys if REFERENCE_ARROWS.get((a, b), 0) != got.get((a, b), 0)]
    ok = not diff
    report(7, ok, "soft; computed arrows " + ", ".join(f"{a}->{b}x{c}" for (a, b), c in sorted(got.items())))
    for d in diff:
        note(7, "diff " + d)
    if diff:
        pytest.xfail("soft criterion: computed quiver differs from the figure (" + "; ".join(diff) + ")")


# ---------------------------------------------------------------- 8: Hom basis oracle

def test_criterion_8_hom_basis_oracle():
    mismatches = 0
    pairs = 0
    seen = set()
    for p, r, _ in sweep_configs():
        if (p, r) in seen:
            continue
        seen.add((p, r))
        P = make_algebra(p, r)
        for i in range(r):
            for k in range(r):
                brute = sum(1 for a in range(p) for b_ in range(p) if (k - a + b_ - i) % r == 0)
                pairs += 1
                mismatches += hom_basis(P, i, k).dim != brute
    ok = mismatches == 0
    report(8, ok, f"|hom_basis(i,k)| equals the monomial top-index count for {pairs - mismatches}/{pairs} pairs "
                  f"over {len(seen)} (p,r)")
    assert ok


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
