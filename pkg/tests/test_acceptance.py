"""One test per acceptance criterion, each printing a single PASS/FAIL line.

The corpus is every Latin square of order ≤ 4 (591 tables built by
backtracking) plus ten pinned random quasigroups of orders 5 and 6.
"""

import random
import time

import pytest

from sigma_nuclei.bench import run_bench
from sigma_nuclei.corpus import cyclic_group, load_fixture, random_fixture_names, random_isostrophism, small_corpus
from sigma_nuclei.inverse_props import (
    ci_oracle, classify, find_ci, find_lip_rip_wcip, find_wip, lip_oracle, rip_oracle, verify_inverse_class_claims,
    wcip_oracle, wip_oracle,
)
from sigma_nuclei.nuclei import ALL_KEYS, ALL_KINDS, NucleusKind, compute_all_nuclei, oracle_sigma_nucleus
from sigma_nuclei.perm import Perm
from sigma_nuclei.quasigroup import garrison_nucleus, identity_elements, translation
from sigma_nuclei.relations import (
    derive_nuclei_of_isostrophe, inverse_partner, verify_inverse_relations, verify_product_relations, verify_isostrophe_relations,
    verify_parastrophe_relations,
)
from sigma_nuclei.s3 import ALL_S3, S3Elem
from sigma_nuclei.strophism import (
    Isostrophism, IsotopyTriple, apply_isostrophism, compose_isostrophisms, conjugate, enumerate_autostrophisms,
    invert_isostrophism, is_autostrophism,
)


@pytest.fixture(scope="module")
def small():
    return small_corpus(4)


@pytest.fixture(scope="module")
def pinned():
    return [load_fixture(name) for name in random_fixture_names()]


@pytest.fixture(scope="module")
def full(small, pinned):
    return list(small) + pinned


@pytest.fixture(scope="module")
def nuclei_of(full):
    return {id(q): compute_all_nuclei(q) for q in full}


@pytest.fixture
def verdict(capsys):
    """Print one line per criterion whether or not the assertion below it holds."""
    def emit(number, label, failures, detail=""):
        line = f"{'PASS' if not failures else 'FAIL'} criterion {number}: {label}"
        if detail:
            line += f" ({detail})"
        if failures:
            line += f"; first failure: {failures[0]}"
        with capsys.disabled():
            print("\n" + line)
        assert not failures, line
    return emit


def test_criterion_1_oracle_equivalence(small, verdict):
    start = time.perf_counter()
    failures = []
    assert [sum(q.order == n for q in small) for n in (1, 2, 3, 4)] == [1, 2, 12, 576]
    for q in small:
        fast = compute_all_nuclei(q)
        for sigma, kind in ALL_KEYS:
            if fast[(sigma, kind)] != oracle_sigma_nucleus(q, sigma, kind):
                failures.append((q.rows(), sigma.literal, kind.value))
    elapsed = time.perf_counter() - start
    if elapsed >= 300:
        failures.append(f"took {elapsed:.0f}s")
    verdict(1, "fast nuclei equal the oracle on all 591 squares of order ≤ 4, 18 keys each", failures,
            f"{len(small) * 18} comparisons in {elapsed:.1f}s")


def test_criterion_2_inverse_relations(full, nuclei_of, verdict):
    failures, checks = [], 0
    for q in full:
        report = verify_inverse_relations(q, nuclei_of[id(q)])
        checks += report.total
        if report.by_level["component"]["passed"] != 36 or not report.ok:
            failures.append((q.rows(), report.summary()))
    verdict(2, "all 36 inverse component identities on the corpus", failures, f"{checks} checks")


def test_criterion_3_product_relations(full, nuclei_of, verdict):
    failures, checks, vacuous = [], 0, 0
    for q in full:
        report = verify_product_relations(q, nuclei_of[id(q)])
        checks += report.total
        vacuous += report.vacuous
        failures += [f.describe() for f in report.failures]
    verdict(3, "set and component product identities on the corpus", failures,
            f"{checks} checks, {vacuous} vacuous with inclusion verified")


def _sample_theta(n, rng, i):
    theta = random_isostrophism(n, rng)
    a1, a2, a3 = theta.triple
    # a third of the samples share two components so that gates open for inadmissible σ
    if i % 3 == 1:
        theta = Isostrophism(theta.sigma, IsotopyTriple(a1, a1, a3))
    elif i % 3 == 2:
        theta = Isostrophism(theta.sigma, IsotopyTriple(a1, a2, a2))
    return theta


def test_criterion_4_isostrophe_relations(full, nuclei_of, verdict):
    rng = random.Random(4)
    failures, checks, gates = [], 0, 0
    for i in range(100):
        q = full[rng.randrange(len(full))] if i % 2 else full[591 + (i // 2) % 10]
        theta = _sample_theta(q.order, rng, i)
        report = verify_isostrophe_relations(q, theta, nuclei_of[id(q)])
        checks += report.total
        gates += report.by_level.get("gate", {}).get("total", 0)
        failures += [f.describe() for f in report.failures]
    verdict(4, "admissible identities and gate predictions for 100 seeded isostrophisms", failures,
            f"{checks} checks including {gates} gate checks")


def test_criterion_5_parastrophe_relations(full, nuclei_of, verdict):
    failures, checks = [], 0
    for q in full:
        for tau in ALL_S3:
            report = verify_parastrophe_relations(q, tau, nuclei_of[id(q)])
            checks += report.total
            failures += [f.describe() for f in report.failures]
    verdict(5, "component equalities for all six parastrophes of every corpus quasigroup", failures,
            f"{checks} checks")


def test_criterion_6_derivation_engine(full, nuclei_of, verdict):
    rng = random.Random(6)
    failures, compared = [], 0
    for i in range(100):
        q = full[rng.randrange(len(full))] if i % 2 else full[591 + (i // 2) % 10]
        theta = random_isostrophism(q.order, rng)
        if i % 4 == 0:
            theta = Isostrophism(theta.sigma, IsotopyTriple.identity(q.order))
        derived = derive_nuclei_of_isostrophe(nuclei_of[id(q)], theta)
        direct = compute_all_nuclei(apply_isostrophism(q, theta))
        for key in derived.derivable():
            compared += 1
            if derived[key] != direct[key]:
                failures.append((q.rows(), str(theta), key))
    order6 = load_fixture("random6_s21")
    general = run_bench(order6, random_isostrophism(6, random.Random(60)), oracle=False)
    para = run_bench(order6, Isostrophism(S3Elem.S123, IsotopyTriple.identity(6)), oracle=False)
    order5 = run_bench(load_fixture("random5_s11"), random_isostrophism(5, random.Random(50)), repeat=3)
    speeds = {"derive@6 general": general.derive_speedup, "derive@6 parastrophe": para.derive_speedup,
              "fast vs oracle@5": order5.oracle_speedup}
    if min(general.derive_speedup, para.derive_speedup) < 10:
        failures.append(f"derived path under 10x: {speeds}")
    if order5.oracle_speedup < 100:
        failures.append(f"fast path under 100x the oracle: {speeds}")
    detail = f"{compared} nuclei compared; " + ", ".join(f"{k} {v:.0f}x" for k, v in speeds.items())
    verdict(6, "derived nuclei equal direct recomputation, timing ordering holds", failures, detail)


def test_criterion_7_inverse_classes(small, verdict):
    failures, claims = [], 0
    for n in (3, 4, 5, 7):
        q = cyclic_group(n)
        neg = Perm([(-x) % n for x in range(n)])
        report = classify(q)
        expected = {"WIP": report.wip, "CI": report.ci, "LIP": report.lip, "RIP": report.rip, "WCIP": report.wcip}
        for name, witnesses in expected.items():
            if neg not in witnesses:
                failures.append(f"Z{n} not {name} with negation")
        if not report.ip:
            failures.append(f"Z{n} not IP")
        if (neg, 0, 1, 0) not in report.rst_hits:
            failures.append(f"Z{n} not (0,1,0)-inverse")
        if (neg, 0) not in report.m_hits:
            failures.append(f"Z{n} not 0-inverse")
        result = verify_inverse_class_claims(q, report=report)
        claims += result.total
        failures += [f"Z{n}: {f.describe()}" for f in result.failures]
    for q in small:
        lrw = find_lip_rip_wcip(q)
        pairs = [(find_wip(q), wip_oracle(q)), (find_ci(q), ci_oracle(q)), (lrw.lip, lip_oracle(q)),
                 (lrw.rip, rip_oracle(q)), (lrw.wcip, wcip_oracle(q))]
        if any(a != b for a, b in pairs):
            failures.append(f"shape reduction disagrees with scan on {q.rows()}")
    verdict(7, "cyclic groups with negation hit every class; claims verify; shapes match scans", failures,
            f"{claims} claims checked")


def _garrison_components(q, nm):
    """Per kind: (slot read off the nucleus, translations expected there)."""
    return {
        NucleusKind.L: (1, {translation(q, "left", a) for a in garrison_nucleus(q, "left").elements}),
        NucleusKind.R: (2, {translation(q, "right", a) for a in garrison_nucleus(q, "right").elements}),
        NucleusKind.M: (1, {translation(q, "right", a) for a in garrison_nucleus(q, "middle").elements}),
    }


def test_criterion_8_structural_invariants(full, nuclei_of, verdict):
    from sigma_nuclei.nuclei import component_set
    failures = []
    rng = random.Random(8)
    for q in full:
        nm = nuclei_of[id(q)]
        ident = Perm.identity(q.order)
        for (sigma, kind), nuc in nm.items():
            group = nm[(S3Elem.E, kind)].member_set
            if len(nuc) > q.order:
                failures.append(("size bound", sigma.literal, kind.value))
            partner = nm[inverse_partner(sigma, kind)]
            if bool(nuc) != bool(partner) or any(invert_isostrophism(m) not in partner for m in nuc):
                failures.append(("emptiness biconditional", sigma.literal, kind.value))
            members = nuc.members
            for phi in members[:3]:
                if any(compose_isostrophisms(invert_isostrophism(phi), psi) not in group for psi in members):
                    failures.append(("coset", sigma.literal, kind.value))
            if nuc and component_set(nuc, kind.identity_slot).perms != {ident}:
                failures.append(("trivial component", sigma.literal, kind.value))
        left, right = identity_elements(q)
        if left is not None and right is not None:
            for kind, (slot, expected) in _garrison_components(q, nm).items():
                if component_set(nm[(S3Elem.E, kind)], slot).perms != expected:
                    failures.append(("loop correspondence", q.rows(), kind.value))
        if q.order <= 4 and rng.random() < 0.1 or q.order > 4:
            theta = random_isostrophism(q.order, rng)
            image = apply_isostrophism(q, theta)
            for sigma in (S3Elem.E, S3Elem.S12, S3Elem.S123):
                for phi in enumerate_autostrophisms(q, sigma):
                    if not is_autostrophism(image, conjugate(theta, phi)):
                        failures.append(("conjugation law", q.rows(), str(theta)))
    verdict(8, "coset, size bound, emptiness, trivial components, loop correspondence, conjugation law",
            failures, f"{len(full)} quasigroups")
