"""Inverse-property classes detected through shaped autostrophisms.

Each class corresponds to autostrophisms of a fixed shape:

* (α,β,γ)-inverse  α(xy)·βx = γy      ((1 2 3), (α, β, γ))
* λ-inverse        λ1x·λ2(xy) = λ3y   ((2 3), (λ1, λ2, λ3))
* ρ-inverse        ρ1(xy)·ρ2y = ρ3x   ((1 3), (ρ1, ρ2, ρ3))
* μ-inverse        μ1y·μ2x = μ3(xy)   ((1 2), (μ1, μ2, μ3))

and WIP, CI, LIP, RIP, WCIP are special shapes inside these families, so
they are read off the matching σ-nucleus. The ``*_oracle`` functions scan
all of Sₙ directly and exist to cross-check the shape reductions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import DegreeMismatch, InvariantViolation, NotAutostrophism, OrderTooLarge
from .nuclei import NucleusKind, NucleusMap, compute_all_nuclei, compute_sigma_nucleus
from .perm import Perm, all_perms, compose_perm, then
from .quasigroup import Quasigroup
from .relations import (
    Context, Failure, VerificationReport, conjugate_set, evaluate, source_key, isostrophe_entries,
)
from .s3 import S3Elem
from .strophism import (
    DEFAULT_SEARCH_BOUND, Isostrophism, IsotopyTriple, compose_isostrophisms,
    enumerate_autostrophisms, is_autostrophism,
)

FAMILY_SIGMA = {"abg": S3Elem.S123, "lambda": S3Elem.S23, "rho": S3Elem.S13, "mu": S3Elem.S12}
ORACLE_BOUND = 4
L, R, M = NucleusKind.L, NucleusKind.R, NucleusKind.M


def find_abg_inverse_triples(q: Quasigroup, bound: int = DEFAULT_SEARCH_BOUND) -> list[IsotopyTriple]:
    return [t.triple for t in enumerate_autostrophisms(q, S3Elem.S123, bound)]


def find_shaped_family(q: Quasigroup, family: str, bound: int = DEFAULT_SEARCH_BOUND) -> list[IsotopyTriple]:
    """Triples of the λ ("lambda"), ρ ("rho") or μ ("mu") inverse family."""
    if family not in ("lambda", "rho", "mu"):
        raise ValueError(f"unknown family {family!r}")
    return [t.triple for t in enumerate_autostrophisms(q, FAMILY_SIGMA[family], bound)]


def _sorted_perms(perms) -> list[Perm]:
    return sorted(set(perms))


def find_wip(q: Quasigroup, nuclei: Optional[NucleusMap] = None) -> list[Perm]:
    """All J with x·J(yx) = Jy.

    The identity is equivalent to ((1 2 3), (J⁻¹, ε, J⁻¹)) being an
    autostrophism, so J is the inverse of the shared outer component.
    """
    nuc = nuclei[(S3Elem.S123, L)] if nuclei is not None else compute_sigma_nucleus(q, S3Elem.S123, L)
    return _sorted_perms(m.triple.a1.inverse() for m in nuc if m.triple.a1 == m.triple.a3)


def find_ci(q: Quasigroup, nuclei: Optional[NucleusMap] = None) -> list[Perm]:
    """All J with (xy)·Jx = y."""
    nuc = nuclei[(S3Elem.S123, R)] if nuclei is not None else compute_sigma_nucleus(q, S3Elem.S123, R)
    return _sorted_perms(m.triple.a2 for m in nuc if m.triple.a3.is_identity())


@dataclass(frozen=True)
class LipRipWcip:
    lip: list
    rip: list
    wcip: list


def find_lip_rip_wcip(q: Quasigroup, nuclei: Optional[NucleusMap] = None) -> LipRipWcip:
    get = (lambda s, k: nuclei[(s, k)]) if nuclei is not None else (lambda s, k: compute_sigma_nucleus(q, s, k))
    lip = _sorted_perms(m.triple.a1 for m in get(S3Elem.S23, L) if m.triple.a3.is_identity())
    rip = _sorted_perms(m.triple.a2 for m in get(S3Elem.S13, R) if m.triple.a3.is_identity())
    wcip = _sorted_perms(m.triple.a1 for m in get(S3Elem.S13, L) if m.triple.a1 == m.triple.a3)
    for name, witnesses in (("LIP", lip), ("RIP", rip), ("WCIP", wcip)):
        for p in witnesses:
            if not compose_perm(p, p).is_identity():
                raise InvariantViolation(f"{name} witness {p} is not an involution")
    return LipRipWcip(lip, rip, wcip)


def _check_degree(q: Quasigroup, p: Perm) -> None:
    if len(p) != q.order:
        raise DegreeMismatch(f"permutation degree {len(p)} vs order {q.order}")


def check_rst_inverse(q: Quasigroup, j: Perm, r: int, s: int, t: int) -> bool:
    """J^r(xy)·J^s x = J^t y for all x, y."""
    _check_degree(q, j)
    if min(r, s, t) < 0:
        raise ValueError("exponents must be non-negative")
    a = q.table
    jr, js, jt = (np.asarray(j.power(e)) for e in (r, s, t))
    idx = np.arange(q.order)
    return bool(np.array_equal(a[jr[a], js[idx][:, None]], np.broadcast_to(jt[idx][None, :], a.shape)))


def check_m_inverse(q: Quasigroup, j: Perm, m: int) -> bool:
    return check_rst_inverse(q, j, m, m + 1, m)


# brute-force scans over Sₙ

def _scan(q: Quasigroup, predicate) -> list[Perm]:
    if q.order > ORACLE_BOUND:
        raise OrderTooLarge(q.order, ORACLE_BOUND)
    a = q.table.tolist()
    n = q.order
    cells = [(x, y) for x in range(n) for y in range(n)]
    return [p for p in all_perms(n) if all(predicate(a, p, x, y) for x, y in cells)]


def wip_oracle(q):
    return _scan(q, lambda a, j, x, y: a[x][j[a[y][x]]] == j[y])


def ci_oracle(q):
    return _scan(q, lambda a, j, x, y: a[a[x][y]][j[x]] == y)


def lip_oracle(q):
    return _scan(q, lambda a, lam, x, y: a[lam[x]][a[x][y]] == y)


def rip_oracle(q):
    return _scan(q, lambda a, rho, x, y: a[a[x][y]][rho[y]] == x)


def wcip_oracle(q):
    return _scan(q, lambda a, j, x, y: a[j[a[x][y]]][y] == j[x])


# (r,s,t) and m searches

def rst_search(q: Quasigroup, abg: Optional[list] = None):
    """(J, r, s, t) hits and whether the search was exhaustive.

    At order ≤ 4 every J ∈ Sₙ is tried. Above that J ranges over the
    components of the (1 2 3)-autostrophism triples, which covers every
    hit in which some exponent is 1 but may miss others.
    """
    n = q.order
    exhaustive = n <= ORACLE_BOUND
    triples = set(find_abg_inverse_triples(q) if abg is None else abg)
    if exhaustive:
        candidates = list(all_perms(n))
    else:
        candidates = sorted({c for t in triples for c in t})
    hits = []
    for j in candidates:
        k = j.order()
        powers = [j.power(e) for e in range(k)]
        for r in range(k):
            for s in range(k):
                for t in range(k):
                    if IsotopyTriple(powers[r], powers[s], powers[t]) in triples:
                        hits.append((j, r, s, t))
    return hits, exhaustive


def m_hits_from(rst_hits) -> list:
    out = []
    for j, r, s, t in rst_hits:
        k = j.order()
        if r == t and s == (r + 1) % k:
            out.append((j, r))
    return out


# reports

@dataclass
class InverseClassReport:
    order: int
    abg_triples: list = field(default_factory=list)
    wip: list = field(default_factory=list)
    ci: list = field(default_factory=list)
    lip: list = field(default_factory=list)
    rip: list = field(default_factory=list)
    wcip: list = field(default_factory=list)
    lambda_family: list = field(default_factory=list)
    rho_family: list = field(default_factory=list)
    mu_family: list = field(default_factory=list)
    rst_hits: list = field(default_factory=list)
    m_hits: list = field(default_factory=list)
    rst_exhaustive: bool = True

    @property
    def ip(self) -> bool:
        return bool(self.lip) and bool(self.rip)

    def classes(self) -> dict:
        return {
            "abg_inverse": bool(self.abg_triples), "WIP": bool(self.wip), "CI": bool(self.ci),
            "LIP": bool(self.lip), "RIP": bool(self.rip), "IP": self.ip, "WCIP": bool(self.wcip),
            "lambda_inverse": bool(self.lambda_family), "rho_inverse": bool(self.rho_family),
            "mu_inverse": bool(self.mu_family), "rst_inverse": bool(self.rst_hits),
            "m_inverse": bool(self.m_hits),
        }


def _recheck(q: Quasigroup, report: InverseClassReport) -> None:
    a = q.table.tolist()
    n = q.order
    cells = [(x, y) for x in range(n) for y in range(n)]
    checks = [
        (report.wip, lambda j, x, y: a[x][j[a[y][x]]] == j[y], "WIP"),
        (report.ci, lambda j, x, y: a[a[x][y]][j[x]] == y, "CI"),
        (report.lip, lambda p, x, y: a[p[x]][a[x][y]] == y, "LIP"),
        (report.rip, lambda p, x, y: a[a[x][y]][p[y]] == x, "RIP"),
        (report.wcip, lambda j, x, y: a[j[a[x][y]]][y] == j[x], "WCIP"),
    ]
    for witnesses, pred, name in checks:
        for w in witnesses:
            if not all(pred(w, x, y) for x, y in cells):
                raise InvariantViolation(f"{name} witness {w} fails its identity")
    for j, r, s, t in report.rst_hits[:64]:
        if not check_rst_inverse(q, j, r, s, t):
            raise InvariantViolation(f"(r,s,t) hit {(j, r, s, t)} fails its identity")


def classify(q: Quasigroup, bound: int = DEFAULT_SEARCH_BOUND) -> InverseClassReport:
    nuclei = compute_all_nuclei(q)
    abg = find_abg_inverse_triples(q, bound)
    lrw = find_lip_rip_wcip(q, nuclei)
    hits, exhaustive = rst_search(q, abg)
    report = InverseClassReport(
        order=q.order, abg_triples=abg, wip=find_wip(q, nuclei), ci=find_ci(q, nuclei),
        lip=lrw.lip, rip=lrw.rip, wcip=lrw.wcip,
        lambda_family=find_shaped_family(q, "lambda", bound),
        rho_family=find_shaped_family(q, "rho", bound),
        mu_family=find_shaped_family(q, "mu", bound),
        rst_hits=hits, m_hits=m_hits_from(hits), rst_exhaustive=exhaustive,
    )
    _recheck(q, report)
    return report


def normalizes(q: Quasigroup, theta: Isostrophism, members) -> bool:
    """Whether θ⁻¹ S θ = S, for θ and S inside Aus(Q)."""
    members = list(members)
    if not is_autostrophism(q, theta):
        raise NotAutostrophism(f"{theta} is not an autostrophism")
    for phi in members:
        if not is_autostrophism(q, phi):
            raise NotAutostrophism(f"{phi} is not an autostrophism")
    return conjugate_set(theta, members) == frozenset(members)


def normalizes_perms(p: Perm, perms) -> bool:
    """Whether p⁻¹ X p = X inside Sₙ."""
    perms = frozenset(perms)
    inv = p.inverse()
    return frozenset(compose_perm(p, compose_perm(x, inv)) for x in perms) == perms


# claim checking

@dataclass(frozen=True)
class Claim:
    text: str

    def __str__(self) -> str:
        return self.text


class _Claims:
    def __init__(self, q: Quasigroup, nuclei: NucleusMap):
        self.q = q
        self.nuclei = nuclei
        self.report = VerificationReport("inverse-property claims")
        self._normal_cache: dict = {}

    def nucleus(self, sigma, kind):
        return self.nuclei[(sigma, kind)]

    def comps(self, sigma, kind, slot) -> frozenset:
        return frozenset(m.triple[slot - 1] for m in self.nucleus(sigma, kind))

    def record(self, ok: bool, text: str, lhs=frozenset(), rhs=frozenset()) -> None:
        self.report.record("claim", "pass" if ok else "fail", None if ok else Failure(Claim(text), lhs, rhs))

    def set_normal(self, theta, sigma, kind, text) -> None:
        key = (theta, sigma, kind)
        if key not in self._normal_cache:
            self._normal_cache[key] = normalizes(self.q, theta, self.nucleus(sigma, kind))
        self.record(self._normal_cache[key], text)

    def perm_normal(self, p, sigma, kind, slot, text) -> None:
        self.record(normalizes_perms(p, self.comps(sigma, kind, slot)), text)

    def family_sets(self, theta: Isostrophism, label: str) -> None:
        """Set-level conjugation claims and the induced isomorphisms."""
        for kind, sigma in ((L, S3Elem.S13), (R, S3Elem.S23), (M, S3Elem.S12)):
            src = source_key(sigma, kind, theta.sigma)
            lhs = self.nucleus(sigma, kind).member_set
            rhs = conjugate_set(theta, self.nucleus(*src).member_set)
            self.record(lhs == rhs and len(lhs) == len(self.nucleus(*src)),
                        f"{label}: ^{sigma}N_{kind.value} = θ⁻¹ ^{src[0]}N_{src[1].value} θ", lhs, rhs)

    def family_components(self, theta: Isostrophism, label: str) -> None:
        ctx = Context(self.nuclei, self.nuclei, theta)
        for entry in isostrophe_entries(theta.sigma, include_identity_rows=False):
            if entry.level != "component":
                continue
            lhs, rhs = evaluate(entry.lhs, ctx), evaluate(entry.rhs, ctx)
            self.record(lhs == rhs, f"{label}: {entry}".replace("∘", ""), lhs, rhs)


def theta_cubed_triple(triple: IsotopyTriple) -> IsotopyTriple:
    """(βγα, γαβ, αβγ) with products read in action order."""
    a, b, c = triple
    return IsotopyTriple(then(b, c, a), then(c, a, b), then(a, b, c))


def verify_inverse_class_claims(q: Quasigroup, bound: int = DEFAULT_SEARCH_BOUND,
                           report: Optional[InverseClassReport] = None) -> VerificationReport:
    """Check every normalizer, conjugation and isomorphism claim for the classes q belongs to."""
    nuclei = compute_all_nuclei(q)
    cls = classify(q, bound) if report is None else report
    c = _Claims(q, nuclei)
    ident = Perm.identity(q.order)
    three = ((S3Elem.S13, L), (S3Elem.S23, R), (S3Elem.S12, M))

    for triple in cls.abg_triples:
        theta = Isostrophism(S3Elem.S123, triple)
        cube = compose_isostrophisms(compose_isostrophisms(theta, theta), theta)
        expected = Isostrophism(S3Elem.E, theta_cubed_triple(triple))
        c.record(cube == expected, f"θ³ = (ε,(βγα, γαβ, αβγ)) for θ = ((1 2 3), {triple})")
        c.family_sets(theta, "(α,β,γ)-inverse")
        for sigma, kind in three:
            c.set_normal(cube, sigma, kind, f"θ³ ∈ N(^{sigma}N_{kind.value})")
        c.family_components(theta, "(α,β,γ)-inverse")
        a, b, g = triple
        if a == ident:
            for slot in (1, 3):
                c.perm_normal(then(b, g), S3Elem.S13, L, slot, f"βγ ∈ N(^(1 3)_{slot}N_l) when α = ε")
        if b == ident:
            for slot in (1, 2):
                c.perm_normal(then(g, a), S3Elem.S12, M, slot, f"γα ∈ N(^(1 2)_{slot}N_m) when β = ε")
        if g == ident:
            for slot in (2, 3):
                c.perm_normal(then(a, b), S3Elem.S23, R, slot, f"αβ ∈ N(^(2 3)_{slot}N_r) when γ = ε")

    def power_triple(j, k):
        p = j.power(k)
        return Isostrophism(S3Elem.E, IsotopyTriple(p, p, p))

    for j in cls.wip:
        for sigma, kind in three:
            c.set_normal(power_triple(j, 2), sigma, kind, f"WIP: (J²,J²,J²) ∈ N(^{sigma}N_{kind.value})")
        for slot in (1, 2):
            c.perm_normal(j.power(2), S3Elem.S12, M, slot, f"WIP: J² ∈ N(^(1 2)_{slot}N_m)")
    for j in cls.ci:
        for sigma, kind in three:
            c.set_normal(power_triple(j, 1), sigma, kind, f"CI: (J,J,J) ∈ N(^{sigma}N_{kind.value})")
        for slot in (1, 3):
            c.perm_normal(j, S3Elem.S13, L, slot, f"CI: J ∈ N(^(1 3)_{slot}N_l)")
        for slot in (2, 3):
            c.perm_normal(j, S3Elem.S23, R, slot, f"CI: J ∈ N(^(2 3)_{slot}N_r)")
    for j, r, s, t in cls.rst_hits:
        for sigma, kind in three:
            c.set_normal(power_triple(j, r + s + t), sigma, kind,
                         f"(r,s,t)-inverse: (J^(r+s+t),…) ∈ N(^{sigma}N_{kind.value})")
    for j, m in cls.m_hits:
        for sigma, kind in three:
            c.set_normal(power_triple(j, 3 * m + 1), sigma, kind,
                         f"m-inverse: (J^(3m+1),…) ∈ N(^{sigma}N_{kind.value})")

    # λ, ρ, μ families: θ normalizes one nucleus, θ² the other two
    fixed_by = {S3Elem.S23: (S3Elem.S23, R), S3Elem.S13: (S3Elem.S13, L), S3Elem.S12: (S3Elem.S12, M)}
    for label, family in (("λ", cls.lambda_family), ("ρ", cls.rho_family), ("μ", cls.mu_family)):
        sigma_theta = FAMILY_SIGMA[{"λ": "lambda", "ρ": "rho", "μ": "mu"}[label]]
        for triple in family:
            theta = Isostrophism(sigma_theta, triple)
            square = compose_isostrophisms(theta, theta)
            c.family_sets(theta, f"{label}-inverse")
            for sigma, kind in three:
                if (sigma, kind) == fixed_by[sigma_theta]:
                    c.set_normal(theta, sigma, kind, f"{label}: θ ∈ N(^{sigma}N_{kind.value})")
                else:
                    c.set_normal(square, sigma, kind, f"{label}: θ² ∈ N(^{sigma}N_{kind.value})")
            c.family_components(theta, f"{label}-inverse")

    def comp(sigma, kind, slot):
        return c.comps(sigma, kind, slot)

    def left_mult(p, xs):   # X p in action order: x then p
        return frozenset(compose_perm(p, x) for x in xs)

    def right_mult(p, xs):  # p X: p then x
        return frozenset(compose_perm(x, p) for x in xs)

    for lam in cls.lip:
        c.record(comp(S3Elem.S13, L, 1) == left_mult(lam, comp(S3Elem.S12, M, 1)), "LIP: ^(1 3)_1N_l = ^(1 2)_1N_m λ")
        c.record(comp(S3Elem.S13, L, 3) == right_mult(lam, comp(S3Elem.S12, M, 2)), "LIP: ^(1 3)_3N_l = λ ^(1 2)_2N_m")
        c.record(comp(S3Elem.S23, R, 2) == comp(S3Elem.S23, R, 3), "LIP: ^(2 3)_2N_r = ^(2 3)_3N_r")
    for rho in cls.rip:
        c.record(comp(S3Elem.S13, L, 1) == comp(S3Elem.S13, L, 3), "RIP: ^(1 3)_1N_l = ^(1 3)_3N_l")
        c.record(comp(S3Elem.S23, R, 2) == left_mult(rho, comp(S3Elem.S12, M, 2)), "RIP: ^(2 3)_2N_r = ^(1 2)_2N_m ρ")
        c.record(comp(S3Elem.S12, M, 1) == right_mult(rho, comp(S3Elem.S23, R, 3)), "RIP: ^(1 2)_1N_m = ρ ^(2 3)_3N_r")
    if cls.ip:
        c.record(comp(S3Elem.S13, L, 1) == comp(S3Elem.S13, L, 3), "IP: ^(1 3)_1N_l = ^(1 3)_3N_l")
        c.record(comp(S3Elem.S23, R, 2) == comp(S3Elem.S23, R, 3), "IP: ^(2 3)_2N_r = ^(2 3)_3N_r")
        c.record(len(comp(S3Elem.S12, M, 1)) == len(comp(S3Elem.S12, M, 2)), "IP: |^(1 2)_1N_m| = |^(1 2)_2N_m|")
    for j in cls.wcip:
        c.record(comp(S3Elem.S13, L, 1) == left_mult(j, right_mult(j, comp(S3Elem.S13, L, 3))),
                 "WCIP: ^(1 3)_1N_l = J ^(1 3)_3N_l J")
        c.record(comp(S3Elem.S23, R, 2) == right_mult(j, comp(S3Elem.S12, M, 2)), "WCIP: ^(2 3)_2N_r = J ^(1 2)_2N_m")
        c.record(comp(S3Elem.S12, M, 1) == left_mult(j, comp(S3Elem.S23, R, 3)), "WCIP: ^(1 2)_1N_m = ^(2 3)_3N_r J")
    return c.report
