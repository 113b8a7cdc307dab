"""Relations between σ-nuclei, generated as data and checked on concrete quasigroups.

Table ids used in reports and on the command line: 3 (inverses),
4 (products), 2 and 5 (isostrophic images), 6 (parastrophes). Every entry
is produced from a selector rule and evaluated against nuclei computed
directly, so the rule and the computation check each other.

Products of permutations inside an expression are written in action order:
``X Y`` means "X first, then Y", and ``α_p⁻¹ X α_q`` denotes the set
{α_q ∘ x ∘ α_p⁻¹ : x ∈ X}.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

import numpy as np

from .errors import DegreeMismatch
from .nuclei import ALL_KEYS, ALL_KINDS, NucleusKind, NucleusMap, SigmaNucleus, compute_all_nuclei
from .perm import Perm, compose_perm, format_perm
from .quasigroup import Quasigroup
from .s3 import ALL_S3, S3Elem
from .strophism import (
    Isostrophism, IsotopyTriple, apply_isostrophism, compose_isostrophisms,
    identity_isostrophism, invert_isostrophism,
)

SOURCE, IMAGE = "source", "image"
SLOT_NAMES = {1: "α", 2: "β", 3: "γ"}


# expression tree

@dataclass(frozen=True)
class Comp:
    """Component ``slot`` of the (sigma, kind) nucleus of one side."""
    sigma: S3Elem
    kind: NucleusKind
    slot: int
    side: str = SOURCE


@dataclass(frozen=True)
class NucleusRef:
    sigma: S3Elem
    kind: NucleusKind
    side: str = SOURCE


@dataclass(frozen=True)
class Inverse:
    operand: "Expr"


@dataclass(frozen=True)
class Product:
    first: "Expr"
    second: "Expr"


@dataclass(frozen=True)
class Sandwich:
    """α_pre⁻¹ X α_post, with α_i the i-th component of the context triple."""
    pre: int
    operand: "Expr"
    post: int


@dataclass(frozen=True)
class Conj:
    """θ⁻¹ X θ for the context isostrophism θ."""
    operand: "Expr"


Expr = Union[Comp, NucleusRef, Inverse, Product, Sandwich, Conj]


def render(expr: Expr) -> str:
    mark = lambda side: "∘" if side == IMAGE else ""
    if isinstance(expr, Comp):
        return f"^{expr.sigma}_{expr.slot}N_{expr.kind.value}{mark(expr.side)}"
    if isinstance(expr, NucleusRef):
        return f"^{expr.sigma}N_{expr.kind.value}{mark(expr.side)}"
    if isinstance(expr, Inverse):
        return f"({render(expr.operand)})⁻¹"
    if isinstance(expr, Product):
        return f"{render(expr.first)} {render(expr.second)}"
    if isinstance(expr, Sandwich):
        return f"{SLOT_NAMES[expr.pre]}⁻¹ {render(expr.operand)} {SLOT_NAMES[expr.post]}"
    if isinstance(expr, Conj):
        return f"θ⁻¹ {render(expr.operand)} θ"
    raise TypeError(expr)


@dataclass(frozen=True)
class RelationEntry:
    table_id: int
    lhs: Expr
    rhs: Expr
    context: Optional[tuple] = None
    # nuclei that must be nonempty for equality to be asserted; otherwise only lhs ⊆ rhs
    proviso: tuple = ()

    @property
    def level(self) -> str:
        return "set" if isinstance(self.lhs, (NucleusRef, Product, Inverse)) and _is_set_expr(self.lhs) else "component"

    def __str__(self) -> str:
        return f"{render(self.lhs)} = {render(self.rhs)}"


def _is_set_expr(expr: Expr) -> bool:
    if isinstance(expr, NucleusRef):
        return True
    if isinstance(expr, Comp):
        return False
    if isinstance(expr, (Inverse, Conj)):
        return _is_set_expr(expr.operand)
    if isinstance(expr, Product):
        return _is_set_expr(expr.first)
    return _is_set_expr(expr.operand)


@dataclass
class Failure:
    entry: object
    lhs: frozenset
    rhs: frozenset

    def describe(self) -> str:
        fmt = lambda s: sorted(_fmt_item(x) for x in s)
        return f"{self.entry}: lhs={fmt(self.lhs)} rhs={fmt(self.rhs)}"


def _fmt_item(x) -> str:
    if isinstance(x, Isostrophism):
        return f"{x.sigma.literal}:" + "|".join(format_perm(p) for p in x.triple)
    return format_perm(x)


@dataclass
class VerificationReport:
    table_id: Union[int, str]
    total: int = 0
    passed: int = 0
    vacuous: int = 0
    failures: list = field(default_factory=list)
    by_level: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, level: str, outcome: str, failure: Optional[Failure] = None) -> None:
        tally = self.by_level.setdefault(level, {"total": 0, "passed": 0, "vacuous": 0, "failed": 0})
        self.total += 1
        tally["total"] += 1
        if outcome == "pass":
            self.passed += 1
            tally["passed"] += 1
        elif outcome == "vacuous":
            self.vacuous += 1
            tally["vacuous"] += 1
        else:
            self.failures.append(failure)
            tally["failed"] += 1

    def merge(self, other: VerificationReport) -> VerificationReport:
        self.total += other.total
        self.passed += other.passed
        self.vacuous += other.vacuous
        self.failures.extend(other.failures)
        self.notes.extend(other.notes)
        for level, tally in other.by_level.items():
            mine = self.by_level.setdefault(level, {"total": 0, "passed": 0, "vacuous": 0, "failed": 0})
            for key, value in tally.items():
                mine[key] += value
        return self

    def consistent(self) -> bool:
        return self.passed + len(self.failures) + self.vacuous == self.total

    def summary(self) -> str:
        parts = []
        for level in ("component", "set", "gate", "claim"):
            if level in self.by_level:
                t = self.by_level[level]
                held = t["passed"] + t["vacuous"]
                label = {"component": "identities hold", "claim": "claims hold"}.get(level, f"{level}-level checks hold")
                extra = f" ({t['vacuous']} vacuous)" if t["vacuous"] else ""
                parts.append(f"{held}/{t['total']} {label}{extra}")
        title = f"Table {self.table_id}" if isinstance(self.table_id, int) else str(self.table_id)
        return f"{title}: " + "; ".join(parts)


# set algebra

def inverse_set(items) -> frozenset:
    return frozenset(invert_isostrophism(x) for x in items)


def product_set(first, second) -> frozenset:
    first, second = list(first), list(second)
    if first and second and first[0].degree != second[0].degree:
        raise DegreeMismatch("factor degrees differ")
    return frozenset(compose_isostrophisms(b, c) for b in first for c in second)


def conjugate_set(theta: Isostrophism, items) -> frozenset:
    inv = invert_isostrophism(theta)
    return frozenset(compose_isostrophisms(compose_isostrophisms(inv, x), theta) for x in items)


# evaluation

@dataclass
class Context:
    source: NucleusMap
    image: Optional[NucleusMap] = None
    theta: Optional[Isostrophism] = None
    _cache: dict = field(default_factory=dict)

    def nucleus(self, sigma, kind, side) -> SigmaNucleus:
        nmap = self.source if side == SOURCE else self.image
        return nmap[(sigma, kind)]

    def components(self, sigma, kind, slot, side) -> frozenset:
        key = (sigma, kind, slot, side)
        if key not in self._cache:
            self._cache[key] = frozenset(m.triple[slot - 1] for m in self.nucleus(sigma, kind, side))
        return self._cache[key]


def evaluate(expr: Expr, ctx: Context) -> frozenset:
    if isinstance(expr, Comp):
        return ctx.components(expr.sigma, expr.kind, expr.slot, expr.side)
    if isinstance(expr, NucleusRef):
        return ctx.nucleus(expr.sigma, expr.kind, expr.side).member_set
    inner = evaluate(expr.operand if not isinstance(expr, Product) else expr.first, ctx)
    set_level = _is_set_expr(expr)
    if isinstance(expr, Inverse):
        return inverse_set(inner) if set_level else frozenset(p.inverse() for p in inner)
    if isinstance(expr, Product):
        second = evaluate(expr.second, ctx)
        if set_level:
            return product_set(inner, second)
        return frozenset(compose_perm(b, a) for a in inner for b in second)
    if isinstance(expr, Sandwich):
        pre = ctx.theta.triple[expr.pre - 1].inverse()
        post = ctx.theta.triple[expr.post - 1]
        return frozenset(compose_perm(post, compose_perm(x, pre)) for x in inner)
    if isinstance(expr, Conj):
        return conjugate_set(ctx.theta, inner)
    raise TypeError(expr)


def _check(entry: RelationEntry, ctx: Context, report: VerificationReport) -> None:
    lhs = evaluate(entry.lhs, ctx)
    rhs = evaluate(entry.rhs, ctx)
    level = entry.level
    if entry.proviso and not all(ctx.nucleus(*p) for p in entry.proviso):
        # forward inclusion still has to hold
        outcome = "vacuous" if lhs <= rhs else "fail"
    else:
        outcome = "pass" if lhs == rhs else "fail"
    report.record(level, outcome, Failure(entry, lhs, rhs) if outcome == "fail" else None)


# selector rules

def _kind_after(perm_inv_value: int) -> NucleusKind:
    return NucleusKind.for_slot(perm_inv_value)


def inverse_partner(sigma: S3Elem, kind: NucleusKind) -> tuple[S3Elem, NucleusKind]:
    """(^σN_kind)⁻¹ = ^{σ⁻¹}N_v with v picked by where σ⁻¹ sends the identity slot."""
    inv = sigma.inverse()
    return inv, NucleusKind.for_slot(inv(kind.identity_slot))


def inverse_entries() -> list[RelationEntry]:
    entries = []
    for sigma in ALL_S3:
        inv = sigma.inverse()
        for kind in ALL_KINDS:
            _, v = inverse_partner(sigma, kind)
            entries.append(RelationEntry(3, Inverse(NucleusRef(sigma, kind)), NucleusRef(inv, v)))
            for i in (1, 2, 3):
                if i != kind.identity_slot:
                    entries.append(RelationEntry(3, Inverse(Comp(sigma, kind, i)), Comp(inv, v, inv(i))))
    return entries


def product_entries() -> list[RelationEntry]:
    entries = []
    for sigma in ALL_S3:
        for tau in ALL_S3:
            tinv = tau.inverse()
            for kind in ALL_KINDS:
                k = kind.identity_slot
                v = NucleusKind.for_slot(tinv(k))
                proviso = ((sigma, v, SOURCE), (tau, kind, SOURCE))
                target = sigma * tau
                entries.append(RelationEntry(
                    4, Product(NucleusRef(sigma, v), NucleusRef(tau, kind)), NucleusRef(target, kind),
                    proviso=proviso))
                for i in (1, 2, 3):
                    if i != k:
                        entries.append(RelationEntry(
                            4, Product(Comp(sigma, v, tinv(i)), Comp(tau, kind, i)), Comp(target, kind, i),
                            proviso=proviso))
    return entries


def admissible_sigmas(kind: NucleusKind) -> tuple[S3Elem, S3Elem]:
    """The σ that fix the identity slot of ``kind``."""
    return tuple(s for s in ALL_S3 if s.fixes(kind.identity_slot))


def source_key(sigma: S3Elem, kind: NucleusKind, tau: S3Elem) -> tuple[S3Elem, NucleusKind]:
    """Which source nucleus is conjugated onto ^σN_kind of the image under (τ, T)."""
    tinv = tau.inverse()
    return tau * sigma * tinv, NucleusKind.for_slot(tinv(kind.identity_slot))


def isostrophe_entries(tau: S3Elem, include_identity_rows: bool = True) -> list[RelationEntry]:
    entries = []
    tinv = tau.inverse()
    for kind in ALL_KINDS:
        for sigma in admissible_sigmas(kind):
            if sigma is S3Elem.E and not include_identity_rows:
                continue
            table_id = 2 if sigma is S3Elem.E else 5
            src_sigma, v = source_key(sigma, kind, tau)
            entries.append(RelationEntry(
                table_id, NucleusRef(sigma, kind, IMAGE), Conj(NucleusRef(src_sigma, v)), context=(tau,)))
            sinv = sigma.inverse()
            for i in (1, 2, 3):
                if i != kind.identity_slot:
                    entries.append(RelationEntry(
                        table_id, Comp(sigma, kind, i, IMAGE),
                        Sandwich(sinv(i), Comp(src_sigma, v, tinv(i)), i), context=(tau,)))
    return entries


def parastrophe_entries(tau: S3Elem) -> list[RelationEntry]:
    entries = []
    tinv = tau.inverse()
    for sigma in ALL_S3:
        for kind in ALL_KINDS:
            src_sigma, v = source_key(sigma, kind, tau)
            entries.append(RelationEntry(
                6, NucleusRef(sigma, kind, IMAGE), Conj(NucleusRef(src_sigma, v)), context=(tau,)))
            for i in (1, 2, 3):
                if i != kind.identity_slot:
                    entries.append(RelationEntry(
                        6, Comp(sigma, kind, i, IMAGE), Comp(src_sigma, v, tinv(i)), context=(tau,)))
    return entries


# verifiers

def _nuclei(q, nuclei):
    return compute_all_nuclei(q) if nuclei is None else nuclei


def verify_inverse_relations(q: Quasigroup, nuclei: Optional[NucleusMap] = None) -> VerificationReport:
    ctx = Context(_nuclei(q, nuclei))
    report = VerificationReport(3)
    for entry in inverse_entries():
        _check(entry, ctx, report)
    return report


def verify_product_relations(q: Quasigroup, nuclei: Optional[NucleusMap] = None) -> VerificationReport:
    ctx = Context(_nuclei(q, nuclei))
    report = VerificationReport(4)
    for entry in product_entries():
        _check(entry, ctx, report)
    return report


@dataclass(frozen=True)
class GateCheck:
    """Membership prediction for an inadmissible σ."""
    sigma: S3Elem
    kind: NucleusKind
    direction: str

    def __str__(self) -> str:
        return f"gate {self.direction} ^{self.sigma}N_{self.kind.value}"


def gate_open(theta: Isostrophism, sigma: S3Elem, kind: NucleusKind) -> bool:
    """True iff α_{σ⁻¹k} and α_k agree, k the identity slot of ``kind``."""
    k = kind.identity_slot
    return theta.triple[sigma.inverse()(k) - 1] == theta.triple[k - 1]


def _check_gates(theta, ctx: Context, report: VerificationReport) -> None:
    inv = invert_isostrophism(theta)
    for kind in ALL_KINDS:
        for sigma in ALL_S3:
            if sigma.fixes(kind.identity_slot):
                continue
            predicted = gate_open(theta, sigma, kind)
            src_sigma, v = source_key(sigma, kind, theta.sigma)
            image_nuc = ctx.nucleus(sigma, kind, IMAGE)
            source_nuc = ctx.nucleus(src_sigma, v, SOURCE)
            for direction, members, target, left, right in (
                ("image→source", image_nuc, source_nuc, theta, inv),
                ("source→image", source_nuc, image_nuc, inv, theta),
            ):
                bad = [phi for phi in members
                       if (compose_isostrophisms(compose_isostrophisms(left, phi), right) in target) != predicted]
                entry = GateCheck(sigma, kind, direction)
                if not members:
                    report.record("gate", "vacuous")
                elif bad:
                    report.record("gate", "fail", Failure(entry, frozenset(bad), frozenset()))
                else:
                    report.record("gate", "pass")


def verify_isostrophe_relations(q: Quasigroup, theta: Isostrophism, nuclei: Optional[NucleusMap] = None,
                    image_nuclei: Optional[NucleusMap] = None, only_table: Optional[int] = None) -> VerificationReport:
    """Isostrophe identities (σ=ε rows carry table id 2) plus the gate rule for inadmissible σ.

    ``only_table=2`` restricts to the σ=ε rows; ``only_table=5`` drops them.
    """
    if q.order != theta.degree:
        raise DegreeMismatch(f"order {q.order} vs isostrophism degree {theta.degree}")
    source = _nuclei(q, nuclei)
    image = compute_all_nuclei(apply_isostrophism(q, theta)) if image_nuclei is None else image_nuclei
    ctx = Context(source, image, theta)
    report = VerificationReport(5 if only_table is None else only_table)
    for entry in isostrophe_entries(theta.sigma):
        if only_table is None or entry.table_id == only_table:
            _check(entry, ctx, report)
    if only_table != 2:
        _check_gates(theta, ctx, report)
    return report


def verify_parastrophe_relations(q: Quasigroup, tau: S3Elem, nuclei: Optional[NucleusMap] = None) -> VerificationReport:
    theta = Isostrophism(tau, IsotopyTriple.identity(q.order))
    source = _nuclei(q, nuclei)
    image = compute_all_nuclei(apply_isostrophism(q, theta))
    ctx = Context(source, image, theta)
    report = VerificationReport(6)
    for entry in parastrophe_entries(tau):
        _check(entry, ctx, report)
    return report


def verify_isomorphic_components(q: Quasigroup, theta: Isostrophism) -> bool:
    """Each admissible component set of the image is a conjugate of a source component set."""
    if q.order != theta.degree:
        raise DegreeMismatch(f"order {q.order} vs isostrophism degree {theta.degree}")
    ctx = Context(compute_all_nuclei(q), compute_all_nuclei(apply_isostrophism(q, theta)), theta)
    for entry in isostrophe_entries(theta.sigma):
        if entry.level != "component":
            continue
        lhs, rhs = evaluate(entry.lhs, ctx), evaluate(entry.rhs, ctx)
        if lhs != rhs or len(lhs) != len(evaluate(entry.rhs.operand, ctx)):
            return False
    return True


# derivation engine

def _derive_plan(theta_sigma: S3Elem, full: bool):
    plan = []
    tinv = theta_sigma.inverse()
    slot_order = [tinv(i) - 1 for i in (1, 2, 3)]
    for sigma, kind in ALL_KEYS:
        if not full and not sigma.fixes(kind.identity_slot):
            continue
        src = source_key(sigma, kind, theta_sigma)
        sinv = sigma.inverse()
        plan.append(((sigma, kind), src, [sinv(i) - 1 for i in (1, 2, 3)]))
    return slot_order, plan


_PLANS = {(s, full): _derive_plan(s, full) for s in ALL_S3 for full in (True, False)}


def derive_nuclei_of_isostrophe(source: NucleusMap, theta: Isostrophism) -> NucleusMap:
    """Nuclei of apply(Q, θ) obtained by conjugating the source nuclei.

    With θ = (τ, T), member φ of the source nucleus maps to θ⁻¹φθ whose
    component i is α_i ∘ φ_{τ⁻¹i} ∘ α_{σ⁻¹i}⁻¹. All 18 nuclei are derivable
    when T is the identity triple, otherwise only the six whose σ fixes the
    identity slot; the rest are left as None.
    """
    n = source.degree
    if theta.degree != n:
        raise DegreeMismatch(f"source degree {n} vs isostrophism degree {theta.degree}")
    plain = theta.triple.is_identity()
    slot_order, plan = _PLANS[(theta.sigma, plain)]
    make = SigmaNucleus._trusted
    entries = source._entries
    out = dict.fromkeys(ALL_KEYS)
    if plain:
        slot_idx = np.array(slot_order)
        for key, src, _ in plan:
            arr = entries[src].array
            out[key] = make(key[0], key[1], n, arr.take(slot_idx, axis=1) if len(arr) else arr)
        return NucleusMap._trusted(n, out)
    alpha = np.array(theta.triple)
    alpha_inv = np.argsort(alpha, axis=1)
    slots = np.array(slot_order)[:, None]
    rows = np.arange(3)[:, None]
    for key, src, pre in plan:
        arr = entries[src].array
        if len(arr):
            arr = alpha[rows, arr[:, slots, alpha_inv[pre]]]
        out[key] = make(key[0], key[1], n, arr)
    return NucleusMap._trusted(n, out)


def derivable_keys(theta: Isostrophism) -> list:
    _, plan = _PLANS[(theta.sigma, theta.triple.is_identity())]
    return [key for key, _, _ in plan]


def all_table_reports(q: Quasigroup, theta: Optional[Isostrophism] = None) -> list[VerificationReport]:
    nuclei = compute_all_nuclei(q)
    reports = [verify_inverse_relations(q, nuclei), verify_product_relations(q, nuclei)]
    theta = identity_isostrophism(q.order) if theta is None else theta
    reports.append(verify_isostrophe_relations(q, theta, nuclei))
    six = VerificationReport(6)
    for tau in ALL_S3:
        six.merge(verify_parastrophe_relations(q, tau, nuclei))
    reports.append(six)
    return reports
