"""Isotopy triples and isostrophisms: action on quasigroups, products, inverses.

An isostrophism θ = (σ, (α1, α2, α3)) moves a triple x = (x1, x2, x3) to
``(α1 x_{σ⁻¹1}, α2 x_{σ⁻¹2}, α3 x_{σ⁻¹3})``. It acts on a quasigroup by
moving every triple (x, y, x·y) of its graph; θ is an autostrophism when the
graph is carried onto itself.
"""

from __future__ import annotations

from typing import Iterator, NamedTuple

import numpy as np

from .errors import DegreeMismatch, OrderTooLarge
from .perm import Perm, all_perms, compose_perm, format_perm
from .quasigroup import Quasigroup, parastrophe_table
from .s3 import ALL_S3, S3Elem, parse_s3

DEFAULT_SEARCH_BOUND = 8

__all__ = [
    "S3Elem", "ALL_S3", "parse_s3", "IsotopyTriple", "Isostrophism", "compose_perm",
    "act_on_triple", "apply_isostrophism", "compose_isostrophisms", "invert_isostrophism",
    "is_autostrophism", "enumerate_autostrophisms", "oracle_autostrophisms",
    "identity_isostrophism", "DEFAULT_SEARCH_BOUND",
]


class IsotopyTriple(NamedTuple):
    a1: Perm
    a2: Perm
    a3: Perm

    @classmethod
    def identity(cls, n: int) -> IsotopyTriple:
        e = Perm.identity(n)
        return cls(e, e, e)

    @property
    def degree(self) -> int:
        return len(self.a1)

    def slot(self, i: int) -> Perm:
        """Component at 1-based position i."""
        return self[i - 1]

    def is_identity(self) -> bool:
        return all(p.is_identity() for p in self)

    def inverse(self) -> IsotopyTriple:
        return IsotopyTriple(*(p.inverse() for p in self))

    def __str__(self) -> str:
        return "(" + "; ".join(format_perm(p) for p in self) + ")"


def make_triple(a1, a2, a3) -> IsotopyTriple:
    t = IsotopyTriple(Perm(a1), Perm(a2), Perm(a3))
    if not len(t.a1) == len(t.a2) == len(t.a3):
        raise DegreeMismatch("triple components have different degrees")
    return t


class Isostrophism(NamedTuple):
    sigma: S3Elem
    triple: IsotopyTriple

    @property
    def degree(self) -> int:
        return self.triple.degree

    def sort_key(self):
        return tuple(self.triple)

    def __str__(self) -> str:
        return f"({self.sigma}, {self.triple})"


def identity_isostrophism(n: int) -> Isostrophism:
    return Isostrophism(S3Elem.E, IsotopyTriple.identity(n))


def _check_degree(*degrees: int) -> None:
    if len(set(degrees)) > 1:
        raise DegreeMismatch(f"degrees {sorted(set(degrees))} differ")


def act_on_triple(triple: IsotopyTriple, tau: S3Elem) -> IsotopyTriple:
    """R^τ: component i becomes α_{τ⁻¹(i)}."""
    inv = tau.inverse()
    return IsotopyTriple(*(triple[inv(i) - 1] for i in (1, 2, 3)))


def apply_isostrophism(q: Quasigroup, theta: Isostrophism) -> Quasigroup:
    """The quasigroup whose graph is the image of q's graph under theta.

    For σ = ε this is B(x, y) = α3(α1⁻¹x · α2⁻¹y).
    """
    _check_degree(q.order, theta.degree)
    p = parastrophe_table(q.table, theta.sigma)
    a1, a2, a3 = (np.asarray(a) for a in theta.triple)
    out = np.empty_like(p)
    out[np.ix_(a1, a2)] = a3[p]
    return Quasigroup(out, check=False)


def compose_isostrophisms(first: Isostrophism, second: Isostrophism) -> Isostrophism:
    """(σ,R)(τ,S) = (στ, R^τ S): apply ``first``, then ``second``.

    Component i of the product is S_i ∘ α_{τ⁻¹(i)}.
    """
    _check_degree(first.degree, second.degree)
    moved = act_on_triple(first.triple, second.sigma)
    triple = IsotopyTriple(*(compose_perm(s, r) for s, r in zip(second.triple, moved)))
    return Isostrophism(first.sigma * second.sigma, triple)


def invert_isostrophism(theta: Isostrophism) -> Isostrophism:
    """(σ⁻¹, (α_{σ1}⁻¹, α_{σ2}⁻¹, α_{σ3}⁻¹))."""
    s = theta.sigma
    triple = IsotopyTriple(*(theta.triple[s(i) - 1].inverse() for i in (1, 2, 3)))
    return Isostrophism(s.inverse(), triple)


def conjugate(theta: Isostrophism, phi: Isostrophism) -> Isostrophism:
    """θ⁻¹ φ θ."""
    return compose_isostrophisms(compose_isostrophisms(invert_isostrophism(theta), phi), theta)


def is_autostrophism(q: Quasigroup, theta: Isostrophism) -> bool:
    _check_degree(q.order, theta.degree)
    return apply_isostrophism(q, theta) == q


def _division_tables(table: np.ndarray):
    n = table.shape[0]
    idx = np.arange(n)
    left_div = np.empty_like(table)   # left_div[c, z] = y with c·y = z
    right_div = np.empty_like(table)  # right_div[d, z] = x with x·d = z
    left_div[idx[:, None], table] = idx[None, :]
    right_div[idx[None, :], table] = idx[:, None]
    return left_div, right_div


def enumerate_autostrophisms(q: Quasigroup, sigma: S3Elem, bound: int = DEFAULT_SEARCH_BOUND) -> list[Isostrophism]:
    """All autostrophisms with S₃ part sigma, sorted by triple.

    θ = (σ,(α,β,γ)) is an autostrophism iff A(αu, βv) = γP(u, v) where P is
    the σ-parastrophe. Fixing β and c = α(0) forces γ from the row u = 0 and
    then α from the column v = 0, so n!·n candidates are tried.
    """
    n = q.order
    if n > bound:
        raise OrderTooLarge(n, bound)
    a = q.table
    p = parastrophe_table(a, sigma)
    left_div, right_div = _division_tables(a)
    p0_row_inv = np.argsort(p[0])  # (L^P_0)⁻¹
    p_col0 = p[:, 0]
    found = []
    for beta in all_perms(n):
        b = np.asarray(beta)
        for c in range(n):
            # γ(P(0, v)) = A(c, β v)
            gamma = a[c][b[p0_row_inv]]
            # A(α u, β 0) = γ P(u, 0)
            alpha = right_div[b[0]][gamma[p_col0]]
            if np.array_equal(a[alpha[:, None], b[None, :]], gamma[p]):
                found.append(Isostrophism(sigma, IsotopyTriple(
                    Perm._trusted(alpha.tolist()), beta, Perm._trusted(gamma.tolist()))))
    found.sort(key=Isostrophism.sort_key)
    return found


def oracle_autostrophisms(q: Quasigroup, sigma: S3Elem, bound: int = 5) -> list[Isostrophism]:
    """Independent pair scan over (α, β) with γ read off and then checked.

    Plain Python so it shares nothing with the numpy search above.
    """
    n = q.order
    if n > bound:
        raise OrderTooLarge(n, bound)
    a = q.table.tolist()
    inv = sigma.inverse()
    graph = [(x, y, a[x][y]) for x in range(n) for y in range(n)]
    moved = [tuple(t[inv(i) - 1] for i in (1, 2, 3)) for t in graph]
    perms = list(all_perms(n))
    found = []
    for alpha in perms:
        for beta in perms:
            gamma = [-1] * n
            ok = True
            for u, v, w in moved:
                target = a[alpha[u]][beta[v]]
                if gamma[w] == -1:
                    gamma[w] = target
                elif gamma[w] != target:
                    ok = False
                    break
            if ok and sorted(gamma) == list(range(n)):
                found.append(Isostrophism(sigma, IsotopyTriple(alpha, beta, Perm(gamma))))
    found.sort(key=Isostrophism.sort_key)
    return found


def all_autostrophisms(q: Quasigroup, bound: int = DEFAULT_SEARCH_BOUND) -> Iterator[Isostrophism]:
    for s in ALL_S3:
        yield from enumerate_autostrophisms(q, s, bound)
