"""The eighteen σ-A-nuclei of a quasigroup and their component sets.

A left (right, middle) σ-nucleus collects the autostrophisms with S₃ part σ
whose second (first, third) component is the identity.
"""

from __future__ import annotations

import os
from collections.abc import Mapping
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from itertools import product
from typing import Iterator, Optional

import numpy as np

from .errors import OrderTooLarge
from .perm import Perm, all_perms
from .quasigroup import Quasigroup, parastrophe_table
from .s3 import ALL_S3, S3Elem
from .strophism import Isostrophism, IsotopyTriple

ORACLE_BOUND = 6


class NucleusKind(Enum):
    L = "l"
    R = "r"
    M = "m"

    @property
    def identity_slot(self) -> int:
        return _IDENTITY_SLOT[self]

    @staticmethod
    def for_slot(slot: int) -> NucleusKind:
        """The kind whose identity component sits at ``slot``."""
        return _KIND_FOR_SLOT[slot]

    def __str__(self) -> str:
        return self.value


_IDENTITY_SLOT = {NucleusKind.L: 2, NucleusKind.R: 1, NucleusKind.M: 3}
_KIND_FOR_SLOT = {v: k for k, v in _IDENTITY_SLOT.items()}
ALL_KINDS = tuple(NucleusKind)
ALL_KEYS = tuple(product(ALL_S3, ALL_KINDS))


def parse_kind(text: str) -> NucleusKind:
    return NucleusKind(text.strip().lower())


def _canonical(arr: np.ndarray) -> np.ndarray:
    """Rows of a (k, 3, n) member array in lexicographic order, duplicates removed."""
    if len(arr) <= 1:
        return arr
    flat = arr.reshape(len(arr), -1)
    return np.unique(flat, axis=0).reshape(-1, 3, arr.shape[2])


@dataclass(frozen=True, eq=False)
class SigmaNucleus:
    """One σ-nucleus; members are kept as a (k, 3, n) array of triples."""

    sigma: S3Elem
    kind: NucleusKind
    degree: int
    array: np.ndarray = field(repr=False)

    @cached_property
    def _sorted(self) -> np.ndarray:
        return _canonical(self.array)

    @cached_property
    def members(self) -> tuple[Isostrophism, ...]:
        return tuple(
            Isostrophism(self.sigma, IsotopyTriple(*(Perm._trusted(c) for c in row)))
            for row in self._sorted.tolist()
        )

    def __len__(self) -> int:
        return len(self.array)

    def __iter__(self) -> Iterator[Isostrophism]:
        return iter(self.members)

    def __contains__(self, phi) -> bool:
        return phi in self.member_set

    def __bool__(self) -> bool:
        return len(self.array) > 0

    @cached_property
    def member_set(self) -> frozenset:
        return frozenset(self.members)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SigmaNucleus):
            return NotImplemented
        return (self.sigma, self.kind, self.degree) == (other.sigma, other.kind, other.degree) and \
            np.array_equal(self._sorted, other._sorted)

    def __hash__(self) -> int:
        return hash((self.sigma, self.kind, self.degree, self._sorted.tobytes()))

    def __repr__(self) -> str:
        return f"SigmaNucleus(sigma={self.sigma.literal}, kind={self.kind.value}, size={len(self)})"

    @classmethod
    def _trusted(cls, sigma, kind, degree, array) -> SigmaNucleus:
        # skips the frozen-dataclass __init__; used on hot paths
        obj = object.__new__(cls)
        obj.__dict__.update(sigma=sigma, kind=kind, degree=degree, array=array)
        return obj

    @classmethod
    def from_members(cls, sigma, kind, degree, members) -> SigmaNucleus:
        rows = [list(m.triple) for m in members]
        arr = np.array(rows, dtype=np.int64).reshape(len(rows), 3, degree)
        return cls(sigma, kind, degree, arr)


@dataclass(frozen=True)
class ComponentSet:
    slot: int
    perms: frozenset

    def __len__(self) -> int:
        return len(self.perms)

    def __iter__(self):
        return iter(sorted(self.perms))

    def __contains__(self, p) -> bool:
        return p in self.perms


def component_set(nucleus: SigmaNucleus, slot: int) -> ComponentSet:
    if slot not in (1, 2, 3):
        raise ValueError(f"slot must be 1, 2 or 3, got {slot}")
    return ComponentSet(slot, frozenset(m.triple[slot - 1] for m in nucleus.members))


def _candidates(table: np.ndarray, p: np.ndarray, kind: NucleusKind) -> np.ndarray:
    """All n candidate triples forced by the basepoint equations, as (n, 3, n)."""
    n = table.shape[0]
    idx = np.arange(n)
    ident = np.broadcast_to(idx, (n, n))
    if kind is NucleusKind.L:
        # γ = L^A_c (L^P_0)⁻¹ and α = (R^A_0)⁻¹ γ R^P_0, one per c
        gamma = table[:, np.argsort(p[0])]
        alpha = np.argsort(table[:, 0])[gamma[:, p[:, 0]]]
        return np.stack([alpha, ident, gamma], axis=1)
    if kind is NucleusKind.R:
        # γ = R^A_d (R^P_0)⁻¹ and β = (L^A_0)⁻¹ γ L^P_0, one per d
        gamma = table[np.argsort(p[:, 0]), :].T
        beta = np.argsort(table[0])[gamma[:, p[0]]]
        return np.stack([ident, beta, gamma], axis=1)
    # β = (L^A_c)⁻¹ L^P_0 and α = (R^A_{β(0)})⁻¹ R^P_0, one per c
    left_div = np.empty_like(table)
    left_div[idx[:, None], table] = idx[None, :]
    right_div = np.empty_like(table)
    right_div[idx[None, :], table] = idx[:, None]
    beta = left_div[:, p[0]]
    alpha = right_div[beta[:, 0]][:, p[:, 0]]
    return np.stack([alpha, beta, ident], axis=1)


def _passes(table: np.ndarray, p: np.ndarray, cand: np.ndarray) -> np.ndarray:
    """Which candidates satisfy A(α1 u, α2 v) = α3 P(u, v) on every cell."""
    k = len(cand)
    rows = np.arange(k)[:, None, None]
    lhs = table[cand[:, 0, :, None], cand[:, 1, None, :]]
    rhs = cand[rows, 2, p[None, :, :]]
    return (lhs == rhs).reshape(k, -1).all(axis=1)


def compute_sigma_nucleus(q: Quasigroup, sigma: S3Elem, kind: NucleusKind, *, _para=None) -> SigmaNucleus:
    """Fast path: n candidates, each checked on all n² cells."""
    table = q.table
    p = parastrophe_table(table, sigma) if _para is None else _para
    cand = _candidates(table, p, kind)
    keep = cand[_passes(table, p, cand)]
    return SigmaNucleus(sigma, kind, q.order, np.ascontiguousarray(keep))


def oracle_sigma_nucleus(q: Quasigroup, sigma: S3Elem, kind: NucleusKind) -> SigmaNucleus:
    """Brute force over every pair of permutations for the two free slots.

    Deliberately plain Python: each pair is checked against the graph
    directly, with no basepoint reasoning and no numpy.
    """
    n = q.order
    if n > ORACLE_BOUND:
        raise OrderTooLarge(n, ORACLE_BOUND)
    a = q.table.tolist()
    inv = sigma.inverse()
    graph = [(x, y, a[x][y]) for x in range(n) for y in range(n)]
    moved = [tuple(t[inv(i) - 1] for i in (1, 2, 3)) for t in graph]
    ident = Perm.identity(n)
    fixed = kind.identity_slot
    free = [i for i in (1, 2, 3) if i != fixed]
    perms = list(all_perms(n))
    found = []
    for f1 in perms:
        for f2 in perms:
            comps = {fixed: ident, free[0]: f1, free[1]: f2}
            c1, c2, c3 = comps[1], comps[2], comps[3]
            if all(a[c1[u]][c2[v]] == c3[w] for u, v, w in moved):
                found.append(Isostrophism(sigma, IsotopyTriple(c1, c2, c3)))
    return SigmaNucleus.from_members(sigma, kind, n, found)


class NucleusMap(Mapping):
    """Read-only map (σ, kind) → SigmaNucleus, or None where not derivable."""

    def __init__(self, degree: int, entries: dict):
        self.degree = degree
        self._entries = {key: entries.get(key) for key in ALL_KEYS}

    @classmethod
    def _trusted(cls, degree: int, entries: dict) -> NucleusMap:
        obj = object.__new__(cls)
        obj.degree = degree
        obj._entries = entries
        return obj

    def __getitem__(self, key) -> Optional[SigmaNucleus]:
        return self._entries[key]

    def __iter__(self):
        return iter(ALL_KEYS)

    def __len__(self) -> int:
        return len(ALL_KEYS)

    def derivable(self) -> list:
        return [k for k, v in self._entries.items() if v is not None]

    def __eq__(self, other) -> bool:
        if not isinstance(other, NucleusMap):
            return NotImplemented
        return self._entries == other._entries

    def __repr__(self) -> str:
        sizes = ", ".join(
            f"{s.literal}{k.value}:{'-' if v is None else len(v)}" for (s, k), v in self._entries.items())
        return f"NucleusMap({sizes})"


def _thread_count() -> int:
    raw = os.environ.get("SIGMA_NUCLEI_THREADS", "1")
    try:
        value = int(raw)
    except ValueError:
        return 1
    return os.cpu_count() or 1 if value == 0 else max(1, value)


def compute_all_nuclei(q: Quasigroup, threads: Optional[int] = None) -> NucleusMap:
    threads = _thread_count() if threads is None else threads
    paras = {s: parastrophe_table(q.table, s) for s in ALL_S3}

    def one(key):
        s, k = key
        return compute_sigma_nucleus(q, s, k, _para=paras[s])

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(one, ALL_KEYS))
    else:
        results = [one(key) for key in ALL_KEYS]
    return NucleusMap(q.order, dict(zip(ALL_KEYS, results)))


def oracle_all_nuclei(q: Quasigroup) -> NucleusMap:
    return NucleusMap(q.order, {key: oracle_sigma_nucleus(q, *key) for key in ALL_KEYS})
