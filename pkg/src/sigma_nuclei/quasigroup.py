"""Finite quasigroups as Latin-square Cayley tables."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Optional

import numpy as np

from .errors import CayleySyntaxError, NotLatin
from .perm import Perm
from .s3 import S3Elem


class Translation(Enum):
    LEFT = "left"
    RIGHT = "right"
    MIDDLE = "middle"


class Quasigroup:
    """An immutable order-n quasigroup; ``table[x, y]`` is x·y."""

    __slots__ = ("_table", "_hash")

    def __init__(self, table, *, check: bool = True):
        arr = np.array(table, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
            raise ValueError(f"table must be a non-empty square array, got shape {arr.shape}")
        if check:
            _check_latin(arr)
        arr.setflags(write=False)
        self._table = arr
        self._hash = None

    @property
    def table(self) -> np.ndarray:
        return self._table

    @property
    def order(self) -> int:
        return self._table.shape[0]

    def __call__(self, x: int, y: int) -> int:
        return int(self._table[x, y])

    def rows(self) -> list[list[int]]:
        return self._table.tolist()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Quasigroup):
            return NotImplemented
        return self._table.shape == other._table.shape and bool(np.array_equal(self._table, other._table))

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.order, self._table.tobytes()))
        return self._hash

    def __repr__(self) -> str:
        return f"Quasigroup({self.rows()})"

    def to_text(self) -> str:
        lines = [str(self.order)]
        lines += [" ".join(str(v) for v in row) for row in self.rows()]
        return "\n".join(lines) + "\n"


def _check_latin(arr: np.ndarray) -> None:
    n = arr.shape[0]
    if arr.min() < 0 or arr.max() >= n:
        raise CayleySyntaxError(f"symbols must lie in 0..{n - 1}")
    full = np.arange(n)
    for x in range(n):
        if not np.array_equal(np.sort(arr[x]), full):
            raise NotLatin("row", x)
    for y in range(n):
        if not np.array_equal(np.sort(arr[:, y]), full):
            raise NotLatin("column", y)


def is_latin(table) -> bool:
    try:
        _check_latin(np.asarray(table))
    except (NotLatin, CayleySyntaxError):
        return False
    return True


def parse_quasigroup(text: str) -> Quasigroup:
    """Read the Cayley-table text format.

    The first non-comment line holds the order n, the next n lines the rows.
    Lines starting with ``#`` are skipped.
    """
    rows = []
    order = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            values = [int(tok) for tok in line.split()]
        except ValueError:
            raise CayleySyntaxError(f"non-integer token in {line!r}", lineno) from None
        if order is None:
            if len(values) != 1 or values[0] < 1:
                raise CayleySyntaxError("first line must be a positive order", lineno)
            order = values[0]
            continue
        if len(rows) == order:
            raise CayleySyntaxError(f"more than {order} rows", lineno)
        if len(values) != order:
            raise CayleySyntaxError(f"row has {len(values)} entries, expected {order}", lineno)
        if any(v < 0 or v >= order for v in values):
            raise CayleySyntaxError(f"symbol out of range 0..{order - 1}", lineno)
        rows.append(values)
    if order is None:
        raise CayleySyntaxError("empty input")
    if len(rows) != order:
        raise CayleySyntaxError(f"expected {order} rows, found {len(rows)}")
    return Quasigroup(rows)


def load_quasigroup(path) -> Quasigroup:
    with open(path, encoding="utf-8") as fh:
        return parse_quasigroup(fh.read())


def _as_kind(kind) -> Translation:
    return kind if isinstance(kind, Translation) else Translation(kind)


def translation(q: Quasigroup, kind, c: int) -> Perm:
    """Left x ↦ c·x, right x ↦ x·c, or middle P_c with x·P_c(x) = c."""
    kind = _as_kind(kind)
    t = q.table
    if kind is Translation.LEFT:
        return Perm._trusted(t[c].tolist())
    if kind is Translation.RIGHT:
        return Perm._trusted(t[:, c].tolist())
    # row x holds c in exactly one column, and that column is P_c(x)
    return Perm._trusted(np.argmax(t == c, axis=1).tolist())


def parastrophe_table(table: np.ndarray, tau: S3Elem) -> np.ndarray:
    """Role-permuted table: each triple x of the graph becomes (x_{τ⁻¹1}, x_{τ⁻¹2}, x_{τ⁻¹3})."""
    n = table.shape[0]
    xs, ys = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    graph = (xs.ravel(), ys.ravel(), table.ravel())
    inv = tau.inverse()
    u, v, w = (graph[inv(i) - 1] for i in (1, 2, 3))
    out = np.empty_like(table)
    out[u, v] = w
    return out


def parastrophe(q: Quasigroup, tau: S3Elem) -> Quasigroup:
    return Quasigroup(parastrophe_table(q.table, tau), check=False)


@dataclass(frozen=True)
class GarrisonNucleus:
    kind: Translation
    elements: frozenset

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, a) -> bool:
        return a in self.elements


def garrison_nucleus(q: Quasigroup, kind) -> GarrisonNucleus:
    """Elements a with a(xy)=(ax)y (left), (xy)a=x(ya) (right) or (xa)y=x(ay) (middle)."""
    kind = _as_kind(kind)
    n = q.order
    t = q.table.tolist()
    found = set()
    for a in range(n):
        ok = True
        for x in range(n):
            for y in range(n):
                if kind is Translation.LEFT:
                    ok = t[a][t[x][y]] == t[t[a][x]][y]
                elif kind is Translation.RIGHT:
                    ok = t[t[x][y]][a] == t[x][t[y][a]]
                else:
                    ok = t[t[x][a]][y] == t[x][t[a][y]]
                if not ok:
                    break
            if not ok:
                break
        if ok:
            found.add(a)
    return GarrisonNucleus(kind, frozenset(found))


class Identities(NamedTuple):
    left_identity: Optional[int]
    right_identity: Optional[int]


def identity_elements(q: Quasigroup) -> Identities:
    n = q.order
    ident = np.arange(n)
    left = [e for e in range(n) if np.array_equal(q.table[e], ident)]
    right = [e for e in range(n) if np.array_equal(q.table[:, e], ident)]
    return Identities(left[0] if left else None, right[0] if right else None)
