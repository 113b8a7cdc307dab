"""Permutations of {0..n-1} stored as image tuples."""

from __future__ import annotations

from itertools import permutations
from math import lcm
from typing import Iterable, Iterator, Sequence

from .errors import CayleySyntaxError, DegreeMismatch


class Perm(tuple):
    """A bijection of ``range(n)``; ``p[x]`` is the image of ``x``.

    Being a tuple, a Perm is hashable and orders lexicographically by its
    image array, which is the ordering used in every report.
    """

    __slots__ = ()

    def __new__(cls, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        n = len(images)
        if n < 1:
            raise ValueError("a permutation needs degree >= 1")
        if sorted(images) != list(range(n)):
            raise ValueError(f"{images} is not a permutation of 0..{n - 1}")
        return tuple.__new__(cls, images)

    @classmethod
    def _trusted(cls, images) -> Perm:
        # skips validation; callers guarantee a bijection
        return tuple.__new__(cls, images)

    @classmethod
    def identity(cls, n: int) -> Perm:
        return tuple.__new__(cls, range(n))

    @property
    def degree(self) -> int:
        return len(self)

    @property
    def images(self) -> tuple[int, ...]:
        return tuple(self)

    def __call__(self, x: int) -> int:
        return self[x]

    def inverse(self) -> Perm:
        inv = [0] * len(self)
        for x, y in enumerate(self):
            inv[y] = x
        return tuple.__new__(Perm, inv)

    def is_identity(self) -> bool:
        return all(x == y for x, y in enumerate(self))

    def power(self, k: int) -> Perm:
        if k < 0:
            return self.inverse().power(-k)
        out = Perm.identity(len(self))
        for _ in range(k):
            out = compose_perm(self, out)
        return out

    def order(self) -> int:
        return lcm(*cycle_type(self)) if len(self) else 1

    def __repr__(self) -> str:
        return f"Perm({format_perm(self)})"


def compose_perm(f: Sequence[int], g: Sequence[int]) -> Perm:
    """Return f∘g, the map x ↦ f(g(x))."""
    if len(f) != len(g):
        raise DegreeMismatch(f"degrees {len(f)} and {len(g)} differ")
    return tuple.__new__(Perm, [f[x] for x in g])


def then(*perms: Sequence[int]) -> Perm:
    """Compose left to right: ``then(f, g)`` applies f first, then g.

    This is how juxtaposed products ``fg`` are read in the relation tables.
    """
    out = perms[0]
    for p in perms[1:]:
        out = compose_perm(p, out)
    return Perm._trusted(out)


def cycle_type(p: Sequence[int]) -> list[int]:
    seen = [False] * len(p)
    lengths = []
    for start in range(len(p)):
        if seen[start]:
            continue
        k, x = 0, start
        while not seen[x]:
            seen[x] = True
            x = p[x]
            k += 1
        lengths.append(k)
    return sorted(lengths, reverse=True)


def all_perms(n: int) -> Iterator[Perm]:
    """All n! permutations in lexicographic order."""
    for images in permutations(range(n)):
        yield tuple.__new__(Perm, images)


def format_perm(p: Sequence[int]) -> str:
    return ",".join(str(x) for x in p)


def parse_perm(text: str, degree: int | None = None) -> Perm:
    """Parse the comma-separated image literal, e.g. ``"2,0,1"``."""
    try:
        images = [int(tok) for tok in text.strip().split(",")]
    except ValueError:
        raise CayleySyntaxError(f"bad permutation literal {text!r}") from None
    try:
        p = Perm(images)
    except ValueError as exc:
        raise CayleySyntaxError(str(exc)) from None
    if degree is not None and p.degree != degree:
        raise DegreeMismatch(f"permutation {text!r} has degree {p.degree}, expected {degree}")
    return p
