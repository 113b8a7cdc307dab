"""The symmetric group on the three positions of a triple (x, y, x·y)."""

from __future__ import annotations

from enum import Enum

from .errors import CayleySyntaxError


class S3Elem(Enum):
    """Each value is the image tuple ``(s(1), s(2), s(3))``.

    Products are read left to right: ``a * b`` acts as a first, then b,
    so ``(a * b)(i) == b(a(i))``. This is the order in which isostrophisms
    compose, and it makes ``S12 * S13 == S123``.
    """

    E = (1, 2, 3)
    S12 = (2, 1, 3)
    S13 = (3, 2, 1)
    S23 = (1, 3, 2)
    S123 = (2, 3, 1)
    S132 = (3, 1, 2)

    def __call__(self, i: int) -> int:
        return self.value[i - 1]

    def inverse(self) -> S3Elem:
        inv = [0, 0, 0]
        for i, j in enumerate(self.value, start=1):
            inv[j - 1] = i
        return S3Elem(tuple(inv))

    def __mul__(self, other: S3Elem) -> S3Elem:
        return S3Elem(tuple(other(self(i)) for i in (1, 2, 3)))

    def fixes(self, i: int) -> bool:
        return self(i) == i

    @property
    def literal(self) -> str:
        return _LITERALS[self]

    def __str__(self) -> str:
        return "ε" if self is S3Elem.E else "(" + " ".join(self.literal) + ")"

    def __repr__(self) -> str:
        return f"S3Elem.{self.name}"


_LITERALS = {
    S3Elem.E: "e",
    S3Elem.S12: "12",
    S3Elem.S13: "13",
    S3Elem.S23: "23",
    S3Elem.S123: "123",
    S3Elem.S132: "132",
}
_BY_LITERAL = {v: k for k, v in _LITERALS.items()}
_BY_LITERAL["ε"] = S3Elem.E

ALL_S3 = tuple(S3Elem)


def parse_s3(text: str) -> S3Elem:
    key = text.strip().strip("()").replace(" ", "")
    try:
        return _BY_LITERAL[key]
    except KeyError:
        raise CayleySyntaxError(f"unknown S3 literal {text!r}; use one of e,12,13,23,123,132") from None
