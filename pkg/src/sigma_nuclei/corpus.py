"""Test corpora: every Latin square of small order, seeded random squares and isostrophisms."""

from __future__ import annotations

import random
from functools import lru_cache
from importlib import resources
from typing import Iterator

from .perm import Perm
from .quasigroup import Quasigroup, parse_quasigroup
from .s3 import ALL_S3
from .strophism import Isostrophism, IsotopyTriple

NAMED_FIXTURES = ("z1", "z2", "z3", "z4", "klein", "z5", "q4prime")
RANDOM_FIXTURE_SEEDS = {5: (11, 12, 13, 14, 15), 6: (21, 22, 23, 24, 25)}


def _fill(n: int, rows: list, rng: random.Random | None) -> Iterator[list]:
    """Backtracking over cells in row-major order; rng shuffles symbol order."""
    cells = n * n
    grid = [[-1] * n for _ in range(n)]
    col_used = [[False] * n for _ in range(n)]
    row_used = [[False] * n for _ in range(n)]

    def rec(pos):
        if pos == cells:
            yield [row[:] for row in grid]
            return
        x, y = divmod(pos, n)
        symbols = list(range(n))
        if rng is not None:
            rng.shuffle(symbols)
        for s in symbols:
            if row_used[x][s] or col_used[y][s]:
                continue
            grid[x][y] = s
            row_used[x][s] = col_used[y][s] = True
            yield from rec(pos + 1)
            row_used[x][s] = col_used[y][s] = False
        grid[x][y] = -1

    yield from rec(0)


def all_latin_squares(n: int) -> Iterator[Quasigroup]:
    """Every Latin square of order n (1, 2, 12, 576 for n = 1..4)."""
    if n > 4:
        raise ValueError("exhaustive enumeration is only offered up to order 4")
    for rows in _fill(n, [], None):
        yield Quasigroup(rows, check=False)


@lru_cache(maxsize=None)
def small_corpus(max_order: int = 4) -> tuple[Quasigroup, ...]:
    return tuple(q for n in range(1, max_order + 1) for q in all_latin_squares(n))


def random_latin_square(n: int, seed: int) -> Quasigroup:
    """A seeded random Latin square.

    Randomized backtracking gives the first square in a shuffled search
    order, then a random isotopy spreads it further over the space.
    """
    rng = random.Random(seed)
    rows = next(_fill(n, [], rng))
    a, b, c = (rng.sample(range(n), n) for _ in range(3))
    return Quasigroup([[c[rows[a[x]][b[y]]] for y in range(n)] for x in range(n)])


def random_perm(n: int, rng: random.Random) -> Perm:
    return Perm(rng.sample(range(n), n))


def random_isostrophism(n: int, rng: random.Random) -> Isostrophism:
    sigma = rng.choice(ALL_S3)
    return Isostrophism(sigma, IsotopyTriple(random_perm(n, rng), random_perm(n, rng), random_perm(n, rng)))


def load_fixture(name: str) -> Quasigroup:
    text = resources.files("sigma_nuclei.fixtures").joinpath(f"{name}.qg").read_text()
    return parse_quasigroup(text)


def random_fixture_names() -> list[str]:
    return [f"random{n}_s{s}" for n, seeds in RANDOM_FIXTURE_SEEDS.items() for s in seeds]


def fixture_corpus() -> dict[str, Quasigroup]:
    names = list(NAMED_FIXTURES) + random_fixture_names()
    return {name: load_fixture(name) for name in names}


def cyclic_group(n: int) -> Quasigroup:
    return Quasigroup([[(x + y) % n for y in range(n)] for x in range(n)])
