"""Wall-clock comparison of the fast path, the oracle, and the derivation engine."""

from __future__ import annotations

import timeit
from dataclasses import dataclass
from typing import Optional

from .errors import InvariantViolation
from .nuclei import ORACLE_BOUND, compute_all_nuclei, oracle_all_nuclei
from .quasigroup import Quasigroup
from .relations import derive_nuclei_of_isostrophe
from .strophism import Isostrophism, apply_isostrophism


@dataclass
class BenchResult:
    order: int
    theta: Isostrophism
    fast_s: float
    oracle_s: Optional[float]
    derived_s: float
    direct_image_s: float
    derivable: int

    @property
    def oracle_speedup(self) -> Optional[float]:
        return None if self.oracle_s is None else self.oracle_s / self.fast_s

    @property
    def derive_speedup(self) -> float:
        return self.direct_image_s / self.derived_s

    def rows(self) -> list[tuple[str, str]]:
        fmt = lambda s: "skipped" if s is None else f"{s * 1e3:.3f} ms"
        return [
            ("fast (all 18 nuclei)", fmt(self.fast_s)),
            ("oracle (all 18 nuclei)", fmt(self.oracle_s)),
            ("direct recompute of image", fmt(self.direct_image_s)),
            (f"derived from source ({self.derivable} nuclei)", fmt(self.derived_s)),
        ]


def _best(fn, repeat: int, number: int) -> float:
    return min(timeit.repeat(fn, repeat=repeat, number=number)) / number


def run_bench(q: Quasigroup, theta: Isostrophism, *, oracle: bool = True, repeat: int = 5,
              number: int = 50) -> BenchResult:
    """Time each path after asserting that they agree on their results."""
    source = compute_all_nuclei(q)
    image = apply_isostrophism(q, theta)
    direct = compute_all_nuclei(image)
    derived = derive_nuclei_of_isostrophe(source, theta)
    keys = derived.derivable()
    if any(derived[k] != direct[k] for k in keys):
        raise InvariantViolation("derived nuclei disagree with direct computation")
    oracle_s = None
    if oracle and q.order <= ORACLE_BOUND:
        if oracle_all_nuclei(q) != source:
            raise InvariantViolation("oracle disagrees with fast path")
        oracle_s = _best(lambda: oracle_all_nuclei(q), repeat=1 if q.order >= 5 else 3, number=1)
    fast_s = _best(lambda: compute_all_nuclei(q), repeat, number)
    direct_s = _best(lambda: compute_all_nuclei(image), repeat, number)
    derived_s = _best(lambda: derive_nuclei_of_isostrophe(source, theta), repeat, number * 10)
    return BenchResult(q.order, theta, fast_s, oracle_s, derived_s, direct_s, len(keys))
