"""Regenerate the shipped fixture tables under src/sigma_nuclei/fixtures."""

from pathlib import Path

from sigma_nuclei.corpus import RANDOM_FIXTURE_SEEDS, cyclic_group, random_latin_square
from sigma_nuclei.quasigroup import Quasigroup

OUT = Path(__file__).resolve().parents[1] / "src" / "sigma_nuclei" / "fixtures"

NAMED = {
    "z1": (cyclic_group(1), "trivial quasigroup"),
    "z2": (cyclic_group(2), "cyclic group of order 2"),
    "z3": (cyclic_group(3), "cyclic group of order 3"),
    "z4": (cyclic_group(4), "cyclic group of order 4"),
    "klein": (Quasigroup([[x ^ y for y in range(4)] for x in range(4)]), "Klein four-group"),
    "z5": (cyclic_group(5), "cyclic group of order 5"),
    "q4prime": (Quasigroup([[0, 1, 2, 3], [1, 0, 3, 2], [3, 2, 1, 0], [2, 3, 0, 1]]),
                "left loop of order 4 that is not a group"),
}


def write(name, q, comment):
    (OUT / f"{name}.qg").write_text(f"# {comment}\n" + q.to_text())


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for name, (q, comment) in NAMED.items():
        write(name, q, comment)
    for n, seeds in RANDOM_FIXTURE_SEEDS.items():
        for seed in seeds:
            write(f"random{n}_s{seed}", random_latin_square(n, seed), f"random order-{n} square, seed {seed}")
    print(f"wrote fixtures to {OUT}")


if __name__ == "__main__":
    main()
