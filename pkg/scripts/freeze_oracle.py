"""Freeze brute-force oracle outputs into tests/data/oracle_values.json.

The fast paths are checked against these files, so they must only ever be
produced by the oracles below.
"""

import json
from pathlib import Path

from sigma_nuclei.corpus import load_fixture
from sigma_nuclei.nuclei import ALL_KEYS, oracle_sigma_nucleus
from sigma_nuclei.s3 import ALL_S3
from sigma_nuclei.strophism import oracle_autostrophisms

OUT = Path(__file__).resolve().parents[1] / "tests" / "data" / "oracle_values.json"
NUCLEI_FIXTURES = ["z1", "z2", "z3", "z4", "klein", "q4prime", "z5", "random5_s11"]
AUTOSTROPHISM_FIXTURES = ["z2", "z3", "q4prime", "klein"]


def triples(members):
    return [[list(p) for p in m.triple] for m in members]


def main():
    data = {"nuclei": {}, "autostrophisms": {}}
    for name in NUCLEI_FIXTURES:
        q = load_fixture(name)
        data["nuclei"][name] = {
            f"{s.literal}/{k.value}": triples(oracle_sigma_nucleus(q, s, k)) for s, k in ALL_KEYS
        }
    for name in AUTOSTROPHISM_FIXTURES:
        q = load_fixture(name)
        data["autostrophisms"][name] = {s.literal: triples(oracle_autostrophisms(q, s)) for s in ALL_S3}
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps(data))
    print(f"wrote {OUT}")


if __name__ == "__main__":
    main()
