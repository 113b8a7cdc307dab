# Nuclei of a small left loop
#
# q4prime is an order-4 quasigroup with a two-sided identity row but a
# non-associative product. We look at its sigma-nuclei, their component
# sets, and how they compare with the element-wise (Garrison) nuclei.

from sigma_nuclei.corpus import load_fixture
from sigma_nuclei.nuclei import ALL_KEYS, NucleusKind, component_set, compute_all_nuclei, oracle_sigma_nucleus
from sigma_nuclei.perm import format_perm
from sigma_nuclei.quasigroup import garrison_nucleus
from sigma_nuclei.s3 import S3Elem

q = load_fixture("q4prime")
print(q.to_text())

# All 18 sigma-nuclei at once.
nuclei = compute_all_nuclei(q)
for (sigma, kind), nuc in nuclei.items():
    print(f"sigma={sigma.literal:>3} kind={kind.value} size={len(nuc)}")

# The brute-force oracle agrees.
assert all(nuclei[key] == oracle_sigma_nucleus(q, *key) for key in ALL_KEYS)

# Left nucleus members look like (alpha, e, gamma); gamma runs over left translations.
left = nuclei[(S3Elem.E, NucleusKind.L)]
for member in left:
    print(" | ".join(format_perm(p) for p in member.triple))

print("first components:", sorted(format_perm(p) for p in component_set(left, 1).perms))
print("second components:", sorted(format_perm(p) for p in component_set(left, 2).perms))

# Element-wise nuclei are much smaller: only 0 and 1 associate on the left.
for kind in ("left", "right", "middle"):
    print(kind, sorted(garrison_nucleus(q, kind).elements))
