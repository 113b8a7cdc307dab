# Moving nuclei along an isostrophism
#
# Rather than recomputing the nuclei of an isostrophic image from scratch,
# conjugate the nuclei of the source. With a pure parastrophe every one of
# the 18 nuclei transfers; with a general triple only six do.

import random

from sigma_nuclei.bench import run_bench
from sigma_nuclei.corpus import load_fixture, random_isostrophism
from sigma_nuclei.nuclei import compute_all_nuclei
from sigma_nuclei.relations import derive_nuclei_of_isostrophe, verify_isostrophe_relations
from sigma_nuclei.s3 import S3Elem
from sigma_nuclei.strophism import Isostrophism, IsotopyTriple, apply_isostrophism

q = load_fixture("random6_s21")
source = compute_all_nuclei(q)

theta = random_isostrophism(6, random.Random(1))
print("theta =", theta)
image = apply_isostrophism(q, theta)
print(image.to_text())

derived = derive_nuclei_of_isostrophe(source, theta)
direct = compute_all_nuclei(image)
for key in derived.derivable():
    sigma, kind = key
    print(f"{sigma.literal:>3}/{kind.value}: derived {len(derived[key])}, direct {len(direct[key])}",
          derived[key] == direct[key])

para = Isostrophism(S3Elem.S13, IsotopyTriple.identity(6))
print("parastrophe derives", len(derive_nuclei_of_isostrophe(source, para).derivable()), "nuclei")

# The relation checks, including the gate rule for sigmas that are not admissible.
print(verify_isostrophe_relations(q, theta, source).summary())

result = run_bench(q, theta, oracle=False, repeat=3)
for label, value in result.rows():
    print(f"{label:40s} {value}")
print(f"direct / derived = {result.derive_speedup:.1f}x")
