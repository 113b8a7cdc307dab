# Inverse-property classes
#
# Each class is a shaped autostrophism, so detection reads it off a
# sigma-nucleus. Cyclic groups with negation land in all of them.

from sigma_nuclei.corpus import cyclic_group, load_fixture
from sigma_nuclei.inverse_props import check_rst_inverse, classify, verify_inverse_class_claims
from sigma_nuclei.perm import Perm, format_perm

for name, q in (("Z5", cyclic_group(5)), ("q4prime", load_fixture("q4prime"))):
    report = classify(q)
    print(name)
    for cls, flag in report.classes().items():
        print(f"  {cls:15s} {flag}")
    if not report.rst_exhaustive:
        print("  (r,s,t) search was bounded")
    print("  LIP witnesses:", [format_perm(p) for p in report.lip])
    print(" ", verify_inverse_class_claims(q, report=report).summary())

# Direct identity checks with powers of J.
z3 = cyclic_group(3)
neg = Perm([0, 2, 1])
print(check_rst_inverse(z3, neg, 0, 1, 0), check_rst_inverse(z3, neg, 1, 0, 1),
      check_rst_inverse(z3, Perm.identity(3), 1, 1, 1))
