"""Find the spinor fixed by the split exceptional algebra in signature (4,3).

The algebra is built as the stabilizer of a 3-form, lifted to the
8-dimensional spinor module, and its common kernel computed exactly.
"""
from holospin import HolonomyId, fixed_space, orientation_variants

report = fixed_space(HolonomyId("G2star"))
print(f"{report.hid.label()} in signature {report.signature.label()}: N = {report.dim}")
for v in report.basis:
    print("  fixed spinor:", v)
print("  self-product:", report.gram.diagonal[0], f"({report.gram.causal[0].value})")

# Clifford multiplication by a unit vector gives the fixed space of a conjugate group.
variants, _ = orientation_variants(report)
for label, var in variants.items():
    op = " ".join(f"e{k}" for k in var.operator) or "identity"
    print(f"  {label:5s} via {op:8s} norm {var.gram.diagonal[0]}")
