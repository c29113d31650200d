"""Causal type of the two spinors fixed by a pseudo-unitary algebra.

The pair u(1,...,1), u(-1,...,-1) is fixed for every real form SU(p,q).
Their self-products agree in sign exactly when p is even, and their
chiralities agree exactly when p + q is even.
"""
from holospin import HolonomyId, fixed_space

for p, q in [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1), (1, 3)]:
    report = fixed_space(HolonomyId("SU", p, q))
    norms = ", ".join(str(x) for x in report.gram.diagonal)
    halves = "same half" if not (report.chirality.plus and report.chirality.minus) else "one per half"
    print(f"SU({p},{q}): N = {report.dim}, norms ({norms}), {halves}")
