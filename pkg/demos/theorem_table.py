"""Print the table of parallel-spinor counts for every admissible group up to n = 8.

Pass a larger bound as the first argument; n = 16 takes a few tens of seconds.
"""
import sys

from holospin import theorem_table

max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 8
rows = theorem_table(max_n)
width = max(len(r.expected.hid.label()) for r in rows)
for row in rows:
    rep = row.report
    status = "ok" if row.passed else "MISMATCH " + "; ".join(row.failures)
    print(f"{rep.hid.label():{width}s}  n={rep.signature.n:2d}  r={rep.signature.r:2d}  N={rep.dim}  {status}")
print(f"{sum(r.passed for r in rows)}/{len(rows)} rows agree with the expected pattern")
