#!/usr/bin/env python3
"""Sieving with a product of two cyclic groups, where the choice of root-of-
unity embedding suddenly matters.

The set is the three cube roots of unity {1, w, w^2}; each factor of
C_3 x C_3 acts by multiplication, and the candidate polynomial is
f(q,t) = 1 + qt + q^2 t^2.  With identity embeddings every cell matches.
Flipping the second embedding to w -> w^-1 breaks the cell (1,1):
f(w, w^-1) = 1 + 1 + 1 = 3 while the element acts without fixed points.
"""

from csplab import berget_eu_reiner_toy, verify_bicsp

labels, gen, F = berget_eu_reiner_toy()
print(f"X = {labels},  f(q,t) = {F}")

for e2, name in ((1, "identity embeddings"), (2, "inverted second embedding")):
    report = verify_bicsp(labels, gen, gen, F, e1=1, e2=e2)
    print(f"\n{name}:")
    print("   j  k  fixed  eval")
    for cell in report.cells:
        print(f"  {cell.j:>2} {cell.k:>2} {cell.fixed:>6} {cell.value!s:>5}"
              + ("" if cell.match else "  <-- mismatch"))
    print(f"  verdict: {report.verdict}")
