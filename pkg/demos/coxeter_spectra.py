"""Coxeter transformations of small forests: where do the eigenvalues live?

Prints, per forest size, how many eigenvalues sit on the unit circle versus
on the positive real axis, and checks that nothing lands elsewhere.
"""

from plumb import bicolored_order, classify_spectrum, coxeter_transformation
from plumb.trees import forest_levels

print(" n  forests  min circle share  off both")
for level in forest_levels(10):
    n = level[0].vertex_count
    shares = []
    stray = 0
    for f in level:
        spec = classify_spectrum(coxeter_transformation(f, bicolored_order(f)))
        shares.append(spec.circle_count / n)
        stray += spec.other_count
    print(f"{n:2d}  {len(level):7d}  {min(shares):16.3f}  {stray:8d}")
