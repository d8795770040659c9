"""The spiral divide family: signature two for every n.

Prints sigma, the determinant sign and the reduced block B^T B - A D for a
few members of the family.
"""

from plumb import linalg
from plumb.forms import spiral_form, spiral_reduction

for n in (1, 2, 3, 5, 10, 40):
    s = spiral_form(n)
    det = s.determinant()
    print(f"n = {n:3d}  b1 = {2 * n:3d}  sigma = {s.signature}  det sign = {'+' if det > 0 else '-'}")

print()
print("B^T B - A D for n = 5:")
red = spiral_reduction(5)
for row in red.tolist():
    print("  " + " ".join(f"{x:3d}" for x in row))
print("determinant:", linalg.determinant(red.tolist()))
