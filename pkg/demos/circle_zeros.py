"""Levine-Tristram signature profile of a tree and its Alexander zeros.

Usage: python circle_zeros.py [spider leg lengths ...]   (default 2 2 2)
"""

import sys

from plumb import alexander_poly, circle_root_count, seifert_matrix, signature_profile
from plumb.omega import verify_prop_D, verify_theorem_A
from plumb.trees import spider

legs = [int(x) for x in sys.argv[1:]] or [2, 2, 2]
tree = spider(legs)
a = seifert_matrix(tree).tolist()
delta = alexander_poly(a)

print("spider with legs", legs, "->", tree.vertex_count, "vertices")
print("Delta(t) coefficients:", delta.to_text())
print("zeros on the unit circle:", circle_root_count(delta))
print()
profile = signature_profile(a)
print(profile.render_text())
print()
ta = verify_theorem_A(a)
print(f"|sigma(-1)| = {abs(ta.sigma)} <= {ta.circle_roots} circle zeros:", "yes" if ta.passed else "NO")
print("every jump bounded by its zero's order:", "yes" if verify_prop_D(a, profile).passed else "NO")
