"""Signatures of tree-like Hopf plumbings against two thirds of b1.

Walks the free trees up to a size, prints the worst ratio per size, and shows
the decomposition certificate of a tree that sits exactly on the bound.
"""

import sys
from fractions import Fraction

from plumb import lemma1_decompose, symmetrized_form
from plumb.sweeps import optimal_chain
from plumb.trees import canonical_code, free_tree_levels

max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 11

print(" n  trees  min sigma/n  on the bound")
for level in free_tree_levels(max_n):
    n = level[0].vertex_count
    sigmas = [symmetrized_form(t).signature for t in level]
    worst = min(Fraction(s, n) for s in sigmas)
    tight = sum(1 for s in sigmas if 3 * s == 2 * n)
    print(f"{n:2d}  {len(level):5d}  {str(worst):>11}  {tight:12d}")

chain = optimal_chain(2)
cert = lemma1_decompose(chain)
print()
print("two case-5 pieces glued at v'':", canonical_code(chain))
print("sigma =", symmetrized_form(chain).signature, " b1 =", chain.vertex_count)
for k, step in enumerate(cert.steps):
    print(f"  step {k}: case {step.case_id}, cuts {sorted(step.removed_vertices)}, +{step.increment}")
print("  certified lower bound:", cert.certified_lower_bound)
