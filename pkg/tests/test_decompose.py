import dataclasses
from collections import Counter
from fractions import Fraction

import pytest

from plumb.decompose import case5_tree, lemma1_decompose, verify_certificate
from plumb.forms import symmetrized_form
from plumb.sweeps import optimal_chain
from plumb.trees import Tree, free_tree_levels, glue, path_tree

# smallest tree on which each case is the first to fire
CASE_EXAMPLES = {
    1: Tree(7, ((0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (0, 6))),
    2: Tree(7, ((0, 1), (0, 3), (0, 5), (1, 2), (3, 4), (5, 6))),
    3: Tree(6, ((0, 1), (0, 2), (0, 3), (0, 4), (0, 5))),
    4: Tree(6, ((0, 1), (0, 3), (0, 5), (1, 2), (3, 4))),
    5: Tree(6, ((0, 1), (0, 5), (1, 2), (1, 3), (1, 4))),
    6: Tree(6, ((0, 1), (0, 4), (1, 2), (1, 3), (4, 5))),
    7: Tree(6, ((0, 1), (0, 4), (0, 5), (1, 2), (1, 3))),
}


def test_small_trees_are_terminal():
    for level in free_tree_levels(5):
        for t in level:
            cert = lemma1_decompose(t)
            assert cert.steps == ()
            assert cert.certified_lower_bound == symmetrized_form(t).signature


def test_paths_are_terminal():
    cert = lemma1_decompose(path_tree(10))
    assert cert.steps == () and cert.certified_lower_bound == 10
    assert verify_certificate(path_tree(10), cert)


def test_case5_tree():
    t, v2 = case5_tree()
    assert t.vertex_count == 6 and t.degree(v2) == 1
    cert = lemma1_decompose(t)
    assert [s.case_id for s in cert.steps] == [5]
    assert cert.certified_lower_bound == 4 == symmetrized_form(t).signature


@pytest.mark.parametrize("case", sorted(CASE_EXAMPLES))
def test_each_case_fires(case):
    t = CASE_EXAMPLES[case]
    cert = lemma1_decompose(t)
    assert cert.steps[0].case_id == case
    assert verify_certificate(t, cert)
    step = cert.steps[0]
    assert step.removed_subtree.vertex_count >= 6
    assert step.attach in step.removed_vertices


def test_certificates_sound_up_to_ten():
    seen = Counter()
    for level in free_tree_levels(10):
        for t in level:
            cert = lemma1_decompose(t)
            sigma = symmetrized_form(t).signature
            assert not cert.unresolved
            assert verify_certificate(t, cert)
            assert cert.certified_lower_bound <= sigma
            assert Fraction(cert.certified_lower_bound) >= Fraction(2, 3) * t.vertex_count
            seen.update(s.case_id for s in cert.steps)
    assert set(seen) == set(range(1, 8))


def _big_example():
    # three case-5 pieces in a chain with a path hanging off the end
    chain = optimal_chain(3)
    t = glue(chain, 0, path_tree(3), 0)
    return t, lemma1_decompose(t)


def test_tampered_certificates_are_rejected():
    t, cert = _big_example()
    assert len(cert.steps) >= 2 and cert.residual_vertices
    assert verify_certificate(t, cert)
    assert not verify_certificate(t, dataclasses.replace(cert, residual_signature=cert.residual_signature + 1))
    assert not verify_certificate(t, dataclasses.replace(cert, steps=cert.steps[1:]))
    step = cert.steps[0]
    short = dataclasses.replace(step, removed_vertices=step.removed_vertices[:5])
    assert not verify_certificate(t, dataclasses.replace(cert, steps=(short,) + cert.steps[1:]))
    other = next(v for v in range(t.vertex_count) if v not in step.removed_vertices)
    moved = dataclasses.replace(step, attach=other)
    assert not verify_certificate(t, dataclasses.replace(cert, steps=(moved,) + cert.steps[1:]))


def test_false_exact_claim_is_rejected():
    # the case-2 spider has sigma 6 and leaves one vertex (sigma 1) behind;
    # relabelling its step as a splitting case claims an exact +4 and must fail
    t = CASE_EXAMPLES[2]
    cert = lemma1_decompose(t)
    forged = dataclasses.replace(cert.steps[0], case_id=5)
    assert not verify_certificate(t, dataclasses.replace(cert, steps=(forged,)))


def test_certificate_is_deterministic():
    t, cert = _big_example()
    again = lemma1_decompose(t)
    assert [(s.case_id, s.removed_vertices) for s in again.steps] == \
        [(s.case_id, s.removed_vertices) for s in cert.steps]
