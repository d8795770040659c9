import random

import numpy as np
import pytest

from plumb.coxeter import (
    SpectrumClassification,
    bicolored_order,
    classify_spectrum,
    coxeter_transformation,
    monodromy_correspondence_check,
    preserves_form,
    reflection_matrix,
)
from plumb.linalg import char_poly, determinant
from plumb.polynomials import Poly, reciprocal_split
from plumb.trees import Forest, Tree, forest_levels, free_tree_levels, path_tree, star_tree

EDGE = path_tree(2)


def test_reflection_examples():
    assert reflection_matrix(Tree(1), 0).tolist() == [[-1]]
    assert reflection_matrix(EDGE, 0).tolist() == [[-1, 1], [0, 1]]
    with pytest.raises(IndexError):
        reflection_matrix(EDGE, 2)


def test_reflections_are_involutions_preserving_q():
    for level in forest_levels(7):
        for f in level:
            n = f.vertex_count
            for i in range(n):
                r = reflection_matrix(f, i)
                assert (r @ r).tolist() == np.eye(n, dtype=int).tolist()
                assert preserves_form(f, i)


def test_coxeter_examples():
    c = coxeter_transformation(EDGE, (0, 1))
    assert c.entries.tolist() == [[0, -1], [1, -1]]
    assert c.char_poly() == Poly([1, 1, 1])
    c = coxeter_transformation(Tree(1))
    assert c.entries.tolist() == [[-1]] and c.char_poly() == Poly([1, 1])
    p3 = path_tree(3)
    assert coxeter_transformation(p3, (0, 1, 2)).char_poly() == coxeter_transformation(p3, (2, 0, 1)).char_poly()
    with pytest.raises(ValueError):
        coxeter_transformation(p3, (0, 0, 1))


def test_char_poly_independent_of_order():
    rng = random.Random(9)
    for level in free_tree_levels(9):
        for t in level:
            n = t.vertex_count
            base = coxeter_transformation(t, tuple(range(n))).char_poly()
            for _ in range(5):
                order = list(range(n))
                rng.shuffle(order)
                c = coxeter_transformation(t, tuple(order))
                assert abs(determinant(c.entries.tolist())) == 1
                assert c.char_poly() == base


def test_bicolored_order_examples():
    assert bicolored_order(EDGE) == (0, 1)
    assert bicolored_order(path_tree(3)) == (0, 2, 1)
    star = star_tree(3)
    assert bicolored_order(star) == (0, 1, 2, 3)
    # vertex 0 of every component gets colour 0
    f = Forest((EDGE, EDGE))
    assert bicolored_order(f) == (0, 2, 1, 3)


def test_classify_examples():
    assert classify_spectrum(coxeter_transformation(EDGE, (0, 1))) == SpectrumClassification(2, 0, 0)
    assert classify_spectrum(coxeter_transformation(Tree(1))) == SpectrumClassification(1, 0, 0)
    # a user matrix with roots off the circle and off the positive axis
    spec = classify_spectrum(np.array([[-3, 0], [0, 2]]))
    assert spec == SpectrumClassification(0, 1, 1)


def test_forest_spectra_are_reciprocal_without_zero_roots():
    for level in forest_levels(8):
        for f in level:
            c = coxeter_transformation(f, bicolored_order(f))
            s = reciprocal_split(c.char_poly())
            assert s.zero_order == 0
            spec = classify_spectrum(c)
            assert sum(spec) == f.vertex_count and spec.other_count == 0


def test_monodromy_examples():
    assert monodromy_correspondence_check(EDGE)
    assert monodromy_correspondence_check(Tree(1))
    for level in free_tree_levels(8):
        for t in level:
            assert monodromy_correspondence_check(t)


def test_classify_accepts_a_given_polynomial():
    p = char_poly([[0, -1], [1, -1]])
    assert classify_spectrum(None, p) == SpectrumClassification(2, 0, 0)
