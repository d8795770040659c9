import random

import numpy as np
import pytest

from plumb.forms import (
    DivideCombinatorics,
    SymmetricForm,
    coxeter_form,
    divide_form,
    example1_form,
    face_with_double_points,
    plumb_band,
    plumb_trefoil,
    seifert_matrix,
    spiral_blocks,
    spiral_form,
    spiral_reduction,
    symmetrized_form,
    upper_lift,
)
from plumb.linalg import Inertia, determinant
from plumb.sweeps import reduction_pattern_ok
from plumb.trees import Forest, Tree, free_tree_levels, path_tree, random_tree, star_tree

EDGE = path_tree(2)
EMPTY = SymmetricForm(np.zeros((0, 0), dtype=np.int64))


def test_symmetrized_examples():
    assert symmetrized_form(EDGE).tolist() == [[2, 1], [1, 2]]
    assert symmetrized_form(Tree(1)).tolist() == [[2]]
    assert symmetrized_form(path_tree(3)).tolist() == [[2, 1, 0], [1, 2, 1], [0, 1, 2]]


def test_coxeter_form_examples():
    assert coxeter_form(Tree(1)).tolist() == [[-2]]
    assert coxeter_form(EDGE).tolist() == [[-2, 1], [1, -2]]
    q = np.array(coxeter_form(star_tree(3)).tolist())
    assert list(np.diag(q)) == [-2] * 4 and int(q.sum()) == -8 + 6


def test_seifert_examples():
    assert seifert_matrix(EDGE).tolist() == [[1, 1], [0, 1]]
    assert seifert_matrix(Tree(1)).tolist() == [[1]]
    assert seifert_matrix(path_tree(3)).tolist() == [[1, 1, 0], [0, 1, 1], [0, 0, 1]]


def test_seifert_lifts_symmetrized_form():
    for level in free_tree_levels(9):
        for t in level:
            a = np.array(seifert_matrix(t).tolist())
            assert (a + a.T).tolist() == symmetrized_form(t).tolist()


def test_forest_forms_are_block_diagonal():
    rng = random.Random(1)
    for _ in range(20):
        parts = [random_tree(rng.randint(1, 6), rng) for _ in range(rng.randint(1, 3))]
        f = Forest(tuple(parts))
        s = symmetrized_form(f)
        total = [0, 0, 0]
        off = 0
        for p in parts:
            k = p.vertex_count
            block = np.array(s.tolist())[off:off + k, off:off + k]
            assert block.tolist() == symmetrized_form(p).tolist()
            total = [x + y for x, y in zip(total, symmetrized_form(p).inertia())]
            off += k
        assert tuple(s.inertia()) == tuple(total)


def test_symmetric_form_rejects_asymmetric():
    with pytest.raises(ValueError):
        SymmetricForm([[1, 2], [0, 1]])


def test_spiral_blocks_examples():
    a, b, d = spiral_blocks(1)
    assert (a.tolist(), b.tolist(), d.tolist()) == ([[2]], [[1]], [[2]])
    _, b, d = spiral_blocks(2)
    assert b.tolist() == [[1, 2], [0, 1]] and d.tolist() == [[2, 1], [1, 2]]
    assert spiral_reduction(3).tolist() == [[-3, 0, 1], [0, 1, 0], [1, 0, 2]]
    with pytest.raises(ValueError):
        spiral_blocks(0)


def test_spiral_form_examples():
    assert spiral_form(1).tolist() == [[2, 1], [1, 2]]
    assert spiral_form(2).tolist() == [[2, 0, 1, 2], [0, 2, 0, 1], [1, 0, 2, 1], [2, 1, 1, 2]]
    assert spiral_form(2).signature == 2
    for n in range(1, 12):
        m = np.array(spiral_form(n).tolist())
        assert (m == m.T).all()


def test_spiral_reduction_pattern():
    for n in range(1, 51):
        red = spiral_reduction(n)
        assert reduction_pattern_ok(red)
        assert determinant(red.tolist()) < 0


def test_divide_form_examples():
    assert divide_form(DivideCombinatorics(1, 0)).tolist() == [[2]]
    dc = DivideCombinatorics(1, 1, dp_face={(0, 0): 1})
    assert divide_form(dc).tolist() == spiral_form(1).tolist()
    four = face_with_double_points(3).tolist()
    assert four[0] == [2, 1, 1, 1]
    assert divide_form(DivideCombinatorics(0, 2, face_face={(1, 0): 3})).tolist() == [[2, 3], [3, 2]]


@pytest.mark.parametrize("kwargs", [
    {"double_points": 1, "inner_faces": 1, "dp_face": {(0, 0): -1}},
    {"double_points": 1, "inner_faces": 1, "dp_face": {(1, 0): 1}},
    {"double_points": 0, "inner_faces": 2, "face_face": {(0, 0): 1}},
    {"double_points": -1, "inner_faces": 0},
])
def test_divide_rejects(kwargs):
    with pytest.raises(ValueError):
        DivideCombinatorics(**kwargs)


def test_face_forms_positive_definite():
    for count in range(4):
        s = face_with_double_points(count)
        assert s.inertia() == Inertia(count + 1, 0, 0)


def test_plumb_band_examples():
    assert plumb_band(SymmetricForm([[2]]), [1]).tolist() == [[2, 1], [1, 2]]
    assert plumb_band(EMPTY, []).tolist() == [[2]]
    assert plumb_band(symmetrized_form(EDGE), [3, 2]).tolist()[2] == [3, 2, 2]
    with pytest.raises(ValueError):
        plumb_band(EMPTY, [1])


def test_plumb_trefoil_examples():
    assert plumb_trefoil(EMPTY, []).tolist() == [[2, 1], [1, 2]]
    assert plumb_trefoil(SymmetricForm([[2]]), [1]).tolist() == [[2, 1, 0], [1, 2, 1], [0, 1, 2]]
    assert plumb_trefoil(SymmetricForm([[2]]), [0]).tolist() == [[2, 0, 0], [0, 2, 1], [0, 1, 2]]
    with pytest.raises(ValueError):
        plumb_trefoil(EMPTY, [0, 1])


def _random_tree_form(rng):
    return symmetrized_form(random_tree(rng.randint(1, 8), rng))


def test_band_changes_signature_by_at_most_one():
    rng = random.Random(3)
    for _ in range(1000):
        s = _random_tree_form(rng)
        c = [rng.randint(-3, 3) for _ in range(s.dimension)]
        s2 = plumb_band(s, c)
        assert np.array(s2.tolist())[:-1, :-1].tolist() == s.tolist()
        assert abs(s2.signature - s.signature) <= 1


def test_trefoil_never_lowers_signature():
    rng = random.Random(5)
    for _ in range(1000):
        s = _random_tree_form(rng)
        c = [rng.randint(-3, 3) for _ in range(s.dimension)]
        assert plumb_trefoil(s, c).signature >= s.signature


def test_example1():
    s = example1_form()
    assert s.tolist()[0][2] == 3
    assert s.tolist() == np.array(s.tolist()).T.tolist()
    assert s.signature == 0


def test_upper_lift():
    s = spiral_form(3)
    a = np.array(upper_lift(s).tolist())
    assert (a + a.T).tolist() == s.tolist()
    assert np.array_equal(a, np.triu(a))
    with pytest.raises(ValueError):
        upper_lift(SymmetricForm([[1]]))
