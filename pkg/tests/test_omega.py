import json
import random
from fractions import Fraction

import numpy as np
import pytest

from plumb.forms import block_diagonal, seifert_matrix
from plumb.linalg import alexander_poly
from plumb.omega import (
    MINUS_ONE,
    CirclePoint,
    omega_signature,
    separating_points,
    signature_profile,
    verify_jump_nullity,
    verify_lemma_B,
    verify_prop_D,
    verify_theorem_A,
)
from plumb.sweeps import random_plumbing_matrix
from plumb.trees import free_tree_levels, path_tree, star_tree

TREFOIL = [[1, 1], [0, 1]]
DOUBLED = block_diagonal(TREFOIL, TREFOIL).tolist()


def numeric_signature(a, u):
    a = np.array(a, dtype=float)
    w = complex((1 - u * u) / (1 + u * u), 2 * u / (1 + u * u))
    m = (1 - w) * a + (1 - w.conjugate()) * a.T
    ev = np.linalg.eigvalsh(m)
    if np.any(np.abs(ev) < 1e-7):
        return None
    return int((ev > 0).sum() - (ev < 0).sum())


def test_circle_point():
    p = CirclePoint(Fraction(1))
    w = p.omega()
    assert (w.re, w.im) == (0, 1)
    assert p.x() == 0
    assert CirclePoint(0).x() == 2 and MINUS_ONE.x() == -2
    assert MINUS_ONE.is_minus_one and not p.is_minus_one
    for u in (Fraction(1, 3), Fraction(-5, 7), Fraction(12)):
        assert CirclePoint(u).omega().norm() == 1


def test_omega_signature_examples():
    assert omega_signature(TREFOIL, MINUS_ONE) == 2
    assert omega_signature(TREFOIL, CirclePoint(1)) == 2
    assert omega_signature(TREFOIL, CirclePoint(Fraction(1, 4))) == 0
    assert omega_signature(TREFOIL, CirclePoint(0)) == 0
    # conjugate points share the signature
    assert omega_signature(TREFOIL, CirclePoint(-1)) == 2


def test_omega_signature_numeric_oracle():
    rng = random.Random(17)
    checked = 0
    while checked < 150:
        n = rng.randint(1, 5)
        a = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        u = Fraction(rng.randint(-20, 20), rng.randint(1, 9))
        expected = numeric_signature(a, float(u))
        if expected is None:
            continue
        assert omega_signature(a, CirclePoint(u)) == expected, (a, u)
        checked += 1


def test_separating_points_trefoil():
    pts = separating_points(TREFOIL)
    assert len(pts) == 2
    x0, x1 = pts[0].x(), pts[1].x()
    # the root pair sits at x = 1 (theta = pi / 3); theta grows as x falls
    assert x0 > 1 > x1
    for p in pts:
        assert not p.is_minus_one


def test_separating_points_simple_cases():
    assert len(separating_points([[1]])) == 1
    # Delta = (t + 1)^2: no roots inside the open upper semicircle
    minus = [[0, 1], [-1, 0]]
    assert alexander_poly(minus).coeffs == (1, 2, 1)
    pts = separating_points(minus)
    assert len(pts) == 1 and not pts[0].is_minus_one
    prof = signature_profile(minus)
    assert prof.order_at_minus_one == 2 and prof.jumps == ()
    with pytest.raises(ValueError):
        separating_points([[1, 1], [1, 1]])


def test_profile_examples():
    prof = signature_profile(TREFOIL)
    assert prof.plateau_values == (0, 2)
    assert prof.jumps == (1,)
    assert prof.sigma_at_minus_one == 2
    assert prof.roots[0].x_lo <= 1 <= prof.roots[0].x_hi
    prof = signature_profile([[1]])
    assert prof.plateau_values == (1,) and prof.jumps == ()
    assert prof.sigma_at_minus_one == 1 and prof.order_at_one == 1
    prof = signature_profile(DOUBLED)
    assert prof.jumps == (2,) and prof.roots[0].multiplicity == 2


def test_profile_rendering():
    prof = signature_profile(TREFOIL)
    data = json.loads(prof.render_json())
    assert set(data) == {"roots", "plateaus", "jumps", "sigma_minus_one"}
    assert data["plateaus"] == [0, 2] and data["roots"][0]["mult"] == 1
    text = prof.render_text()
    assert "jump +1" in text and "sigma at -1: 2" in text


def test_profile_rejects_zero_alexander():
    with pytest.raises(ValueError):
        signature_profile([[1, 1], [1, 1]])


def test_profile_matches_numeric_sampling():
    # plateau values agree with floating point signatures at each sample point
    for t in (path_tree(5), star_tree(4), path_tree(7)):
        a = seifert_matrix(t).tolist()
        prof = signature_profile(a)
        for p, v in zip(prof.points, prof.plateau_values):
            num = numeric_signature(a, float(p.u))
            assert num is None or num == v


def test_circle_zero_bound_examples():
    r = verify_theorem_A(TREFOIL)
    assert r.passed and (r.sigma, r.circle_roots) == (2, 2)
    r = verify_theorem_A([[1]])
    assert r.passed and (r.sigma, r.circle_roots) == (1, 1)
    r = verify_theorem_A([])
    assert r.passed and (r.sigma, r.circle_roots) == (0, 0)
    r = verify_theorem_A([[1, 1], [1, 1]])
    assert r.passed and r.vacuous


def test_jumps_bounded_by_root_order_examples():
    r = verify_prop_D(TREFOIL)
    assert r.passed and [(i.jump, i.order) for i in r.items] == [(1, 1)]
    r = verify_prop_D(DOUBLED)
    assert r.passed and [(i.jump, i.order) for i in r.items] == [(2, 2)]
    r = verify_prop_D([[1]])
    assert r.passed and r.items == ()


def test_snf_factors_and_jump_nullity_examples():
    r = verify_lemma_B(DOUBLED)
    assert r.passed and r.product_matches and r.chain_ok
    assert [(i.order, i.nullity) for i in r.items] == [(2, 2)]
    j = verify_jump_nullity(DOUBLED)
    assert j.passed and j.items == ((0, 2, 2),)


def test_small_trees_full_checks():
    for level in free_tree_levels(7):
        for t in level:
            a = seifert_matrix(t).tolist()
            prof = signature_profile(a)
            assert verify_prop_D(a, prof).passed
            assert verify_lemma_B(a).passed
            assert verify_jump_nullity(a, prof).passed
            assert abs(prof.plateau_values[0]) <= prof.order_at_one
            if prof.order_at_minus_one == 0:
                assert prof.plateau_values[-1] == prof.sigma_at_minus_one


def test_random_plumbing_matrices():
    rng = random.Random(1)
    for _ in range(30):
        a = random_plumbing_matrix(rng.randint(1, 6), rng)
        s = np.array(a) + np.array(a).T
        assert list(np.diag(s)) == [2] * len(a)
        assert verify_theorem_A(a).passed
        if not alexander_poly(a).is_zero():
            assert verify_prop_D(a).passed
