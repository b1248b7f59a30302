from __future__ import annotations

from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from mfaces.complex import SimplicialComplex, ball_decomposition, join, octahedron, simplex, simplex_boundary
from mfaces.generators import ball_B, cyclic_boundary, gs8, squeezed_ball_C, stacked_sphere
from mfaces.sequences import ball_Bk
from mfaces.vectors import (
    ball_exactly_i_stacked,
    ball_is_i_stacked,
    ball_stacked_degree,
    dehn_sommerville_check,
    f_from_h,
    face_profile,
    h_from_f,
    is_eulerian,
    macaulay_representation,
    pseudopower_lower,
    pseudopower_upper,
    sphere_stacked_degree,
)


def test_profile_cyclic_4_7_against_hull_oracle():
    hull = oracles.moment_curve_facets(4, 7)
    K = cyclic_boundary(4, 7)
    assert set(K.facets) == hull
    p = face_profile(K)
    assert p.f == oracles.f_vector_of(hull) == (1, 7, 21, 28, 14)
    assert p.h == oracles.h_vector_of(p.f) == (1, 3, 6, 3, 1)
    assert p.g == (1, 2, 3)


def test_profile_octahedron():
    p = face_profile(octahedron())
    assert p.f == (1, 6, 12, 8) and p.m == (3, 0, 0)
    assert p.is_flag and p.is_eulerian and p.neighborliness == 1


def test_profile_cyclic_5_9():
    p = face_profile(cyclic_boundary(5, 9))
    assert p.m == (0, comb(5, 3), comb(4, 2), 0, 0) == (0, 10, 6, 0, 0)
    assert p.is_neighborly and p.neighborliness == 2


@pytest.mark.parametrize("m,k", [(m, k) for k in range(1, 5) for m in range(0, 21)])
def test_pseudopowers_match_monomial_oracle(m, k):
    assert (pseudopower_upper(m, k), pseudopower_lower(m, k)) == oracles.pseudopowers_by_monomials(m, k)


def test_pseudopower_examples():
    assert pseudopower_upper(0, 3) == 0 and pseudopower_lower(0, 3) == 0
    assert macaulay_representation(5, 2) == [(3, 2), (2, 1)]
    assert pseudopower_upper(5, 2) == 7
    assert pseudopower_lower(5, 2) == 3


@pytest.mark.parametrize("m,k,nv", [(2, 1, 5), (3, 2, 4), (4, 2, 4), (5, 2, 4), (3, 3, 3)])
def test_revlex_segment_is_extremal(m, k, nv):
    # the revlex segment generates the most degree-(k+1) monomials
    assert oracles.max_upper_extension(m, k, nv) == pseudopower_upper(m, k)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 60), st.integers(0, 60), st.integers(1, 5))
def test_pseudopower_monotone(a, b, k):
    lo, hi = min(a, b), max(a, b)
    assert pseudopower_upper(lo, k) <= pseudopower_upper(hi, k)
    assert pseudopower_lower(lo, k) <= pseudopower_lower(hi, k)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(0, 50), min_size=1, max_size=7))
def test_f_h_round_trip(tail):
    f = (1,) + tuple(tail)
    assert f_from_h(h_from_f(f)) == f
    assert h_from_f(f) == oracles.h_vector_of(f)


def test_dehn_sommerville():
    assert dehn_sommerville_check(face_profile(cyclic_boundary(4, 7)))
    assert not dehn_sommerville_check(face_profile(simplex([1, 2, 3, 4])))
    cone = join(simplex_boundary([1, 2, 3]), simplex([4]))
    assert not dehn_sommerville_check(face_profile(cone))


def test_is_eulerian():
    assert is_eulerian(gs8())
    assert is_eulerian(cyclic_boundary(5, 9))
    assert not is_eulerian(simplex([1, 2, 3]))
    assert not is_eulerian(SimplicialComplex([(1, 2, 3), (1, 3, 4)]))


def test_sphere_stacked_degree():
    assert sphere_stacked_degree(face_profile(stacked_sphere(4, 9))) == 1
    for d in range(2, 7):
        assert sphere_stacked_degree(face_profile(simplex_boundary(range(1, d + 2)))) == 0
    # a neighborly 4-sphere with n >= 8 has g_1, g_2 > 0, so no index up to floor(d/2)-1 qualifies
    for n in range(8, 12):
        assert sphere_stacked_degree(face_profile(cyclic_boundary(5, n))) is None
    assert sphere_stacked_degree(face_profile(octahedron())) is None


def test_ball_stackedness():
    bd = ball_decomposition(simplex([1, 2, 3, 4]))
    assert ball_exactly_i_stacked(bd, 0) and ball_stacked_degree(bd) == 0
    bk = ball_decomposition(ball_Bk(9, 2))
    assert ball_is_i_stacked(bk, 2)
    assert ball_stacked_degree(bk) == 1 and ball_exactly_i_stacked(bk, 1)
    b3 = ball_decomposition(ball_Bk(9, 3))
    assert ball_stacked_degree(b3) == 2 and not ball_exactly_i_stacked(b3, 2)
    for n in range(8, 12):
        B = join(simplex([1, n]), ball_B(4, (2, n - 1), n))
        assert ball_is_i_stacked(ball_decomposition(B), 2)
        assert ball_exactly_i_stacked(ball_decomposition(ball_B(4, (2, n - 1), n)), 2)


def test_squeezed_balls_are_1_stacked():
    assert squeezed_ball_C(1, 3) is None
    assert squeezed_ball_C(2, 3).facets == ((3, 4, 5, 6),)
    assert set(squeezed_ball_C(3, 3).facets) == {(3, 4, 5, 6), (3, 4, 6, 7)}
    for k in (3, 4):
        for i in range(2, 7):
            assert ball_is_i_stacked(ball_decomposition(squeezed_ball_C(i, k)), 1)


def test_neighborly_m_pattern_and_stacked_pattern():
    # k-neighborly spheres: low and high m-numbers vanish, middle ones are binomial
    for d in (4, 5, 6, 7):
        k = d // 2
        for n in range(d + 2, d + 5):
            p = face_profile(cyclic_boundary(d, n), eulerian=False)
            assert all(p.m_at(i) == 0 for i in range(1, k))
            assert all(p.m_at(i) == 0 for i in range(d - k + 1, d + 1))
            if d == 2 * k + 1:
                assert p.m_at(k + 1) == comb(n - k - 3, k)
                assert p.m_at(k) == comb(n - k - 2, k + 1)
    for d in (3, 4, 5, 6):
        for n in range(d + 2, d + 6):
            p = face_profile(stacked_sphere(d, n), eulerian=False)
            assert all(p.m_at(i) == 0 for i in range(2, d - 1))
            assert p.m_at(d - 1) == p.g[1]
