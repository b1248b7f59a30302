from __future__ import annotations

from fractions import Fraction
from math import comb

import pytest

import oracles
from mfaces.bounds import (
    BoundReport,
    cyclic_f,
    eulerian_m2_bound,
    flag_edge_cap,
    generalized_mk_bound,
    goodman_bound,
    lower_bound_reports,
    m_upper_bounds,
    nearly_neighborly_bound,
    two_sphere_m_admissible,
)
from mfaces.complex import octahedron
from mfaces.generators import cyclic_boundary, stacked_sphere
from mfaces.repro import fano_complex
from mfaces.vectors import face_profile


def test_report_slack_sign():
    up = BoundReport.evaluate("u", "upper", 1, 5, 3)
    lo = BoundReport.evaluate("l", "lower", 1, 5, 3)
    assert up.satisfied and up.slack == 2
    assert not lo.satisfied and lo.slack == -2


def test_upper_bound_neighborly_4_sphere():
    for n in range(8, 13):
        p = face_profile(cyclic_boundary(5, n), eulerian=False)
        reps = {r.name: r for r in m_upper_bounds(p.g, 5, p.m)}
        assert reps["m3<=g2-(g3)_<3>"].value == comb(n - 5, 2)
        assert all(r.satisfied for r in reps.values())


def test_upper_bound_stacked_g():
    for d in (4, 5, 6):
        g = (1, 7) + (0,) * (d // 2 - 1)
        rep = next(r for r in m_upper_bounds(g, d) if r.index == d - 1)
        assert rep.value == 7


def test_upper_bound_even_middle_term():
    reps = m_upper_bounds((1, 3, 6), 4)
    assert any(r.name == "m2<=g2^<2>+g2" and r.value == Fraction(16) for r in reps)


def test_malformed_g():
    with pytest.raises(ValueError):
        m_upper_bounds((1, 2), 5)
    with pytest.raises(ValueError):
        m_upper_bounds((2, 1, 1), 5)
    with pytest.raises(ValueError):
        m_upper_bounds((1, -1, 0), 5)


def test_goodman():
    assert goodman_bound(6, 12) == 8
    p = face_profile(octahedron())
    assert p.f[3] + p.m_at(2) == 8
    assert goodman_bound(7, 21) == 35 == comb(7, 3)
    assert goodman_bound(9, 0) <= 0


def test_generalized_reduces_to_goodman():
    for n in range(4, 12):
        for f1 in range(0, comb(n, 2) + 1, 3):
            for f2 in (0, 5):
                assert generalized_mk_bound(2, n, f1, f2) == goodman_bound(n, f1) - f2


def test_fano_equality_every_choice_of_tetrahedra():
    # brute-force m_3 for each subset size of the seven line complements
    for j in range(8):
        K = fano_complex(range(j))
        f = oracles.f_vector_of(K.facets)
        f3 = f[4] if len(f) > 4 else 0
        m3 = sum(1 for M in oracles.missing_faces_of(K.facets) if len(M) == 4)
        assert (f[3], f3, m3) == (28, j, 7 - j)
        assert generalized_mk_bound(3, 7, 28, f3) == m3


def test_nearly_neighborly_specializations():
    for n in range(6, 15):
        for f1 in range(n, comb(n, 2) + 1):
            assert nearly_neighborly_bound(2, 4, n, f1) == goodman_bound(n, f1) - 2 * (f1 - n)
            assert nearly_neighborly_bound(2, 5, n, f1) == goodman_bound(n, f1) - (4 * f1 - 10 * n + 20)
    with pytest.raises(ValueError):
        nearly_neighborly_bound(2, 6, 9, 30)


def test_cyclic_f_matches_generated():
    for d in range(3, 8):
        for n in range(d + 1, 13):
            assert cyclic_f(d, n) == cyclic_boundary(d, n).f_vector


def test_nearly_neighborly_holds_for_cyclic_5():
    for n in range(8, 15):
        p = face_profile(cyclic_boundary(5, n), eulerian=False)
        assert p.m_at(2) >= nearly_neighborly_bound(2, 5, n, p.f[2])


def test_eulerian_m2_bound_errors():
    with pytest.raises(ValueError):
        eulerian_m2_bound(6, 10, 20)


def test_flag_edge_cap():
    assert flag_edge_cap(4, 16) == 88
    assert flag_edge_cap(5, 16) == 112
    with pytest.raises(ValueError):
        flag_edge_cap(3, 10)


def test_flag_spheres_below_cap():
    # joins of polygons give flag 3-spheres
    from mfaces.complex import join, polygon

    for a in range(4, 8):
        for b in range(4, 8):
            K = join(polygon(range(1, a + 1)), polygon(range(a + 1, a + b + 1)))
            p = face_profile(K)
            assert p.is_flag and p.f[2] < flag_edge_cap(4, p.n)


def test_two_sphere_admissible():
    assert two_sphere_m_admissible(9, 5)
    assert not two_sphere_m_admissible(9, 4)
    assert not two_sphere_m_admissible(5, 0)
    assert two_sphere_m_admissible(5, 1)


@pytest.mark.parametrize("n", [5, 6])
def test_two_sphere_admissible_by_enumeration(n):
    realized = set()
    for facets in oracles.two_spheres_on(n):
        realized.add(sum(1 for M in oracles.missing_faces_of(facets) if len(M) == 3))
    assert realized == {m for m in range(0, n + 1) if two_sphere_m_admissible(n, m)}


def test_lower_reports_on_stacked():
    p = face_profile(stacked_sphere(5, 10))
    assert all(r.satisfied for r in lower_bound_reports(p))
