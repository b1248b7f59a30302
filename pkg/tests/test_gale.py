from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from mfaces.complex import is_face, link, missing_faces, neighborliness
from mfaces.gale import (
    GaleCircle,
    build_qk,
    diagram_from_positions,
    diagram_neighborliness,
    faces_from_diagram,
    is_face_in_diagram,
    merge,
    origin_in_relint,
    qk_diagram,
    qk_edges,
    qk_missing_faces,
    restrict,
    rotate,
)
from mfaces.homology import verify_sphere
from mfaces.vectors import face_profile


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 6).flatmap(lambda N: st.tuples(st.just(N), st.lists(st.integers(0, 2 * N - 1), min_size=1, max_size=5))))
def test_origin_in_relint_matches_geometry(args):
    N, positions = args
    coords = oracles.circle_points(N)
    assert origin_in_relint(positions, N) == oracles.origin_in_relint_geometric([coords[p] for p in positions])


def test_origin_examples():
    assert origin_in_relint([0, 3], 3)
    assert not origin_in_relint([0, 1], 3)
    assert origin_in_relint([0, 2, 4], 3)
    with pytest.raises(ValueError):
        origin_in_relint([], 3)
    with pytest.raises(ValueError):
        origin_in_relint([6], 3)


@pytest.mark.parametrize("k", [1, 3, 5])
def test_qk_faces_match_geometry(k):
    G = qk_diagram(k)
    assert set(faces_from_diagram(G).facets) == oracles.gale_facets_geometric(G.ends)


def test_q3_counts():
    K, edges = build_qk(3)
    assert K.n == 10 and K.dim == 6 and len(K.facets) == 40
    assert sorted(missing_faces(K)) == qk_missing_faces(3)
    assert len(qk_missing_faces(3)) == 5
    assert neighborliness(K) == 3 and diagram_neighborliness(qk_diagram(3)) == 4
    assert diagram_neighborliness(qk_diagram(1)) == 2
    assert len(edges) == 3


@pytest.mark.parametrize("k", [1, 3, 5])
def test_qk_properties(k):
    K, edges = build_qk(k)
    assert K.n == 2 * k + 4 and K.dim == 2 * k
    assert verify_sphere(K, "quick")
    p = face_profile(K, eulerian=False)
    assert set(len(M) - 1 for M in missing_faces(K)) == {k}
    assert p.m_at(k) == k + 2
    assert all(is_face(K, e) for e in edges)
    assert len({v for e in edges for v in e}) == 2 * k


def test_consecutive_double_points_are_missing_faces():
    # removing i consecutive double points leaves a complement without the origin inside
    G = qk_diagram(3)
    for M in qk_missing_faces(3):
        assert not is_face_in_diagram(G, M)
        assert all(is_face_in_diagram(G, set(M) - {v}) for v in M)


def test_qk_requires_odd():
    with pytest.raises(ValueError):
        qk_diagram(2)
    with pytest.raises(ValueError):
        qk_edges(0)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 4).flatmap(lambda N: st.tuples(
    st.just(N),
    st.lists(st.booleans(), min_size=N, max_size=N),
    st.lists(st.integers(1, 2), min_size=N, max_size=N),
)))
def test_random_diagrams_match_geometry(args):
    N, side, mult = args
    pts, lab = [], 1
    for p in range(N):
        pos = p if side[p] else p + N
        for _ in range(mult[p]):
            pts.append((lab, pos))
            lab += 1
    G = diagram_from_positions(pts, N)
    geo = oracles.gale_facets_geometric(G.ends)
    try:
        K = faces_from_diagram(G)
    except ValueError:
        # not a polytope diagram: some open half-plane holds fewer than two points
        assert diagram_neighborliness(G) < 2
        return
    assert set(K.facets) == geo
    assert diagram_neighborliness(G) >= 2
    for F in K.facets:
        assert is_face_in_diagram(G, F)


def test_rotation_invariance():
    G = qk_diagram(3)
    K = faces_from_diagram(G)
    for s in range(1, 2 * G.N):
        assert faces_from_diagram(rotate(G, s)) == K


def test_validation_errors():
    with pytest.raises(ValueError):
        GaleCircle(((1,), (2,), (3,)))
    with pytest.raises(ValueError):
        GaleCircle(((1,), (), (2,), ()))
    with pytest.raises(ValueError):
        GaleCircle(((1,), (), (), ()))
    with pytest.raises(ValueError):
        GaleCircle(((1,), (1,), (), ()))


def test_merge_preserves_faces():
    G = GaleCircle(((1,), (2,), (), (3, 4), (), (), (5, 6), ()))
    H = merge(G, 0, 1)
    assert H.ends == ((1, 2), (), (3, 4), (), (5, 6), ())
    assert faces_from_diagram(H) == faces_from_diagram(G)
    with pytest.raises(ValueError, match="separated by diameter 2"):
        merge(G, 1, 3)
    with pytest.raises(ValueError):
        merge(G, 0, 2)
    with pytest.raises(ValueError, match="separated by diameter"):
        merge(qk_diagram(3), 0, 4)


def test_neighborliness_one_semicircle():
    assert diagram_neighborliness(GaleCircle(((1,), (2,), (), ()))) == 0


def test_restrict_gives_link():
    G = qk_diagram(3)
    K = faces_from_diagram(G)
    for v in (1, 2, 5):
        assert faces_from_diagram(restrict(G, [v])) == link(K, [v])
