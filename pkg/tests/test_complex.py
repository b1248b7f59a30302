from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from mfaces.complex import (
    SimplicialComplex,
    ball_decomposition,
    bits,
    cone,
    from_facets,
    from_missing_faces,
    induced,
    is_face,
    join,
    link,
    m_vector,
    missing_faces,
    octahedron,
    polygon,
    simplex,
    simplex_boundary,
    skeleton,
    star,
)
from mfaces.generators import ball_B, cyclic_boundary, gs8, p042, P042_MISSING_TRIANGLES
from mfaces.sequences import ball_Bk, ball_Bk_predicted_minimal_interior


def test_from_facets_dedup_and_domination():
    assert from_facets([{1, 2}, {2, 3}, {1, 2}]).facets == ((1, 2), (2, 3))
    assert from_facets([{1, 2, 3}, {1, 2}]).facets == ((1, 2, 3),)


def test_from_facets_errors():
    with pytest.raises(ValueError, match="empty complex not supported"):
        from_facets([])
    with pytest.raises(ValueError):
        from_facets([[]])


def test_gs8_basic():
    K = gs8()
    assert K.n == 8 and K.dim == 3 and len(K.facets) == 20


def test_labels_beyond_64():
    K = simplex_boundary(range(60, 75))
    assert K.n == 15 and K.dim == 13 and max(K.vertices) == 74
    assert missing_faces(K) == [tuple(range(60, 75))]


def test_is_face():
    B = simplex_boundary([1, 2, 3, 4])
    assert is_face(B, {1, 2, 3})
    assert not is_face(B, {1, 2, 3, 4})
    assert is_face(B, set())
    assert is_face(gs8(), {4, 6})


def test_link_examples():
    O = octahedron()
    for v in O.vertices:
        L = link(O, [v])
        assert L.n == 4 and len(L.facets) == 4 and L.dim == 1
    assert link(O, []) == O
    assert m_vector(link(gs8(), [4]))[1] == 1
    n = 8
    got = set(link(cyclic_boundary(5, n), [1, n]).facets)
    want = {(2, 3, n - 1), (2, n - 2, n - 1)}
    for j in range(3, n - 2):
        want |= {(2, j, j + 1), (j, j + 1, n - 1)}
    assert got == want


def test_link_errors():
    with pytest.raises(ValueError):
        link(octahedron(), [1, 2])  # a missing edge


def test_star_join_induced_skeleton():
    c = join(simplex_boundary([1, 2]), simplex_boundary([3, 4]))
    assert set(c.facets) == {(1, 3), (1, 4), (2, 3), (2, 4)}
    assert len(join(octahedron(), simplex_boundary([7, 8])).facets) == 16
    with pytest.raises(ValueError):
        join(simplex([1, 2]), simplex([2, 3]))
    ind = induced(octahedron(), [1, 2])
    assert set(ind.facets) == {(1,), (2,)}
    sk = skeleton(simplex_boundary(range(1, 6)), 1)
    assert set(sk.facets) == set(combinations(range(1, 6), 2))
    st_ = star(octahedron(), [1])
    assert len(st_.facets) == 4 and all(1 in f for f in st_.facets)


def test_missing_faces_examples():
    assert missing_faces(octahedron()) == [(1, 2), (3, 4), (5, 6)]
    n = 9
    got = {f for f in missing_faces(cyclic_boundary(5, n)) if len(f) == 4}
    want = {(1, i, j, n) for i in range(3, n - 1) for j in range(i + 2, n - 1)}
    assert got == want
    tri = {frozenset(f) for f in missing_faces(p042()) if len(f) == 3}
    assert tri == {frozenset(t) for t in P042_MISSING_TRIANGLES}
    assert m_vector(p042())[2] == 0


@pytest.mark.parametrize(
    "K",
    [octahedron(), gs8(), p042(), cyclic_boundary(4, 8), polygon(range(1, 7)), cone(octahedron(), 9)],
    ids=["oct", "gs8", "p042", "c48", "hexagon", "cone"],
)
def test_missing_faces_match_exhaustive_scan(K):
    want = sorted(tuple(sorted(M)) for M in oracles.missing_faces_of(K.facets))
    assert sorted(missing_faces(K)) == want


def test_boundary_of_simplex_has_one_missing_face():
    for d in range(1, 7):
        K = simplex_boundary(range(1, d + 2))
        assert missing_faces(K) == [tuple(range(1, d + 2))]


def test_ball_decomposition_simplex():
    bd = ball_decomposition(simplex([1, 2, 3, 4]))
    assert bd.boundary == simplex_boundary([1, 2, 3, 4])
    assert bd.minimal_interior_faces == ((1, 2, 3, 4),)


def test_ball_decomposition_B_4_2_6():
    B = ball_B(4, (2, 6), 7)
    assert set(B.facets) == {(2, 3, 4, 5), (2, 3, 5, 6), (3, 4, 5, 6)}
    bd = ball_decomposition(B)
    # direct ridge count on the three facets
    counts: dict[tuple[int, ...], int] = {}
    for F in B.facets:
        for r in combinations(F, 3):
            counts[r] = counts.get(r, 0) + 1
    assert set(bd.boundary.facets) == {r for r, c in counts.items() if c == 1}


def test_ball_decomposition_Bk_published_minimal_interior():
    bd = ball_decomposition(ball_Bk(9, 3))
    assert set(bd.minimal_interior_faces) == {(3, 4, 5), (1, 4, 5, 6), (1, 5, 6, 7)}
    assert set(bd.minimal_interior_faces) == set(ball_Bk_predicted_minimal_interior(9, 3))


def test_ball_decomposition_rejects_branching():
    with pytest.raises(ValueError, match="not a pseudomanifold with boundary"):
        ball_decomposition(SimplicialComplex([(1, 2, 3), (1, 2, 4), (1, 2, 5)]))


def test_ball_faces_partition():
    bd = ball_decomposition(ball_Bk(10, 4))
    faces = {frozenset(f) for s in range(1, bd.ball.dim + 2) for f in bd.ball.faces(s)}
    bfaces = {frozenset(f) for s in range(1, bd.boundary.dim + 2) for f in bd.boundary.faces(s)}
    interior = {frozenset(f) for f in bd.interior_faces}
    assert interior | bfaces == faces and not interior & bfaces


def test_sewing_keeps_ridges_paired():
    K = cyclic_boundary(4, 8)
    B = SimplicialComplex(K.facets[:3])
    bd = ball_decomposition(B)
    glued = [f for f in K.facets if f not in set(B.facets)] + [f + (9,) for f in bd.boundary.facets]
    counts: dict[tuple[int, ...], int] = {}
    for F in glued:
        for r in combinations(sorted(F), len(F) - 1):
            counts[r] = counts.get(r, 0) + 1
    assert set(counts.values()) == {2}


facet_lists = st.lists(
    st.sets(st.integers(min_value=1, max_value=8), min_size=1, max_size=4), min_size=1, max_size=8
)


@settings(max_examples=60, deadline=None)
@given(facet_lists)
def test_missing_faces_round_trip(facets):
    K = SimplicialComplex(facets)
    assert from_missing_faces(K.vertices, missing_faces(K)) == K


@settings(max_examples=60, deadline=None)
@given(facet_lists)
def test_star_f_vector_relation(facets):
    K = SimplicialComplex(facets)
    big = [f for f in K.facets if len(f) > 1]
    if not big:
        return
    v = big[0][0]
    L, S = link(K, [v]), star(K, [v])
    fl = oracles.f_vector_of(L.facets)
    fs = oracles.f_vector_of(S.facets)
    # faces of the star: faces of the link, and faces of the link joined with v
    for i in range(len(fs)):
        a = fl[i] if i < len(fl) else 0
        b = fl[i - 1] if 0 < i <= len(fl) else 0
        assert fs[i] == a + b


@settings(max_examples=40, deadline=None)
@given(facet_lists)
def test_bits_round_trip(facets):
    K = SimplicialComplex(facets)
    assert tuple(bits(m) for m in K.masks) == K.facets
