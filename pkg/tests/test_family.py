from __future__ import annotations

from math import comb

import pytest

from mfaces.canon import is_isomorphic
from mfaces.complex import link, m_vector, missing_faces, neighborliness, octahedron
from mfaces.family import (
    FamilyCheckError,
    FamilyState,
    build_balls,
    check_state,
    family_member,
    family_seed,
    family_step,
    normalize_labels,
)
from mfaces.gale import build_qk
from mfaces.generators import cyclic_boundary


def _mk(state):
    return m_vector(state.sigma)[state.k - 1]


def test_seeds():
    s2 = family_seed(2)
    assert s2.n == 9 and s2.sigma.dim == 4
    s3 = family_seed(3)
    assert s3.n == 10 and s3.sigma.dim == 6
    with pytest.raises(ValueError):
        family_seed(4)
    for s in (s2, s3):
        check_state(s, "full")


@pytest.mark.parametrize("k,top", [(2, 13), (3, 13)])
def test_family_m_counts(k, top):
    state = family_seed(k)
    while True:
        assert neighborliness(state.sigma) == k
        assert {len(M) - 1 for M in missing_faces(state.sigma)} == {k}
        assert _mk(state) == comb(state.n - k - 2, k + 1)
        if state.n >= top:
            break
        state = family_step(state)


def test_family_member_full_level():
    st = family_member(2, 11, level="full")
    assert st.n == 11 and _mk(st) == comb(7, 3)
    assert any(line.startswith("sew 11") for line in st.log)


def test_family_member_error():
    with pytest.raises(ValueError):
        family_member(3, 9)


def test_balls_structure():
    state, _ = normalize_labels(family_seed(3))
    balls = build_balls(state)
    assert len(balls) == 3
    for j, (G, D, B) in enumerate(balls, 1):
        assert G.dim == 2 * j and D.dim == B.dim == 2 * j


def test_normalize_labels_logs_relabel():
    state = family_seed(3)
    new, mapping = normalize_labels(state)
    n = state.n
    assert new.edges == tuple((n + 1 - 2 * j, n + 2 - 2 * j) for j in range(1, 4))
    assert sorted(mapping.values()) == list(range(1, n + 1))
    if any(a != b for a, b in mapping.items()):
        assert new.log[-1].startswith("relabel")
    again, _ = normalize_labels(new)
    assert again is new


def test_link_of_last_edge_face_is_octahedron():
    K, E = build_qk(3)
    F = [v for e in E[:2] for v in e]
    assert is_isomorphic(link(K, F), octahedron())


def test_bad_states_rejected():
    s = family_seed(2)
    with pytest.raises(FamilyCheckError, match="edges"):
        check_state(FamilyState(s.sigma, s.edges[:1], 2))
    with pytest.raises(FamilyCheckError, match="disjoint"):
        a, b = s.edges[0]
        check_state(FamilyState(s.sigma, ((a, b), (a, s.edges[1][1])), 2))
    # a neighborly 4-sphere with missing faces of dimension 3 as well
    with pytest.raises(FamilyCheckError, match="missing faces"):
        check_state(FamilyState(cyclic_boundary(5, 9), ((1, 2), (3, 4)), 2))
