"""Simplicial spheres through their missing faces: exact constructions,
face-number calculus, bounds and non-polytopality certificates."""
from __future__ import annotations

from .bounds import BoundReport, goodman_bound, generalized_mk_bound, m_upper_bounds
from .canon import canonical_form, is_isomorphic
from .certify import Certificate, nonpolytopality_certificate, vertex_link_check
from .complex import (
    BallDecomposition,
    SimplicialComplex,
    ball_decomposition,
    from_facets,
    induced,
    is_face,
    join,
    link,
    m_vector,
    missing_faces,
    skeleton,
    star,
)
from .family import FamilyState, family_seed, family_step
from .gale import GaleCircle, build_qk, diagram_neighborliness, faces_from_diagram, origin_in_relint
from .generators import cyclic_boundary, gs8, p042, realize_2sphere
from .homology import betti, verify_sphere
from .transforms import FlipMove, bistellar_flip, sew
from .vectors import FaceProfile, face_profile, pseudopower_lower, pseudopower_upper

__all__ = [
    "BallDecomposition", "BoundReport", "Certificate", "FaceProfile", "FamilyState", "FlipMove",
    "GaleCircle", "SimplicialComplex", "ball_decomposition", "betti", "bistellar_flip", "build_qk",
    "canonical_form", "cyclic_boundary", "diagram_neighborliness", "face_profile", "faces_from_diagram",
    "family_seed", "family_step", "from_facets", "generalized_mk_bound", "goodman_bound", "gs8",
    "induced", "is_face", "is_isomorphic", "join", "vertex_link_check", "link", "m_upper_bounds",
    "m_vector", "missing_faces", "nonpolytopality_certificate", "origin_in_relint", "p042",
    "pseudopower_lower", "pseudopower_upper", "realize_2sphere", "sew", "skeleton", "star",
    "verify_sphere",
]
