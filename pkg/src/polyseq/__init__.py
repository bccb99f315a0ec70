"""Forcibly polyhedral degree sequences: classification with checkable certificates."""

from .canon import canonical_form, canonical_labeling, is_isomorphic
from .classifier import (
    FORCIBLY_POLYHEDRAL,
    NOT_FORCIBLY,
    NOT_GRAPHICAL,
    ClassificationResult,
    classify,
    the_eight,
)
from .connectivity import (
    SeparationCertificate,
    internally_disjoint_paths,
    vertex_connectivity_at_least,
    verify_separation,
)
from .errors import PolyseqError
from .graph import Graph, TwoSwitch, degree_sequence, face_split, two_switch
from .graph6 import from_graph6, to_graph6
from .oracle import count_realisations, enumerate_realisations, forcibly_polyhedral_bruteforce, sweep
from .planarity import (
    KuratowskiCertificate,
    PlanarEmbedding,
    euler_holds,
    faces,
    is_planar,
    kuratowski_subdivision,
    planar_embedding,
    planarity_check,
    verify_kuratowski,
)
from .polyhedrality import is_polyhedral, verify_certificate
from .sequences import DegreeSequence, havel_hakimi_realise, is_graphical, parse_sequence
from .witness import Witness, WitnessTrace, build_witness, pyramid_witness

__version__ = "0.1.0"
