"""Exact computer algebra for double Danielewski surfaces: certificate-
producing isomorphism classification, automorphism verification, and
executable lemma sweeps over arbitrary-precision rationals or prime fields.
"""

from .classify import (
    AutomorphismReport,
    ClassificationVerdict,
    ISOMORPHIC,
    IsoWitness,
    NO_WITNESS_WITHIN_BOUNDS,
    NOT_ISOMORPHIC,
    OUT_OF_THEOREM_SCOPE,
    SearchParams,
    build_isomorphism,
    check_Q_condition,
    decide_isomorphic,
    invariant_check,
    p_condition_quotient,
    q_condition_memberships,
    solve_P_condition,
    verify_automorphism,
)
from .errors import (
    DdsurfError,
    FieldMismatch,
    IncompleteWitness,
    InvalidPresentation,
    NotMonic,
    ParseError,
    ResourceLimitExceeded,
)
from .fields import GF, QQ, Field
from .groebner import (
    GroebnerBasis,
    IdealBasis,
    MembershipCertificate,
    MonomialOrder,
    buchberger,
    ideals_equal,
    is_member,
    is_unit_modulo,
    reduce_full,
)
from .laurent import LaurentPoly, laurent_from_poly
from .parse import parse_poly, parse_scalar
from .poly import DEFAULT_VARS, MultiPoly, PolyRing
from .rings import MapVerification, RingMap, RingPresentation, surface_ring, verify_ring_map
from .surface import (
    ApplicabilityReport,
    SurfacePresentation,
    lemma1_oracle,
    lemma2_oracle,
    validate,
)

__version__ = "0.1.0"
