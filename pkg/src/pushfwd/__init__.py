"""Splitting types of direct images of bundles under maps of curves to the
projective line, verified against an exact hyperelliptic Riemann-Roch oracle."""

from .errors import (
    CharacteristicTwo,
    DegreeNotMultiple,
    ExcessFlag,
    InvalidDegree,
    InvalidSequence,
    MissingFlag,
    NegativeH1,
    NegativeSecondDifference,
    OutOfScope,
    Overfull,
    PointNotOnCurve,
    PushforwardError,
    RankMismatch,
    SingularCurve,
    WrongGenus,
)
from .splitting import (
    CohSequence,
    SplittingType,
    h0,
    h0_sequence_from_callable,
    h0_sequence_of,
    h1,
    serre_dual,
    splitting_from_h0_sequence,
    splitting_from_h1_sequence,
    spread,
    twist,
)
from .genus0 import direct_image_g0, direct_image_g0_bundle, g0_oracle_sequence
from .genus1 import (
    AtiyahBundleSpec,
    direct_image_g1,
    direct_image_g1_bundle,
    elliptic_cohomology,
)
from .stabilization import (
    CurveMapContext,
    SpreadBound,
    h1_sequence_from_h0,
    riemann_roch_defect,
    spread_bound,
    stable_form,
    verify_duality,
)
from .hyperelliptic import (
    ComposedMap,
    CurvePoint,
    Divisor,
    HyperellipticCurve,
    canonical_divisor,
    curve_from_string,
    divisor_from_string,
    divisor_to_string,
    h0_sequence,
    is_exceptional_class,
    linearly_equivalent,
    pushforward,
    rr_space_dim,
)
from .campaigns import CampaignReport, run_campaign
from .linalg import active_backend

__version__ = "0.1.0"

__all__ = [
    "AtiyahBundleSpec",
    "CampaignReport",
    "CharacteristicTwo",
    "CohSequence",
    "ComposedMap",
    "CurveMapContext",
    "CurvePoint",
    "DegreeNotMultiple",
    "Divisor",
    "ExcessFlag",
    "HyperellipticCurve",
    "InvalidDegree",
    "InvalidSequence",
    "MissingFlag",
    "NegativeH1",
    "NegativeSecondDifference",
    "OutOfScope",
    "Overfull",
    "PointNotOnCurve",
    "PushforwardError",
    "RankMismatch",
    "SingularCurve",
    "SplittingType",
    "SpreadBound",
    "WrongGenus",
    "active_backend",
    "canonical_divisor",
    "curve_from_string",
    "direct_image_g0",
    "direct_image_g0_bundle",
    "direct_image_g1",
    "direct_image_g1_bundle",
    "divisor_from_string",
    "divisor_to_string",
    "elliptic_cohomology",
    "g0_oracle_sequence",
    "h0",
    "h0_sequence",
    "h0_sequence_from_callable",
    "h0_sequence_of",
    "h1",
    "h1_sequence_from_h0",
    "is_exceptional_class",
    "linearly_equivalent",
    "pushforward",
    "riemann_roch_defect",
    "rr_space_dim",
    "run_campaign",
    "serre_dual",
    "splitting_from_h0_sequence",
    "splitting_from_h1_sequence",
    "spread",
    "spread_bound",
    "stable_form",
    "twist",
    "verify_duality",
]
