"""Exact linear Yang-Baxter switches and ideal polynomials of virtual knots."""

from .diagram import (
    BraidWord,
    GaussCode,
    PresentationMatrix,
    apply_reidemeister,
    braid_closure_presentation,
    braid_representation,
    build_presentation,
    parse_braid_word,
    parse_gauss_code,
)
from .invariants import IdealPolynomial, classical_form_check, delta, deltas, elementary_ideal_generators, study_det
from .laurent import LaurentPoly, canonical, canonical_form, laurent2_gcd, laurent_gcd, parse_laurent
from .rings import GaussianRational, Quaternion, parse_quaternion, psi
from .switch import (
    Switch,
    alexander_switch,
    check_yang_baxter,
    invert_switch,
    lambda_of,
    named_switch,
    parse_switch,
    sideways,
    twist_variant,
    variants,
)

__version__ = "0.1.0"

__all__ = [
    "BraidWord",
    "GaussCode",
    "GaussianRational",
    "IdealPolynomial",
    "LaurentPoly",
    "PresentationMatrix",
    "Quaternion",
    "Switch",
    "alexander_switch",
    "apply_reidemeister",
    "braid_closure_presentation",
    "braid_representation",
    "build_presentation",
    "canonical",
    "canonical_form",
    "check_yang_baxter",
    "classical_form_check",
    "delta",
    "deltas",
    "elementary_ideal_generators",
    "invert_switch",
    "lambda_of",
    "laurent2_gcd",
    "laurent_gcd",
    "named_switch",
    "parse_braid_word",
    "parse_gauss_code",
    "parse_laurent",
    "parse_quaternion",
    "parse_switch",
    "psi",
    "sideways",
    "study_det",
    "twist_variant",
    "variants",
]
