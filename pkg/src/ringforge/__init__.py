"""Exhaustive and bounded computation in small rings, skew polynomial rings and Nagata extensions."""

__version__ = "0.1.0"

from .annihilator import (
    AnnihilatorResult,
    RightIdealSpec,
    check_quasi_baer,
    elements_of_skew_ideal,
    idempotents,
    right_annihilator_constants_of_skew_ideal,
    right_annihilator_in_ring,
)
from .endo import Endomorphism, construct_endomorphism, identity
from .errors import *  # noqa: F401,F403
from .modules import (
    ModulePolynomial,
    NagataRing,
    construct_module,
    construct_nagata,
    extend_coefficientwise,
    torsion_submodule,
    verify_module,
)
from .properties import (
    Verdict,
    check_armendariz,
    check_condition_C,
    check_element_property,
    check_mccoy,
    check_property,
    check_skewring_semicommutative,
    refute_pointwise,
)
from .rings import Ring, construct_ring, verify_axioms
from .skewpoly import SkewPolynomial, SkewRing, degree, leading_coeff, right_scalar_mul, sigma_map, skew_mul
from .specs import parse_spec
from .suites import run_implication_suite
from .witness import (
    DescentMode,
    WitnessTrace,
    extract_witness,
    theorem21_random_suite,
    verify_annihilator_membership,
    verify_stability,
)
