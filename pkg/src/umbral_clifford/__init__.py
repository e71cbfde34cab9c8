"""Exact umbral Clifford calculus on Clifford-valued polynomials."""
from .almansi import (
    AlmansiResult,
    almansi_decompose,
    almansi_reconstruct,
    apply_euler_inverse,
    apply_Q,
    apply_U,
    fischer_decompose,
    generate_monogenic,
    is_polymonogenic,
)
from .clifford import Blade, SignedBlade, blade_product
from .dirac import (
    apply_dirac,
    apply_euler,
    apply_gamma,
    apply_laplacian,
    apply_star_laplacian,
    apply_vector,
)
from .errors import (
    DimensionMismatch,
    IndexOutOfRange,
    ParseError,
    PreconditionError,
    SchemaError,
    UmbralError,
)
from .operators import LinearOperator, OperatorBracket, bracket_apply, commutator, anticommutator
from .oscillator import (
    OscillatorConfig,
    apply_H,
    apply_J,
    apply_potential,
    check_fischer_pair_mapping,
    exp_locally_finite,
    generate_harmonic,
)
from .parser import format_polynomial, parse_polynomial
from .poly import CliffordPolynomial, homogeneous_components, poly_eval, rational
from .serialize import deserialize, serialize
from .suites import SUITES, run_suite
from .umbral import (
    CalculusConfig,
    apply_delta,
    apply_raising,
    apply_shift,
    basic_sequence,
    invert_degree_graded,
    pincherle_of,
    sheffer_apply,
    sheffer_inverse_apply,
)
from .verify import IdentityReport, check_identity

__version__ = "0.1.0"
