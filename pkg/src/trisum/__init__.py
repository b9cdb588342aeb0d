"""Exact verification of an identity linking divisor sums and triangular-number
representation counts, with the supporting series, counting and Bell-polynomial
machinery."""

from .errors import InsufficientTable, NonIntegerResult, NonUnitConstantTerm, UnknownCheck
from .harness import VerificationReport, emit_report, run_check
from .numtheory import (
    TripRepTable,
    binomial,
    binomial_identity_check,
    divisor_sum,
    is_triangular,
    theorem_rhs,
    trep_oracle,
    trep_table,
)
from .series import (
    RationalSeries,
    TruncatedSeries,
    formal_log,
    invert,
    mul,
    power,
    product_form_A,
    product_form_B,
    psi_series,
)
from .bell import (
    BellTable,
    DerivativePoint,
    bell_oracle,
    bell_table,
    faa_di_bruno_log_derivative,
    lemma1_lhs_via_bell,
    lemma2_rhs,
    psi_derivative_point,
)

__version__ = "0.1.0"
