"""Trigonometric Bombieri numbers, Dieudonne's criterion and the Koebe second variation."""
from .trig_core import (
    MinimizeConfig, MinResult, RatioProfile, check_lemma3, endpoint_limits, eval_A, eval_phi,
    eval_Phi, kernel_sum, minimize_B,
)
from .univalence import (
    ComplexPolynomial, DiskZeroReport, UnivalenceStatus, UnivalenceVerdict, dieudonne_associated,
    dieudonne_check, family_poly, family_root_modulus, polynomial_eval, starlike_check,
    starlike_identity, zeros_in_unit_disk,
)
from .variation import (
    PhiWeight, Q_closed, Q_numeric, double_integral_closed, inner_integral_closed, leung_qn,
    q_n_closed, q_series_coefficients, sigma_ratio_bound, varphi_growth,
)
from .scanner import PairClass, ScanRecord, classify, conjecture_report, scan

__version__ = "0.1.0"
