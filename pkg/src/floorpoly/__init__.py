"""Residues of floor(P(k)) modulo integers: exact histograms, uniform
distribution and completeness verdicts, and verifiable witness certificates."""

from .exactcore import ExactReal, er_cmp, er_floor, er_make
from .polyring import ClearedForm, Poly, clear_denominators
from .distribution import (
    ResidueHistogram,
    WeylStat,
    empirical_histogram,
    exact_histogram,
    is_complete_mod_m,
    is_ud_mod_m,
    weyl_sum,
)
from .cli.expr import parse_exact, parse_poly

__version__ = "0.1.0"
