"""Multidimensional continued fractions, their Arnoux-Rauzy fusions, and
the S-adic words they generate for prescribed letter frequencies."""

from .kernels import BACKEND
from .lattice import argsort_with_ties, mat_vec, parikh
from .metrics import balance, discrepancy, empirical_frequency, factor_complexity, tijdeman_bound
from .steps import (
    ExpansionTrace,
    Fusion,
    NotApplicable,
    Rule,
    StepOutcome,
    Terminal,
    all_algorithms,
    expand,
    parse_algorithm,
)
from .substitutions import Substitution, compose, incidence, substitution_from_matrix
from .wordgen import ExpansionIncomplete, expand_float, generate_word

__version__ = "0.1.0"
