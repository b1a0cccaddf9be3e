"""Multigraded generating functions for Weyl dimensions over lattice cones."""

from .errors import ConfigurationError, DimensionError, DomainError, IntegralityError, WeylGenError
from .genfun import (
    ConeSpec,
    EulerOp,
    UniRational,
    apply_euler_op,
    hilbert_series,
    lemma_operators,
    lemma_recursion_step,
    operator_for_root,
    reduce_univariate,
    specialize,
)
from .oracle import VerificationReport, dimension_table, verify_equivalence
from .polyring import CoeffTable, EulerRational, Poly, exact_div_one_minus_q, expand, poly_mul
from .presets import ProblemSpec, antisymmetric_determinantal, fundamental_cone, symmetric_determinantal
from .rootsys import PositiveRoot, RootSystem, SimpleFactor, Weight, build_root_system, c_coeff, weyl_dim

__version__ = "0.1.0"
