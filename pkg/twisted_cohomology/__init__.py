# -*- coding: utf-8 -*-

"""
twisted_cohomology
Exact graded computations of the twisted cohomology H^k_{f,p} of
quasi-homogeneous polynomials.
"""

from importlib.metadata import PackageNotFoundError, version

# Bring up the classes so that they appear to be directly in
# the twisted_cohomology package.

# Polynomials and forms
from twisted_cohomology.errors import (  # noqa: F401
    ArityError,
    ExponentOverflowError,
    NotIsolatedSingularityError,
    NotQuasiHomogeneousError,
    PairIdentityError,
    ParseError,
    PreconditionError,
    ProblemValidationError,
    SolverInconsistencyError,
    TwistedCohomologyError,
    UnknownVariableError,
)
from twisted_cohomology.polynomial import (  # noqa: F401
    Polynomial,
    WeightSystem,
    euler_operator,
    graded_component,
    is_quasi_homogeneous,
    partial_derivative,
    poly_add,
    poly_mul,
)
from twisted_cohomology.parser import (  # noqa: F401
    format_form,
    format_poly,
    parse_form,
    parse_poly,
)
from twisted_cohomology.forms import (  # noqa: F401
    DifferentialForm,
    MorphismOfPairs,
    MultiVector,
    algebroid_bracket,
    algebroid_differential,
    anchor,
    exterior_derivative,
    interior_product,
    lie_bracket,
    lie_derivative_top,
    morphism_pullback,
    nambu_iso,
    pairing,
    poisson_iso,
    pullback,
    schouten_function,
    schouten_vector,
    twisted_diff,
    wedge,
)

# The Milnor algebra
from twisted_cohomology.groebner import (  # noqa: F401
    GroebnerBasis,
    MilnorData,
    MonomialOrder,
    buchberger,
    milnor_data,
    normal_form_poly,
    poincare_series_product,
)

# Cohomology and the pole spectral sequence
from twisted_cohomology.cohomology import (  # noqa: F401
    complex_slice,
    germ_quotient_probe,
    graded_cohomology_dim,
    h0_dimension,
    normal_form_nform,
    regular_case_predictor,
    table1_prediction,
    table1_report,
    total_dims,
)
from twisted_cohomology.spectral import (  # noqa: F401
    MeromorphicForm,
    e2_degeneration_check,
    jacobian_membership_check,
    meromorphic_d,
    primitive_lemma_check,
    projective_degeneration_check,
    singular_to_twisted,
)

# The command-line tool
from twisted_cohomology.metadata import metadata  # noqa: F401
from twisted_cohomology.problem_parameters import ProblemSpec  # noqa: F401
from twisted_cohomology.twisted_cohomology import TwistedCohomology  # noqa: F401
from twisted_cohomology.verify import VerificationSuite  # noqa: F401

__author__ = """Twisted Cohomology Developers"""
try:
    __version__ = version("twisted_cohomology")
except PackageNotFoundError:
    __version__ = "unknown"
