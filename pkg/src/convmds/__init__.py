"""Convolutional codes over small finite fields: free distance, MDS checks
and catastrophicity."""

__version__ = "0.1.0"

from .gf import FieldSpec, Felt, make_field, field_arith, element_order, primitive_elements
from .poly import NEG_INF, Poly, poly_arith, poly_eval, poly_gcd, poly_scale_arg, poly_from_roots
from .convcode import (
    CapabilityReport,
    CatastrophicityReport,
    ConvCode,
    GeneratorMatrix,
    code_degree,
    codeword_weight,
    encode,
    error_capabilities,
    is_catastrophic,
    make_code,
    singleton_bound,
)
from .distance import (
    DistanceReport,
    TrellisState,
    brute_force_min_weight,
    free_distance,
    is_mds,
    window_min_weight,
)
from .constructions import (
    ConstructionParams,
    ab_family,
    justesen_rate_half,
    lifted_justesen,
    palindrome_lift,
    theorem3_code,
)
