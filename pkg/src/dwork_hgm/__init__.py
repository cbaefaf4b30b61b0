"""Exact Gauss-Manin connection blocks and hypergeometric parameters for the
Dwork family ``x1^n + ... + xn^n - n*lambda*x1...xn = 0``."""

from .algebra import (
    Polynomial,
    RationalFunction,
    RFMatrix,
    char_poly,
    limit_at_infinity,
    mat_derivative,
    mat_inverse,
    mat_mul,
    rational_roots,
    rf_arith,
    rf_eval,
    rf_normalize,
)
from .connection import (
    ConnectionBlock,
    RegularizedSystem,
    change_variable,
    companion_system,
    connection_block,
    cyclic_change_of_basis,
    regularize,
    residue_infinity,
    residue_one,
    residue_zero,
    run_pipeline,
    system_matrix,
)
from .dwork import (
    Combination,
    basis_representatives,
    dimension,
    is_basis_monomial,
    nabla,
    orbit,
    partitions,
    reduce,
    restricted_partitions,
)
from .hypergeom import (
    HGParams,
    extract_params,
    hg_series,
    katz_oracle,
    pochhammer,
    verify_annihilation,
)

__version__ = "0.1.0"
