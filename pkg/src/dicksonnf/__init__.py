"""dicksonnf: exact computations in finite Dickson nearfields.

Covers construction of DN_g(q, n), the generalized distributive set
D(alpha, beta), census sweeps, and R-subgroups of the Beidleman near-vector
space R^m via expanded Gaussian elimination.
"""

__version__ = "1.0.0"

from .census import CensusRow, census_csv, dset_sweep
from .dickson import (
    DicksonPair,
    NearfieldCtx,
    bracket_residues,
    center_CR,
    coset_index,
    dickson_pair,
    dist_elements_DR,
    find_nondistributive_triple,
    gen_center_GCR,
    is_dickson_pair,
    list_dickson_pairs,
    make_nearfield,
    nf_inv,
    nf_mul,
    subnearfield_orders,
)
from .distset import (
    NOT_SUBFIELD,
    SUBFIELD,
    WHOLE_FIELD,
    DSetResult,
    classify_pair,
    dset,
    dset_brute,
    f_rst,
    lemma_S_set,
    phi_eval,
    predicted_two_coset_order,
    span_elements,
    subspace_is_subfield,
)
from .errors import (
    DicksonError,
    DimensionMismatch,
    DivisionByZero,
    MixedContexts,
    NotDicksonPair,
    NotGenerator,
    NotIrreducible,
    NotPrime,
    OutOfRange,
    ParseError,
    PreconditionViolated,
    TooLarge,
    ZeroArgument,
)
from .gf_core import (
    FFElem,
    FieldCtx,
    element_order,
    ff_arith,
    ff_pow,
    find_generator,
    format_element,
    format_poly,
    h_member,
    make_field,
    parse_element,
    parse_poly,
)
from .nearvec import (
    NFVector,
    RBasis,
    ege,
    format_vector,
    is_r_independent,
    lc_closure,
    pair_eliminate,
    parse_vector,
    r_dim,
    seed_construct_full,
    seed_reduce,
    vadd,
    vscale,
    vsub,
    zero_vector,
)
from .rng import SplitMix64
from .verify import CheckResult, run_all
