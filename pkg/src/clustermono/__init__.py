"""Exact cluster-algebra mutation and log-concavity / unimodality checks for
cluster monomials."""
from .analytic import (
    SturmChain,
    UnivariatePolynomial,
    gauss_2f1_terminating,
    is_real_rooted,
    jacobi_poly,
    newton_implies_logconcave_check,
    pfaff_check,
    pochhammer,
    q_poly,
    s_sequence,
    sturm_chain,
    sturm_real_root_count,
    t_sequence,
    theta_sequence,
)
from .cluster import (
    ExchangeGraph,
    ExchangeMatrix,
    Permutation,
    Seed,
    apply_permutation,
    canonical_unlabeled_key,
    cluster_monomial,
    enumerate_exchange_graph,
    list_cluster_variables,
    mutate_matrix,
    mutate_seed,
    negate_matrix_seed,
    parse_seed_text,
    read_seed_file,
)
from .errors import DivisionError, DomainError, PreconditionError, ResourceError, StructuralError
from .harness import (
    CampaignConfig,
    CampaignReport,
    export_graph,
    reproduce_counterexample,
    scan_conjecture,
    verify_reduction,
    verify_small_rank,
    verify_tables,
    verify_theorem,
)
from .laurent import (
    LaurentPolynomial,
    NormalForm,
    coefficient_array,
    evaluate,
    exact_div,
    from_coefficient_array,
    normalize,
    parse,
)
from .seqprops import (
    CheckReport,
    CoefficientArray,
    Witness,
    check_shifted_products,
    convolve,
    has_internal_zeros,
    is_log_concave,
    is_unimodal,
    valid_peaks,
)

__version__ = "0.1.0"
