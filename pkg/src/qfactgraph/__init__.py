"""q-factorization graphs of Drinfeld polynomials for quantum affine type A.

Build, validate and analyze the directed graphs attached to
factorizations of Drinfeld polynomials into Kirillov-Reshetikhin
strings, and certify primality of the associated simple modules.
"""

from .dynkin import DynkinA
from .errors import (
    ChainConditionViolated,
    CyclicGraph,
    IntervalDoesNotContain,
    InternalInvariantViolation,
    InvalidCut,
    InvalidInterval,
    InvalidNode,
    InvalidVertex,
    NonIntegralP,
    NonPositiveLength,
    NotQFactGraph,
    PolySyntaxError,
    PreconditionViolated,
    QfgError,
    RankMismatch,
    RankTooSmall,
    ShapeInvalid,
    TooManyVertices,
)
from .families import (
    SkewShape,
    Snake,
    is_prime_snake,
    is_snake,
    skew_nu_table,
    skew_to_poly,
    snake_to_poly,
    tournament_family,
)
from .fgraph import (
    Arrow,
    Cut,
    FactGraph,
    Vertex,
    arrow_dual,
    build_graph,
    canonical,
    color_dual,
    connected_components,
    cuts,
    graph_tensor,
    graph_to_dot,
    graph_to_json_obj,
    is_line,
    is_monotonic_line,
    is_totally_ordered,
    is_tournament,
    is_tree,
    isomorphic,
    neighborhoods,
    partial_order,
    sinks,
    sources,
    subgraph,
    to_polynomial,
    transitive_reduction,
    validate,
)
from .lweight import (
    DrinfeldPoly,
    KRFactor,
    dual_kappa,
    dual_negate,
    dual_sigma,
    dual_star,
    is_q_factorization,
    parse_poly,
    poly_from_json,
    poly_to_json,
    poly_to_text,
    q_factorize,
    roots_of,
    shift,
    support,
    weight,
)
from .primality import (
    ChainReport,
    CutClass,
    DualCertificate,
    Verdict,
    alternating_line_check,
    chain_arrow_closure,
    chain_p_matrix,
    classify,
    classify_cut,
    cut_arrowless_simple,
    cut_reducible_extremal,
    dual_neighborhood_certificate,
)
from .redsets import (
    PairRelation,
    RSet,
    kr_dual_pair_simple,
    kr_pair_relation,
    rset,
    rset_restricted,
    rset_same_node,
)

__version__ = "0.1.0"
