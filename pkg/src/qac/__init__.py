"""Exact symbolic engine for quiver-window mutations, TQ-type identities
and rank-one tensor factorization.

The package is organized around:

- ``laurent``: sparse Laurent polynomials over the weight group ring
- ``cartan`` / ``quiver``: Cartan data and finite quiver windows
- ``cluster``: seeds, exchange mutation, multigrading
- ``lweights``: monomial l-weights and dominance certificates
- ``qchar``: explicit rank-one character ladders and truncations
- ``baxter``: l-variable substitution, identification, duality, verification
- ``factorization``: strings, half-lines, the web property
- ``fixtures`` / ``cli``: named checks and the command-line tool
"""

from .baxter import (
    EllExpr,
    VerifyReport,
    as_ell_expr,
    baxter_closed_form,
    chi_ell,
    duality_D,
    duality_D_expr,
    duality_D_inverse,
    ell_expr_poly,
    ell_to_z,
    genconj_check,
    identify_z_to_ell,
    phi_n_check_sl2,
    verify_baxter_sl2,
    verify_duality_compsl2,
    verify_mutation_identity,
)
from .cartan import CartanData, a_monomial, cartan_data, varpi, varpi_monomial
from .cluster import (
    MultiDegree,
    RationalAttachment,
    Seed,
    exchange_holds,
    f_hom,
    frozen_lift,
    hminus_seed,
    initial_seed,
    is_laurent,
    is_multihomogeneous,
    multidegree,
    mutate,
    mutate_seq,
)
from .errors import (
    DepthMismatch,
    DivisionFailure,
    EmptyWindow,
    FrozenVertex,
    NoUniqueTop,
    NonInvertibleSubstitution,
    NotComparableWindow,
    NotHomogeneousError,
    NotNegative,
    NotPositive,
    NotSl2,
    ParseError,
    QacError,
    UnknownFixture,
    UnsupportedCase,
    UnsupportedVariable,
)
from .factorization import (
    Factorization,
    HalfLine,
    QString,
    factorize,
    is_simple_product,
    multiply_factorization,
    product_is_simple,
    simple_qchar_oracle,
    web_property_check,
)
from .fixtures import VerificationReport, fixture_names, run_all, run_fixture
from .laurent import (
    Family,
    LPoly,
    Monomial,
    VarKey,
    avar,
    ell_minus,
    ell_plus,
    fvar,
    parse_lpoly,
    poly_add,
    poly_div_exact,
    poly_mul,
    psivar,
    substitute,
    try_div_exact,
    uvar,
    yvar,
    zvar,
)
from .lweights import (
    LWeightMono,
    a_certificate,
    bar,
    classify,
    dominance_leq,
    first_mutation_psi,
    is_negative,
    is_positive,
    kr_truncation_monomial,
    lw_equal_rational,
    lw_mul,
    lw_product,
    m_r_monomial,
    rational_form,
    tilde,
    varpi_lw,
)
from .qchar import (
    QCharacter,
    character,
    compare_at,
    kr_qchar_sl2,
    limit_stabilizes,
    normalize,
    prefund_minus_qchar_sl2,
    prefund_plus_qchar_sl2,
    qchar_equal,
    qchar_mul,
    term_depth,
    to_a_form,
    top_term,
    truncate_depth,
    truncate_leR,
)
from .quiver import (
    Quiver,
    Vertex,
    build_gamma_window,
    build_ice_hminus,
    column,
    in_neighbors,
    out_neighbors,
    psi_relabel,
    psi_relabel_inverse,
)
from .weights import Weight

__version__ = "0.1.0"
