"""Partial list coloring bounds.

Thin Python layer over the C++ core. Vertices are 0-based here; the DIMACS
and JSON file formats handled by the ``plcbound`` CLI are 1-based.
"""

from ._plcbound import (  # noqa: F401
    DomainError,
    Graph,
    InvalidParameters,
    LemmaBounds,
    ListAssignment,
    ParseError,
    QValue,
    ResourceExhausted,
    SchemeInapplicable,
    __version__,
    build_scheme,
    check_lemma_bounds,
    chi_ell,
    chromatic_number,
    compute_q,
    degeneracy_bound,
    derandomize,
    eval_f,
    eval_g,
    find_list_coloring,
    generate,
    is_s_choosable,
    lambda_t,
    limit_ratio,
    max_partial_colorable,
    monte_carlo,
    parse_dimacs,
    poly_coeffs,
    random_lists,
    ratio_scan,
    run_reproduction_checks,
    validate_partial,
)
