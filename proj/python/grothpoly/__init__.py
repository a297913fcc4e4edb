"""Exact computations with Grothendieck, involution, orthogonal and
symplectic Grothendieck polynomials."""

from ._groth import (  # noqa: F401
    GrothExpansion,
    InternalError,
    Involution,
    MathError,
    MultiPoly,
    Permutation,
    beta,
    beta_divdiff,
    binv,
    binv_plus,
    constant,
    divdiff,
    expand,
    export_binv_plus_dot,
    gco,
    groth_oracle,
    grothendieck,
    igrassmannian,
    invgroth,
    is_locally_noncrossing,
    isobaric,
    ivex_formula,
    oplus,
    ortho_groth,
    qd_formula,
    shift_down_poly,
    shiftable_json,
    stable_truncation,
    symp_groth,
    values_table,
    var,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
