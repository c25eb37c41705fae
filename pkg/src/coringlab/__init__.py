"""Exact finite-field workbench for relative Hochschild cohomology,
corings with grouplike elements, and their Amitsur complexes."""

from .errors import (
    AxiomError,
    CoringLabError,
    ElementNotInSpaceError,
    FacetParseError,
    NoD2CertificateError,
    NotWellDefinedError,
    SchemaError,
    SizeLimitError,
)
from .linalg import (
    Field,
    Matrix,
    QuotientSpace,
    Subspace,
    induced_map,
    inverse,
    kernel_basis,
    quotient_of,
    row_reduce,
    solve,
)
from .algebras import (
    Extension,
    FinDimAlgebra,
    HopfData,
    ValidationReport,
    center,
    centralizer,
    diagonal_algebra,
    dual_hopf,
    field_ext_algebra,
    group_algebra,
    group_hopf,
    matrix_algebra,
    one_dim_algebra,
    self_extension,
    subalgebra_on,
    trivial_extension,
    upper_triangular,
    validate,
)
from .tensors import (
    RelativeTensorPower,
    balanced_pair,
    balanced_power,
    build_power,
    embed_pure,
    mult_at,
)
from .homspaces import (
    BimoduleHomSpace,
    build_hom,
    compose_endo,
    evaluate,
    identity_endo,
)
from .hochschild import (
    Cochain,
    CochainComplex,
    apply_delta,
    build_complex,
    cohomology_dims,
    cup,
    unit_cochain,
    verify_hochschild_dga,
)
from .corings import (
    CoringWithGrouplike,
    D2Certificate,
    build_f2,
    endo_coring,
    hopf_coring,
    smash_check,
    sweedler_coring,
)
from .amitsur import (
    AmitsurComplex,
    OmegaElement,
    amitsur_cohomology,
    build_amitsur,
    grouplike_element,
    omega_product,
    random_omega,
    verify_amitsur_dga,
)
from .isomorphism import IsoWitness, build_fn, verify_main_theorem
from .simplicial import (
    SimplicialComplex,
    gs_compare,
    incidence_extension,
    parse_complex,
    simplicial_cohomology,
)
from .reporting import Check, Report

__all__ = [
    "AmitsurComplex",
    "AxiomError",
    "BimoduleHomSpace",
    "Check",
    "Cochain",
    "CochainComplex",
    "CoringLabError",
    "CoringWithGrouplike",
    "D2Certificate",
    "ElementNotInSpaceError",
    "Extension",
    "FacetParseError",
    "Field",
    "FinDimAlgebra",
    "HopfData",
    "IsoWitness",
    "Matrix",
    "NoD2CertificateError",
    "NotWellDefinedError",
    "OmegaElement",
    "QuotientSpace",
    "RelativeTensorPower",
    "Report",
    "SchemaError",
    "SimplicialComplex",
    "SizeLimitError",
    "Subspace",
    "ValidationReport",
    "amitsur_cohomology",
    "apply_delta",
    "balanced_pair",
    "balanced_power",
    "build_amitsur",
    "build_complex",
    "build_f2",
    "build_fn",
    "build_hom",
    "build_power",
    "center",
    "centralizer",
    "cohomology_dims",
    "compose_endo",
    "cup",
    "diagonal_algebra",
    "dual_hopf",
    "embed_pure",
    "endo_coring",
    "evaluate",
    "field_ext_algebra",
    "group_algebra",
    "group_hopf",
    "grouplike_element",
    "gs_compare",
    "hopf_coring",
    "identity_endo",
    "incidence_extension",
    "induced_map",
    "inverse",
    "kernel_basis",
    "matrix_algebra",
    "mult_at",
    "omega_product",
    "one_dim_algebra",
    "parse_complex",
    "quotient_of",
    "random_omega",
    "row_reduce",
    "self_extension",
    "simplicial_cohomology",
    "smash_check",
    "solve",
    "subalgebra_on",
    "sweedler_coring",
    "trivial_extension",
    "unit_cochain",
    "upper_triangular",
    "validate",
    "verify_amitsur_dga",
    "verify_hochschild_dga",
    "verify_main_theorem",
]
