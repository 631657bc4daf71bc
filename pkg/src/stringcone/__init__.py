"""String parametrizations of crystals, string cones, and toric certificates."""

from .cartan import (
    CartanDatum,
    adapted_word,
    all_reduced_words,
    apply_word,
    build_cartan,
    is_dominant,
    is_reduced_word,
    longest_word,
    reflect_weight,
    rho,
    weyl_group_words,
)
from .characters import (
    WeightPolynomial,
    demazure_character,
    demazure_operator,
    dimension_of,
    monomial,
    weyl_character,
    weyl_dim,
)
from .degeneration import (
    DegenerationReport,
    DemazureQuotient,
    SeparatingForm,
    build_pairs,
    degeneration_certificate,
    demazure_quotient,
    lattice_relations,
    report_to_json,
    separating_form,
)
from .errors import (
    DegenerationError,
    EnumerationCapError,
    InvariantViolation,
    PolyhedralError,
    RootSystemError,
    StringConeError,
    UnboundedSectionError,
    WeightError,
    WordError,
)
from .pathcrystal import (
    CrystalGraph,
    PiecewisePath,
    demazure_crystal,
    enumerate_crystal,
    highest_path,
    lowering_operator,
    raising_operator,
)
from .polyhedra import (
    RationalCone,
    SaturationReport,
    conic_hull,
    dualize,
    format_h_rep,
    hilbert_basis,
    is_face,
    parse_h_rep,
    saturation_check,
    section_lattice_points,
)
from .strings import (
    StringVector,
    WeightedPoint,
    demazure_strings,
    dominant_weights,
    string_image,
    string_param,
    string_weight,
    weighted_points,
)

__version__ = "0.1.0"

__all__ = [
    "CartanDatum",
    "CrystalGraph",
    "DegenerationError",
    "DegenerationReport",
    "DemazureQuotient",
    "EnumerationCapError",
    "InvariantViolation",
    "PiecewisePath",
    "PolyhedralError",
    "RationalCone",
    "RootSystemError",
    "SaturationReport",
    "SeparatingForm",
    "StringConeError",
    "StringVector",
    "UnboundedSectionError",
    "WeightError",
    "WeightPolynomial",
    "WeightedPoint",
    "WordError",
    "adapted_word",
    "all_reduced_words",
    "apply_word",
    "build_cartan",
    "build_pairs",
    "conic_hull",
    "degeneration_certificate",
    "demazure_character",
    "demazure_crystal",
    "demazure_operator",
    "demazure_quotient",
    "demazure_strings",
    "dimension_of",
    "dominant_weights",
    "dualize",
    "enumerate_crystal",
    "format_h_rep",
    "highest_path",
    "hilbert_basis",
    "is_dominant",
    "is_face",
    "is_reduced_word",
    "lattice_relations",
    "longest_word",
    "lowering_operator",
    "monomial",
    "parse_h_rep",
    "raising_operator",
    "reflect_weight",
    "report_to_json",
    "rho",
    "saturation_check",
    "section_lattice_points",
    "separating_form",
    "string_image",
    "string_param",
    "string_weight",
    "weighted_points",
    "weyl_character",
    "weyl_dim",
    "weyl_group_words",
]
