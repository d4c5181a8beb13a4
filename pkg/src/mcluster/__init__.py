"""Coloured quiver mutation and the polygon model of higher cluster combinatorics."""

from .quiver import (
    ColouredQuiver,
    InvalidQuiverError,
    PlainQuiver,
    QuiverError,
    UnknownVertexError,
    ValidityReport,
    fz_mutate,
    gabriel_quiver,
    mutate_formula,
    mutate_procedural,
    seed_from_acyclic,
    validate,
)
from .mutclass import (
    GraphClass,
    MutationClass,
    canonical_form,
    canonical_key,
    classify_graph,
    dynkin_plain_quiver,
    enumerate_class,
    gabriel_images,
    is_finite_class,
    load_class,
    plain_canonical_key,
    quiver_from_key,
    save_class,
)
from .polygon import (
    Angulation,
    FacetReport,
    Polygon,
    PolygonError,
    TranslationQuiver,
    coloured_quiver_of_angulation,
    diagonal_label,
    exchange_path,
    fan_quiver,
    fuss_catalan,
    label_to_diagonal,
    quiver_of_angulation,
)

__version__ = "0.1.0"

__all__ = [
    "Angulation",
    "ColouredQuiver",
    "FacetReport",
    "GraphClass",
    "InvalidQuiverError",
    "MutationClass",
    "PlainQuiver",
    "Polygon",
    "PolygonError",
    "QuiverError",
    "TranslationQuiver",
    "UnknownVertexError",
    "ValidityReport",
    "canonical_form",
    "canonical_key",
    "classify_graph",
    "coloured_quiver_of_angulation",
    "diagonal_label",
    "dynkin_plain_quiver",
    "enumerate_class",
    "exchange_path",
    "fan_quiver",
    "fuss_catalan",
    "fz_mutate",
    "gabriel_images",
    "gabriel_quiver",
    "is_finite_class",
    "label_to_diagonal",
    "load_class",
    "mutate_formula",
    "mutate_procedural",
    "plain_canonical_key",
    "quiver_from_key",
    "quiver_of_angulation",
    "save_class",
    "seed_from_acyclic",
    "validate",
]
