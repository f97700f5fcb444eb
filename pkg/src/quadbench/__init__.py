"""Exact-arithmetic workbench for quadratic number fields."""
from .quadfield import QuadraticField, FieldElement, make_field, fundamental_unit, is_irreducible
from .ideals import FractionalIdeal, from_generators, mul, dual, is_principal, class_order
from .classgroup import class_group, s_class_group, minkowski_bound
from .splitting import splitting_type, ramified_set, nonufd_witness
from .capitulation import build_order, extend_ideal, find_capitulation_generator, composite_report
from .cyclotomic import CyclotomicElement, cyclo_poly, gauss_sum, embed_sqrt
from .claims import run_claims, render_report

__version__ = "0.1.0"

__all__ = [
    "QuadraticField", "FieldElement", "make_field", "fundamental_unit", "is_irreducible",
    "FractionalIdeal", "from_generators", "mul", "dual", "is_principal", "class_order",
    "class_group", "s_class_group", "minkowski_bound",
    "splitting_type", "ramified_set", "nonufd_witness",
    "build_order", "extend_ideal", "find_capitulation_generator", "composite_report",
    "CyclotomicElement", "cyclo_poly", "gauss_sum", "embed_sqrt",
    "run_claims", "render_report",
]
