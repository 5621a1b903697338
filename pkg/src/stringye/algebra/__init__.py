from stringye.algebra.bipoly import BiPoly, exact_divide
from stringye.algebra.qpoly import QPoly
from stringye.algebra.rational import (
    StringyRational,
    cross_equal,
    dual_transform,
    expand_denominator,
    limit_at_one,
    series_coefficients,
)
from stringye.algebra.text import (
    bipoly_from_json,
    bipoly_to_json,
    format_stringy_rational,
    parse_bipoly,
    parse_stringy_rational,
    read_expression,
    stringy_to_json,
)

__all__ = [
    "BiPoly",
    "QPoly",
    "StringyRational",
    "bipoly_from_json",
    "bipoly_to_json",
    "cross_equal",
    "dual_transform",
    "exact_divide",
    "expand_denominator",
    "format_stringy_rational",
    "limit_at_one",
    "parse_bipoly",
    "parse_stringy_rational",
    "read_expression",
    "series_coefficients",
    "stringy_to_json",
]
