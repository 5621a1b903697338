from typing import Dict, List

from stringye.algebra import BiPoly
from stringye.algebra.bipoly import format_coefficient
from stringye.algebra.text import coefficient_to_json, series_to_json
from stringye.readers import load_expression
from stringye.resolution import verify_projective_properties
from stringye.subcommands.common import emit


def series_lines(coefficients: Dict) -> List[str]:
    return [f"b_{{{i},{j}}} = {format_coefficient(c)}" for (i, j), c in BiPoly(coefficients).sorted_terms()]


def run_series(args):
    expression = load_expression(args.input)
    max_degree = args.max_degree if args.max_degree is not None else args.settings.default_max_degree
    coefficients = expression.series_coefficients(max_degree)
    emit(args, series_lines(coefficients), {"max_degree": max_degree, "coefficients": series_to_json(coefficients)})
    return 0


def _passfail(value: bool) -> str:
    return "pass" if value else "fail"


def run_verify(args):
    expression = load_expression(args.input)
    report = verify_projective_properties(expression, args.dim)
    constant = "undefined" if report.constant_term is None else format_coefficient(report.constant_term)
    lines = [
        f"duality (d = {args.dim}): {_passfail(report.duality)}",
        f"constant term {constant}: {_passfail(report.constant_term_is_one)}",
    ]
    document = {
        "dimension": args.dim,
        "duality": report.duality,
        "constant_term": None if report.constant_term is None else coefficient_to_json(report.constant_term),
        "constant_term_is_one": report.constant_term_is_one,
    }
    if report.stringy_hodge_numbers is not None:
        numbers = sorted(report.stringy_hodge_numbers.items(), key=lambda item: (item[0][0] + item[0][1], item[0][0]), reverse=True)
        lines += [f"h_st^{{{p},{q}}} = {h}" for (p, q), h in numbers]
        document["stringy_hodge_numbers"] = [{"p": p, "q": q, "h": h} for (p, q), h in numbers]
    emit(args, lines, document)
    return 0
