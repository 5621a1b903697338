from stringye.algebra import stringy_to_json
from stringye.algebra.text import bipoly_to_json, coefficient_to_json, series_to_json
from stringye.brieskorn import (
    analyze,
    compute_family_s,
    contribution,
    format_family,
    format_subset,
    p_polynomials,
    sign_normal_form,
    subset_order,
)
from stringye.errors import NotCanonical
from stringye.subcommands.common import emit
from stringye.subcommands.expressions import series_lines


def _tuple_text(values) -> str:
    return "(" + ",".join(str(x) for x in values) + ")"


def _family_document(family):
    return {
        "S": [sorted(subset) for subset in family.members],
        "g": {format_subset(subset): g for subset, g in sorted(family.g_values.items(), key=lambda item: subset_order(item[0]))},
    }


def run_brieskorn(args):
    data = analyze(args.exponents, max_variables=args.settings.max_variables)
    if not data.is_canonical:
        raise NotCanonical(f"{_tuple_text(data.exponents)} is not canonical: Sigma - k = {data.excess}")
    family = compute_family_s(data.alpha)
    p_values = p_polynomials(data)
    c = contribution(data)

    lines = [
        f"exponents = {_tuple_text(data.exponents)}",
        f"k = {data.k}",
        f"alpha = {_tuple_text(data.alpha)}",
        f"Sigma = {data.sigma}",
        f"classification = {data.classification}",
        f"S = {format_family(family)}",
    ]
    lines += [f"p_{format_subset(subset)} = {p_values[subset]}" for subset in family.members]
    lines.append(f"contribution = {c}")
    document = {
        "exponents": list(data.exponents),
        "k": data.k,
        "alpha": list(data.alpha),
        "sigma": data.sigma,
        "classification": str(data.classification),
        **_family_document(family),
        "p": {
            format_subset(subset): {
                "text": str(p_values[subset]),
                "coefficients": {str(m): coefficient_to_json(value) for m, value in sorted(p_values[subset].coefficients.items())},
            }
            for subset in family.members
        },
        "contribution": stringy_to_json(c),
    }

    if args.series is not None:
        coefficients = c.series_coefficients(args.series)
        lines += series_lines(coefficients)
        document["series"] = series_to_json(coefficients)

    if args.normal_form:
        form = sign_normal_form(data)
        lines.append(f"normal form = ({form.polynomial}) / ({form.denominator})")
        document["normal_form"] = {
            "polynomial": bipoly_to_json(form.polynomial),
            "denominator": bipoly_to_json(form.denominator.to_bipoly()),
            "text": f"({form.polynomial}) / ({form.denominator})",
        }

    emit(args, lines, document)
    return 0


def run_family_s(args):
    family = compute_family_s(args.alpha, max_variables=args.settings.max_variables)
    emit(args, [f"S = {format_family(family)}"], _family_document(family))
    return 0

