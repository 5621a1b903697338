"""Canonical text rendering, parsing and JSON encoding of algebra values.

The rendering is the output contract of the command line:

* ``BiPoly``: terms sorted by total degree then u-degree, descending, e.g.
  ``5*u*v - 4``.
* ``StringyRational``: ``(N) / ((uv)^5 - 1)((uv)^7 - 1) * (uv)^2``; the
  denominator and the shift are omitted when trivial.

Parsing goes through :func:`sympy.parsing.sympy_parser.parse_expr` after the
input has been restricted to the polynomial alphabet.
"""

import re
from fractions import Fraction
from tokenize import TokenError
from typing import Any, Dict, List, Union

import sympy
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations
from sympy.polys.polyerrors import BasePolynomialError

from stringye.algebra.bipoly import BiPoly, format_coefficient
from stringye.algebra.rational import StringyRational
from stringye.errors import MalformedExpression

_U, _V = sympy.symbols("u v")
_ALPHABET = re.compile(r"^[\s0-9uv+\-*/^()]*$")
_FACTOR = r"\(\s*(?:\(\s*uv\s*\)\s*\^\s*\d+|uv)\s*-\s*1\s*\)"
_RATIONAL = re.compile(
    r"^\s*(?P<num>.+?)\s*"
    rf"(?:/\s*(?P<den>(?:{_FACTOR}\s*)+))?"
    r"(?:\*\s*\(\s*uv\s*\)\s*\^\s*(?P<shift>-?\d+)\s*)?$",
    re.DOTALL,
)
_FACTOR_EXPONENT = re.compile(r"\(\s*(?:\(\s*uv\s*\)\s*\^\s*(\d+)|uv)\s*-\s*1\s*\)")


def format_factor(m: int) -> str:
    return "(uv - 1)" if m == 1 else f"((uv)^{m} - 1)"


def format_stringy_rational(value: StringyRational) -> str:
    text = str(value.numerator)
    if not value.denominator and not value.q_shift:
        return text
    text = f"({text})"
    if value.denominator:
        text += " / " + "".join(format_factor(m) for m in value.denominator)
    if value.q_shift:
        text += f" * (uv)^{value.q_shift}"
    return text


def parse_coefficient(value: Union[int, str]) -> Fraction:
    """An integer or a ``"p/q"`` string."""
    if isinstance(value, bool):
        raise MalformedExpression(f"invalid coefficient {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    try:
        return Fraction(str(value).strip())
    except (ValueError, ZeroDivisionError) as err:
        raise MalformedExpression(f"invalid coefficient {value!r}") from err


def parse_bipoly(text: str) -> BiPoly:
    """Parse a polynomial in ``u`` and ``v`` with rational coefficients.

    ``uv`` abbreviates ``(u*v)``; ``^`` and ``**`` both denote powers.

    Raises:
        MalformedExpression: when the text is not such a polynomial.
    """
    if not text or not text.strip():
        raise MalformedExpression("empty polynomial expression")
    if not _ALPHABET.match(text):
        raise MalformedExpression(f"unexpected characters in {text!r}")
    source = text.replace("uv", "(u*v)")
    try:
        expr = parse_expr(
            source,
            local_dict={"u": _U, "v": _V},
            transformations=standard_transformations + (convert_xor,),
        )
        poly = sympy.Poly(sympy.expand(expr), _U, _V, domain="QQ")
    except (TokenError, SyntaxError, TypeError, ValueError, ZeroDivisionError, sympy.SympifyError, BasePolynomialError) as err:
        raise MalformedExpression(f"cannot parse {text!r} as a polynomial in u, v") from err
    terms = {}
    for (i, j), c in poly.terms():
        c = sympy.Rational(c)
        terms[(int(i), int(j))] = Fraction(int(c.p), int(c.q))
    return BiPoly(terms)


def parse_stringy_rational(text: str) -> StringyRational:
    """Inverse of :func:`format_stringy_rational`.

    Raises:
        MalformedExpression: when the text does not have the canonical shape.
    """
    match = _RATIONAL.match(text or "")
    if not match:
        raise MalformedExpression(f"cannot parse {text!r} as a rational function")
    denominator = []
    if match.group("den"):
        denominator = [int(m) if m else 1 for m in _FACTOR_EXPONENT.findall(match.group("den"))]
    q_shift = int(match.group("shift") or 0)
    return StringyRational(parse_bipoly(match.group("num")), denominator, q_shift)


def read_expression(content: str) -> StringyRational:
    """Parse an expression file: ``#`` comment lines and blank lines are skipped."""
    lines = [line for line in content.splitlines() if line.strip() and not line.lstrip().startswith("#")]
    return parse_stringy_rational(" ".join(lines))


def coefficient_to_json(value: Fraction) -> Union[int, str]:
    return value.numerator if value.denominator == 1 else format_coefficient(value)


def bipoly_to_json(poly: BiPoly) -> List[Dict[str, Any]]:
    return [{"i": i, "j": j, "coeff": coefficient_to_json(c)} for (i, j), c in poly.sorted_terms()]


def bipoly_from_json(monomials: List[Dict[str, Any]]) -> BiPoly:
    terms: Dict = {}
    for entry in monomials:
        key = (int(entry["i"]), int(entry["j"]))
        terms[key] = terms.get(key, Fraction(0)) + parse_coefficient(entry["coeff"])
    return BiPoly(terms)


def stringy_to_json(value: StringyRational) -> Dict[str, Any]:
    return {
        "numerator": bipoly_to_json(value.numerator),
        "denominator": list(value.denominator),
        "q_shift": value.q_shift,
        "text": format_stringy_rational(value),
    }


def series_to_json(coefficients: Dict) -> List[Dict[str, Any]]:
    return bipoly_to_json(BiPoly(coefficients))
