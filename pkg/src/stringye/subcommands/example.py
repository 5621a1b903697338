from stringye.algebra import stringy_to_json
from stringye.algebra.bipoly import format_coefficient
from stringye.algebra.text import coefficient_to_json
from stringye.example import DIMENSION, assemble_example, series_coefficient
from stringye.subcommands.common import emit


def run_example53(args):
    parts = assemble_example()
    e = parts.e_st
    i, j = args.coeff if args.coeff is not None else (3, 3)
    b = series_coefficient(e, i, j)

    document = {"dimension": DIMENSION, "E_st": stringy_to_json(e), "coefficient": {"i": i, "j": j, "value": coefficient_to_json(b)}}
    if args.coeff is not None:
        lines = [format_coefficient(b)]
    else:
        lines = [f"E_st = {e}", f"b_{{{i},{j}}} = {format_coefficient(b)}"]

    if args.parts:
        for name in ("a", "b", "c", "d"):
            value = getattr(parts, name)
            lines.append(f"{name.upper()} = {value}")
            document[name.upper()] = stringy_to_json(value)

    emit(args, lines, document)
    return 0
