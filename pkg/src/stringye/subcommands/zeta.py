from stringye.algebra import stringy_to_json
from stringye.brieskorn import analyze
from stringye.newtonzeta import face_sum_contribution, local_hodge_zeta_diagonal, residue_contribution
from stringye.subcommands.common import emit


def run_zeta(args):
    data = analyze(args.exponents, max_variables=args.settings.max_variables)
    z = local_hodge_zeta_diagonal(data)
    emit(args, [str(z)], {"exponents": list(args.exponents), "terms": z.to_json()})
    return 0


def run_residue(args):
    data = analyze(args.exponents, max_variables=args.settings.max_variables)
    c = residue_contribution(data) if args.via_residue else face_sum_contribution(data)
    emit(args, [str(c)], {"exponents": list(args.exponents), "contribution": stringy_to_json(c)})
    return 0
