from stringye.algebra import bipoly_to_json
from stringye.hodge import WeightSystem, euler_characteristic, fermat_hodge, milnor_dimensions, quasi_hom_hodge
from stringye.subcommands.common import emit


def run_fermat(args):
    h = fermat_hodge(args.dim, args.degree)
    emit(args, [str(h)], {"kind": str(h.kind), "hodge": bipoly_to_json(h.poly), "euler": euler_characteristic(h), "text": str(h)})
    return 0


def run_quasihom(args):
    ws = WeightSystem(tuple(args.weights), args.degree)
    h = quasi_hom_hodge(ws)
    document = {
        "kind": str(h.kind),
        "hodge": bipoly_to_json(h.poly),
        "milnor_dimensions": milnor_dimensions(ws),
        "euler": euler_characteristic(h),
        "text": str(h),
    }
    emit(args, [str(h)], document)
    return 0
