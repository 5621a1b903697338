"""
Module that contains the command line app.

Why does this file exist, and why not put this in __main__?

  Importing from __main__ would execute the module twice: once as the
  ``python -m stringye`` script and once as ``stringye.__main__``.
"""

import argparse
from pathlib import Path

from .fixtures import fixture_names
from .subcommands.brieskorn import run_brieskorn, run_family_s
from .subcommands.common import int_list, int_pair, nonnegative_int, run_subcommand
from .subcommands.example import run_example53
from .subcommands.expressions import run_series, run_verify
from .subcommands.hodge import run_fermat, run_quasihom
from .subcommands.resolution import run_resolution
from .subcommands.zeta import run_residue, run_zeta

common = argparse.ArgumentParser(add_help=False)
common.add_argument("--json", action="store_true", help="Print a JSON document instead of text.")
common.add_argument("--env", metavar="ENV", required=False, help="Environment file to load.")
common.add_argument("--config", metavar="CONFIG", required=False, help="Path to the YAML configuration file.")
common.add_argument(
    "--log-level",
    metavar="LOG_LEVEL",
    choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
    help="Overrides logging.level of the configuration.",
)

parser = argparse.ArgumentParser(
    description="stringye computes stringy E-functions of Brieskorn singularities, Hodge-Deligne polynomials "
    "and stringy E-functions from resolution data, in exact arithmetic."
)
subparsers = parser.add_subparsers(dest="command", required=True, help="sub-command help")

brieskorn_parser = subparsers.add_parser(
    "brieskorn", parents=[common], help="Contribution of the singularity x_1^a_1 + ... + x_d^a_d = 0."
)
brieskorn_parser.add_argument(
    "--exponents", metavar="EXPONENTS", type=int_list, required=True, help="Comma-separated exponents a_i >= 2."
)
brieskorn_parser.add_argument(
    "--series", metavar="N", type=nonnegative_int, help="Also print the power series coefficients up to total degree N."
)
brieskorn_parser.add_argument(
    "--normal-form", action="store_true", help="Also print the sign normal form P / (1 + q + ... + q^(Sigma - k - 1))."
)
brieskorn_parser.set_defaults(func=run_brieskorn)

family_parser = subparsers.add_parser("family-s", parents=[common], help="The subset family S of a tuple alpha.")
family_parser.add_argument("--alpha", metavar="ALPHA", type=int_list, required=True, help="Comma-separated alpha_i.")
family_parser.set_defaults(func=run_family_s)

fermat_parser = subparsers.add_parser("fermat", parents=[common], help="Hodge-Deligne polynomial of a Fermat hypersurface.")
fermat_parser.add_argument("--dim", metavar="DIM", type=int, required=True, help="Dimension of the hypersurface.")
fermat_parser.add_argument("--degree", metavar="DEGREE", type=int, required=True, help="Degree of the hypersurface.")
fermat_parser.set_defaults(func=run_fermat)

quasihom_parser = subparsers.add_parser(
    "quasihom", parents=[common], help="Hodge-Deligne polynomial of a smooth affine quasi-homogeneous hypersurface."
)
quasihom_parser.add_argument("--weights", metavar="WEIGHTS", type=int_list, required=True, help="Comma-separated weights.")
quasihom_parser.add_argument("--degree", metavar="DEGREE", type=int, required=True, help="Weighted degree.")
quasihom_parser.set_defaults(func=run_quasihom)

zeta_parser = subparsers.add_parser("zeta", parents=[common], help="Local Hodge zeta function of a diagonal polynomial.")
zeta_parser.add_argument("--exponents", metavar="EXPONENTS", type=int_list, required=True, help="Comma-separated exponents.")
zeta_parser.set_defaults(func=run_zeta)

residue_parser = subparsers.add_parser(
    "residue", parents=[common], help="Singularity contribution from the Newton polyhedron."
)
residue_parser.add_argument("--exponents", metavar="EXPONENTS", type=int_list, required=True, help="Comma-separated exponents.")
residue_parser.add_argument(
    "--via-residue", action="store_true", help="Take the residue of the local zeta function at T = uv."
)
residue_parser.set_defaults(func=run_residue)

resolution_parser = subparsers.add_parser("resolution", parents=[common], help="Evaluate log resolution data.")
source = resolution_parser.add_mutually_exclusive_group(required=True)
source.add_argument("--input", metavar="INPUT", type=Path, help="Path to a JSON or YAML resolution file.")
source.add_argument("--fixture", metavar="FIXTURE", choices=fixture_names(), help="A bundled resolution file.")
resolution_parser.add_argument("--contribution", action="store_true", help="Print only the stringy value.")
resolution_parser.add_argument("--euler", action="store_true", help="Also print the stringy Euler number.")
resolution_parser.add_argument("--closed", action="store_true", help="Also print the closed strata.")
resolution_parser.set_defaults(func=run_resolution)

series_parser = subparsers.add_parser("series", parents=[common], help="Power series coefficients of an expression file.")
series_parser.add_argument("--input", metavar="INPUT", type=Path, required=True, help="Path to an expression file.")
series_parser.add_argument(
    "--max-degree", metavar="N", type=nonnegative_int, help="Highest total degree; defaults to series.default_max_degree."
)
series_parser.set_defaults(func=run_series)

verify_parser = subparsers.add_parser(
    "verify", parents=[common], help="Check duality and E(0,0) = 1 for an expression file."
)
verify_parser.add_argument("--input", metavar="INPUT", type=Path, required=True, help="Path to an expression file.")
verify_parser.add_argument("--dim", metavar="DIM", type=nonnegative_int, required=True, help="Dimension of the variety.")
verify_parser.set_defaults(func=run_verify)

example_parser = subparsers.add_parser(
    "example53", parents=[common], help="Assemble the six-dimensional example E_st = A + 5B + C + D."
)
example_parser.add_argument(
    "--coeff", metavar="I,J", type=int_pair, help="Print only the series coefficient of u^I v^J."
)
example_parser.add_argument("--parts", action="store_true", help="Also print A, B, C and D.")
example_parser.set_defaults(func=run_example53)


def run(args=None):
    args = parser.parse_args(args=args)
    parser.exit(run_subcommand(args))
