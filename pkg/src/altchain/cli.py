"""Command line front end.

Exit codes: 0 success / all checks passed, 1 verification failure,
2 usage or input format error, 3 enumeration budget exceeded.
The generator budget can be overridden with the ALTCHAIN_MAX_GENERATORS
environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import alt_chains, verify
from . import cochain_algebra as ca
from . import integer_homology as ih
from .complex_model import (DEFAULT_GENERATOR_BUDGET, enumerate_generators,
                            load_complex)
from .corpus import CORPUS_NAMES, load_corpus_complex
from .errors import BudgetExceededError, DegreeCapError, FormatError

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _budget() -> int:
    raw = os.environ.get("ALTCHAIN_MAX_GENERATORS")
    if raw is None:
        return DEFAULT_GENERATOR_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise FormatError(f"ALTCHAIN_MAX_GENERATORS={raw!r} is not an integer")


def _presentation(K, max_dim):
    kwargs = {}
    if os.environ.get("ALTCHAIN_MAX_GENERATORS") is not None:
        kwargs["budget"] = _budget()
    return alt_chains.alt_chain_complex(K, max_dim, **kwargs)


def _read_complex(path: str):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}")
    K = load_complex(text)
    if not K.name:
        base = os.path.basename(path)
        K = type(K)(vertex_count=K.vertex_count, facets=K.facets,
                    simplex_set=K.simplex_set,
                    name=base.rsplit(".", 1)[0], vertex_names=K.vertex_names)
    return K


def _read_cochain(path: str, index=None):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON: {exc}")
    return ca.cochain_from_json(data, index)


def _write_output(text: str, path: str | None) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _cmd_homology(args) -> int:
    K = _read_complex(args.complex)
    if args.variant == "simplicial":
        groups = ih.simplicial_homology(K)
        degrees = range(len(groups))
    elif args.variant == "ordered":
        index = enumerate_generators(K, args.max_dim, budget=_budget())
        groups = ih.ordered_homology(index)
        degrees = range(args.max_dim)
    else:
        pres = _presentation(K, args.max_dim)
        groups = ih.homology_presented(pres)
        degrees = range(args.max_dim)
    for n, group in zip(degrees, groups):
        if args.coeff == "Z":
            print(f"H_{n} = {group}")
        else:
            rank = group.free_rank
            label = "0" if rank == 0 else ("Q" if rank == 1 else f"Q^{rank}")
            print(f"H_{n} = {label}")
    return EXIT_OK


def _cmd_cohomology(args) -> int:
    K = _read_complex(args.complex)
    index = enumerate_generators(K, args.max_dim, budget=_budget())
    if args.variant == "alternative":
        dims = [len(K.simplices_of_dim(k)) for k in range(args.max_dim + 1)]
        deltas = [ca.alt_coboundary_matrix(index, k) for k in range(args.max_dim)]
    else:
        dims = [index.count(k) for k in range(args.max_dim + 1)]
        deltas = [ca.coboundary_matrix(index, k) for k in range(args.max_dim)]
    for n, rank in enumerate(ih.cohomology_rational(dims, deltas)):
        label = "0" if rank == 0 else ("Q" if rank == 1 else f"Q^{rank}")
        print(f"H^{n} = {label}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    complexes = []
    if args.corpus:
        for name in CORPUS_NAMES:
            complexes.append((name, load_corpus_complex(name)))
    for path in args.complexes:
        K = _read_complex(path)
        complexes.append((K.name, K))
    if not complexes:
        raise FormatError("verify needs at least one complex "
                          "(pass files or --corpus)")
    report = verify.run_all(complexes, seed=args.seed, cases=args.cases,
                            degree_cap=args.max_dim, budget=_budget())
    sys.stdout.write(report.to_text())
    if args.json is not None:
        _write_output(report.to_json(), args.json)
    return EXIT_OK if report.all_passed else EXIT_VERIFY_FAILED


def _cmd_cup(args) -> int:
    K = _read_complex(args.complex)
    with open(args.alpha) as fh:
        alpha_data = json.load(fh)
    with open(args.beta) as fh:
        beta_data = json.load(fh)
    p = alpha_data.get("degree", 0)
    q = beta_data.get("degree", 0)
    if not isinstance(p, int) or not isinstance(q, int):
        raise FormatError("cochain degrees must be integers")
    max_dim = args.max_dim if args.max_dim is not None else p + q
    index = enumerate_generators(K, max_dim, budget=_budget())
    alpha = ca.cochain_from_json(alpha_data, index)
    beta = ca.cochain_from_json(beta_data, index)
    product = (ca.alt_cup if args.alternative else ca.cup)(index, alpha, beta)
    _write_output(json.dumps(ca.cochain_to_json(product), indent=2) + "\n",
                  args.output)
    return EXIT_OK


def _cmd_residual(args) -> int:
    K = _read_complex(args.complex)
    with open(args.alpha) as fh:
        alpha_data = json.load(fh)
    p = alpha_data.get("degree", 0)
    if not isinstance(p, int):
        raise FormatError("cochain degree must be an integer")
    max_dim = args.max_dim if args.max_dim is not None else 2 * p + 1
    index = enumerate_generators(K, max_dim, budget=_budget())
    alpha = ca.cochain_from_json(alpha_data, index)
    if not ca.is_alternative(alpha):
        print("warning: input cochain is not alternating", file=sys.stderr)
    residual = ca.nonlinear_residual(index, alpha)
    if residual.is_zero():
        print("residual: exactly zero")
    else:
        witness, value = max(residual.values.items(),
                             key=lambda item: (abs(item[1].numerator), item[0]))
        max_num = max(abs(v.numerator) for v in residual.values.values())
        print(f"residual: nonzero on {len(residual.values)} generators; "
              f"max |numerator| = {max_num}")
        print(f"witness: value {value} on generator {list(witness)}")
    _write_output(json.dumps(ca.cochain_to_json(residual), indent=2) + "\n",
                  args.output)
    return EXIT_OK


def _cmd_export_presentation(args) -> int:
    K = _read_complex(args.complex)
    pres = _presentation(K, args.max_dim)
    _write_output(json.dumps(alt_chains.presentation_to_json(pres), indent=2) + "\n",
                  args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="altchain",
        description="Exact alternating chain/cochain computations on finite "
                    "simplicial complexes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("homology", help="integer or rational homology")
    p.add_argument("complex")
    p.add_argument("--max-dim", type=int, default=3)
    p.add_argument("--coeff", choices=["Z", "Q"], default="Z")
    p.add_argument("--variant", choices=["alternative", "ordered", "simplicial"],
                   default="alternative")
    p.set_defaults(run=_cmd_homology)

    p = sub.add_parser("cohomology", help="rational cohomology ranks")
    p.add_argument("complex")
    p.add_argument("--max-dim", type=int, default=3)
    p.add_argument("--variant", choices=["full", "alternative"], default="full")
    p.set_defaults(run=_cmd_cohomology)

    p = sub.add_parser("verify", help="run the full law-verification registry")
    p.add_argument("complexes", nargs="*", metavar="COMPLEX")
    p.add_argument("--corpus", action="store_true",
                   help="include the bundled test complexes")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=200,
                   help="randomized cases per suite and complex")
    p.add_argument("--max-dim", type=int, default=3)
    p.add_argument("--json", metavar="PATH", default=None,
                   help="also write the JSON report ('-' for stdout)")
    p.set_defaults(run=_cmd_verify)

    p = sub.add_parser("cup", help="cup product of two cochain files")
    p.add_argument("complex")
    p.add_argument("alpha")
    p.add_argument("beta")
    p.add_argument("--alternative", action="store_true",
                   help="apply the projector to the product")
    p.add_argument("--max-dim", type=int, default=None)
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(run=_cmd_cup)

    p = sub.add_parser("residual",
                       help="the nonlinear residual: alpha cup_A coboundary(alpha)")
    p.add_argument("complex")
    p.add_argument("alpha")
    p.add_argument("--max-dim", type=int, default=None)
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(run=_cmd_residual)

    p = sub.add_parser("export-presentation",
                       help="generators, boundary and relation matrices of "
                            "the sign-quotient complex")
    p.add_argument("complex")
    p.add_argument("--max-dim", type=int, default=3)
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(run=_cmd_export_presentation)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (FormatError, DegreeCapError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
