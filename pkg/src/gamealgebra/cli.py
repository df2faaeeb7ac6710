"""Command-line entry point.

Every command prints one JSON document on stdout. Domain failures exit 1
with ``{"error": kind, "detail": message}``; usage errors exit 2.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Sequence

import numpy as np

from . import __version__, extensions, galois, incidence, interaction, nim, transforms
from .core import MAX_PLAYERS, FormalPolynomial, GameValuation
from .errors import AlgebraError, DomainError
from .formats import (
    dumps,
    encode_complex,
    encode_game,
    encode_matrix,
    encode_real,
    encode_reals,
    encode_vector,
    error_object,
    load_json,
    parse_game,
    parse_matrix,
    parse_vector,
    real_part_if_real,
)

TRANSFORM_KINDS = ("dft", "idft", "parity", "hadamard", "mobius", "zeta")


class _CliIOError(AlgebraError):
    kind = "io"


class _CliJSONError(AlgebraError):
    kind = "json"


def _load(path: str):
    try:
        return load_json(path)
    except json.JSONDecodeError as exc:
        raise _CliJSONError(f"{path}: {exc}") from exc
    except OSError as exc:
        raise _CliIOError(f"{path}: {exc.strerror or exc}") from exc


def _floats(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _dims(text: str) -> tuple[int, int]:
    dims = _ints(text)
    if len(dims) != 2:
        raise argparse.ArgumentTypeError(f"--dims takes two integers, got {text!r}")
    return dims[0], dims[1]


# -- commands -----------------------------------------------------------------

def cmd_transform(args) -> dict:
    game = parse_game(_load(args.game))
    p = args.precision
    if args.kind in ("mobius", "zeta"):
        fn = incidence.mobius_transform if args.kind == "mobius" else incidence.zeta_transform
        out = encode_game(fn(game), p)
        return {"kind": args.kind, **out}
    v = game.values
    if args.kind == "dft":
        out = transforms.dft(v, normalized=args.normalized)
    elif args.kind == "idft":
        out = transforms.idft(v, normalized=args.normalized)
    elif args.kind == "parity":
        out = transforms.parity_transform(v)
        if args.normalized:
            out = out / np.sqrt(len(v))
    else:
        out = transforms.hadamard(v)
    return {"kind": args.kind, "players": game.n, "values": encode_vector(out, p)}


def cmd_galois(args) -> dict:
    game = parse_game(_load(args.game))
    p = args.precision
    gv = galois.galois_transform(game)
    zd = galois.zero_dividends(game)
    return {
        "players": game.n,
        "degree": gv.k,
        "leading": encode_complex(gv.leading, p),
        "g": encode_vector(gv.g, p),
        "zero_dividends": encode_vector(zd.z, p),
        "residuals": encode_reals(zd.residuals, p),
        "zero_normalized": galois.is_zero_normalized(game),
    }


def cmd_nim(args) -> dict:
    piles = args.piles
    move = nim.nim_winning_move(piles)
    return {
        "characteristic": nim.nim_characteristic(piles),
        "winner": nim.nim_winner(piles).value,
        "move": None if move is None else {"pile": move.pile, "new_size": move.new_size},
    }


def _real_game(path: str) -> GameValuation:
    game = parse_game(_load(path))
    if np.iscomplexobj(game.values):
        raise DomainError("this command needs a real-valued game")
    return game


def cmd_mle(args) -> dict:
    game = _real_game(args.game)
    return {"value": encode_real(extensions.multilinear_extension(game, args.t), args.precision)}


def cmd_sugeno(args) -> dict:
    game = _real_game(args.game)
    return {"value": encode_real(extensions.sugeno_integral(game, args.t), args.precision)}


def cmd_expect(args) -> dict:
    game = _real_game(args.game)
    if args.dist:
        pi = parse_vector(_load(args.dist))
        if np.any(pi.imag != 0):
            raise DomainError("a distribution must be real")
        value = extensions.expected_value_distribution(game, pi.real)
    elif args.state:
        value = extensions.expected_value_state(game, parse_vector(_load(args.state)))
    else:
        value = extensions.independent_activity_value(game, args.independent)
    return {"value": encode_real(value, args.precision)}


def cmd_interact(args) -> dict:
    p = args.precision
    if args.action == "lift":
        A = real_part_if_real(parse_matrix(_load(args.matrix)))
        if np.iscomplexobj(A):
            raise DomainError("the lift takes a real interaction matrix")
        return encode_matrix(interaction.hermitian_lift(A), p)
    if args.action == "unlift":
        return encode_matrix(interaction.lift_inverse(parse_matrix(_load(args.matrix))), p)
    if args.action == "spectral":
        dec = interaction.spectral_decompose(parse_matrix(_load(args.matrix)))
        return {
            "eigenvalues": encode_reals(dec.eigenvalues, p),
            "eigenvectors": [encode_vector(u, p) for _, u in dec.pairs],
        }
    if args.action == "measure":
        G = parse_matrix(_load(args.g))
        u = parse_vector(_load(args.u))
        return {"value": encode_real(interaction.heisenberg_measure(G, u), p)}
    if args.action == "value":
        V = parse_matrix(_load(args.v))
        A = parse_matrix(_load(args.a))
        return {"value": encode_real(interaction.game_value(V, A), p)}
    # expand
    M = parse_matrix(_load(args.m))
    A = parse_matrix(_load(args.a))
    routes = interaction.measurement_routes(M, A)
    interaction.measurement_expand(M, A)
    return {k: encode_real(x, p) for k, x in routes._asdict().items()}


def cmd_tensor(args) -> dict:
    f = parse_vector(_load(args.a))
    g = parse_vector(_load(args.b))
    h = interaction.tensor_product(
        FormalPolynomial.from_dense(f), FormalPolynomial.from_dense(g)
    )
    return {"dims": [len(f), len(g)], "values": encode_vector(h.to_dense(), args.precision)}


def cmd_entangle(args) -> dict:
    h = parse_vector(_load(args.state))
    test = interaction.is_product_state(h, args.dims)
    p = args.precision
    factors = None
    if test.factors is not None:
        f, g = test.factors
        factors = {
            "f": encode_vector(f.to_dense(args.dims[0]), p),
            "g": encode_vector(g.to_dense(args.dims[1]), p),
        }
    return {"product": test.is_product, "max_minor": encode_real(test.max_minor, p), "factors": factors}


def cmd_info(args) -> dict:
    return {
        "name": "gamealgebra",
        "version": __version__,
        "max_players": MAX_PLAYERS,
        "index_convention": "bit i-1 of s is set iff player i is in coalition s",
        "dft_kernel": "exp(+2 pi i j k / m)",
        "commands": sorted(COMMANDS),
        "transform_kinds": list(TRANSFORM_KINDS),
    }


COMMANDS: dict[str, Callable] = {
    "transform": cmd_transform,
    "galois": cmd_galois,
    "nim": cmd_nim,
    "mle": cmd_mle,
    "sugeno": cmd_sugeno,
    "expect": cmd_expect,
    "interact": cmd_interact,
    "tensor": cmd_tensor,
    "entangle": cmd_entangle,
    "info": cmd_info,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--precision", type=int, default=12, help="decimal digits in output (default 12)")

    parser = argparse.ArgumentParser(prog="gamealgebra", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("transform", parents=[common], help="linear transforms of a game file")
    s.add_argument("--kind", required=True, choices=TRANSFORM_KINDS)
    s.add_argument("--normalized", action="store_true", help="1/sqrt(m) scaling for dft/idft/parity")
    s.add_argument("game")

    s = sub.add_parser("galois", parents=[common], help="Galois transform and zero-dividends")
    s.add_argument("game")

    s = sub.add_parser("nim", parents=[common], help="Nim analysis")
    s.add_argument("action", choices=["analyze"])
    s.add_argument("piles", type=_ints, help="comma-separated pile sizes, e.g. 1,2,3")

    for name, helptext in (("mle", "Owen multilinear extension"), ("sugeno", "Sugeno integral")):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("game")
        s.add_argument("--t", type=_floats, required=True, help="comma-separated player parameters")

    s = sub.add_parser("expect", parents=[common], help="expected value of a game")
    s.add_argument("game")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--dist", help="vector file with a distribution over coalitions")
    g.add_argument("--state", help="vector file with a unit-norm activity state")
    g.add_argument("--independent", type=_floats, help="comma-separated activity probabilities")

    s = sub.add_parser("interact", parents=[common], help="interaction games and measurements")
    isub = s.add_subparsers(dest="action", required=True)
    for action in ("lift", "unlift", "spectral"):
        a = isub.add_parser(action, parents=[common])
        a.add_argument("matrix")
    a = isub.add_parser("measure", parents=[common])
    a.add_argument("--g", required=True, help="self-adjoint matrix file")
    a.add_argument("--u", required=True, help="state vector file")
    a = isub.add_parser("value", parents=[common])
    a.add_argument("--v", required=True, help="interaction game matrix file")
    a.add_argument("--a", required=True, help="interaction instance matrix file")
    a = isub.add_parser("expand", parents=[common])
    a.add_argument("--m", required=True, help="measurement matrix file")
    a.add_argument("--a", required=True, help="interaction instance matrix file")

    s = sub.add_parser("tensor", parents=[common], help="tensor product of two vectors")
    s.add_argument("--a", required=True)
    s.add_argument("--b", required=True)

    s = sub.add_parser("entangle", parents=[common], help="product-state test")
    s.add_argument("state")
    s.add_argument("--dims", type=_dims, required=True, help="|X|,|Y|")

    sub.add_parser("info", parents=[common], help="library conventions")
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = COMMANDS[args.command](args)
    except AlgebraError as exc:
        print(dumps(error_object(exc)))
        print(f"gamealgebra: {exc.kind}: {exc}", file=sys.stderr)
        return 1
    print(dumps(result))
    return 0


def main() -> None:
    sys.exit(run())
