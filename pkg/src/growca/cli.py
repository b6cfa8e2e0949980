"""Command-line interface.

Subcommands:
  grow      grow a register from a seed and write the final bytes
  encrypt   XOR a file against the keystream for a key
  decrypt   same operation as encrypt (the cipher is an involution)
  analyze   run the randomness battery on a file, emit a JSON report
  render    draw the growth triangle as a binary PGM image

Exit codes: 0 success (and, for analyze, battery passed), 1 battery
failed, 2 usage or validation error. Nothing is written on exit 2.
"""

from __future__ import annotations

import argparse
import base64
import dataclasses
import json
import sys
from typing import Sequence

from .automaton import Seed, grow_to, growth_trace, seed_state
from .cipher import CipherKey, crypt
from .errors import GrowCAError
from .randomness import full_report, get_compressor
from .render import render_growth, write_pgm


def _add_material_options(parser: argparse.ArgumentParser, role: str) -> None:
    """Attach the three mutually exclusive ways of supplying seed/key bytes."""
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument(f"--{role}", help=f"{role} as literal text, encoded as UTF-8")
    group.add_argument(f"--{role}-file", help=f"read the {role} bytes from this file")
    group.add_argument(f"--{role}-hex", help=f"{role} as a hexadecimal string")


def _material_bytes(args: argparse.Namespace, role: str) -> bytes:
    text = getattr(args, role)
    if text is not None:
        # surrogateescape keeps undecodable argv bytes round-trippable
        return text.encode("utf-8", "surrogateescape")
    path = getattr(args, f"{role}_file")
    if path is not None:
        with open(path, "rb") as handle:
            return handle.read()
    return bytes.fromhex(getattr(args, f"{role}_hex"))


def _cmd_grow(args: argparse.Namespace) -> int:
    state = grow_to(seed_state(Seed(_material_bytes(args, "seed"))), args.length)
    with open(args.out, "wb") as handle:
        handle.write(state.cells)
    return 0


def _cmd_crypt(args: argparse.Namespace) -> int:
    key = CipherKey(_material_bytes(args, "key"))
    with open(args.input, "rb") as handle:
        data = handle.read()
    if args.base64 and args.direction == "decrypt":
        data = base64.urlsafe_b64decode(data)
    result = crypt(key, data)
    if args.base64 and args.direction == "encrypt":
        result = base64.urlsafe_b64encode(result)
    with open(args.out, "wb") as handle:
        handle.write(result)
    return 0


def _cmd_analyze(args: argparse.Namespace) -> int:
    compressor = get_compressor(args.compressor)
    with open(args.input, "rb") as handle:
        data = handle.read()
    report = full_report(data, compressor)
    # json.dumps serialises floats via repr: 17 significant digits
    payload = json.dumps(dataclasses.asdict(report), indent=2)
    if args.report is not None:
        with open(args.report, "w", encoding="ascii") as handle:
            handle.write(payload + "\n")
    else:
        print(payload)
    return 0 if report.passed else 1


def _cmd_render(args: argparse.Namespace) -> int:
    trace = growth_trace(Seed(_material_bytes(args, "seed")), args.length)
    image = render_growth(trace)
    write_pgm(image, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="growca",
        description=(
            "Growing-register keystreams: generate, encrypt, analyze, render."
        ),
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    grow = sub.add_parser("grow", help="grow a register and write the final bytes")
    _add_material_options(grow, "seed")
    grow.add_argument("--length", type=int, required=True, help="final register length")
    grow.add_argument("--out", required=True, help="output path for the raw bytes")
    grow.set_defaults(handler=_cmd_grow)

    for name, blurb in (
        ("encrypt", "XOR a file against the keystream for a key"),
        ("decrypt", "inverse of encrypt (identical XOR operation)"),
    ):
        cmd = sub.add_parser(name, help=blurb)
        _add_material_options(cmd, "key")
        cmd.add_argument("--in", dest="input", required=True, help="input file")
        cmd.add_argument("--out", required=True, help="output file")
        cmd.add_argument(
            "--base64",
            action="store_true",
            help="url-safe base64: wrap output when encrypting,"
            " unwrap input when decrypting",
        )
        cmd.set_defaults(handler=_cmd_crypt, direction=name)

    analyze = sub.add_parser("analyze", help="run the randomness battery on a file")
    analyze.add_argument("--in", dest="input", required=True, help="file to analyze")
    analyze.add_argument(
        "--report", help="write the JSON report to this path instead of stdout"
    )
    analyze.add_argument(
        "--compressor",
        default="bzip2-9",
        help="compressor identifier, family-level (default: bzip2-9)",
    )
    analyze.set_defaults(handler=_cmd_analyze)

    render = sub.add_parser("render", help="draw the growth triangle as a binary PGM")
    _add_material_options(render, "seed")
    render.add_argument(
        "--length", type=int, required=True, help="final register length"
    )
    render.add_argument("--out", required=True, help="output PGM path")
    render.set_defaults(handler=_cmd_render)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (GrowCAError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
