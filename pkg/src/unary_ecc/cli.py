"""``unary-ecc`` command line.

Subcommands: encode, decode, golomb, census, curve, simulate, cc4. Defaults
(ones-then-zero, paper-parity, seed 0, grid step 0.01) reproduce the
published tables with no flags. Exit status is 0 on success, 2 on a usage
error and 1 on a runtime error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence, TextIO

from . import capacity, cc4, codec, decoder
from .bits import Bitstring
from .errors import UnaryEccError

PROG = "unary-ecc"
CODES = ("unary", "thermometer", "space", "golomb")


class UsageError(Exception):
    """Bad command line; carries a one-line diagnostic."""


@dataclass(frozen=True)
class Command:
    name: str
    args: argparse.Namespace


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _policy(text: str) -> decoder.TiePolicy:
    try:
        return decoder.TiePolicy(text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"unknown policy {text!r} (choose from {', '.join(p.value for p in decoder.TiePolicy)})"
        )


def _variant(text: str) -> codec.UnaryVariant:
    try:
        return codec.UnaryVariant(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"unknown variant {text!r} (ones-then-zero or zeros-then-one)")


def _bits(text: str) -> Bitstring:
    try:
        return Bitstring(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog=PROG, description="Unary coding error-correction toolkit.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def code_flags(p):
        p.add_argument("--code", choices=CODES, default="unary")
        p.add_argument("--variant", type=_variant, default=codec.UnaryVariant.ONES_THEN_ZERO)
        p.add_argument("--n", type=int, help="thermometer code length")
        p.add_argument("--slots", type=int, help="space code width")
        p.add_argument("--m", type=int, default=8, help="Golomb group size")

    p = sub.add_parser("encode", help="encode an integer")
    p.add_argument("--value", type=int, required=True)
    code_flags(p)

    p = sub.add_parser("decode", help="decode a bitstring")
    p.add_argument("--bits", type=_bits, required=True)
    code_flags(p)

    p = sub.add_parser("golomb", help="Golomb encode (--value) or decode (--bits)")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--value", type=int)
    group.add_argument("--bits", type=_bits)
    p.add_argument("--m", type=int, default=8)

    p = sub.add_parser("census", help="exhaustive correction census")
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--policy", type=_policy, default=decoder.TiePolicy.PAPER_PARITY)
    p.add_argument("--out", type=Path, help="write CSV here instead of standard output")

    p = sub.add_parser("curve", help="capacity curve as CSV")
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--step", type=float, default=0.01)
    p.add_argument("--out", type=Path)

    p = sub.add_parser("simulate", help="Monte Carlo over the binary symmetric channel")
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--p", type=float, default=0.2)
    p.add_argument("--trials", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--streams", type=int, default=1)
    p.add_argument("--policy", type=_policy, default=decoder.TiePolicy.PAPER_PARITY)

    p = sub.add_parser("cc4", help="train a CC4 network and classify queries")
    p.add_argument("--train", type=Path, required=True, help="file of 'bitstring,label' lines ('-' for stdin)")
    p.add_argument("--r", type=int, default=0)
    p.add_argument("--query", type=_bits, action="append", default=[])
    return parser


def _require(ok: bool, message: str) -> None:
    if not ok:
        raise UsageError(message)


def _validate(name: str, a: argparse.Namespace) -> None:
    if name in ("encode", "decode"):
        _require(a.m >= 1, f"--m must be >= 1, got {a.m}")
        if a.code == "thermometer" and name == "encode":
            _require(a.n is not None and a.n >= 1, "--n (>= 1) is required for the thermometer code")
            _require(0 <= a.value <= a.n, f"--value must lie in [0, {a.n}]")
        elif a.code == "space" and name == "encode":
            _require(a.slots is not None and a.slots >= 1, "--slots (>= 1) is required for the space code")
            _require(1 <= a.value <= a.slots, f"--value must lie in [1, {a.slots}]")
        elif name == "encode":
            _require(a.value >= 0, f"--value must be >= 0, got {a.value}")
    elif name == "golomb":
        _require(a.m >= 1, f"--m must be >= 1, got {a.m}")
        _require(a.value is None or a.value >= 0, f"--value must be >= 0, got {a.value}")
    elif name == "census":
        _require(1 <= a.n <= decoder.MAX_CENSUS_N, f"--n must lie in [1, {decoder.MAX_CENSUS_N}], got {a.n}")
        _require(0 <= a.t <= a.n, f"--t must lie in [0, {a.n}], got {a.t}")
    elif name == "curve":
        _require(a.n >= 1, f"--n must be >= 1, got {a.n}")
        _require(0 < a.step <= 1, f"--step must lie in (0, 1], got {a.step}")
        k = round(1 / a.step)
        _require(abs(k * a.step - 1) < 1e-9, f"--step must divide 1 evenly, got {a.step}")
    elif name == "simulate":
        _require(a.n >= 1, f"--n must be >= 1, got {a.n}")
        _require(0.0 <= a.p <= 1.0, f"--p must lie in [0, 1], got {a.p}")
        _require(a.trials >= 1, f"--trials must be >= 1, got {a.trials}")
        _require(0 <= a.seed < 2**64, f"--seed must be a 64-bit unsigned integer, got {a.seed}")
        _require(a.streams >= 1, f"--streams must be >= 1, got {a.streams}")
    elif name == "cc4":
        _require(a.r >= 0, f"--r must be >= 0, got {a.r}")


def parse_args(argv: Sequence[str]) -> Command:
    args = build_parser().parse_args(list(argv))
    _validate(args.command, args)
    return Command(args.command, args)


def _encode(a) -> str:
    if a.code == "unary":
        return codec.encode_unary(a.value, a.variant)
    if a.code == "thermometer":
        return codec.encode_thermometer(a.value, a.n)
    if a.code == "space":
        return codec.encode_space(a.value, a.slots)
    return codec.encode_golomb(a.value, a.m, a.variant)


def _decode(a) -> int:
    if a.code == "unary":
        return codec.decode_unary(a.bits, a.variant)
    if a.code == "thermometer":
        return codec.decode_thermometer_strict(a.bits)
    if a.code == "space":
        return codec.decode_space(a.bits)
    return codec.decode_golomb(a.bits, a.m, a.variant)


def _emit_csv(text: str, out: Path | None, stdout: TextIO) -> None:
    if out is None:
        stdout.write(text)
    else:
        out.write_text(text)


def _read_training(path: Path) -> list[str]:
    if str(path) == "-":
        return sys.stdin.read().splitlines()
    return path.read_text().splitlines()


def execute(cmd: Command, stdout: TextIO = sys.stdout) -> int:
    a = cmd.args
    if cmd.name == "encode":
        stdout.write(f"{_encode(a)}\n")
    elif cmd.name == "decode":
        stdout.write(f"{_decode(a)}\n")
    elif cmd.name == "golomb":
        if a.value is not None:
            stdout.write(f"{codec.encode_golomb(a.value, a.m)}\n")
        else:
            stdout.write(f"{codec.decode_golomb(a.bits, a.m)}\n")
    elif cmd.name == "census":
        census = decoder.correction_census(a.n, a.t, a.policy)
        stdout.write(decoder.render_census_table(census))
        if a.out is None:
            stdout.write("\n")
        _emit_csv(decoder.census_csv(census), a.out, stdout)
    elif cmd.name == "curve":
        points = capacity.capacity_curve(a.n, capacity.uniform_grid(a.step), capacity.default_double_total(a.n))
        _emit_csv(capacity.curve_csv(points), a.out, stdout)
    elif cmd.name == "simulate":
        report = capacity.monte_carlo_estimate(a.n, a.p, a.trials, a.seed, a.policy, a.streams)
        stdout.write(report.render())
    elif cmd.name == "cc4":
        net = cc4.train(cc4.parse_training_lines(_read_training(a.train)), a.r)
        stdout.write(f"input_len: {net.input_len}\nr: {net.r}\nhidden_units: {len(net.hidden)}\n")
        for h, w in zip(net.hidden, net.output_weights):
            weights = " ".join(f"{x:+d}" for x in h.weights)
            stdout.write(f"  [{weights}] bias={h.bias_weight:+d} out={w:+d}\n")
        for q in a.query:
            stdout.write(f"{q} -> {cc4.predict(net, q)}\n")
    return 0


def main(argv: Sequence[str] | None = None, stdout: TextIO = sys.stdout, stderr: TextIO = sys.stderr) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        cmd = parse_args(argv)
    except UsageError as exc:
        stderr.write(f"{PROG}: usage error: {exc}\n")
        return 2
    try:
        return execute(cmd, stdout)
    except (UnaryEccError, OSError, ValueError) as exc:
        stderr.write(f"{PROG}: error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
