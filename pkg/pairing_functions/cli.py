"""Command-line interface.

Examples:
    pairing-functions pair --a 3 --b 2 8 4
    pairing-functions rs --d 3 unpair 4
    pairing-functions curve trace --curve peano3 --count 9 --format svg
    pairing-functions verify shells --target hilbert2 --s max --box 8
    pairing-functions --json pack plan --widths 32,48,64

Integers are accepted in decimal or with a 0x prefix. Exit status is 0 on
success, 1 on a usage error, 2 on a domain error and 3 when a verification
finds a counterexample.
"""

import argparse
import json
import logging
import re
import sys
from dataclasses import dataclass, field, replace
from typing import Any, Callable, Dict, List, Optional, Sequence

from . import packer, proportional, rosenberg_strong, sfc, verify
from .enums import TraceFormat
from .errors import PairingError, UsageError
from .intmath import Point
from .pairing_core import MonotoneSource
from .proportional import Proportions
from .settings import Settings, default_settings

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 3


@dataclass
class OutputRecord:
    """Result of one invocation.

    Plain output prints one value per line, with tuples joined by spaces.
    ``text`` replaces that rendering when set. JSON output is a single object.
    """

    command: str
    values: List[Any] = field(default_factory=list)
    witness: Optional[Dict[str, Any]] = None
    text: Optional[str] = None
    exit_code: int = EXIT_OK

    def to_dict(self) -> Dict[str, Any]:
        result: Dict[str, Any] = {
            "command": self.command,
            "values": [list(v) if isinstance(v, tuple) else v for v in self.values],
        }
        if self.witness is not None:
            result["witness"] = self.witness
        return result

    def to_text(self) -> str:
        if self.text is not None:
            return self.text
        return "\n".join(
            " ".join(str(c) for c in v) if isinstance(v, (tuple, list)) else str(v)
            for v in self.values
        )


class _ArgumentParser(argparse.ArgumentParser):
    """Reports bad arguments as UsageError instead of exiting with status 2."""

    def error(self, message: str) -> Any:
        raise UsageError(message)


def parse_int(text: str) -> int:
    """Decimal or 0x-prefixed hexadecimal integer."""
    body = text.lstrip("+-")
    sign = -1 if text.startswith("-") else 1
    try:
        if body.lower().startswith("0x"):
            return sign * int(body[2:], 16)
        return sign * int(body, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None


def parse_int_list(text: str) -> List[int]:
    """Comma separated integers, e.g. ``32,48,64``."""
    return [parse_int(part.strip()) for part in text.split(",") if part.strip()]


# Targets for verify


def resolve_target(args: argparse.Namespace, settings: Settings) -> verify.TuplerHandle:
    """Build the handle named by ``--target`` (or ``--spec`` for a curve file)."""
    if getattr(args, "spec", None):
        return verify.handle_curve(sfc.load_curve(args.spec))

    target = args.target
    if target is None:
        raise UsageError("--target or --spec is required")

    match = re.fullmatch(r"(rs|tuple)(\d+)", target)
    if match:
        d = int(match.group(2))
        if match.group(1) == "rs":
            return verify.handle_rs(d)
        return verify.handle_tuple_pack(d)
    if target == "pab":
        return verify.handle_pab(Proportions(args.a, args.b))
    if target == "phi-identity":
        g = replace(MonotoneSource.identity(), gallop_cap=settings.gallop_cap)
        return verify.handle_phi(
            g, settings.strictness, settings.contract_sample_bound
        )
    if target in sfc.builtin_names():
        return verify.handle_curve(sfc.builtin(target))

    valid = ["rs<d>", "tuple<d>", "pab", "phi-identity"] + sfc.builtin_names()
    raise UsageError(f"Unknown target {target!r}; valid targets: {', '.join(valid)}")


def _curve(args: argparse.Namespace) -> sfc.CurveSpec:
    if args.spec:
        return sfc.load_curve(args.spec)
    if args.curve:
        return sfc.builtin(args.curve)
    raise UsageError("--curve or --spec is required")


def _plan(args: argparse.Namespace) -> packer.PackPlan:
    if args.plan:
        return packer.plan_from_file(args.plan)
    if args.widths:
        return packer.plan(args.widths)
    raise UsageError("--widths or --plan is required")


def _sampling_range(args: argparse.Namespace) -> None:
    if args.n < 2:
        raise UsageError(f"--n must be at least 2, got {args.n}")
    if args.kmax < 0:
        raise UsageError(f"--kmax must be non-negative, got {args.kmax}")


def _verification_record(
    command: str, result: verify.VerificationResult, text: Optional[str] = None
) -> OutputRecord:
    summary = {
        "passed": result.passed,
        "points_checked": result.points_checked,
        "exhaustive": result.exhaustive,
    }
    witness = None
    if result.counterexample is not None:
        witness = result.counterexample.to_dict()
    return OutputRecord(
        command,
        [summary],
        witness,
        text if text is not None else str(result),
        EXIT_OK if result.passed else EXIT_COUNTEREXAMPLE,
    )


# Command handlers


def cmd_pair(args: argparse.Namespace, settings: Settings) -> OutputRecord:
    p = Proportions(args.a, args.b)
    return OutputRecord("pair", [proportional.pair(p, args.x, args.y)])


def cmd_unpair(args: argparse.Namespace, settings: Settings) -> OutputRecord:
    p = Proportions(args.a, args.b)
    return OutputRecord("unpair", [proportional.unpair_fast(p, args.z)])


def cmd_rs(args: argparse.Namespace, settings: Settings) -> OutputRecord:
    if args.action == "pair":
        if len(args.values) != args.d:
            raise UsageError(f"rs --d {args.d} pair takes {args.d} values")
        return OutputRecord("rs pair", [rosenberg_strong.rs_pair(args.values)])
    if len(args.values) != 1:
        raise UsageError("rs unpair takes exactly one value")
    return OutputRecord(
        "rs unpair", [rosenberg_strong.rs_unpair(args.d, args.values[0])]
    )


def cmd_curve_encode(args: argparse.Namespace, settings: Settings) -> OutputRecord:
    return OutputRecord("curve encode", [sfc.encode(_curve(args), args.coords)])


def cmd_curve_decode(args: argparse.Namespace, settings: Settings) -> OutputRecord:
    return OutputRecord("curve decode", [sfc.decode(_curve(args), args.z)])


def cmd_curve_list(args: argparse.Namespace, settings: Settings) -> OutputRecord:
    return OutputRecord("curve list", list(sfc.builtin_names()))


def render_svg(points: Sequence[Point]) -> str:
    """Polyline through cell centres, unit spacing, origin at the bottom left."""
    width = max(p[0] for p in points) + 1
    height = max(p[1] for p in points) + 1
    coords = " ".join(f"{x + 0.5:g},{height - y - 0.5:g}" for x, y in points)
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width} {height}">\n'
        f'  <polyline fill="none" stroke="black" stroke-width="0.1" '
        f'points="{coords}"/>\n'
        "</svg>"
    )


def cmd_curve_trace(args: argparse.Namespace, settings: Settings) -> OutputRecord:
    spec = _curve(args)
    if args.count < 1:
        raise UsageError(f"--count must be at least 1, got {args.count}")
    points = sfc.trace(spec, args.count)
    fmt = TraceFormat(args.format)
    if fmt == TraceFormat.CSV:
        text = "\n".join(",".join(str(c) for c in p) for p in points)
    elif fmt == TraceFormat.JSON:
        text = json.dumps([list(p) for p in points])
    else:
        if spec.dim != 2:
            raise UsageError(f"SVG traces need a 2-D curve; {spec.name} is 3-D")
        text = render_svg(points)
    return OutputRecord("curve trace", list(points), text=text)


def cmd_verify_perfect(args: argparse.Namespace, settings: Settings) -> OutputRecord:
    _sampling_range(args)
    t = resolve_target(args, settings)
    if args.by_definition:
        result = verify.check_base_n_perfect_by_definition(t, args.n, args.kmax)
    else:
        result = verify.check_base_n_perfect(
            t, args.n, args.kmax, args.budget, args.seed
        )
    return _verification_record("verify perfect", result)


def cmd_verify_proportional(
    args: argparse.Namespace, settings: Settings
) -> OutputRecord:
    _sampling_range(args)
    t = resolve_target(args, settings)
    constants = args.constants or [args.a, args.b]
    if len(constants) != 2:
        raise UsageError(f"--constants takes two values, got {len(constants)}")
    result = verify.check_proportional(
        t, args.n, Proportions(*constants), args.kmax, args.budget, args.seed
    )
    return _verification_record("verify proportional", result)


def _pab_shells(p: Proportions) -> Callable[[Point], int]:
    def shells(point: Point) -> int:
        return proportional.shell(p, point[0], point[1])

    return shells


def cmd_verify_shells(args: argparse.Namespace, settings: Settings) -> OutputRecord:
    t = resolve_target(args, settings)
    box = args.box[0] if len(args.box) == 1 else args.box
    if args.s == "base":
        result = verify.check_base_n_shells(t, args.n, box)
        return _verification_record("verify shells", result)

    shells: Callable[[Point], int] = verify.cubic_shell_number
    if args.s == "pab":
        shells = _pab_shells(Proportions(args.a, args.b))
    result = verify.check_shell_numbering(t, shells, box)

    text = None
    if result.counterexample is not None and args.s == "max":
        n = verify.shell_base_witness(result.counterexample)
        text = f"{result}\n  base-{n} shells fail at the same points"
    return _verification_record("verify shells", result, text)


def cmd_verify_bijection(args: argparse.Namespace, settings: Settings) -> OutputRecord:
    t = resolve_target(args, settings)
    return _verification_record(
        "verify bijection", verify.check_bijection(t, args.zmax)
    )


def cmd_pack_plan(args: argparse.Namespace, settings: Settings) -> OutputRecord:
    key_plan = _plan(args)
    return OutputRecord("pack plan", [key_plan.to_dict()], text=key_plan.to_json_str())


def cmd_pack_encode(args: argparse.Namespace, settings: Settings) -> OutputRecord:
    return OutputRecord("pack encode", [packer.pack(_plan(args), args.values)])


def cmd_pack_decode(args: argparse.Namespace, settings: Settings) -> OutputRecord:
    return OutputRecord("pack decode", [tuple(packer.unpack(_plan(args), args.z))])


# Parser


def _add_target_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--target", help="rs<d>, tuple<d>, pab, phi-identity or a built-in curve"
    )
    parser.add_argument("--spec", help="Curve spec JSON file to use as the target")
    parser.add_argument("--a", type=parse_int, default=1, help="a of p_{a,b}")
    parser.add_argument("--b", type=parse_int, default=1, help="b of p_{a,b}")


def _add_sampling_args(parser: argparse.ArgumentParser, settings: Settings) -> None:
    parser.add_argument("--n", type=parse_int, default=2, help="Base (default: 2)")
    parser.add_argument("--kmax", type=parse_int, default=3, help="Largest k checked")
    parser.add_argument(
        "--budget",
        type=parse_int,
        default=settings.sample_budget,
        help="Largest box scanned exhaustively",
    )
    parser.add_argument(
        "--seed", type=parse_int, default=settings.sample_seed, help="Sampling seed"
    )


def _add_curve_args(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group()
    names = ", ".join(sfc.builtin_names())
    group.add_argument("--curve", help=f"Built-in curve: {names}")
    group.add_argument("--spec", help="Curve spec JSON file")


def _add_plan_args(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument(
        "--widths", type=parse_int_list, help="Field widths, e.g. 32,48,64"
    )
    group.add_argument("--plan", help="Pack plan JSON file")


def build_parser(settings: Optional[Settings] = None) -> argparse.ArgumentParser:
    """Construct the argument parser; sampling defaults come from settings."""
    settings = settings or default_settings()
    parser = _ArgumentParser(
        prog="pairing-functions",
        description="Pairing functions, tupling functions and space-filling curves",
    )
    parser.add_argument("--json", action="store_true", help="Emit one JSON object")
    parser.add_argument("--config", help="Settings JSON file")
    parser.add_argument("--verbose", action="store_true", help="Show verbose output")
    parser.add_argument("--debug", action="store_true", help="Show debug output")
    commands = parser.add_subparsers(dest="command")

    pair = commands.add_parser("pair", help="Encode (x, y) with p_{a,b}")
    pair.add_argument("--a", type=parse_int, default=1)
    pair.add_argument("--b", type=parse_int, default=1)
    pair.add_argument("x", type=parse_int)
    pair.add_argument("y", type=parse_int)
    pair.set_defaults(func=cmd_pair)

    unpair = commands.add_parser("unpair", help="Decode z with p_{a,b}")
    unpair.add_argument("--a", type=parse_int, default=1)
    unpair.add_argument("--b", type=parse_int, default=1)
    unpair.add_argument("z", type=parse_int)
    unpair.set_defaults(func=cmd_unpair)

    rs = commands.add_parser("rs", help="Rosenberg-Strong d-tupling function")
    rs.add_argument("--d", type=parse_int, default=2, help="Dimension (default: 2)")
    rs.add_argument("action", choices=["pair", "unpair"])
    rs.add_argument("values", type=parse_int, nargs="+")
    rs.set_defaults(func=cmd_rs)

    curve = commands.add_parser("curve", help="Permutation-defined curves")
    curve_commands = curve.add_subparsers(dest="curve_command")
    encode = curve_commands.add_parser("encode", help="Point to curve index")
    _add_curve_args(encode)
    encode.add_argument("coords", type=parse_int, nargs="+")
    encode.set_defaults(func=cmd_curve_encode)
    decode = curve_commands.add_parser("decode", help="Curve index to point")
    _add_curve_args(decode)
    decode.add_argument("z", type=parse_int)
    decode.set_defaults(func=cmd_curve_decode)
    trace = curve_commands.add_parser("trace", help="First points of the curve")
    _add_curve_args(trace)
    trace.add_argument("--count", type=parse_int, default=16)
    trace.add_argument(
        "--format", choices=[f.value for f in TraceFormat], default="csv"
    )
    trace.set_defaults(func=cmd_curve_trace)
    curve_list = curve_commands.add_parser("list", help="Built-in curve names")
    curve_list.set_defaults(func=cmd_curve_list)

    check = commands.add_parser("verify", help="Bounded property checks")
    check_commands = check.add_subparsers(dest="verify_command")
    perfect = check_commands.add_parser("perfect", help="Base-n perfect")
    _add_target_args(perfect)
    _add_sampling_args(perfect, settings)
    perfect.add_argument(
        "--by-definition",
        action="store_true",
        help="Enumerate every box n^k for k <= kmax instead of the pointwise test",
    )
    perfect.set_defaults(func=cmd_verify_perfect)
    prop = check_commands.add_parser("proportional", help="Base-n proportional")
    _add_target_args(prop)
    _add_sampling_args(prop, settings)
    prop.add_argument(
        "--constants",
        type=parse_int_list,
        help="Constants of proportionality a,b (default: --a,--b)",
    )
    prop.set_defaults(func=cmd_verify_proportional)
    shells = check_commands.add_parser("shells", help="Shell numbering")
    _add_target_args(shells)
    shells.add_argument(
        "--s",
        choices=["max", "base", "pab"],
        default="max",
        help="max(x), max of base-n lengths, or the p_{a,b} shells",
    )
    shells.add_argument("--n", type=parse_int, default=2, help="Base for --s base")
    shells.add_argument(
        "--box", type=parse_int_list, default=[8], help="Bound per axis, e.g. 8 or 10,9"
    )
    shells.set_defaults(func=cmd_verify_shells)
    bijection = check_commands.add_parser("bijection", help="Round trip for z <= zmax")
    _add_target_args(bijection)
    bijection.add_argument("--zmax", type=parse_int, default=1000)
    bijection.set_defaults(func=cmd_verify_bijection)

    pack = commands.add_parser("pack", help="Bit-budget key packing")
    pack_commands = pack.add_subparsers(dest="pack_command")
    pack_plan = pack_commands.add_parser("plan", help="Show the plan for widths")
    _add_plan_args(pack_plan)
    pack_plan.set_defaults(func=cmd_pack_plan)
    pack_encode = pack_commands.add_parser("encode", help="Pack field values")
    _add_plan_args(pack_encode)
    pack_encode.add_argument("values", type=parse_int, nargs="+")
    pack_encode.set_defaults(func=cmd_pack_encode)
    pack_decode = pack_commands.add_parser("decode", help="Unpack a key")
    _add_plan_args(pack_decode)
    pack_decode.add_argument("z", type=parse_int)
    pack_decode.set_defaults(func=cmd_pack_decode)

    return parser


def _load_settings(argv: Sequence[str]) -> Settings:
    """Read --config ahead of the full parse so it can supply defaults."""
    pre = _ArgumentParser(add_help=False, allow_abbrev=False)
    pre.add_argument("--config")
    known, _ = pre.parse_known_args(argv)
    if known.config:
        return Settings.from_file(known.config)
    return default_settings()


def _configure_logging(args: argparse.Namespace, settings: Settings) -> None:
    if args.debug:
        level: Any = logging.DEBUG
    elif args.verbose:
        level = logging.INFO
    else:
        level = settings.log_level.upper()
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point. Returns the process exit status."""
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        settings = _load_settings(argv)
        parser = build_parser(settings)
        args = parser.parse_args(argv)
        _configure_logging(args, settings)

        if not hasattr(args, "func"):
            parser.print_help(sys.stderr)
            return UsageError.exit_code

        logger.debug(f"Running {args.func.__name__} with {vars(args)}")
        record = args.func(args, settings)
    except PairingError as e:
        print(f"Error: {e}", file=sys.stderr)
        return e.exit_code

    if args.json:
        print(json.dumps(record.to_dict()))
    else:
        print(record.to_text())
    return record.exit_code


if __name__ == "__main__":
    sys.exit(main())
