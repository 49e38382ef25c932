"""Command-line front end.

Exit status is 0 on success, 2 on a usage error (argparse) and 1 when a
library call rejects its arguments.
"""

from __future__ import annotations

import argparse
import csv
import math
import os
import sys
import tempfile
from typing import Optional, Sequence

from . import economy, numeral, tree
from .errors import DomainError

MAX_CLI_RADIX = 4096

#: Range values of the published optimum table, in its row order.
TABLE_ROWS = (("e", math.e), ("10", 10), ("50", 50), ("200", 200), ("500", 500), ("1000", 1000))


class ConvergenceError(RuntimeError):
    pass


def _radix(text: str) -> int:
    try:
        r = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid radix {text!r}")
    if not 2 <= r <= MAX_CLI_RADIX:
        raise argparse.ArgumentTypeError(f"radix must be in [2, {MAX_CLI_RADIX}], got {r}")
    return r


def _target(text: str):
    if text.lower() == "bt":
        return "bt"
    return _radix(text)


def _real(text: str) -> float:
    if text.strip().lower() == "e":
        return math.e
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid number {text!r}")


def _cost(text: str) -> economy.CostModel:
    try:
        return economy.CostModel(text.lower())
    except ValueError:
        raise argparse.ArgumentTypeError(f"cost must be e1 or e2, got {text!r}")


def _cmd_convert(args, out):
    if args.to == "bt":
        out.write(numeral.render(numeral.encode_balanced_ternary(args.value)) + "\n")
    else:
        out.write(numeral.render(numeral.encode(args.value, args.to)) + "\n")


def _cmd_width(args, out):
    out.write(f"{numeral.width_for(args.value, args.to)}\n")


def _cmd_maxval(args, out):
    out.write(f"{numeral.max_value(args.to, args.width)}\n")


def _cmd_balanced(args, out):
    bt = numeral.encode_balanced_ternary(args.value)
    out.write(numeral.render(bt) + "\n")


def _cmd_tree(args, out):
    if args.total is not None:
        out.write(f"{tree.depth_for(args.total, args.node_size)}\n")
        return
    if args.depth is None:
        raise DomainError("tree needs --depth (capacity) or --total (depth)")
    spec = tree.TreeSpec(args.node_size, args.depth)
    out.write(f"{tree.capacity(spec, include_root=args.include_root)}\n")


def write_curve_csv(samples, destination: str) -> None:
    """Write samples as ``r,cost`` CSV; the file appears only once complete."""
    directory = os.path.dirname(os.path.abspath(destination))
    fd, tmp = tempfile.mkstemp(prefix=".curve-", suffix=".csv", dir=directory)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            _write_curve(samples, fh)
        os.replace(tmp, destination)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _write_curve(samples, fh) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(["r", "cost"])
    for s in samples:
        writer.writerow([f"{s.r:.9g}", f"{s.cost:.9g}"])


def _cmd_curve(args, out):
    samples = economy.cost_curve(args.cost, args.upper, args.rmin, args.rmax, args.steps)
    if args.out is None:
        _write_curve(samples, out)
    else:
        write_curve_csv(samples, args.out)


def _cmd_optimize(args, out):
    if args.cost is economy.CostModel.PRODUCT_E1:
        r = economy.e1_optimal_radix()
        line = f"cost=e1 r={r:.4f} (r = e for every C)"
        if args.upper is not None:
            line += f" min_cost={economy.e1_cost(r, args.upper):.6f}"
        out.write(line + "\n")
        return
    if args.upper is None:
        raise DomainError("optimize --cost e2 needs --upper C")
    res = economy.e2_optimal_radix(args.upper, args.tol)
    if not res.converged:
        raise ConvergenceError(f"root finder did not converge for C={args.upper!r}")
    out.write(f"cost=e2 C={args.upper:g} r={res.r:.4f} "
              f"residual={res.residual:.3e} iterations={res.iterations}\n")


def emit_table(tol: float = economy.DEFAULT_TOL) -> str:
    """Optimal sum-cost radix for each row of the published table."""
    lines = [f"{'C':>6}  {'r':>6}"]
    for label, c in TABLE_ROWS:
        res = economy.e2_optimal_radix(c, tol)
        if not res.converged:
            raise ConvergenceError(f"root finder did not converge for C={label}")
        lines.append(f"{label:>6}  {res.r:.4f}")
    return "\n".join(lines) + "\n"


def _cmd_table(args, out):
    out.write(emit_table(args.tol))


def _cmd_compare(args, out):
    n = args.trits
    bits = economy.trit_bit_equivalence(n)
    eff = economy.device_state_efficiency(4, 3)
    out.write(f"trits: {n}\n")
    out.write(f"ternary range: {economy.ternary_range(n)}\n")
    out.write(f"equivalent bits: {bits:.3f} (needs {math.ceil(bits)} bits)\n")
    out.write(f"four-state device efficiency: {eff:.2f} ({(1 - eff) * 100:.0f}% of states unused)\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="radixeconomy",
        description="Positional numerals in any radix and radix-economy analysis.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    p = sub.add_parser("convert", help="encode a decimal integer in another radix")
    p.add_argument("value", type=int, help="decimal integer")
    p.add_argument("--to", type=_target, required=True,
                   help=f"target radix in [2, {MAX_CLI_RADIX}], or 'bt' for balanced ternary")
    p.set_defaults(func=_cmd_convert)

    p = sub.add_parser("width", help="digits needed for a non-negative integer")
    p.add_argument("value", type=int)
    p.add_argument("--to", type=_radix, required=True, help="radix")
    p.set_defaults(func=_cmd_width)

    p = sub.add_parser("maxval", help="largest value with WIDTH+1 digits")
    p.add_argument("--to", type=_radix, required=True, help="radix")
    p.add_argument("--width", type=int, required=True, help="highest power index w (w+1 digits)")
    p.set_defaults(func=_cmd_maxval)

    p = sub.add_parser("balanced", help="balanced ternary form of a signed integer")
    p.add_argument("value", type=int)
    p.set_defaults(func=_cmd_balanced)

    p = sub.add_parser("tree", help="packed-tree capacity, or depth for a total")
    p.add_argument("--node-size", "-m", type=int, required=True, help="items per node (m >= 2)")
    p.add_argument("--depth", "-d", type=int, help="tree depth; prints the capacity")
    p.add_argument("--total", type=int, help="item count including the root; prints the depth")
    p.add_argument("--include-root", action="store_true", help="count the root item in the capacity")
    p.set_defaults(func=_cmd_tree)

    p = sub.add_parser("curve", help="sample a cost curve as CSV")
    p.add_argument("--cost", type=_cost, required=True, help="e1 (r*w) or e2 (r+w)")
    p.add_argument("--upper", type=_real, required=True, help="range C (> 1); 'e' allowed")
    p.add_argument("--rmin", type=_real, default=1.2, help="first radix sample (default 1.2)")
    p.add_argument("--rmax", type=_real, default=6.0, help="last radix sample (default 6)")
    p.add_argument("--steps", type=int, default=480, help="grid intervals (default 480)")
    p.add_argument("--out", help="CSV destination (default: standard output)")
    p.set_defaults(func=_cmd_curve)

    p = sub.add_parser("optimize", help="optimal radix for a cost model")
    p.add_argument("--cost", type=_cost, required=True, help="e1 (r*w) or e2 (r+w)")
    p.add_argument("--upper", type=_real, help="range C (> 1); 'e' allowed; required for e2")
    p.add_argument("--tol", type=_real, default=economy.DEFAULT_TOL,
                   help="residual tolerance (default 1e-10)")
    p.set_defaults(func=_cmd_optimize)

    p = sub.add_parser("table", help="optimal sum-cost radix for C in {e,10,50,200,500,1000}")
    p.add_argument("--tol", type=_real, default=economy.DEFAULT_TOL,
                   help="residual tolerance (default 1e-10)")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("compare", help="ternary word range vs binary bits and device efficiency")
    p.add_argument("--trits", type=int, default=18, help="trits per word (default 18)")
    p.set_defaults(func=_cmd_compare)

    return parser


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        args.func(args, stdout)
    except (DomainError, ConvergenceError, OSError) as exc:
        stderr.write(f"{parser.prog} {args.command}: error: {exc}\n")
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
