"""Command-line front end.

    stabletwist table --group aut --max-weight 6 --format csv
    stabletwist dim --group out --lambda "[3,3]" --check
    stabletwist plethysm --k 2 --l 3
    stabletwist nu --mu "[2,1]"
    stabletwist mcg --variant closed --lambda "[1,1]" --max-degree 10
    stabletwist selftest
"""

from __future__ import annotations

import argparse
import csv
import enum
import io
import json
import sys

from . import cache
from .errors import ConsistencyError, DomainError, ResourceLimitError
from .mcg import MAX_DEGREE, SurfaceVariant, generator_series
from .partitions import Partition, format_exponent, format_partition, parse_partition
from .stablecohom import (
    MAX_TABLE_WEIGHT,
    MAX_TENSOR_Q,
    GroupFamily,
    SchurOfH,
    Statement,
    build_table,
    dim_schur,
    dim_schur_checked,
    stable_range,
)
from .symfunc import MAX_PLETHYSM_DEGREE, nu, nu_infinity, plethysm_h_h


class OutputFormat(enum.Enum):
    TEXT = "text"
    CSV = "csv"
    JSON = "json"


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _csv(header, rows) -> str:
    # plain header, quoted strings in the data rows
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    csv.writer(buf, lineterminator="\n", quoting=csv.QUOTE_NONNUMERIC).writerows(rows)
    return buf.getvalue().rstrip("\n")


def _partition_arg(text: str) -> Partition:
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _check(cond: bool, message: str):
    if not cond:
        raise ResourceLimitError(message)


# -- renderers ---------------------------------------------------------------

def render_table(table, fmt: OutputFormat) -> str:
    if fmt is OutputFormat.JSON:
        return _dumps([{"partition": format_partition(lam), "dimension": d} for lam, d in table.rows])
    if fmt is OutputFormat.CSV:
        return _csv(["weight", "partition", "dimension"],
                    [[lam.weight, format_partition(lam), d] for lam, d in table.rows])
    # one block per weight: partitions as column headers, dimensions below
    blocks = []
    for w, row in table.by_weight().items():
        heads = [format_exponent(lam) for lam, _ in row]
        widths = [max(len(h), len(str(d))) for h, (_, d) in zip(heads, row)]
        blocks.append("|lambda| = %d\n%s\n%s" % (
            w,
            "  ".join(h.rjust(n) for h, n in zip(heads, widths)),
            "  ".join(str(d).rjust(n) for (_, d), n in zip(row, widths)),
        ))
    return f"# stable dimensions of H^|lambda|({table.group.value}; S_lambda(H))\n" + "\n\n".join(blocks)


def render_expansion(expansion, fmt: OutputFormat) -> str:
    items = [(format_partition(lam), int(c)) for lam, c in expansion.items()]
    if fmt is OutputFormat.JSON:
        return _dumps([{"partition": lam, "coefficient": c} for lam, c in items])
    if fmt is OutputFormat.CSV:
        return _csv(["partition", "coefficient"], items)
    return "\n".join(f"{lam}: {c}" for lam, c in items)


def render_series(series, fmt: OutputFormat) -> str:
    if fmt is OutputFormat.JSON:
        return _dumps(series.to_json())
    if fmt is OutputFormat.CSV:
        return _csv(["degree", "multiplicity"], series.items())
    return "\n".join(f"{d}: {m}" for d, m in series.items())


# -- commands ----------------------------------------------------------------

def cmd_table(args) -> str:
    _check(args.max_weight <= MAX_TABLE_WEIGHT, f"--max-weight must be <= {MAX_TABLE_WEIGHT}")
    return render_table(build_table(GroupFamily(args.group), args.max_weight), OutputFormat(args.format))


def cmd_dim(args) -> str:
    lam = args.lam
    _check(lam.weight <= MAX_TENSOR_Q, f"|lambda| must be <= {MAX_TENSOR_Q}")
    group = GroupFamily(args.group)
    lines = []
    if args.check:
        lines.append(str(dim_schur_checked(group, lam)))
        lines.append("# methods agree (characters, plethysm)")
    else:
        lines.append(str(dim_schur(group, lam)))
    rng = stable_range(group, SchurOfH(lam), Statement.DIAGONAL_IDENTIFIED)
    lines.append(f"# stable range: {rng} (n >= {rng.bound()})")
    return "\n".join(lines)


def cmd_plethysm(args) -> str:
    _check(args.k * args.l <= MAX_PLETHYSM_DEGREE, f"need k*l <= {MAX_PLETHYSM_DEGREE}")
    return render_expansion(plethysm_h_h(args.k, args.l), OutputFormat(args.format))


def cmd_nu(args) -> str:
    if (args.k is None) != (args.l is None):
        raise DomainError("give both --k and --l, or neither for the stable value")
    if args.k is not None:
        _check(args.k * args.l <= MAX_PLETHYSM_DEGREE, f"need k*l <= {MAX_PLETHYSM_DEGREE}")
        return str(nu(args.k, args.l, args.mu))
    _check(args.mu.weight <= MAX_TENSOR_Q, f"|mu| must be <= {MAX_TENSOR_Q}")
    m = nu_infinity(args.mu)
    return f"{m.value}\n# stable from k={m.witnesses[0]}, l={m.witnesses[1]}"


def cmd_mcg(args) -> str:
    _check(args.max_degree <= MAX_DEGREE, f"--max-degree must be <= {MAX_DEGREE}")
    series = generator_series(SurfaceVariant(args.variant), args.lam, args.max_degree)
    return render_series(series, OutputFormat(args.format))


def cmd_selftest(args) -> str | None:
    from .acceptance import run_all

    if not run_all(sys.stdout):
        raise ConsistencyError("some acceptance criteria failed")
    return None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stabletwist",
        description="Stable twisted cohomology of Aut(F_n), Out(F_n) and mapping class groups.")
    sub = parser.add_subparsers(dest="command", required=True)
    formats = [f.value for f in OutputFormat]
    groups = [g.value for g in GroupFamily]

    p = sub.add_parser("table", help="dimension table for all |lambda| <= max-weight")
    p.add_argument("--group", choices=groups, required=True)
    p.add_argument("--max-weight", type=int, required=True)
    p.add_argument("--format", choices=formats, default="text")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("dim", help="a single stable dimension")
    p.add_argument("--group", choices=groups, required=True)
    p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True, metavar="PARTITION")
    p.add_argument("--check", action="store_true", help="compare both methods")
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("plethysm", help="Schur expansion of Sym^k(Sym^l)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--format", choices=formats, default="text")
    p.set_defaults(func=cmd_plethysm)

    p = sub.add_parser("nu", help="multiplicity of S_(kl-|mu|, mu) in Sym^k(Sym^l)")
    p.add_argument("--mu", type=_partition_arg, required=True, metavar="PARTITION")
    p.add_argument("--k", type=int)
    p.add_argument("--l", type=int)
    p.set_defaults(func=cmd_nu)

    p = sub.add_parser("mcg", help="generator degrees for a mapping class group")
    p.add_argument("--variant", choices=[v.value for v in SurfaceVariant], required=True)
    p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True, metavar="PARTITION")
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--format", choices=formats, default="text")
    p.set_defaults(func=cmd_mcg)

    p = sub.add_parser("selftest", help="run the acceptance checks")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cache.load()
    try:
        out = args.func(args)
    except (DomainError, ResourceLimitError, ConsistencyError, ArithmeticError) as exc:
        print(f"stabletwist: error: {exc}", file=sys.stderr)
        return 1
    if out is not None:
        print(out)
    cache.save()
    return 0


if __name__ == "__main__":
    sys.exit(main())
