"""Command-line surface: decompose, bseries, verify.

Exit codes: 0 success, 1 identity failure, 2 usage error, 3 theta pipeline
requested for an unsupported modulus without --conjecture.  The QSERIES_ORDER
environment variable supplies a default truncation order when --order is
absent.
"""

import argparse
import csv
import json
import os
import sys

from . import identities, multiplicity
from .multiplicity import NonUnitDeterminantError, UnsupportedModulusError
from .young import Partition

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_UNSUPPORTED = 3

IDENTITY_CHOICES = (
    "lemma5.1",
    "lemma5.2",
    "lemma5.3",
    "lemma5.4",
    "theorem5.1",
    "master",
    "triple-product",
    "all",
)

MASTER_DEFAULT_ORDER = 120
LEMMA_DEFAULT_ORDER = 300
TRIPLE_DEFAULT_ORDER = 200
MASTER_DEFAULT_NS = (2, 3, 4, 5, 6, 7)


def _env_order() -> int | None:
    raw = os.environ.get("QSERIES_ORDER")
    if raw is None:
        return None
    try:
        value = int(raw)
    except ValueError as exc:
        print(f"QSERIES_ORDER must be an integer, got {raw!r}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE) from exc
    return value


def _resolve_order(flag_value: int | None, fallback: int) -> int:
    if flag_value is not None:
        return flag_value
    env = _env_order()
    return env if env is not None else fallback


def _partition_to_json(p: Partition) -> list[list[int]]:
    return [[part, mult] for part, mult in p.pairs]


# -- decompose --------------------------------------------------------------


def _cmd_decompose(args) -> int:
    table = multiplicity.multiplicity_table(args.n, args.max_k, args.witness_cap)
    if args.format == "json":
        payload = {
            "n": table.n,
            "max_k": table.max_k,
            "entries": [
                {
                    "i": i,
                    "k": k,
                    "b": entry.count,
                    "witnesses": [_partition_to_json(w) for w in entry.witnesses],
                    **({"witnesses_omitted": entry.omitted} if entry.omitted else {}),
                }
                for (i, k), entry in table.rows()
            ],
        }
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["i", "k", "b", "witnesses"])
        for (i, k), entry in table.rows():
            cell = " ".join(str(w) for w in entry.witnesses)
            if entry.omitted:
                cell = f"{cell} +{entry.omitted} more".strip()
            writer.writerow([i, k, entry.count, cell])
    else:
        print(f"multiplicities for n={table.n}, k up to {table.max_k}")
        for (i, k), entry in table.rows():
            cell = ", ".join(str(w) for w in entry.witnesses)
            if entry.omitted:
                cell = f"{cell}, +{entry.omitted} more" if cell else f"+{entry.omitted} more"
            print(f"  i={i} k={k} b={entry.count:<4d} {cell}")
    return EXIT_OK


# -- bseries ----------------------------------------------------------------


def _series_rows(args, i: int, order: int):
    """Per-component coefficient data; theta errors are captured as text."""
    data: dict[str, object] = {"i": i}
    if args.method in ("comb", "both"):
        data["comb"] = multiplicity.gf_comb(i, args.n, order).coefficient_list()
    if args.method in ("theta", "both"):
        try:
            data["theta"] = multiplicity.gf_theta(
                i, args.n, order, conjecture=args.conjecture
            ).coefficient_list()
        except NonUnitDeterminantError as exc:
            data["theta_error"] = str(exc)
    if "comb" in data and "theta" in data:
        data["equal"] = data["comb"] == data["theta"]
    return data


def _cmd_bseries(args) -> int:
    order = _resolve_order(args.order, 20)
    if order < 1:
        print("order must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    if args.method in ("theta", "both"):
        _, proven = multiplicity.theta_branch(args.n)
        if not proven and not args.conjecture:
            print(
                f"theta pipeline for n={args.n} is conjectural; rerun with --conjecture",
                file=sys.stderr,
            )
            return EXIT_UNSUPPORTED
    components = [args.i] if args.i is not None else list(range(args.n // 2 + 1))
    for i in components:
        if not 0 <= i <= args.n // 2:
            print(f"component index {i} out of range for n={args.n}", file=sys.stderr)
            return EXIT_USAGE
    rows = [_series_rows(args, i, order) for i in components]
    if args.format == "json":
        payload = {
            "n": args.n,
            "order": order,
            "method": args.method,
            "conjecture": args.conjecture,
            "series": rows,
        }
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        header = ["i", "m"] + [m for m in ("comb", "theta") if args.method in (m, "both")]
        writer.writerow(header)
        for data in rows:
            for m in range(order):
                line = [data["i"], m]
                if "comb" in data:
                    line.append(data["comb"][m])
                if "theta" in data:
                    line.append(data["theta"][m])
                elif "theta_error" in data:
                    line.append("error")
                writer.writerow(line)
    else:
        for data in rows:
            i = data["i"]
            if "comb" in data:
                print(f"i={i} comb : " + " ".join(str(c) for c in data["comb"]))
            if "theta" in data:
                print(f"i={i} theta: " + " ".join(str(c) for c in data["theta"]))
            if "theta_error" in data:
                print(f"i={i} theta: unavailable ({data['theta_error']})")
            if "equal" in data:
                verdict = "agree" if data["equal"] else "DISAGREE"
                print(f"i={i} pipelines {verdict} to order {order}")
    return EXIT_OK


# -- verify -----------------------------------------------------------------


def _verify_reports(args) -> list[identities.IdentityReport]:
    selected = args.identity
    reports: list[identities.IdentityReport] = []
    lemma_order = _resolve_order(args.order, LEMMA_DEFAULT_ORDER)
    if selected in ("lemma5.1", "lemma5.2", "lemma5.3", "lemma5.4"):
        reports.append(identities.check_by_name(selected, order=lemma_order))
    elif selected == "all":
        for name in ("lemma5.1", "lemma5.2", "lemma5.3", "lemma5.4"):
            reports.append(identities.check_by_name(name, order=lemma_order))
    if selected in ("theorem5.1", "all"):
        reports.append(identities.check_theorem_5_1(args.max_k))
    if selected in ("master", "all"):
        if selected == "master":
            master_order = args.master_order or _resolve_order(args.order, MASTER_DEFAULT_ORDER)
        else:
            master_order = args.master_order or MASTER_DEFAULT_ORDER
        ns = [args.n] if args.n is not None else list(MASTER_DEFAULT_NS)
        for n in ns:
            reports.append(identities.check_master(n, master_order))
    if selected in ("triple-product", "all"):
        tp_order = _resolve_order(args.order, TRIPLE_DEFAULT_ORDER) if selected != "all" else TRIPLE_DEFAULT_ORDER
        reports.append(identities.check_triple_product(order=tp_order))
    return reports


def _cmd_verify(args) -> int:
    reports = _verify_reports(args)
    payload = {
        "checks": [
            {
                "name": r.name,
                "order": r.order,
                "holds": r.holds,
                "first_discrepancy": None
                if r.first_discrepancy is None
                else {
                    "exponent": r.first_discrepancy[0],
                    "lhs": r.first_discrepancy[1],
                    "rhs": r.first_discrepancy[2],
                },
            }
            for r in reports
        ],
        "all_hold": all(r.holds for r in reports),
    }
    print(json.dumps(payload, indent=2))
    return EXIT_OK if payload["all_hold"] else EXIT_CHECK_FAILED


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcrystal",
        description="Tensor-square decomposition tables, multiplicity series, and identity checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_dec = sub.add_parser("decompose", help="tabulate multiplicities with witness shapes")
    p_dec.add_argument("--n", type=int, required=True, help="modulus, at least 2")
    p_dec.add_argument("--max-k", type=int, default=6, dest="max_k")
    p_dec.add_argument("--format", choices=("json", "csv", "table"), default="table")
    p_dec.add_argument("--witness-cap", type=int, default=None, dest="witness_cap")
    p_dec.set_defaults(func=_cmd_decompose)

    p_bs = sub.add_parser("bseries", help="print multiplicity generating functions")
    p_bs.add_argument("--n", type=int, required=True)
    p_bs.add_argument("--i", type=int, default=None, help="component index; default all")
    p_bs.add_argument("--order", type=int, default=None)
    p_bs.add_argument("--method", choices=("comb", "theta", "both"), default="comb")
    p_bs.add_argument("--conjecture", action="store_true")
    p_bs.add_argument("--format", choices=("json", "csv", "table"), default="table")
    p_bs.set_defaults(func=_cmd_bseries)

    p_ver = sub.add_parser("verify", help="run identity checks, JSON report")
    p_ver.add_argument("--identity", choices=IDENTITY_CHOICES, default="all")
    p_ver.add_argument("--order", type=int, default=None)
    p_ver.add_argument("--master-order", type=int, default=None, dest="master_order")
    p_ver.add_argument("--max-k", type=int, default=30, dest="max_k")
    p_ver.add_argument("--n", type=int, default=None, help="modulus for the master check")
    p_ver.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if hasattr(args, "n") and args.n is not None and args.n < 2:
        parser.error("--n must be at least 2")
    if hasattr(args, "max_k") and args.max_k is not None and args.max_k < 0:
        parser.error("--max-k must be nonnegative")
    for flag in ("order", "master_order"):
        if getattr(args, flag, None) is not None and getattr(args, flag) < 1:
            parser.error(f"--{flag.replace('_', '-')} must be at least 1")
    try:
        return args.func(args)
    except UnsupportedModulusError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_UNSUPPORTED
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
