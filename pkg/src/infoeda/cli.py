"""Command-line front end: analysis subcommands, reports, bundle export, serve mode."""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

from . import binning, class_distance, metrics
from ._version import VERSION
from .bundle import analyze, binned_variable
from .dataset import CONTINUOUS, DatasetError, load_table
from .diagram import STRUCTURED, VECTOR_IMAGE, VidThresholds, export_vid
from .reporting import CSV, DEFAULT_TOP_PER_ARITY, TEXT, generate_report, ranking_rows, render_table
from .server import make_server


def _add_input_args(sub, with_class=False, class_required=False):
    sub.add_argument("file", help="CSV file with a header row")
    sub.add_argument("--categorical", default=None,
                     help="comma-separated names of categorical columns")
    if with_class:
        sub.add_argument("--class", dest="class_column", required=class_required,
                         default=None, help="name of the class column")


def _add_m_arg(sub):
    sub.add_argument("--m", type=float, default=binning.DEFAULT_M,
                     help="information-content divisor M (default 2)")


def _add_threshold_args(sub):
    sub.add_argument("--strong", type=float, default=0.25)
    sub.add_argument("--weak-low", type=float, default=0.04)
    sub.add_argument("--weak-high", type=float, default=0.10)


def _load(args):
    categorical = args.categorical.split(",") if args.categorical else None
    return load_table(args.file, class_column=getattr(args, "class_column", None),
                      categorical=categorical)


def _thresholds(args) -> VidThresholds:
    return VidThresholds(strong=args.strong, weak_low=args.weak_low,
                         weak_high=args.weak_high)


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text, encoding="utf-8")
        print(f"wrote {out}")
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="infoeda",
        description="Information-theoretic exploratory analysis of tabular data",
    )
    parser.add_argument("--version", action="version", version=f"infoeda {VERSION}")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("bin", help="entropy-calibrated histogram of one variable")
    _add_input_args(p)
    p.add_argument("--var", required=True)
    _add_m_arg(p)
    p.add_argument("--scan", action="store_true",
                   help="also print the scaled cost over M in [1, 6] (plot-ready)")
    p.add_argument("--scan-step", type=float, default=0.25)
    p.add_argument("--out", default=None, help="write the cost scan to a file")

    p = subs.add_parser("entropy", help="differential entropy of a continuous variable")
    _add_input_args(p)
    p.add_argument("--var", required=True)

    p = subs.add_parser("si", help="similarity index between two variables")
    _add_input_args(p, with_class=True)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    _add_m_arg(p)

    p = subs.add_parser("ii", help="3-way interaction information")
    _add_input_args(p, with_class=True)
    p.add_argument("--vars", nargs=3, required=True, metavar=("A", "B", "C"))
    _add_m_arg(p)

    p = subs.add_parser("cdi", help="class distance over a variable subset")
    _add_input_args(p, with_class=True, class_required=True)
    p.add_argument("--vars", nargs="+", required=True)

    p = subs.add_parser("rank", help="rank variable subsets by CDR")
    _add_input_args(p, with_class=True, class_required=True)
    p.add_argument("--max-size", type=int, default=2)
    p.add_argument("--strategy", choices=[class_distance.EXHAUSTIVE, class_distance.GREEDY],
                   default=class_distance.EXHAUSTIVE)
    _add_m_arg(p)
    p.add_argument("--format", choices=[TEXT, CSV], default=TEXT)
    p.add_argument("--out", default=None)

    p = subs.add_parser("vid", help="variable interaction diagram")
    _add_input_args(p, with_class=True, class_required=True)
    _add_m_arg(p)
    _add_threshold_args(p)
    p.add_argument("--format", choices=[STRUCTURED, VECTOR_IMAGE], default=STRUCTURED)
    p.add_argument("--out", default=None)

    p = subs.add_parser("report", help="summary report: SI, CDI, CDR, false-alarm bound")
    _add_input_args(p, with_class=True, class_required=True)
    p.add_argument("--max-size", type=int, default=2)
    p.add_argument("--strategy", choices=[class_distance.EXHAUSTIVE, class_distance.GREEDY],
                   default=class_distance.EXHAUSTIVE)
    p.add_argument("--top", type=int, default=DEFAULT_TOP_PER_ARITY,
                   help="ranked subsets shown per arity above 1")
    _add_m_arg(p)
    p.add_argument("--format", choices=[TEXT, CSV], default=TEXT)
    p.add_argument("--out", default=None)

    p = subs.add_parser("export", help="write the analysis bundle document")
    _add_input_args(p, with_class=True, class_required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--max-size", type=int, default=1)
    p.add_argument("--strategy", choices=[class_distance.EXHAUSTIVE, class_distance.GREEDY],
                   default=class_distance.EXHAUSTIVE)
    _add_m_arg(p)

    p = subs.add_parser("serve", help="local service for the explorer UI")
    _add_input_args(p, with_class=True, class_required=True)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8760)
    p.add_argument("--max-size", type=int, default=1)
    p.add_argument("--strategy", choices=[class_distance.EXHAUSTIVE, class_distance.GREEDY],
                   default=class_distance.EXHAUSTIVE)
    _add_m_arg(p)
    p.add_argument("--ui", default=None, help="directory of explorer files to serve at /")

    return parser


def cmd_bin(args) -> int:
    dataset = _load(args)
    meta = dataset.variable(args.var)
    values = dataset.column(args.var)
    if meta.kind != CONTINUOUS:
        binned = binned_variable(dataset, args.var, args.m)
        h = metrics.joint_entropy(binned)
        print(f"{args.var}: categorical, {binned.alphabet_size} levels, "
              f"discrete entropy H = {h:.2f} bits (n = {binned.n})")
        return 0
    est = binning.differential_entropy(values)
    hist = binning.build_histogram(values, args.m)
    h_disc = metrics.discrete_entropy(hist.counts)
    print(f"{args.var}: n = {hist.n}, M = {args.m:g}")
    print(f"differential entropy h = {est.h_bits:.4f} bits")
    print(f"bin width = {hist.width:.6g}, bins = {hist.n_bins}, origin = {hist.origin:.6g}")
    print(f"discrete entropy H = {h_disc:.2f} bits "
          f"(calibration target (1/M) log2 n = {math.log2(hist.n) / args.m:.2f})")
    if args.scan:
        scan = binning.cost_scan(values, binning.default_m_grid(args.scan_step))
        table = "M\tscaled_cost\n" + "".join(f"{m:g}\t{c:.6g}\n" for m, c in scan)
        if args.out:
            Path(args.out).write_text(table, encoding="utf-8")
            print(f"wrote {args.out}")
        else:
            print(table, end="")
    return 0


def cmd_entropy(args) -> int:
    dataset = _load(args)
    meta = dataset.variable(args.var)
    if meta.kind != CONTINUOUS:
        raise DatasetError(f"{args.var!r} is categorical; differential entropy "
                           "applies to continuous variables")
    est = binning.differential_entropy(dataset.column(args.var))
    print(f"{args.var}: differential entropy h = {est.h_bits:.4f} bits (n = {est.n})")
    return 0


def cmd_si(args) -> int:
    dataset = _load(args)
    x = binned_variable(dataset, args.x, args.m)
    y = binned_variable(dataset, args.y, args.m)
    hx, hy = metrics.joint_entropy(x), metrics.joint_entropy(y)
    mi = metrics.mutual_information(x, y)
    si = metrics.similarity_index(x, y)
    print(f"H({args.x}) = {hx:.2f} bits, H({args.y}) = {hy:.2f} bits")
    print(f"I({args.x}, {args.y}) = {mi:.4f} bits")
    print(f"SI({args.x}, {args.y}) = {si:.2f}")
    return 0


def cmd_ii(args) -> int:
    dataset = _load(args)
    a, b, c = (binned_variable(dataset, name, args.m) for name in args.vars)
    ii = metrics.interaction_information(a, b, c)
    kind = "redundant" if ii > 0 else ("synergistic" if ii < 0 else "neutral")
    print(f"II({', '.join(args.vars)}) = {ii:+.4f} bits ({kind})")
    return 0


def cmd_cdi(args) -> int:
    dataset = _load(args)
    result = class_distance.evaluate_subset(dataset, args.vars)
    part = dataset.partition_by_class()
    l1, l2 = part.labels
    print(f"subset: {'/'.join(result.subset)}  (n_{l1} = {result.n1}, n_{l2} = {result.n2})")
    print(f"CDI({l1} -> {l2}) = {result.cdi_12:.2f} bits")
    print(f"CDI({l2} -> {l1}) = {result.cdi_21:.2f} bits")
    print(f"CDR = {result.cdr:.2f} bits, false-alarm bound = "
          f"{class_distance.false_alarm_bound(result.cdr):.3f}")
    return 0


def cmd_rank(args) -> int:
    dataset = _load(args)
    bundle = analyze(dataset, m=args.m, max_size=args.max_size, strategy=args.strategy)
    header, rows = ranking_rows(bundle, top_per_arity=None, include_bound=False)
    _emit(render_table(header, rows, fmt=args.format), args.out)
    return 0


def cmd_vid(args) -> int:
    dataset = _load(args)
    bundle = analyze(dataset, m=args.m, max_size=1, thresholds=_thresholds(args))
    payload = export_vid(bundle.vid, format=args.format)
    if args.out:
        Path(args.out).write_bytes(payload)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(payload.decode("utf-8"))
    return 0


def cmd_report(args) -> int:
    dataset = _load(args)
    bundle = analyze(dataset, m=args.m, max_size=args.max_size, strategy=args.strategy)
    _emit(generate_report(bundle, fmt=args.format, top_per_arity=args.top), args.out)
    return 0


def cmd_export(args) -> int:
    dataset = _load(args)
    bundle = analyze(dataset, m=args.m, max_size=args.max_size, strategy=args.strategy)
    bundle.write(args.out)
    print(f"wrote {args.out} ({dataset.n_rows} rows, "
          f"{len(bundle.ranking.entries)} ranked subsets)")
    return 0


def cmd_serve(args) -> int:
    dataset = _load(args)
    ui_dir = Path(args.ui).resolve() if args.ui else None
    if ui_dir is not None and not ui_dir.is_dir():
        raise DatasetError(f"--ui directory {ui_dir} does not exist")
    server = make_server(dataset, host=args.host, port=args.port, m=args.m,
                         max_size=args.max_size, strategy=args.strategy, ui_dir=ui_dir)
    host, port = server.server_address[:2]
    print(f"serving {args.file} at http://{host}:{port} "
          f"(endpoints: /bundle, /recompute, /health; Ctrl-C to stop)")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return 0


_COMMANDS = {
    "bin": cmd_bin,
    "entropy": cmd_entropy,
    "si": cmd_si,
    "ii": cmd_ii,
    "cdi": cmd_cdi,
    "rank": cmd_rank,
    "vid": cmd_vid,
    "report": cmd_report,
    "export": cmd_export,
    "serve": cmd_serve,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
