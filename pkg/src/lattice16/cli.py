"""Command-line surface for the lattice-state toolkit."""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import classifier as classify_mod
from . import dense, lattice, seplp, symmetry, witness


def _default_threads() -> int:
    env = os.environ.get("LATTICE16_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def _parse_subset_or_exit(text: str) -> int:
    try:
        return lattice.parse_subset(text)
    except lattice.SubsetParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(2)


def _emit(payload, args) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_classify(args) -> int:
    mask = _parse_subset_or_exit(args.subset)
    if args.format == "ascii":
        print(classify_mod.explain(mask))
        return 0
    cls = classify_mod.classify(mask, numeric_check=args.numeric_double_check)
    _emit(cls.to_json(), args)
    return 0


def cmd_census(args) -> int:
    try:
        records = classify_mod.census(
            min_n=args.min, max_n=args.max, threads=args.threads
        )
    except classify_mod.ConsistencyError as exc:
        print(f"consistency violation: {exc}", file=sys.stderr)
        return 1
    jsonl = classify_mod.census_to_jsonl(records)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(jsonl)
        summary_path = args.out + ".summary.csv"
        with open(summary_path, "w") as fh:
            fh.write(classify_mod.summary_to_csv(records))
        print(f"{len(records)} orbit records -> {args.out}")
        print(f"summary -> {summary_path}")
    else:
        sys.stdout.write(jsonl)
    return 0


def cmd_orbit(args) -> int:
    mask = _parse_subset_or_exit(args.subset)
    _emit(symmetry.canonical_form(mask).to_json(), args)
    return 0


def cmd_witness(args) -> int:
    mask = _parse_subset_or_exit(args.subset)
    if not lattice.is_ppt(mask):
        print("error: subset is NPT; witness scan needs a PPT subset", file=sys.stderr)
        return 2
    reports = witness.witness_scan(mask)
    _emit([r.to_json() for r in reports], args)
    return 0


def cmd_decompose(args) -> int:
    mask = _parse_subset_or_exit(args.subset)
    if not lattice.is_ppt(mask):
        print("error: subset is NPT; no decomposition attempted", file=sys.stderr)
        return 2
    cert = seplp.decompose(mask)
    if cert is None:
        _emit({"target": f"0x{mask:04X}", "decomposition": None}, args)
    else:
        assert seplp.verify_certificate(cert)
        _emit(cert.to_json(), args)
    return 0


def cmd_ptspectrum(args) -> int:
    mask = _parse_subset_or_exit(args.subset)
    spectrum = dense.pt_spectrum(mask)
    analytic = dense.analytic_pt_spectrum(mask)
    _emit(
        {
            "subset": f"0x{mask:04X}",
            "numeric": [round(float(x), 12) for x in spectrum],
            "analytic": [round(float(x), 12) for x in analytic],
        },
        args,
    )
    return 0


def cmd_render(args) -> int:
    mask = _parse_subset_or_exit(args.subset)
    print(lattice.render_subset(mask, args.form))
    return 0


def cmd_verify(args) -> int:
    report = dense.oracle_sweep(seed=args.seed, tol=args.tolerance)
    ok = not report["disagreements"]
    print(
        f"swept {report['masks_swept']} subsets, "
        f"{report['spectra_checked']} spectra compared: "
        + ("OK" if ok else f"{len(report['disagreements'])} disagreements")
    )
    if not ok:
        for kind, mask in report["disagreements"][:20]:
            print(f"  {kind}: 0x{mask:04X}", file=sys.stderr)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lattice16",
        description="Classify 16x16 two-ququart lattice states.",
    )
    parser.add_argument("--threads", type=int, default=_default_threads())
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--tolerance", type=float, default=1e-9)
    parser.add_argument("--out", default=None)
    parser.add_argument(
        "--format", choices=["json", "csv", "ascii"], default="json"
    )
    parser.add_argument(
        "--numeric-double-check", action="store_true",
        help="re-verify NPT verdicts with a dense eigensolve",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify one subset")
    p.add_argument("subset")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("census", help="classify every symmetry orbit")
    p.add_argument("--min", type=int, default=1)
    p.add_argument("--max", type=int, default=16)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("orbit", help="canonical form and orbit size")
    p.add_argument("subset")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("witness", help="k=1 witness scan")
    p.add_argument("subset")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("decompose", help="exact separability certificate")
    p.add_argument("subset")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("ptspectrum", help="partial-transpose spectrum")
    p.add_argument("subset")
    p.set_defaults(func=cmd_ptspectrum)

    p = sub.add_parser("render", help="render a subset")
    p.add_argument("subset")
    p.add_argument("--form", choices=["grid", "pairs", "hex", "table"], default="table")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("verify", help="combinatorial-vs-dense oracle sweep")
    p.add_argument("--full", action="store_true",
                   help="accepted for compatibility; the sweep is always full")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if not 0 < args.tolerance <= 1e-3:
        print("error: tolerance must be in (0, 1e-3]", file=sys.stderr)
        return 2
    if args.threads < 1:
        print("error: threads must be >= 1", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except lattice.EmptySubsetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except classify_mod.ConsistencyError as exc:
        print(f"consistency violation: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
