"""Command-line front end.

Subcommands::

    spinor-s3 spectrum   --k-max N [--format table|json] [--out FILE]
    spinor-s3 eigenbasis --k K [--out FILE]
    spinor-s3 verify     --suite NAME[,NAME...] [--k-max N]
                         [--rule tensor|mc] [--samples N] [--seed S]

Exit codes: 0 on success, 1 on verification failure, 2 on usage errors.
Exact values are printed as num/den strings; floating point appears only
in quadrature reports (12 significant digits).  The environment variable
SPINOR_S3_THREADS bounds the verify fan-out across degrees.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Optional

from .abstract_dirac import spectrum_table
from .exactnum import rational_to_str
from .geometry import dirac_section
from .transfer import transfer_eigenbasis
from .verify import SUITE_NAMES, run_suites

#: Exact-arithmetic cost grows fast with k; refuse degrees above this
#: unless --unsafe-k is given.
DEFAULT_K_CAP = 12


@dataclass
class RunConfig:
    command: str
    k: Optional[int] = None
    k_max: Optional[int] = None
    suites: Optional[list[str]] = None
    out: Optional[str] = None
    format: str = "table"
    rule: Optional[str] = None
    samples: int = 1_000_000
    seed: int = 0
    unsafe_k: bool = False

    def check_cap(self) -> Optional[str]:
        if self.unsafe_k:
            return None
        for value in (self.k, self.k_max):
            if value is not None and value > DEFAULT_K_CAP:
                return (
                    f"k={value} exceeds the hard cap {DEFAULT_K_CAP}; "
                    "exact coefficients grow quickly, pass --unsafe-k to override"
                )
        return None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinor-s3",
        description="Exact spectrum and polynomial eigenbasis of the spin "
        "Dirac operator on the round 3-sphere.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    spectrum = sub.add_parser("spectrum", help="print the eigenvalue/multiplicity table")
    spectrum.add_argument("--k-max", type=int, required=True)
    spectrum.add_argument("--format", choices=("table", "json"), default="table")
    spectrum.add_argument("--out", type=str, default=None)
    spectrum.add_argument("--unsafe-k", action="store_true")

    eigen = sub.add_parser("eigenbasis", help="export all eigensections of one degree as JSON")
    eigen.add_argument("--k", type=int, required=True)
    eigen.add_argument("--out", type=str, default=None)
    eigen.add_argument("--unsafe-k", action="store_true")

    verify = sub.add_parser("verify", help="run exact/numeric verification suites")
    verify.add_argument("--suite", type=str, default="all",
                        help="comma-separated from: " + ", ".join(SUITE_NAMES) + ", all")
    verify.add_argument("--k-max", type=int, default=None)
    verify.add_argument("--rule", choices=("tensor", "mc"), default=None)
    verify.add_argument("--samples", type=int, default=1_000_000)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--unsafe-k", action="store_true")

    return parser


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_spectrum(config: RunConfig) -> int:
    rows = spectrum_table(config.k_max)
    if config.format == "json":
        text = json.dumps([r.to_json() for r in rows], indent=2, sort_keys=True) + "\n"
    else:
        lines = [f"{'k':>4}  {'eigenvalue':>12}  {'multiplicity':>12}"]
        for r in rows:
            lines.append(f"{r.k:>4}  {str(r.eigenvalue):>12}  {r.multiplicity:>12}")
        text = "\n".join(lines) + "\n"
    _emit(text, config.out)
    return 0


def cmd_eigenbasis(config: RunConfig) -> int:
    entries = transfer_eigenbasis(config.k)
    sections = []
    for e in entries:
        if not (dirac_section(e.section) - e.section.scale(e.eigenvalue)).is_zero():
            print(
                f"internal verification failed for family={e.family} q={e.q} p={e.p}",
                file=sys.stderr,
            )
            return 1
        record = e.section.to_json()
        record.update(
            {
                "eigenvalue": rational_to_str(e.eigenvalue),
                "family": e.family,
                "q": e.q,
                "p": e.p,
            }
        )
        sections.append(record)
    doc = {"k": config.k, "count": len(sections), "sections": sections}
    _emit(json.dumps(doc, indent=2, sort_keys=True) + "\n", config.out)
    return 0


def cmd_verify(config: RunConfig) -> int:
    suites = config.suites
    workers = int(os.environ.get("SPINOR_S3_THREADS", "1") or "1")
    results = run_suites(
        suites,
        k_max=config.k_max,
        rule=config.rule,
        samples=config.samples,
        seed=config.seed,
        workers=max(workers, 1),
    )
    failed = 0
    for r in results:
        print(r.line())
        failed += 0 if r.passed else 1
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return 0 if failed == 0 else 1


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    config = RunConfig(
        command=args.command,
        k=getattr(args, "k", None),
        k_max=getattr(args, "k_max", None),
        out=getattr(args, "out", None),
        format=getattr(args, "format", "table"),
        rule=getattr(args, "rule", None),
        samples=getattr(args, "samples", 1_000_000),
        seed=getattr(args, "seed", 0),
        unsafe_k=getattr(args, "unsafe_k", False),
    )

    message = config.check_cap()
    if message:
        print(f"error: {message}", file=sys.stderr)
        return 2

    if config.command == "spectrum":
        if config.k_max < 0:
            print("error: --k-max must be >= 0", file=sys.stderr)
            return 2
        return cmd_spectrum(config)

    if config.command == "eigenbasis":
        if config.k < 0:
            print("error: --k must be >= 0", file=sys.stderr)
            return 2
        return cmd_eigenbasis(config)

    names = [s.strip() for s in args.suite.split(",") if s.strip()]
    if "all" in names:
        names = list(SUITE_NAMES)
    unknown = [n for n in names if n not in SUITE_NAMES]
    if unknown or not names:
        print(f"error: unknown suite(s): {', '.join(unknown) or '(none given)'}", file=sys.stderr)
        return 2
    config.suites = names
    return cmd_verify(config)


if __name__ == "__main__":
    sys.exit(main())
