"""Command line: inspect, verify, census, family, enumerate.

Exit codes: 0 ok, 1 counterexample found, 2 usage or argument error, 3 I/O error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict, dataclass, field
from typing import Sequence

from . import enumeration
from .core import NumericalSemigroup, from_generators, parse_generators, profile
from .exceptions import HypothesisError
from .hyperelliptic import hyperelliptic_gamma, p2_holds, p3_holds, p3_weak, r_index
from .verify import NOTES, THEOREMS, TheoremReport, verify_theorem
from .weights import bound_g_threshold, classify_weight

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


@dataclass
class InspectRecord:
    generators: list[int]
    genus: int
    gaps: list[int]
    conductor: int
    m: list[int]
    rho: int
    u: list[int]
    f: list[int]
    weight: int
    bounds: list[int]
    gamma_hyperelliptic: int | None
    predicates: dict[str, bool] = field(default_factory=dict)

    @classmethod
    def of(cls, H: NumericalSemigroup) -> "InspectRecord":
        prof = profile(H)
        g, rho = H.genus, prof.rho
        if g == 0:
            return cls(list(H.min_generators), 0, [], 0, [], 0, [], [], 0, [0, 0], None)
        report = classify_weight(H, rho, prof)
        flags = {
            "p2": p2_holds(H, rho, prof),
            "p3": p3_holds(H, rho, prof),
            "p3_weak": p3_weak(H, rho, prof),
            "weight_window": report.char_weight_flags["cw1_iii"],
            "weight_window_tight": report.char_weight_flags["cw1_ii"],
            "genus_reaches_weight_threshold": g >= bound_g_threshold(rho),
        }
        return cls(
            generators=list(H.min_generators),
            genus=g,
            gaps=list(H.gaps),
            conductor=H.conductor,
            m=list(prof.m),
            rho=rho,
            u=list(prof.u),
            f=list(prof.f),
            weight=report.w,
            bounds=[report.lower, report.upper],
            gamma_hyperelliptic=hyperelliptic_gamma(H, prof),
            predicates=flags,
        )

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "InspectRecord":
        return cls(**json.loads(text))

    def to_table(self) -> str:
        r_note = f" (r = {r_index(self.genus, self.rho)})" if self.genus else ""
        rows = [
            ("generators", ",".join(map(str, self.generators))),
            ("genus", self.genus),
            ("conductor", self.conductor),
            ("gaps", " ".join(map(str, self.gaps))),
            ("m_1..m_g", " ".join(map(str, self.m))),
            ("rho", self.rho),
            ("odd non-gaps < 2g", " ".join(map(str, self.u))),
            ("even non-gaps <= 2g", " ".join(map(str, self.f))),
            ("weight", self.weight),
            ("weight bounds", f"[{self.bounds[0]}, {self.bounds[1]}]"),
            ("gamma-hyperelliptic", "none" if self.gamma_hyperelliptic is None
             else self.gamma_hyperelliptic),
        ]
        rows += [(f"{k} @ gamma=rho{r_note if k.startswith('p3') else ''}", v)
                 for k, v in self.predicates.items()]
        width = max(len(k) for k, _ in rows)
        return "\n".join(f"{k:<{width}}  {v}" for k, v in rows)


def parse_genus_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            return int(lo), int(lo)
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad genus range {text!r}; use a..b") from None


def _key_value(text: str) -> tuple[str, int]:
    key, sep, value = text.partition("=")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected key=value, got {text!r}")
    try:
        return key, int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"value in {text!r} must be an integer") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nsg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("inspect", help="print the invariants of one semigroup")
    p.add_argument("--gens", required=True, help="comma-separated generators, e.g. 4,10,13")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="check a statement over whole genera")
    p.add_argument("--theorem", required=True, help=", ".join(THEOREMS))
    p.add_argument("--gamma", type=int)
    p.add_argument("--genus", type=parse_genus_range, required=True, metavar="A..B")
    p.add_argument("--probe-outside", action="store_true",
                   help="also check genera outside the statement's hypotheses")
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("census", help="per-genus counts as CSV")
    p.add_argument("--max-genus", type=int, required=True)
    p.add_argument("--filter", action="append", default=[],
                   help="rho=k, m1=k, f1=k, gamma-hyperelliptic=k or hyperelliptic")
    p.add_argument("--out", help="output path (default stdout)")

    p = sub.add_parser("family", help="build a member of a named family")
    p.add_argument("--name", required=True, choices=enumeration.FAMILY_NAMES)
    p.add_argument("--param", type=_key_value, action="append", default=[],
                   metavar="KEY=VALUE")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("enumerate", help="list every semigroup of one genus as JSON lines")
    p.add_argument("--genus", type=int, required=True)
    return parser


def _emit_record(H: NumericalSemigroup, as_json: bool, out) -> None:
    record = InspectRecord.of(H)
    print(record.to_json() if as_json else record.to_table(), file=out)


def cmd_verify(args, out) -> int:
    if args.theorem not in THEOREMS:
        raise ValueError(f"unknown theorem {args.theorem!r}")
    lo, hi = args.genus
    total = TheoremReport(args.theorem, (lo, hi),
                          args.gamma if THEOREMS[args.theorem].uses_gamma else None)
    for g in range(lo, hi + 1):
        part = verify_theorem(args.theorem, args.gamma, (g, g),
                              probe_outside=args.probe_outside, jobs=args.jobs)
        print(json.dumps({"type": "genus", "genus": g, **part.to_dict()}), file=out, flush=True)
        total = total.merge(part)
    summary = {"type": "summary", **total.to_dict(), "notes": NOTES}
    summary.pop("counterexamples")
    summary["counterexample_count"] = len(total.counterexamples)
    summary["witnesses"] = sorted({",".join(map(str, c.generators))
                                   for c in total.counterexamples})
    print(json.dumps(summary), file=out)
    return EXIT_OK if total.holds else EXIT_COUNTEREXAMPLE


CENSUS_HEADER = ["genus", "count", "rho_histogram", "hyperelliptic_gamma_counts",
                 "min_weight", "max_weight"]


def _histogram(counter) -> str:
    return ";".join(f"{k}:{counter[k]}" for k in sorted(counter))


def census_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CENSUS_HEADER)
    for row in rows:
        writer.writerow([
            row.genus,
            row.count,
            _histogram(row.rho_histogram),
            _histogram(row.gamma_counts),
            "" if row.min_weight is None else row.min_weight,
            "" if row.max_weight is None else row.max_weight,
        ])
    return buf.getvalue()


def cmd_census(args, out) -> int:
    filters = [enumeration.parse_filter(text) for text in args.filter]
    text = census_csv(enumeration.census(args.max_genus, filters))
    if args.out is None:
        out.write(text)
        return EXIT_OK
    try:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"nsg: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        if args.command == "inspect":
            _emit_record(from_generators(parse_generators(args.gens)), args.json, out)
            return EXIT_OK
        if args.command == "verify":
            return cmd_verify(args, out)
        if args.command == "census":
            return cmd_census(args, out)
        if args.command == "family":
            H = enumeration.family(enumeration.FamilySpec(args.name, dict(args.param)))
            _emit_record(H, args.json, out)
            return EXIT_OK
        if args.command == "enumerate":
            for H in enumeration.enumerate_genus(args.genus):
                print(json.dumps({"genus": H.genus, "generators": list(H.min_generators),
                                  "gaps": list(H.gaps)}), file=out)
            return EXIT_OK
    except (ValueError, HypothesisError) as exc:
        print(f"nsg: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
