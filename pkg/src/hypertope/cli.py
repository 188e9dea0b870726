"""Command-line front end: parse instance documents, run the chirality
checks, emit JSON or text reports.

Input is a small YAML document (see ``serialize_instance`` for the canonical
shape); generators may be given as 0-based image arrays or as cycle strings
like ``"(0 1 2)(3 4)"``.  Exit codes: 0 chiral, 10 regular, 20 not a
hypertope, 1 input error, 2 element cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from typing import Optional, Sequence

import yaml

from .catalog import catalog_entry, catalog_names
from .cplus import (
    CHIRAL,
    REGULAR,
    ChiralityReport,
    build_cplus,
    check_ic_plus,
    is_chiral_hypertope,
    is_independent_generating_set,
)
from .oracle import chirality_bruteforce
from .permcore import (
    DEFAULT_ELEMENT_CAP,
    GroupTooLargeError,
    Permutation,
    generate_group,
)

EXIT_CHIRAL = 0
EXIT_REGULAR = 10
EXIT_NOT_HYPERTOPE = 20
EXIT_INPUT_ERROR = 1
EXIT_CAP_EXCEEDED = 2

_KNOWN_FIELDS = {"name", "degree", "generators", "options", "comment"}
_KNOWN_OPTIONS = {"k", "check_all_k", "oracle", "element_cap", "threads"}


class InputError(ValueError):
    """Malformed instance document."""


@dataclass
class InstanceSpec:
    name: str
    degree: int
    generators: tuple[Permutation, ...]
    options: dict = field(default_factory=dict)


def parse_cycle_string(text: str, degree: int) -> Permutation:
    """Parse disjoint-cycle notation with 0-based points, e.g. "(0 1 2)(3 4)"."""
    images = list(range(degree))
    body = text.strip()
    if body.count("(") != body.count(")"):
        raise InputError(f"unbalanced parentheses in cycle string {text!r}")
    moved: set[int] = set()
    for chunk in body.replace(")", ")\x00").split("\x00"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if not (chunk.startswith("(") and chunk.endswith(")")):
            raise InputError(f"malformed cycle string {text!r}")
        try:
            points = [int(p) for p in chunk[1:-1].replace(",", " ").split()]
        except ValueError as exc:
            raise InputError(f"non-integer point in cycle string {text!r}") from exc
        for p in points:
            if not 0 <= p < degree:
                raise InputError(f"point {p} out of range for degree {degree}")
            if p in moved:
                raise InputError(f"point {p} repeated in cycle string {text!r}")
            moved.add(p)
        for a, b in zip(points, points[1:] + points[:1]):
            images[a] = b
    return Permutation(images)


def _parse_generator(obj, degree: int) -> Permutation:
    if isinstance(obj, str):
        return parse_cycle_string(obj, degree)
    if isinstance(obj, (list, tuple)):
        if len(obj) != degree:
            raise InputError(f"image array of length {len(obj)} for degree {degree}")
        if any(not isinstance(x, int) for x in obj):
            raise InputError("image array entries must be integers")
        if sorted(obj) != list(range(degree)):
            raise InputError(f"image array {obj} is not a bijection on 0..{degree - 1}")
        return Permutation(obj)
    raise InputError(f"generator must be an image array or cycle string, got {type(obj).__name__}")


def spec_from_mapping(doc: dict) -> InstanceSpec:
    if not isinstance(doc, dict):
        raise InputError("instance document must be a mapping")
    unknown = set(doc) - _KNOWN_FIELDS
    if unknown:
        raise InputError(f"unknown field(s): {', '.join(sorted(unknown))}")
    try:
        degree = doc["degree"]
        raw_gens = doc["generators"]
    except KeyError as exc:
        raise InputError(f"missing required field {exc.args[0]!r}") from exc
    if not isinstance(degree, int) or degree < 1:
        raise InputError("degree must be a positive integer")
    if not isinstance(raw_gens, (list, tuple)):
        raise InputError("generators must be a sequence")
    gens = tuple(_parse_generator(g, degree) for g in raw_gens)
    options = doc.get("options") or {}
    if not isinstance(options, dict):
        raise InputError("options must be a mapping")
    unknown = set(options) - _KNOWN_OPTIONS
    if unknown:
        raise InputError(f"unknown option(s): {', '.join(sorted(unknown))}")
    return InstanceSpec(str(doc.get("name", "unnamed")), degree, gens, dict(options))


def parse_instance(text: str) -> InstanceSpec:
    try:
        doc = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise InputError(f"unparseable document: {exc}") from exc
    return spec_from_mapping(doc)


def serialize_instance(spec: InstanceSpec) -> str:
    """Canonical document: image arrays, flow style, fixed key order."""
    lines = [
        f"name: {json.dumps(spec.name)}",
        f"degree: {spec.degree}",
        "generators: " + json.dumps([list(g.images) for g in spec.generators]),
    ]
    if spec.options:
        body = ", ".join(f"{k}: {json.dumps(spec.options[k])}"
                         for k in sorted(spec.options))
        lines.append("options: {" + body + "}")
    return "\n".join(lines) + "\n"


# -- running ----------------------------------------------------------------

@dataclass
class Report:
    name: str
    ic_plus: bool
    independence: bool
    chirality: ChiralityReport
    oracle: Optional[ChiralityReport] = None
    agreement: Optional[bool] = None
    timings: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "ic_plus": self.ic_plus,
            "independence": self.independence,
            "chirality": self.chirality.to_dict(),
            "oracle": self.oracle.to_dict() if self.oracle else None,
            "agreement": self.agreement,
            "timings": {k: round(v, 6) for k, v in self.timings.items()},
        }


def run(spec: InstanceSpec) -> Report:
    opts = spec.options
    cap = opts.get("element_cap", DEFAULT_ELEMENT_CAP)
    timings: dict[str, float] = {}

    t0 = time.perf_counter()
    G = generate_group(spec.degree, spec.generators, cap=cap)
    S = build_cplus(G, spec.generators, cap=cap)
    timings["build"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    ic = check_ic_plus(S)
    timings["ic_plus"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    indep = is_independent_generating_set(S)
    timings["independence"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    chirality = is_chiral_hypertope(S, k=opts.get("k", 0),
                                    check_all_k=bool(opts.get("check_all_k", False)))
    timings["chirality"] = time.perf_counter() - t0

    oracle = None
    agreement = None
    if opts.get("oracle"):
        t0 = time.perf_counter()
        oracle = chirality_bruteforce(S)
        timings["oracle"] = time.perf_counter() - t0
        agreement = oracle.verdict == chirality.verdict
    return Report(spec.name, ic, indep, chirality, oracle, agreement, timings)


def exit_code_for(report: Report) -> int:
    if report.chirality.verdict == CHIRAL:
        return EXIT_CHIRAL
    if report.chirality.verdict == REGULAR:
        return EXIT_REGULAR
    return EXIT_NOT_HYPERTOPE


# -- rendering --------------------------------------------------------------

def render_permutation(p: Permutation, one_based: bool = False) -> str:
    cycles = [c for c in p.cycles() if len(c) > 1]
    if not cycles:
        return "()"
    shift = 1 if one_based else 0
    return "".join("(" + " ".join(str(x + shift) for x in c) + ")" for c in cycles)


def format_text(spec: InstanceSpec, report: Report, one_based: bool = False) -> str:
    lines = [f"instance {report.name}  (degree {spec.degree}, "
             f"rank {len(spec.generators) + 1})"]
    for i, g in enumerate(spec.generators, start=1):
        lines.append(f"  alpha_{i} = {render_permutation(g, one_based)}")
    lines.append(f"  IC+ holds: {report.ic_plus}")
    lines.append(f"  independent generating set: {report.independence}")
    c = report.chirality
    lines.append(f"  verdict: {c.verdict}"
                 + (f"  (failure code {c.failing_condition})"
                    if c.failing_condition else ""))
    if c.orbit_sizes:
        lines.append(f"  chamber orbit sizes: {c.orbit_sizes[0]}, {c.orbit_sizes[1]}")
    if c.witness is not None:
        lines.append(f"  second-orbit witness: {render_permutation(c.witness, one_based)}")
    if c.cross_k_disagreement:
        lines.append(f"  cross-k disagreement: {c.cross_k_disagreement}")
    if report.oracle is not None:
        lines.append(f"  oracle verdict: {report.oracle.verdict}"
                     f"  (agreement: {report.agreement})")
    lines.append("  timings: " + ", ".join(f"{k} {v * 1000:.1f}ms"
                                           for k, v in report.timings.items()))
    return "\n".join(lines) + "\n"


# -- entry point ------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="hypertope",
        description="Decide whether the coset incidence system of (G, R) "
                    "is a chiral hypertope.")
    ap.add_argument("input", nargs="?", help="instance document ('-' for stdin)")
    ap.add_argument("--catalog", metavar="NAME",
                    help="run a built-in instance ('list' to enumerate)")
    ap.add_argument("--k", type=int, default=None, metavar="K",
                    help="type index for the k-dependent conditions (default 0)")
    ap.add_argument("--all-k", action="store_true",
                    help="evaluate conditions (i) and (iii) for every k")
    ap.add_argument("--oracle", action="store_true",
                    help="also run the brute-force incidence-graph check")
    ap.add_argument("--element-cap", type=int, default=None, metavar="N",
                    help=f"group enumeration cap (default {DEFAULT_ELEMENT_CAP})")
    ap.add_argument("--format", choices=("json", "text"), default="text")
    ap.add_argument("--one-based", action="store_true",
                    help="render cycles with 1-based points in text output")
    ap.add_argument("--threads", type=int, default=1,
                    help="parallelism hint (current implementation is serial)")
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.catalog == "list":
            for name in catalog_names():
                print(name)
            return 0
        if args.catalog:
            spec = spec_from_mapping(catalog_entry(args.catalog))
        elif args.input:
            text = (sys.stdin.read() if args.input == "-"
                    else open(args.input, encoding="utf-8").read())
            spec = parse_instance(text)
        else:
            print("error: need an input document or --catalog NAME", file=sys.stderr)
            return EXIT_INPUT_ERROR
        if args.k is not None:
            spec.options["k"] = args.k
        if args.all_k:
            spec.options["check_all_k"] = True
        if args.oracle:
            spec.options["oracle"] = True
        if args.element_cap is not None:
            spec.options["element_cap"] = args.element_cap
        report = run(spec)
    except (InputError, KeyError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except GroupTooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP_EXCEEDED

    if args.format == "json":
        print(json.dumps(report.to_dict(), indent=2, sort_keys=False))
    else:
        print(format_text(spec, report, one_based=args.one_based), end="")
    return exit_code_for(report)


if __name__ == "__main__":
    sys.exit(main())
