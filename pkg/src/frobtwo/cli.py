"""Command-line interface.

Exit status: 0 when every verdict passes, 2 when any verdict fails (the
mathematics disagrees with the computation), 1 for usage, parse and cap errors.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import fields
from fractions import Fraction
from pathlib import Path

from . import corpus
from .characters import additive_structure, is_frobenius
from .codes import CodeAnalysis, LinearCode
from .config import ENV_VARS, Caps, caps_from_env
from .errors import FrobtwoError, IdentityMismatch
from .graphs import build_gamma, build_omega, cayley_graph_of
from .homweight import compute_S0, compute_weight_table, right_unit_invariant
from .ideals import enumerate_ideals, units
from .report import analysis_report
from .rings import parse_ring_spec
from .search import SearchSpace, scan

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; 2 is reserved for verdict failures here
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _emit(args, text: str):
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _caps(args) -> Caps:
    caps = caps_from_env()
    return caps.with_overrides(**{f.name: getattr(args, f.name, None) for f in fields(Caps)})


def _load_code(args, caps: Caps) -> LinearCode:
    path = Path(args.codefile)
    if not path.exists() and corpus.code_path(path.stem).exists() and path.parent == Path("."):
        path = corpus.code_path(path.stem)
    return LinearCode.from_json(path, caps=caps, allow_degenerate=args.allow_degenerate)


def _analysis(args, caps: Caps) -> CodeAnalysis:
    code = _load_code(args, caps)
    return CodeAnalysis(code, compute_weight_table(code.ring))


def _status(report: dict) -> int:
    return EXIT_MISMATCH if report["status"] == "fail" else EXIT_OK


def cmd_ring(args, caps: Caps) -> int:
    ring = parse_ring_spec(args.spec, caps)
    chi = is_frobenius(ring)
    info = {
        "ring": ring.name,
        "kind": ring.kind,
        "order": ring.order,
        "commutative": ring.is_commutative,
        "units": len(units(ring)),
        "additive_invariants": list(additive_structure(ring).invariant_factors),
        "ideals": {side: len(enumerate_ideals(ring, side, caps=caps)) for side in ("left", "right", "two-sided")},
        "frobenius": chi is not None,
    }
    if chi is not None:
        wt = compute_weight_table(ring)
        info["right_unit_invariant"] = right_unit_invariant(wt)
        info["S0"] = len(compute_S0(ring, wt))
    if args.json:
        _emit(args, _dump(info))
        return EXIT_OK
    lines = [
        f"ring:        {info['ring']}",
        f"order:       {info['order']}",
        f"commutative: {'yes' if info['commutative'] else 'no'}",
        f"|units|:     {info['units']}",
        f"(R,+):       " + " x ".join(f"Z{e}" for e in info["additive_invariants"]),
        "ideals:      " + ", ".join(f"{k} {v}" for k, v in info["ideals"].items()),
        f"Frobenius:   {'yes' if info['frobenius'] else 'no'}",
    ]
    if chi is not None:
        lines.append(f"|S0|:        {info['S0']}")
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_weights(args, caps: Caps) -> int:
    ring = parse_ring_spec(args.spec, caps)
    wt = compute_weight_table(ring)
    names = ring.elements_str(ring.elements)
    values = wt.as_strings()
    if args.json:
        _emit(args, _dump({"ring": ring.name, "weights": [{"element": e, "weight": w} for e, w in zip(names, values)]}))
        return EXIT_OK
    width = max(len("element"), *(len(e) for e in names))
    lines = [f"{'element':<{width}}  weight"]
    lines += [f"{e:<{width}}  {w}" for e, w in zip(names, values)]
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_analyze(args, caps: Caps) -> int:
    report = analysis_report(_analysis(args, caps), seed=args.seed, caps=caps, with_dual=not args.no_dual)
    _emit(args, _dump(report))
    return _status(report)


def cmd_dual(args, caps: Caps) -> int:
    report = analysis_report(_analysis(args, caps), seed=args.seed, caps=caps)
    dual = report["dual"]
    verdicts = {k: v for k, v in report["verdicts"].items() if k.startswith("dual")}
    out = {"schema_version": report["schema_version"], "ring": report["ring"], "dual": dual, "verdicts": verdicts}
    failures = [k for k, v in verdicts.items() if v["status"] == "fail"]
    if dual is not None:
        failures += ["dual." + f for f in dual["report"]["failures"]]
    out["failures"] = failures
    out["status"] = "fail" if failures else "pass"
    _emit(args, _dump(out))
    return _status(out)


def _subreport(args, caps: Caps, block: str, prefixes: tuple[str, ...]) -> int:
    a = _analysis(args, caps)
    report = analysis_report(a, seed=args.seed, caps=caps, with_dual=False)
    if args.dot:
        if block == "srg":
            if a.profile is None:
                raise UsageError("--dot: Gamma(C) is only built for two-weight codes")
            graph = build_gamma(a)
        else:
            graph = cayley_graph_of(build_omega(a.code))
        if graph.order > caps.max_dot_vertices:
            raise UsageError(f"--dot: {graph.order} vertices exceeds max_dot_vertices={caps.max_dot_vertices}")
        _emit(args, graph.to_dot(a.code.ring, "Gamma" if block == "srg" else "Cay"))
        return _status(report)
    verdicts = {k: v for k, v in report["verdicts"].items() if k.startswith(prefixes)}
    failures = [k for k, v in verdicts.items() if v["status"] == "fail"]
    out = {
        "schema_version": report["schema_version"],
        "ring": report["ring"],
        "n": report["n"],
        "k": report["k"],
        "classification": report["classification"],
        "profile": report["profile"],
        block: report[block],
        "verdicts": verdicts,
        "failures": failures,
        "status": "fail" if failures else "pass",
    }
    _emit(args, _dump(out))
    return _status(out)


def cmd_srg(args, caps: Caps) -> int:
    return _subreport(args, caps, "srg", ("srg", "trivial-structure"))


def cmd_pds(args, caps: Caps) -> int:
    return _subreport(args, caps, "pds", ("same-shape", "pds-graph", "equivalence"))


def _length_range(text: str) -> tuple[int, int]:
    try:
        lo, _, hi = text.partition("..")
        lo = int(lo)
        return lo, int(hi) if hi else lo
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or MIN..MAX, got {text!r}") from None


def cmd_search(args, caps: Caps) -> int:
    if not args.out:
        raise UsageError("search: --out catalog.csv is required")
    n_min, n_max = args.n
    try:
        index = None if args.index is None else Fraction(args.index)
    except ValueError:
        raise UsageError(f"search: bad --index {args.index!r}") from None
    space = SearchSpace(
        args.ring,
        args.k,
        n_min,
        n_max,
        modular_only=args.modular_only,
        index=index,
        caps=caps,
    )
    try:
        space.validate()
    except ValueError as exc:
        if isinstance(exc, FrobtwoError):
            raise
        raise UsageError(f"search: {exc}") from exc
    catalog = scan(space, jobs=args.jobs, seed=args.seed)
    catalog.write(args.out, args.jsonl)
    summary = {"entries": len(catalog.entries), "stats": catalog.stats.to_json()}
    print(json.dumps(summary, sort_keys=True), file=sys.stderr)
    return EXIT_OK if catalog.all_verified else EXIT_MISMATCH


def cmd_selftest(args, caps: Caps) -> int:
    from .selftest import run

    start = time.perf_counter()

    def progress(outcome):
        if args.verbose or not outcome.ok:
            mark = "PASS" if outcome.ok else "FAIL"
            detail = f"  {outcome.detail}" if outcome.detail and not outcome.ok else ""
            print(f"{mark} {outcome.name} ({outcome.seconds:.2f}s){detail}", file=sys.stderr)

    results = run(seed=args.seed, caps=caps, progress=progress)
    failed = [r for r in results if not r.ok]
    elapsed = time.perf_counter() - start
    if args.json:
        _emit(args, _dump({
            "checks": len(results),
            "failed": [r.name for r in failed],
            "status": "fail" if failed else "pass",
        }))
    else:
        _emit(args, f"selftest: {len(results) - len(failed)}/{len(results)} checks passed in {elapsed:.1f}s\n")
    return EXIT_MISMATCH if failed else EXIT_OK


def _common() -> argparse.ArgumentParser:
    p = _Parser(add_help=False)
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
    p.add_argument("--jobs", type=int, default=1, help="worker processes (search only)")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    p.add_argument("--allow-degenerate", action="store_true", help="accept codes with an all-zero coordinate")
    caps = p.add_argument_group("caps (also settable via FROBTWO_* environment variables)")
    for f in fields(Caps):
        caps.add_argument(
            "--" + f.name.replace("_", "-"),
            dest=f.name,
            type=int,
            default=None,
            metavar="N",
            help=f"default {f.default}, env {ENV_VARS[f.name]}",
        )
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="frobtwo", description="Modular two-weight codes over finite Frobenius rings.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("ring", parents=[common], help="inspect a ring")
    p.add_argument("spec")
    p.set_defaults(func=cmd_ring)

    p = sub.add_parser("weights", parents=[common], help="homogeneous weight table")
    p.add_argument("spec")
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("analyze", parents=[common], help="full analysis report for a code file")
    p.add_argument("codefile")
    p.add_argument("--no-dual", action="store_true", help="skip the dual code block")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("dual", parents=[common], help="dual two-weight code and its checks")
    p.add_argument("codefile")
    p.set_defaults(func=cmd_dual)

    for name, func, text in (
        ("srg", cmd_srg, "Gamma(C): measured and predicted parameters"),
        ("pds", cmd_pds, "Omega as a partial difference set; equivalence theorem"),
    ):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("codefile")
        p.add_argument("--dot", action="store_true", help="print the graph in DOT format")
        p.set_defaults(func=func)

    p = sub.add_parser("search", parents=[common], help="enumerate codes and write a catalog")
    p.add_argument("--ring", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=_length_range, required=True, metavar="MIN..MAX")
    p.add_argument("--modular-only", action="store_true")
    p.add_argument("--index", help="keep only codes of this modularity index, e.g. 1/2")
    p.add_argument("--jsonl", metavar="PATH", help="full-report sidecar (default: catalog path with .jsonl)")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("selftest", parents=[common], help="run the built-in self-test")
    p.add_argument("-v", "--verbose", action="store_true", help="print every check")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    if args.jobs < 1:
        print("frobtwo: --jobs must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        caps = _caps(args)
    except ValueError as exc:
        print(f"frobtwo: bad FROBTWO_* value: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args, caps)
    except IdentityMismatch as exc:
        print(f"frobtwo: identity mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (FrobtwoError, UsageError) as exc:
        print(f"frobtwo: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"frobtwo: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
