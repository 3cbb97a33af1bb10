"""Scenario runner and polynomial utilities.

Every scenario recomputes one published result from scratch and compares it
with the reference data in ``data/golden.json``.  Reports are deterministic
apart from the wall-time field.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any, Callable

from . import covers, curves, groups
from .exact import format_rational, parse_upoly, squarefree_part
from .ideals import (Budget, BudgetExceeded, GBCache, Ideal, eliminate, groebner, same_ideal,
                     vdim)
from .mpoly import (Ring, TermOrder, format_poly_file, hessian_det, parse_poly_file,
                    sylvester_resultant)

EXIT_PASS, EXIT_FAIL, EXIT_BUDGET, EXIT_USAGE = 0, 1, 2, 3
DEFAULT_TIMEOUT = 600
HEAVY_TIMEOUT = 3600


# report types


@dataclass
class Check:
    name: str
    expected: Any
    source: str
    actual: Any
    match: bool


@dataclass
class ScenarioReport:
    id: str
    status: str
    checks: list[Check] = field(default_factory=list)
    wall_time: float = 0.0
    payloads: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> "ScenarioReport":
        return cls(d["id"], d["status"], [Check(**c) for c in d["checks"]], d["wall_time"],
                   d.get("payloads", {}))

    @classmethod
    def from_json(cls, text: str) -> "ScenarioReport":
        return cls.from_dict(json.loads(text))

    @property
    def exit_code(self) -> int:
        return {"pass": EXIT_PASS, "fail": EXIT_FAIL}.get(self.status, EXIT_BUDGET)


def plain(v: Any) -> Any:
    """JSON-friendly canonical form of an exact value."""
    if isinstance(v, bool) or v is None or isinstance(v, str):
        return v
    if isinstance(v, int):
        return v
    if isinstance(v, Fraction):
        return format_rational(v)
    if isinstance(v, covers.Signature):
        return str(v)
    if isinstance(v, dict):
        return {str(plain(k)): plain(x) for k, x in sorted(v.items(), key=lambda kv: str(kv[0]))}
    if isinstance(v, (set, frozenset)):
        return sorted((plain(x) for x in v), key=str)
    if isinstance(v, (list, tuple)):
        return [plain(x) for x in v]
    return str(v)


@dataclass
class Context:
    budget: Budget
    cache: GBCache | None
    gb_path: bool = False
    checks: list[Check] = field(default_factory=list)
    payloads: dict[str, Any] = field(default_factory=dict)

    def check(self, name: str, expected: Any, actual: Any, source: str = "reference",
              match: bool | None = None) -> None:
        ok = (plain(expected) == plain(actual)) if match is None else bool(match)
        self.checks.append(Check(name, plain(expected), source, plain(actual), ok))


def _golden(key: str) -> dict:
    return covers.golden()[key]


def _ring(key: str) -> Ring:
    return Ring(tuple(_golden(key)["ring"].split(",")))


# pencil scenarios


def sc_pencil_locus(ctx: Context) -> None:
    res = curves.singular_parameter_locus(ctx.budget, ctx.cache)
    quartic = parse_upoly(_golden("pencil.quartic")["value"], "P")
    quad = parse_upoly(_golden("pencil.quadratic")["value"], "P")
    ctx.check("eliminant", quartic, res.eliminant)
    ctx.check("rational roots", {Fraction(20250), Fraction(-10125)}, set(res.rational_roots))
    ctx.check("quadratic factor", quad, res.nonlinear_factor)
    ctx.check("singular points", _golden("pencil.singular_points")["value"], res.point_count)
    ctx.check("radical certificate", True, res.radical_certified, "derived")
    ctx.payloads["eliminant"] = str(res.eliminant)
    if ctx.gb_path:
        cc = curves.jacobian_cross_check(ctx.budget, cache=ctx.cache)
        sq = squarefree_part(cc.eliminant).primitive() if cc.eliminant is not None else None
        ctx.check("gb path: basis verified over Q", True, cc.certificate.contains_input, "derived")
        ctx.check("gb path: eliminant", quartic, sq)
        ctx.check("gb path: radical", True, cc.radical, "derived")
        ctx.check("gb path: vdim", _golden("pencil.singular_points")["value"], cc.vdim)


def sc_pencil_infinity(ctx: Context) -> None:
    res = curves.infinity_analysis()
    R = _ring("pencil.infinity.generators")
    reference = [R.parse(s) for s in _golden("pencil.infinity.generators")["value"]]
    ours = [g.to_ring(R) for g in res.radical_generators]
    ctx.check("radical generators", [str(p) for p in reference], [str(p) for p in ours],
              match=bool(ours) and same_ideal(reference, ours))
    ctx.check("radical certified", True, res.reference_form_matches, "derived")
    ctx.check("parameter", Fraction(_golden("pencil.infinity.parameter")["value"]), res.parameter)
    ctx.check("points at infinity", 5, res.point_count)


def _nodality(P: int, affine: int, infinity: int) -> Callable[[Context], None]:
    def run(ctx: Context) -> None:
        rep = curves.nodality_report(P, ctx.budget)
        ctx.check("affine Tjurina total", affine, rep.affine_tjurina)
        ctx.check("points at infinity", infinity, rep.infinity_points)
        ctx.check("radical certificate", True, rep.distinct_certificate, "derived")
        ctx.check("nodes", _golden(f"pencil.nodes.{P}")["value"], rep.node_count)

    return run


def sc_pencil_genus(ctx: Context) -> None:
    ctx.check("genus (12, 45)", 10, curves.geometric_genus_nodal(12, 45))
    ctx.check("genus (12, 36)", 19, curves.geometric_genus_nodal(12, 36))
    ctx.check("genus (6, 0)", 10, curves.geometric_genus_nodal(6, 0))


def sc_pencil_smoothness(ctx: Context) -> None:
    ctx.check("F nonsingular", True, curves.smoothness_check(curves.wiman_sextic(), ctx.budget))
    ctx.check("Phi nonsingular", True, curves.smoothness_check(curves.hessian_phi(), ctx.budget))


def sc_pencil_decomposition(ctx: Context) -> None:
    ctx.check("orbit patterns 10k + 6l = 12", {(0, 2)}, curves.decomposition_patterns())
    ctx.check("six conics vs 36 nodes", True, curves.bezout_contradiction([2] * 6, 36))
    ctx.check("twelve lines vs 45 nodes", True, curves.bezout_contradiction([1] * 12, 45))
    ctx.check("indices below 30", set(_golden("pencil.small_indices")["value"]),
              curves.small_index_subgroup_indices(30))


# groups


def sc_groups_table1(ctx: Context) -> None:
    rows = groups.table_rows(list(groups.a6_subgroup_classes()))
    got = [[r["iso_label"], r["order"], r["index"]] for r in rows]
    ctx.check("class count", _golden("groups.table1")["classes"], len(rows))
    ctx.check("rows", _golden("groups.table1")["rows"], got)
    ctx.payloads["table"] = got


def sc_groups_valentiner(ctx: Context) -> None:
    _, gens = groups.valentiner_generators()
    elems = groups.matrix_closure(gens)
    census = groups.order_census(elems)
    brute = groups.a6_standard().element_order_census()
    ctx.check("closure size", _golden("groups.valentiner")["order"], len(elems))
    ctx.check("order census", {int(k): v for k, v in _golden("groups.census")["value"].items()}, census,
              "derived")
    ctx.check("census equals A6 by enumeration", brute, census, "derived")


# Riemann-Hurwitz


def _sigs(data: list) -> set[covers.Signature]:
    return {covers.Signature(g, tuple(r)) for g, r in data}


def sc_hurwitz_genus10(ctx: Context) -> None:
    A6, A5 = groups.a6_standard(), groups.alternating_group(5)
    g = _golden("hurwitz.genus10")
    ctx.check("A6 quotient", _sigs(g["value"]), covers.quotient_signature(10, A6))
    ctx.check("A5 quotient", _sigs(g["a5"]),
              covers.quotient_signature(10, A5, (2, 4, 5), element_orders=False))


def sc_hurwitz_genus19(ctx: Context) -> None:
    A6, A5 = groups.a6_standard(), groups.alternating_group(5)
    g = _golden("hurwitz.genus19")
    raw = covers.quotient_signature(19, A6, element_orders=False)
    ctx.check("candidates before subgroup test", {covers.Signature(0, (2, 3, 15)), covers.Signature(0, (2, 5, 5))},
              raw, "derived")
    excluded = covers.order15_excluded()
    ctx.check("no subgroup of order 15", True, excluded)
    kept = {s for s in raw if not (excluded and 15 in s.indices)}
    ctx.check("A6 quotient", _sigs(g["value"]), kept)
    ctx.check("A5 quotient", _sigs(g["a5"]),
              covers.quotient_signature(19, A5, (2, 5, 5), element_orders=False))


# covers


def _solution_payload(out: covers.CoverOutcome) -> list:
    return [s.to_json() for s in out.solutions]


def sc_case445(ctx: Context) -> None:
    g = _golden("covers.genus10.case445")
    out = covers.solve_cover(covers.case445(), ctx.budget)
    ctx.check("solution count", 1, len(out.solutions))
    sol = out.solutions[0] if out.solutions else None
    want = {k: Fraction(v) for k, v in g["value"].items()}
    ctx.check("(kappa, lambda, mu)", want, sol.values if sol else None)
    num = parse_upoly(g["numerator"], "w") * Fraction(g["scale"])
    ctx.check("numerator of f", num, sol.numerator if sol else None)
    ctx.check("sign branches agree", 2, len(sol.branches) if sol else 0, "derived")
    ctx.payloads["solutions"] = _solution_payload(out)


def sc_case2225(ctx: Context) -> None:
    cases = covers.genus10_cases(covers.Signature(0, (2, 2, 2, 5)))
    feasible = {dict(c.assignment)["0"].count(2) for c in cases if c.feasible}
    ctx.check("feasible placements (index-2 points over 0)", {3, 1}, feasible)
    first = covers.solve_cover(covers.case2225(3), ctx.budget)
    ctx.check("all three over 0: unsolvable", True, first.unsolvable_certificate and not first.solutions)
    out = covers.solve_cover(covers.case2225(1), ctx.budget)
    R = _ring("covers.genus10.case2225.system")
    reference = [R.parse(s) for s in _golden("covers.genus10.case2225.system")["value"]]
    ours = [p.to_ring(R) for p in out.system.gens]
    ctx.check("system", [str(p) for p in reference], [str(p) for p in ours],
              match={p.primitive() for p in reference} == {p.primitive() for p in ours})
    S = _ring("covers.genus10.case2225.ei")
    ei = [S.parse(s) for s in _golden("covers.genus10.case2225.ei")["value"]]
    mine = [p.to_ring(S) for p in out.elimination.gens]
    ctx.check("elimination ideal", [str(p) for p in ei], [str(p) for p in mine], match=same_ideal(ei, mine))
    quartic = parse_upoly(_golden("covers.genus10.case2225.quartic")["value"], "l")
    ctx.check("quartic in lambda", quartic, out.eliminant)
    rel = [s for s in out.solutions if s.field is not None]
    ok = False
    if rel:
        k, l = rel[0].values["k"], rel[0].values["l"]
        ok = 50 * k == -l * (256 * l * l - 25)
    ctx.check("50 kappa = -lambda (256 lambda^2 - 25)", True, ok)
    ctx.payloads["solutions"] = _solution_payload(out)


def sc_genus19(ctx: Context) -> None:
    cases = covers.genus19_cases()
    ctx.check("impossible placements", 2, sum(1 for c in cases if not c.feasible), "derived")
    out = covers.solve_cover(covers.genus19_case(), ctx.budget)
    R = _ring("covers.genus19.system")
    reference = [R.parse(s) for s in _golden("covers.genus19.system")["value"]]
    ours = [p.to_ring(R) for p in out.system.gens]
    ctx.check("system", [str(p) for p in reference], [str(p) for p in ours],
              match={p.primitive() for p in reference} == {p.primitive() for p in ours})
    S = _ring("covers.genus19.ei")
    ei = [S.parse(s) for s in _golden("covers.genus19.ei")["value"]]
    mine = [p.to_ring(S) for p in out.elimination.gens]
    ctx.check("elimination ideal", [str(p) for p in ei], [str(p) for p in mine], match=same_ideal(ei, mine))
    cubic = parse_upoly(_golden("covers.genus19.cubic")["value"], "l")
    ctx.check("cubic in lambda", cubic, out.eliminant)
    rational = [s for s in out.solutions if s.field is None]
    want = {k: Fraction(v) for k, v in _golden("covers.genus19.rational")["value"].items()}
    ctx.check("rational branch", [want], [s.values for s in rational])
    quad = [s for s in out.solutions if s.field is not None]
    qpoly = parse_upoly(_golden("covers.genus19.quadratic")["value"], "l")
    ctx.check("quadratic cofactor", qpoly, quad[0].field.minpoly.primitive() if quad else None)
    ok = False
    if quad:
        k, l = quad[0].values["k"], quad[0].values["l"]
        ok = 972 * k == -783 * l + 64 and 954 * k == 216 * l * l - 799 * l + 64
    ctx.check("kappa relations", True, ok)
    inv = covers.inversion_identity_check(quad[0].values["k"], quad[0].values["l"]) if quad else False
    ctx.check("f(-lambda/(kappa w)) f(w) = 1", True, inv)
    ctx.payloads["solutions"] = _solution_payload(out)


# Galois exclusions


def sc_discriminant(ctx: Context) -> None:
    g = _golden("galois.discriminant")
    cert = covers.discriminant_parity_certificate()
    want = {int(k): Fraction(v) for k, v in g["value"].items()}
    ctx.check("discriminant coefficients", want, cert.coefficients("t"))
    ctx.check("order at t = 0", g["order"], cert.order)
    ctx.check("A6 has an index-2 subgroup", False, cert.index2_subgroup_in_a6)
    ctx.check("exclusion", True, cert.holds)
    ctx.payloads["discriminant"] = str(cert.discriminant)


def sc_resolvent(ctx: Context) -> None:
    f, factors = covers.reference_resolvent_factors()
    cert = covers.resolvent_certificate(factors=factors)
    mism = [k for k in range(max(len(f.coeffs), len(cert.resolvent.coeffs))) if f[k] != cert.resolvent[k]]
    ctx.check("f15 coefficients", "all 16 match", "all 16 match" if not mism else f"differ at {mism}")
    ctx.check("product of reference factors", True, cert.product_matches)
    ctx.check("factors coprime", True, cert.coprime)
    ctx.check("exclusion", True, cert.holds)


SCENARIOS: dict[str, tuple[Callable[[Context], None], str, str]] = {
    "pencil.locus": (sc_pencil_locus, "singular members of the pencil P*F^2 + Phi", "heavy"),
    "pencil.infinity": (sc_pencil_infinity, "singular points on the line z = 0", "light"),
    "pencil.nodality.20250": (_nodality(20250, 36, 0), "36 nodes on C_20250", "light"),
    "pencil.nodality.-10125": (_nodality(-10125, 40, 5), "45 nodes on C_-10125", "light"),
    "pencil.genus": (sc_pencil_genus, "nodal genus formula", "light"),
    "pencil.smoothness": (sc_pencil_smoothness, "F and Phi define smooth curves", "light"),
    "pencil.decomposition": (sc_pencil_decomposition, "orbit and Bezout arithmetic", "medium"),
    "groups.table1": (sc_groups_table1, "conjugacy classes of subgroups of A6", "medium"),
    "groups.valentiner-closure": (sc_groups_valentiner, "closure of the Valentiner generators", "medium"),
    "hurwitz.genus10": (sc_hurwitz_genus10, "quotient signatures for genus 10", "light"),
    "hurwitz.genus19": (sc_hurwitz_genus19, "quotient signatures for genus 19", "medium"),
    "covers.genus10.case445": (sc_case445, "degree-6 map for signature (4,4,5)", "light"),
    "covers.genus10.case2225": (sc_case2225, "degree-6 maps for signature (2,2,2,5)", "light"),
    "covers.genus19": (sc_genus19, "degree-6 maps for signature (2,2,5,5)", "light"),
    "galois.discriminant": (sc_discriminant, "discriminant parity exclusion", "light"),
    "galois.resolvent": (sc_resolvent, "degree-15 resolvent exclusion", "medium"),
}


def list_scenarios() -> list[tuple[str, str, str]]:
    rows = [(k, d, c) for k, (_, d, c) in SCENARIOS.items()]
    rows.append(("all", "every registered scenario", "heavy"))
    return sorted(rows)


@dataclass
class Options:
    cache_dir: str | None = ".icl-cache"
    use_cache: bool = True
    timeout_secs: float | None = None
    gb_path: bool = False
    jobs: int = 1


def _prepare_cache(opts: Options) -> GBCache | None:
    if not opts.use_cache or not opts.cache_dir:
        return None
    os.makedirs(opts.cache_dir, exist_ok=True)
    if not os.access(opts.cache_dir, os.W_OK):
        raise PermissionError(f"cache directory {opts.cache_dir!r} is not writable")
    return GBCache(opts.cache_dir)


def run_scenario(sid: str, opts: Options | None = None) -> ScenarioReport:
    opts = opts or Options()
    if sid == "all":
        return _run_all(opts)
    if sid not in SCENARIOS:
        raise KeyError(f"unknown scenario {sid!r}")
    fn = SCENARIOS[sid][0]
    timeout = opts.timeout_secs
    if timeout is None:
        timeout = HEAVY_TIMEOUT if sid == "pencil.locus" else DEFAULT_TIMEOUT
    ctx = Context(Budget(timeout=timeout), _prepare_cache(opts), opts.gb_path)
    start = time.monotonic()
    try:
        fn(ctx)
        status = "pass" if ctx.checks and all(c.match for c in ctx.checks) else "fail"
    except BudgetExceeded as exc:
        status = "budget-exceeded"
        ctx.payloads["budget"] = str(exc)
    return ScenarioReport(sid, status, ctx.checks, round(time.monotonic() - start, 3), ctx.payloads)


def _run_one(args: tuple[str, Options]) -> dict:
    return run_scenario(*args).to_dict()


def _run_all(opts: Options) -> ScenarioReport:
    start = time.monotonic()
    ids = sorted(SCENARIOS)
    if opts.jobs > 1:
        with ProcessPoolExecutor(max_workers=opts.jobs) as pool:
            reports = [ScenarioReport.from_dict(d) for d in pool.map(_run_one, [(i, opts) for i in ids])]
    else:
        reports = [run_scenario(i, opts) for i in ids]
    checks = [Check(r.id, "pass", "trivial", r.status, r.status == "pass") for r in reports]
    if all(c.match for c in checks):
        status = "pass"
    elif any(r.status == "fail" for r in reports):
        status = "fail"
    else:
        status = "budget-exceeded"
    return ScenarioReport("all", status, checks, round(time.monotonic() - start, 3),
                          {"reports": [r.to_dict() for r in reports]})


def format_text(rep: ScenarioReport) -> str:
    lines = [f"{rep.id:<28} {rep.status:<16} {rep.wall_time:9.2f}s"]
    for c in rep.checks:
        mark = "ok  " if c.match else "FAIL"
        lines.append(f"  {mark} {c.name}: expected {c.expected} ({c.source}), got {c.actual}")
    for sub in rep.payloads.get("reports", []):
        lines.append(format_text(ScenarioReport.from_dict(sub)))
    return "\n".join(lines)


# polynomial utilities


def _read_polys(path: str) -> tuple[Ring, list]:
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    return parse_poly_file(text)


def poly_command(args: argparse.Namespace) -> int:
    ring, polys = _read_polys(args.file)
    if args.action == "gb":
        order = TermOrder.parse(args.order) if args.order else ring.order
        G = groebner(Ideal(ring, polys), order)
        print(format_poly_file(ring.with_order(order), G.basis), end="")
    elif args.action == "eliminate":
        E = eliminate(Ideal(ring, polys), args.vars.split(","))
        print(format_poly_file(E.ring, E.gens), end="")
    elif args.action == "vdim":
        d = vdim(Ideal(ring, polys))
        print("infinite" if d is None else d)
    elif args.action == "resultant":
        if len(polys) != 2:
            raise ValueError("resultant needs exactly two polynomials")
        print(format_poly_file(ring, [sylvester_resultant(polys[0], polys[1], args.var)]), end="")
    elif args.action == "hessian":
        print(format_poly_file(ring, [hessian_det(p) for p in polys]), end="")
    return EXIT_PASS


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # usage errors get their own exit code
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="a6curves", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    run = sub.add_parser("run", help="run a scenario and print its report")
    run.add_argument("scenario")
    run.add_argument("--format", choices=("json", "text"), default="text")
    run.add_argument("--cache-dir", default=".icl-cache")
    run.add_argument("--no-cache", action="store_true")
    run.add_argument("--timeout-secs", type=float, default=None)
    run.add_argument("--gb-path", action="store_true", help="also run the multimodular basis of the full Jacobian")
    run.add_argument("--jobs", type=int, default=1)
    sub.add_parser("list", help="list registered scenarios")
    pc = sub.add_parser("poly", help="polynomial utilities on ring-header files")
    pc.add_argument("action", choices=("gb", "eliminate", "vdim", "resultant", "hessian"))
    pc.add_argument("file", help="input file, '-' for stdin")
    pc.add_argument("--order", default=None)
    pc.add_argument("--vars", default="")
    pc.add_argument("--var", default="x")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "list":
        for sid, desc, cls in list_scenarios():
            print(f"{sid:<28} {cls:<7} {desc}")
        return EXIT_PASS
    if args.command == "poly":
        try:
            return poly_command(args)
        except (OSError, ValueError) as exc:
            print(f"a6curves: {exc}", file=sys.stderr)
            return EXIT_USAGE
    if args.jobs < 1:
        print("a6curves: --jobs must be positive", file=sys.stderr)
        return EXIT_USAGE
    opts = Options(args.cache_dir, not args.no_cache, args.timeout_secs, args.gb_path, args.jobs)
    try:
        rep = run_scenario(args.scenario, opts)
    except KeyError as exc:
        print(f"a6curves: {exc.args[0]}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"a6curves: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(rep.to_json() if args.format == "json" else format_text(rep))
    return rep.exit_code


if __name__ == "__main__":
    sys.exit(main())
