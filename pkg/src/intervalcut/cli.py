"""Command-line entry point: ``intervalcut <subcommand> ...``.

Exit status 0 on success, 2 on bad input, 3 on an internal-consistency abort.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import bench as bench_mod
from .decompose import accounting_check, interval_maxcut, split_tradeoff
from .generators import KINDS, GenSpec
from .graph import FormatError, Graph, NotSplitError, OddCycleError, find_split_partition, format_edge_list, parse_edge_list
from .intervals import IntervalModel, format_intervals, parse_intervals
from .oracle import BudgetExceeded, OracleBudget, exact_maxcut, exact_triangle_packing, is_chordal
from .rounding import RoundingConfig, pipeline_solve, round_perturbed
from .sdp import alpha_gw_constants, format_solution, solve_sdp

EXIT_INPUT = 2
EXIT_INTERNAL = 3


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None


def _load(path: str, cls: str) -> tuple[Graph, IntervalModel | None]:
    text = _read(path)
    if cls == "interval":
        m = parse_intervals(text)
        return m.graph, m
    return parse_edge_list(text), None


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=False))


def _parse_param(s: str):
    key, sep, val = s.partition("=")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected key=value, got {s!r}")
    for conv in (int, float):
        try:
            return key, conv(val)
        except ValueError:
            pass
    return key, val


def cmd_gen(a) -> int:
    spec = GenSpec(a.kind, dict(a.param), a.seed)
    inst = spec.build()
    prefix = Path(a.out)
    prefix.parent.mkdir(parents=True, exist_ok=True)
    written = []
    edges = prefix.with_suffix(".edges")
    edges.write_text(format_edge_list(inst.graph))
    written.append(str(edges))
    if inst.interval is not None:
        p = prefix.with_suffix(".intervals")
        p.write_text(format_intervals(inst.interval))
        written.append(str(p))
    side = {"genspec": spec.to_json(), "n": inst.graph.n, "m": inst.graph.m}
    if inst.split is not None:
        side["clique"] = sorted(inst.split.clique)
        side["independent"] = sorted(inst.split.independent)
    p = prefix.with_suffix(".json")
    p.write_text(json.dumps(side, indent=2) + "\n")
    written.append(str(p))
    _emit({"written": written})
    return 0


def _cfg(a) -> RoundingConfig:
    return RoundingConfig(a.eta, a.trials, a.seed)


def cmd_solve(a) -> int:
    g, model = _load(a.file, a.cls)
    rep = model if a.cls == "interval" else find_split_partition(g) if a.cls == "split" else None
    cfg = _cfg(a)
    res = pipeline_solve(g, rep, cfg, T=a.T, eps=a.eps, rank=a.rank)
    _emit(res.to_json(cfg))
    return 0


def cmd_pack(a) -> int:
    g, model = _load(a.file, a.cls)
    if a.cls == "interval":
        out = interval_maxcut(model, a.T, a.eps)
        rep = accounting_check(out, g, a.T, a.eps)
    else:
        out = split_tradeoff(g, find_split_partition(g))
        rep = None
    body = out.to_json()
    if rep is not None:
        body["accounting"] = {"passed": rep.passed, "checks": [c.__dict__ for c in rep.checks]}
    _emit(body)
    return 0


def cmd_round(a) -> int:
    g = parse_edge_list(_read(a.file))
    cfg = RoundingConfig(a.eta or 0.0, a.trials, a.seed)
    sol = solve_sdp(g, rank=a.rank, seed=a.seed)
    plain, perturbed = round_perturbed(sol, cfg)
    best = max((plain, perturbed), key=lambda c: c.size)
    if a.dump_solution:
        Path(a.dump_solution).write_text(format_solution(sol))
    _emit({
        "size": best.size, "side": best.bitstring(), "provenance": best.provenance,
        "plain_size": plain.size, "perturbed_size": perturbed.size,
        "trials": cfg.trials, "seed": cfg.seed, "eta": cfg.effective_eta,
        "sdp_objective": sol.objective, "ratio_vs_sdp": best.size / sol.objective if sol.objective else None,
        "sdp_sweeps": sol.sweeps, "sdp_converged": sol.converged,
    })
    return 0


def cmd_oracle(a) -> int:
    g = parse_edge_list(_read(a.file))
    budget = OracleBudget(a.max_vertices, a.max_edges)
    size, side = exact_maxcut(g, budget)
    body = {"maxcut": size, "side": "".join("1" if s else "0" for s in side)}
    if a.packing:
        body["triangle_packing"] = exact_triangle_packing(g, budget)
    chordal, order = is_chordal(g)
    body["chordal"] = chordal
    body["elimination_order"] = order
    _emit(body)
    return 0


def cmd_bench(a) -> int:
    suite = bench_mod.SUITES[a.suite](a.seed)
    cfg = RoundingConfig(a.eta, a.trials, a.seed)
    records = bench_mod.run_bench(suite, cfg, OracleBudget(a.max_vertices), a.jobs, a.timing)
    csv_path, json_path = bench_mod.write_results(records, a.out)
    _emit({"rows": len(records), "csv": str(csv_path), "jsonl": str(json_path)})
    return 0


def cmd_constants(a) -> int:
    alpha, theta = alpha_gw_constants()
    _emit({"alpha_gw": alpha, "theta_c": theta, "theta_c_degrees": math.degrees(theta)})
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="intervalcut", description="Max-Cut on interval and split graphs")
    sub = p.add_subparsers(dest="command", required=True)

    def solver_flags(sp, with_class=True):
        if with_class:
            sp.add_argument("--class", dest="cls", choices=("interval", "split", "none"), default="none")
        sp.add_argument("--eta", type=float, default=None, help="override the perturbation width")
        sp.add_argument("--trials", type=int, default=100)
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--rank", type=int, default=None)
        sp.add_argument("--T", type=float, default=200.0)
        sp.add_argument("--eps", type=float, default=0.01)

    g = sub.add_parser("gen", help="write a generated instance")
    g.add_argument("kind", choices=KINDS)
    g.add_argument("--param", type=_parse_param, action="append", default=[], metavar="KEY=VALUE")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", required=True, help="output path prefix")
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("solve", help="full pipeline")
    s.add_argument("file")
    solver_flags(s)
    s.set_defaults(func=cmd_solve)

    pk = sub.add_parser("pack", help="structural decomposition only")
    pk.add_argument("file")
    pk.add_argument("--class", dest="cls", choices=("interval", "split"), required=True)
    pk.add_argument("--T", type=float, default=200.0)
    pk.add_argument("--eps", type=float, default=0.01)
    pk.set_defaults(func=cmd_pack)

    r = sub.add_parser("round", help="SDP plus rounding only")
    r.add_argument("file")
    solver_flags(r, with_class=False)
    r.add_argument("--dump-solution", default=None)
    r.set_defaults(func=cmd_round)

    o = sub.add_parser("oracle", help="exact references")
    o.add_argument("file")
    o.add_argument("--packing", action="store_true")
    o.add_argument("--max-vertices", type=int, default=22)
    o.add_argument("--max-edges", type=int, default=30)
    o.set_defaults(func=cmd_oracle)

    b = sub.add_parser("bench", help="run a benchmark suite")
    b.add_argument("--seed", type=int, required=True)
    b.add_argument("--out", required=True)
    b.add_argument("--suite", choices=sorted(bench_mod.SUITES), default="default")
    b.add_argument("--trials", type=int, default=500)
    b.add_argument("--eta", type=float, default=None)
    b.add_argument("--jobs", type=int, default=1)
    b.add_argument("--max-vertices", type=int, default=22)
    b.add_argument("--timing", action="store_true", help="record wall time (breaks byte-reproducibility)")
    b.set_defaults(func=cmd_bench)

    c = sub.add_parser("constants", help="print alpha_GW and the critical angle")
    c.set_defaults(func=cmd_constants)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (FormatError, NotSplitError, BudgetExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (OddCycleError, AssertionError) as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
