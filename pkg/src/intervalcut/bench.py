"""Benchmark harness: run the pipeline over a generator grid and persist rows."""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Any, Iterable, Sequence

from .generators import GenSpec
from .oracle import DEFAULT_BUDGET, OracleBudget, exact_maxcut, exact_maxcut_with_independent_set
from .rounding import RoundingConfig, pipeline_solve


@dataclass(frozen=True)
class BenchRecord:
    instance_id: str
    generator_spec: str
    n: int
    m: int
    branch: str
    cut_size: int
    oracle_mc: int | None
    sdp_objective: float | None
    ratio_vs_oracle: float | None
    ratio_vs_sdp: float | None
    eta: float | None
    trials: int
    wall_time_ms: float | None
    seed: int


COLUMNS = [f.name for f in fields(BenchRecord)]


def default_suite(seed: int) -> list[tuple[str, GenSpec]]:
    """The standard grid; instance seeds are offsets of ``seed``."""
    out: list[tuple[str, GenSpec]] = []
    i = 0

    def add(name: str, spec: GenSpec) -> None:
        out.append((f"{len(out):03d}-{name}", spec))

    for n in (6, 10, 14, 16, 60):
        for scale in (3, 8):
            add(f"interval-n{n}-s{scale}", GenSpec("random-interval", {"n": n, "length_scale": scale * max(1, n // 8)}, seed + i))
            i += 1
    for nk, ni, p in ((3, 5, 0.3), (5, 6, 0.5), (8, 6, 0.4), (12, 4, 0.5), (4, 12, 0.6), (30, 20, 0.5)):
        add(f"split-k{nk}-i{ni}", GenSpec("random-split", {"n_clique": nk, "n_indep": ni, "attach_prob": p}, seed + i))
        i += 1
    for k in range(2, 9):
        add(f"segtree-k{k}", GenSpec("segment-tree", {"k": k}, seed))
    for k in (2, 3):
        add(f"chordal-k{k}", GenSpec("chordal-counterexample", {"k": k}, seed))
    for n in (4, 5):
        add(f"reduction-n{n}", GenSpec("split-reduction", {"n": n, "density": 0.5}, seed + i))
        i += 1
    return out


def segment_tree_suite(seed: int, ks: Iterable[int] = range(2, 9)) -> list[tuple[str, GenSpec]]:
    return [(f"{j:03d}-segtree-k{k}", GenSpec("segment-tree", {"k": k}, seed)) for j, k in enumerate(ks)]


SUITES = {"default": default_suite, "segment-tree": segment_tree_suite}


def _oracle(inst, budget: OracleBudget) -> int | None:
    g = inst.graph
    if g.n <= budget.max_vertices_cut:
        return exact_maxcut(g, budget)[0]
    if inst.split is not None and len(inst.split.clique) <= budget.max_vertices_cut:
        return exact_maxcut_with_independent_set(g, inst.split.independent, budget)[0]
    return None


def run_instance(
    instance_id: str,
    spec: GenSpec,
    cfg: RoundingConfig,
    budget: OracleBudget = DEFAULT_BUDGET,
    record_time: bool = False,
) -> BenchRecord:
    inst = spec.build()
    rep = inst.interval if inst.interval is not None else inst.split
    start = time.perf_counter()
    res = pipeline_solve(inst.graph, rep, cfg)
    elapsed = (time.perf_counter() - start) * 1000.0
    mc = _oracle(inst, budget)
    size = res.cut.size
    return BenchRecord(
        instance_id=instance_id,
        generator_spec=json.dumps(spec.to_json(), sort_keys=True),
        n=inst.graph.n,
        m=inst.graph.m,
        branch=res.branch,
        cut_size=size,
        oracle_mc=mc,
        sdp_objective=res.sdp_objective,
        ratio_vs_oracle=(size / mc if mc else None),
        ratio_vs_sdp=(size / res.sdp_objective if res.sdp_objective else None),
        eta=res.eta,
        trials=cfg.trials,
        wall_time_ms=elapsed if record_time else None,
        seed=cfg.seed,
    )


def _run_row(args):
    return run_instance(*args)


def run_bench(
    suite: Sequence[tuple[str, GenSpec]],
    cfg: RoundingConfig,
    budget: OracleBudget = DEFAULT_BUDGET,
    jobs: int = 1,
    record_time: bool = False,
) -> list[BenchRecord]:
    """Rows in instance-id order regardless of completion order."""
    work = [(iid, spec, cfg, budget, record_time) for iid, spec in sorted(suite, key=lambda x: x[0])]
    if jobs <= 1:
        return [_run_row(w) for w in work]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_row, work))


def _fmt(x: Any) -> str:
    if x is None:
        return ""
    if isinstance(x, float):
        return format(x, ".17g")
    return str(x)


def _json_value(x: Any) -> str:
    if isinstance(x, float):
        return format(x, ".17g")
    return json.dumps(x)


def records_csv(records: Sequence[BenchRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(COLUMNS)
    for r in records:
        w.writerow([_fmt(getattr(r, c)) for c in COLUMNS])
    return buf.getvalue()


def records_jsonl(records: Sequence[BenchRecord]) -> str:
    lines = []
    for r in records:
        body = ", ".join(f"{json.dumps(c)}: {_json_value(getattr(r, c))}" for c in COLUMNS)
        lines.append("{" + body + "}")
    return "".join(line + "\n" for line in lines)


def read_jsonl(text: str) -> list[BenchRecord]:
    return [BenchRecord(**json.loads(line)) for line in text.splitlines() if line.strip()]


def write_results(records: Sequence[BenchRecord], out_dir: str | Path, stem: str = "bench") -> tuple[Path, Path]:
    out = Path(out_dir)
    try:
        out.mkdir(parents=True, exist_ok=True)
        csv_path, json_path = out / f"{stem}.csv", out / f"{stem}.jsonl"
        csv_path.write_text(records_csv(records))
        json_path.write_text(records_jsonl(records))
    except OSError as exc:
        raise OSError(f"cannot write results under {out}: {exc}") from exc
    return csv_path, json_path
