"""Naive vs path-cover chaining benchmark on synthetic graphs.

Each instance is a generated DAG, a read sampled from one of its paths with a
few substitutions, and the anchors found for that read.  Both chaining
methods get identical anchors; only the chaining calls are timed.
"""
from __future__ import annotations

import json
import random
import statistics
import time
from dataclasses import asdict, dataclass, field
from typing import Optional

from .anchors import AnchorParams, find_anchors, sample_read
from .chaining import chain_dag_mpc, chain_dag_naive
from .graph import generate_dag
from .reach import cover_and_links


@dataclass
class CorpusSpec:
    nodes: tuple[int, int] = (5000, 12000)
    widths: tuple[int, ...] = (2, 5, 10)
    anchor_ranges: tuple[tuple[int, int], ...] = ((2, 10), (11, 100), (101, 1000), (1001, 2000))
    instances_per_cell: int = 1
    read_length: int = 1000
    alphabet: int = 4
    min_length: int = 3
    mutation_rate: float = 0.05
    cross_edges_per_node: float = 0.5
    repeats: int = 1
    seed: int = 0


@dataclass
class BenchRecord:
    nodes: int
    edges: int
    k: int
    N: int
    naive_ms: float
    mpc_ms: float
    cover_ms: float
    naive_coverage: int
    mpc_coverage: int
    target_width: int
    seed: int


def decade(N: int) -> int:
    """Smallest ``b`` with ``N <= 10**b``: N falls in ``(10**(b-1) .. 10**b]``."""
    b = 0
    while 10**b < N:
        b += 1
    return b


def _summary(rows: list[BenchRecord]) -> dict:
    def sd(xs):
        return statistics.stdev(xs) if len(xs) > 1 else 0.0

    mpc = [r.mpc_ms for r in rows]
    naive = [r.naive_ms for r in rows]
    return {
        "count": len(rows),
        "mean_nodes": statistics.mean(r.nodes for r in rows),
        "mpc_mean_ms": statistics.mean(mpc),
        "mpc_std_ms": sd(mpc),
        "naive_mean_ms": statistics.mean(naive),
        "naive_std_ms": sd(naive),
    }


@dataclass
class BenchReport:
    records: list[BenchRecord] = field(default_factory=list)
    spec: Optional[CorpusSpec] = None

    def by_k(self) -> dict[int, dict]:
        groups: dict[int, list[BenchRecord]] = {}
        for r in self.records:
            groups.setdefault(r.k, []).append(r)
        return {k: _summary(groups[k]) for k in sorted(groups)}

    def by_decade(self) -> dict[int, dict]:
        groups: dict[int, list[BenchRecord]] = {}
        for r in self.records:
            groups.setdefault(decade(r.N), []).append(r)
        return {b: _summary(groups[b]) for b in sorted(groups)}

    def to_jsonl(self) -> str:
        lines = [json.dumps(asdict(r), sort_keys=True) for r in self.records]
        return "\n".join(lines) + ("\n" if lines else "")

    def to_json(self) -> str:
        return json.dumps(
            {
                "spec": asdict(self.spec) if self.spec else None,
                "records": [asdict(r) for r in self.records],
                "by_k": self.by_k(),
                "by_decade": {f"(10^{b - 1}..10^{b}]": s for b, s in self.by_decade().items()},
            },
            indent=2,
            sort_keys=True,
        )

    def render_text(self) -> str:
        out = ["  k  #graphs  mean|V|   MPC method          Naive method"]
        for k, s in self.by_k().items():
            out.append(
                f"{k:>3}  {s['count']:>7}  {s['mean_nodes']:>7.0f}   "
                f"{s['mpc_mean_ms']:>8.1f} ±{s['mpc_std_ms']:>7.1f}ms  "
                f"{s['naive_mean_ms']:>9.1f} ±{s['naive_std_ms']:>8.1f}ms"
            )
        out.append("")
        out.append("  N              mean|V|   MPC method          Naive method")
        for b, s in self.by_decade().items():
            label = f"(10^{b - 1}..10^{b}]"
            out.append(
                f"{label:<14}  {s['mean_nodes']:>7.0f}   "
                f"{s['mpc_mean_ms']:>8.1f} ±{s['mpc_std_ms']:>7.1f}ms  "
                f"{s['naive_mean_ms']:>9.1f} ±{s['naive_std_ms']:>8.1f}ms"
            )
        return "\n".join(out) + "\n"


def _timed(fn, repeats):
    best, result = None, None
    for _ in range(max(1, repeats)):
        t0 = time.perf_counter()
        result = fn()
        dt = (time.perf_counter() - t0) * 1000.0
        best = dt if best is None else min(best, dt)
    return best, result


def run_instance(nodes, width, n_anchors, spec: CorpusSpec, seed: int) -> BenchRecord:
    dag = generate_dag(
        nodes,
        width,
        label_alphabet=spec.alphabet,
        seed=seed,
        cross_edges=int(nodes * spec.cross_edges_per_node),
    )
    read, _ = sample_read(dag, spec.read_length, spec.mutation_rate, spec.alphabet, seed=seed + 1)
    anchors = find_anchors(dag, read, AnchorParams(spec.min_length, n_anchors))
    t0 = time.perf_counter()
    cover, _, links = cover_and_links(dag)
    cover_ms = (time.perf_counter() - t0) * 1000.0
    naive_ms, naive = _timed(lambda: chain_dag_naive(dag, anchors), spec.repeats)
    mpc_ms, mpc = _timed(lambda: chain_dag_mpc(dag, anchors, cover, links), spec.repeats)
    return BenchRecord(
        nodes=dag.node_count,
        edges=dag.edge_count,
        k=cover.K,
        N=len(anchors),
        naive_ms=naive_ms,
        mpc_ms=mpc_ms,
        cover_ms=cover_ms,
        naive_coverage=naive.coverage,
        mpc_coverage=mpc.coverage,
        target_width=width,
        seed=seed,
    )


def bench(spec: CorpusSpec = CorpusSpec(), progress=None) -> BenchReport:
    """Run every (width, anchor range) cell ``instances_per_cell`` times."""
    rng = random.Random(spec.seed)
    report = BenchReport(spec=spec)
    for width in spec.widths:
        for lo, hi in spec.anchor_ranges:
            for _ in range(spec.instances_per_cell):
                nodes = rng.randint(*spec.nodes)
                target = rng.randint(lo, hi)
                seed = rng.randrange(2**31)
                rec = run_instance(nodes, width, target, spec, seed)
                report.records.append(rec)
                if progress is not None:
                    progress(rec)
    return report
