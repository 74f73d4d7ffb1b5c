"""Report assembly, fuzzing/enumeration drivers, and the worker pool.

All report payloads are JSON-serializable dicts built from deterministic
data only; wall-clock timings are kept out of them so identical inputs
produce byte-identical reports (timings go to the log stream or behind an
explicit flag).
"""

from __future__ import annotations

import multiprocessing
import os
import sys
import time
from dataclasses import dataclass, field as dataclass_field

from .betti import FieldSpec
from .classifier import Certificate, classify
from .deciders import (
    CheckAllResult,
    SplitLeaf,
    SplitNode,
    SplitTree,
    check_all,
)
from .formats import oriented_to_json_obj
from .oriented import WeightedOrientedGraph
from .randgen import SplitMix64, enumerate_graphs, random_graph

EXIT_OK = 0
EXIT_PARSE_ERROR = 2
EXIT_INCONSISTENT = 3


@dataclass
class FuzzConfig:
    """Knobs for the fuzz and enumerate drivers."""

    n: int = 5
    max_weight: int = 3
    count: int = 1000
    seed: int = 42
    field: FieldSpec = dataclass_field(default_factory=FieldSpec.rationals)
    mode: str = "fuzz"
    verify_all: bool = False
    timeout_secs: float | None = 60.0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.max_weight < 1:
            raise ValueError("max_weight must be >= 1")
        if self.count < 1:
            raise ValueError("count must be >= 1")
        if self.mode not in ("fuzz", "enumerate"):
            raise ValueError(f"unknown mode {self.mode!r}")


def split_tree_to_json(tree: SplitTree | None):
    if tree is None:
        return None
    if isinstance(tree, SplitLeaf):
        return {"leaf": tree.kind}
    return {
        "split": tree.variable,
        "quotient": split_tree_to_json(tree.quotient),
        "remainder": split_tree_to_json(tree.remainder),
    }


def certificate_to_json(cert: Certificate) -> dict:
    return {
        "decided": cert.decided,
        "value": cert.value,
        "theorem_tag": cert.theorem_tag,
        "reason": cert.reason,
    }


def engine_to_json(result: CheckAllResult, ideal) -> dict:
    return {
        "ideal": [str(g) for g in ideal.generators],
        "cl": result.componentwise_linear,
        "lq": result.linear_quotients,
        "lq_order": list(result.quotient_order) if result.quotient_order is not None else None,
        "vs": result.vertex_splittable,
        "vs_tree": split_tree_to_json(result.split_tree),
        "regularity": result.regularity,
        "max_gen_degree": result.max_generator_degree,
        "cl_components": [
            {
                "degree": c.degree,
                "generators": c.generator_count,
                "method": c.method,
                "linear": c.linear,
                "regularity": c.regularity,
            }
            for c in result.components
        ],
        "implication_violation": result.implication_violation,
        "conjecture_counterexample": result.conjecture_counterexample,
    }


def classification_report(
    graph: WeightedOrientedGraph,
    field: FieldSpec = FieldSpec(0),
    run_engine: bool = True,
    with_timings: bool = False,
) -> dict:
    """Full per-instance report: certificate plus (optionally) the engine."""
    report: dict = {"input": oriented_to_json_obj(graph)}
    timings: dict[str, float] = {}
    start = time.monotonic()
    cert = classify(graph)
    timings["classify_ms"] = (time.monotonic() - start) * 1000.0
    report["certificate"] = certificate_to_json(cert)
    engine = None
    if run_engine or not cert.decided:
        ideal = graph.edge_ideal()
        start = time.monotonic()
        engine = check_all(ideal, field)
        timings["engine_ms"] = (time.monotonic() - start) * 1000.0
        report["engine"] = engine_to_json(engine, ideal)
        report["conjecture_consistent"] = (
            engine.componentwise_linear
            == engine.linear_quotients
            == engine.vertex_splittable
        )
        if cert.decided and cert.value != engine.componentwise_linear:
            report["soundness_violation"] = (
                f"classifier decided {cert.value} but the engine computed "
                f"{engine.componentwise_linear}"
            )
    else:
        report["engine"] = None
        report["conjecture_consistent"] = None
    report["field"] = str(field)
    if with_timings:
        report["timings_ms"] = {k: round(v, 3) for k, v in timings.items()}
    return report


def report_exit_code(report: dict) -> int:
    engine = report.get("engine")
    if engine and engine.get("implication_violation"):
        return EXIT_INCONSISTENT
    if report.get("soundness_violation"):
        return EXIT_INCONSISTENT
    return EXIT_OK


def fuzz_instances(config: FuzzConfig) -> list[WeightedOrientedGraph]:
    rng = SplitMix64(config.seed)
    return [random_graph(rng, config.n, config.max_weight) for _ in range(config.count)]


def enumerate_instances(config: FuzzConfig) -> list[WeightedOrientedGraph]:
    """Instances on exactly n vertices, deduplicated by canonical edge ideal."""
    seen = set()
    out = []
    for graph in enumerate_graphs(config.n, config.max_weight):
        ideal = graph.edge_ideal()
        if ideal in seen:
            continue
        seen.add(ideal)
        out.append(graph)
    return out


def evaluate_instance(index: int, graph: WeightedOrientedGraph, config: FuzzConfig) -> dict:
    verify = config.verify_all or config.mode == "enumerate"
    row = classification_report(graph, config.field, run_engine=verify)
    row = {"index": index, **row}
    return row


def _pool_worker(args) -> dict:
    index, payload, config = args
    graph = WeightedOrientedGraph(
        payload["vertices"], [tuple(a) for a in payload["arcs"]], payload["weights"]
    )
    return evaluate_instance(index, graph, config)


def _graph_payload(graph: WeightedOrientedGraph) -> dict:
    return {
        "vertices": graph.vertices,
        "arcs": graph.arc_list(),
        "weights": graph.weights(),
    }


def worker_count() -> int:
    cap = os.environ.get("CWL_THREADS")
    workers = os.cpu_count() or 1
    if cap:
        try:
            workers = min(workers, max(1, int(cap)))
        except ValueError:
            pass
    return workers


def run_instances(
    instances: list[WeightedOrientedGraph],
    config: FuzzConfig,
    workers: int = 1,
    log=None,
) -> tuple[list[dict], list[dict]]:
    """Evaluate instances in index order; returns (rows, skipped).

    With more than one worker the instances are dispatched to a process
    pool and collected by index.  A per-instance timeout marks the
    instance as skipped (logged, never silently dropped) and restarts the
    pool; timeouts are not enforced in single-worker in-process mode.
    """
    log = log if log is not None else sys.stderr
    skipped: list[dict] = []
    if workers <= 1:
        rows = [evaluate_instance(i, g, config) for i, g in enumerate(instances)]
        return rows, skipped
    rows = []
    pending = [(i, _graph_payload(g), config) for i, g in enumerate(instances)]
    pos = 0
    ctx = multiprocessing.get_context("fork")
    pool = ctx.Pool(processes=workers)
    try:
        while pos < len(pending):
            batch = pending[pos:]
            results = [pool.apply_async(_pool_worker, (item,)) for item in batch]
            restart = False
            for offset, handle in enumerate(results):
                try:
                    timeout = config.timeout_secs if config.timeout_secs else None
                    rows.append(handle.get(timeout=timeout))
                    pos += 1
                except multiprocessing.TimeoutError:
                    index = batch[offset][0]
                    print(f"cwlkit: instance {index} timed out; skipped", file=log)
                    skipped.append({"index": index, "reason": "timeout"})
                    pos += 1
                    restart = True
                    break
            if restart:
                pool.terminate()
                pool.join()
                pool = ctx.Pool(processes=workers)
    finally:
        pool.terminate()
        pool.join()
    return rows, skipped


def summarize(rows: list[dict], skipped: list[dict], config: FuzzConfig) -> dict:
    by_tag: dict[str, int] = {}
    decided = 0
    verified = 0
    counterexamples = []
    violations = []
    for row in rows:
        tag = row["certificate"]["theorem_tag"]
        by_tag[tag] = by_tag.get(tag, 0) + 1
        if row["certificate"]["decided"]:
            decided += 1
        engine = row.get("engine")
        if engine is not None:
            verified += 1
            if row.get("conjecture_consistent") is False:
                counterexamples.append(row)
            if engine.get("implication_violation"):
                violations.append(row)
            if row.get("soundness_violation"):
                violations.append(row)
    return {
        "summary": {
            "mode": config.mode,
            "seed": config.seed,
            "n": config.n,
            "max_weight": config.max_weight,
            "field": str(config.field),
            "instances": len(rows),
            "classifier_decided": decided,
            "engine_verified": verified,
            "certificates_by_tag": dict(sorted(by_tag.items())),
            "conjecture_counterexamples": [r["index"] for r in counterexamples],
            "implication_violations": [r["index"] for r in violations],
            "skipped": skipped,
        }
    }


def run_fuzz(config: FuzzConfig, workers: int = 1, log=None) -> tuple[list[dict], dict]:
    instances = fuzz_instances(config)
    started = time.monotonic()
    rows, skipped = run_instances(instances, config, workers, log)
    elapsed = time.monotonic() - started
    if log is None:
        log = sys.stderr
    if elapsed > 0:
        print(
            f"cwlkit: {len(rows)} instances in {elapsed:.1f}s "
            f"({len(rows) / elapsed:.1f}/s)",
            file=log,
        )
    return rows, summarize(rows, skipped, config)


def run_enumerate(config: FuzzConfig, workers: int = 1, log=None) -> tuple[list[dict], dict]:
    instances = enumerate_instances(config)
    rows, skipped = run_instances(instances, config, workers, log)
    return rows, summarize(rows, skipped, config)
