"""
Sweep Service
Classifier-versus-solver sweeps over every connected graph up to a given order
"""

import time
from multiprocessing import Pool
from typing import Iterator, List, Optional, Tuple

import pandas as pd
from tqdm import tqdm

from rainbowindex.domain.entities.domain_entities import (
    Bucket,
    ClassLabel,
    Graph,
    Reason,
    SweepMode,
    SweepRecord,
    SweepReport,
)
from rainbowindex.domain.interfaces.service_interfaces import (
    GraphCodecInterface,
    RainbowSolverInterface,
)
from rainbowindex.domain.services.classifier_service import RxClassifier
from rainbowindex.domain.services.graph_enumeration import MAX_ORDER, enumerate_connected
from rainbowindex.domain.services.graph_structure_service import girth
from rainbowindex.shared.exceptions.domain_exceptions import (
    EnumerationRangeError,
    SearchBudgetExceededError,
)
from rainbowindex.shared.utils.logger_utility import get_logger

logger = get_logger(__name__)

BUDGET_EXHAUSTED = "budget_exhausted"

_worker_state: Optional[Tuple[RxClassifier, RainbowSolverInterface, GraphCodecInterface, SweepMode]] = None


def evaluate_graph(
    graph: Graph,
    classifier: RxClassifier,
    solver: RainbowSolverInterface,
    codec: GraphCodecInterface,
    mode: SweepMode,
) -> SweepRecord:
    """Classify one graph and, in full mode, compare with the exact value."""
    started = time.perf_counter()
    record = SweepRecord(
        graph6=codec.encode(graph),
        n=graph.n,
        m=graph.m,
        cyclomatic=graph.m - graph.n + 1,
        girth=girth(graph),
        label=ClassLabel(graph.n, Bucket.EXACT, Reason.SMALL_ORDER),
    )
    try:
        record.label = classifier.classify_rx3(graph)
        if mode is SweepMode.FULL:
            if record.label.bucket is Bucket.EXACT:
                record.solver_value = record.label.value
            else:
                result = solver.rx_exact(graph, 3)
                if not result.solved:
                    raise SearchBudgetExceededError(
                        "exact solver ran out of budget",
                        lower=result.lower,
                        upper=result.upper,
                        nodes=result.stats.nodes,
                    )
                record.solver_value = result.value
            record.agree = record.label.predicts(record.solver_value)
    except SearchBudgetExceededError:
        record.status = BUDGET_EXHAUSTED
        record.solver_value = None
        record.agree = None
        logger.warning("sweep.budget_exhausted", graph6=record.graph6)
    record.runtime_us = int((time.perf_counter() - started) * 1_000_000)
    return record


def _init_worker(
    classifier: RxClassifier,
    solver: RainbowSolverInterface,
    codec: GraphCodecInterface,
    mode: SweepMode,
) -> None:
    global _worker_state
    _worker_state = (classifier, solver, codec, mode)


def _evaluate_in_worker(graph: Graph) -> SweepRecord:
    classifier, solver, codec, mode = _worker_state
    return evaluate_graph(graph, classifier, solver, codec, mode)


def summarize(records: List[SweepRecord]) -> dict:
    """Counts per bucket, per reason, mismatches and budget exhaustions."""
    if not records:
        return {"graphs": 0, "mismatches": 0, "budget_exhausted": 0}
    frame = pd.DataFrame(
        {
            "bucket": [r.label.bucket.value for r in records],
            "reason": [r.label.reason.value for r in records],
            "agree": [r.agree for r in records],
            "status": [r.status for r in records],
        }
    )
    summary = {"graphs": int(len(frame))}
    for bucket, count in frame["bucket"].value_counts().sort_index().items():
        summary[f"bucket:{bucket}"] = int(count)
    for reason, count in frame["reason"].value_counts().sort_index().items():
        summary[f"reason:{reason}"] = int(count)
    summary["mismatches"] = int((frame["agree"] == False).sum())  # noqa: E712
    summary["budget_exhausted"] = int((frame["status"] == BUDGET_EXHAUSTED).sum())
    return summary


class SweepService:
    """Runs the classifier over all connected graphs up to n_max.

    In full mode every graph is also solved exactly and the verdicts are
    compared. Graphs are independent work items; with several workers they
    go through a process pool and come back in enumeration order.
    """

    def __init__(
        self,
        classifier: RxClassifier,
        solver: RainbowSolverInterface,
        codec: GraphCodecInterface,
        workers: int = 1,
        progress: bool = False,
        schema_version: str = "1.0",
        full_max_order: int = 7,
        max_order: int = MAX_ORDER,
    ):
        self.classifier = classifier
        self.solver = solver
        self.codec = codec
        self.workers = workers
        self.progress = progress
        self.schema_version = schema_version
        self.full_max_order = full_max_order
        self.max_order = min(max_order, MAX_ORDER)

    def _graphs(self, n_max: int) -> Iterator[Graph]:
        for n in range(1, n_max + 1):
            yield from enumerate_connected(n)

    def sweep(self, n_max: int, mode: SweepMode = SweepMode.FULL) -> SweepReport:
        limit = self.full_max_order if mode is SweepMode.FULL else self.max_order
        if not 1 <= n_max <= limit:
            raise EnumerationRangeError(
                f"{mode.value} sweeps support orders 1..{limit}, got {n_max}", n=n_max, limit=limit
            )

        graphs = list(self._graphs(n_max))
        started = time.perf_counter()
        if self.workers > 1 and len(graphs) > 1:
            with Pool(
                processes=min(self.workers, len(graphs)),
                initializer=_init_worker,
                initargs=(self.classifier, self.solver, self.codec, mode),
            ) as pool:
                stream = pool.imap(_evaluate_in_worker, graphs, chunksize=16)
                records = list(tqdm(stream, total=len(graphs), disable=not self.progress, desc="sweep"))
        else:
            records = [
                evaluate_graph(graph, self.classifier, self.solver, self.codec, mode)
                for graph in tqdm(graphs, disable=not self.progress, desc="sweep")
            ]

        report = SweepReport(
            n_max=n_max,
            mode=mode,
            schema_version=self.schema_version,
            records=records,
            summary=summarize(records),
            mismatches=[r.graph6 for r in records if r.agree is False],
            budget_exhausted=[r.graph6 for r in records if r.status == BUDGET_EXHAUSTED],
        )
        logger.info(
            "sweep.done",
            n_max=n_max,
            mode=mode.value,
            graphs=len(records),
            mismatches=len(report.mismatches),
            budget_exhausted=len(report.budget_exhausted),
            seconds=round(time.perf_counter() - started, 3),
        )
        return report
