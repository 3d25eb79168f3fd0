import logging
import os
import random
from concurrent.futures import ProcessPoolExecutor
from ohl.bialgebra_lab import run_law
from ohl.errors import ParseError
from ohl.models import CheckResult, LawOutcome
from ohl.suites import build_suite, suite_names
from tqdm import tqdm
from typing import Optional

logger = logging.getLogger(__name__)

# (suite, law index, max degree, shard, shard count)
Task = tuple[str, int, int, int, int]

# Module-level so the pool can pickle it by reference
def run_task(task: Task) -> LawOutcome:
    suite, index, max_degree, shard, shard_count = task
    law = build_suite(suite)[index]
    return run_law(law, max_degree, shard, shard_count)

def read_seed() -> Optional[int]:
    value = os.environ.get("OHL_SEED")
    if value is None or value == "":
        return None

    try:
        return int(value)
    except ValueError:
        raise ParseError(f"OHL_SEED must be an integer, got '{value}'")

def merge_outcomes(outcomes: list[LawOutcome]) -> LawOutcome:
    failures = [outcome for outcome in outcomes if outcome.failure_index is not None]
    if len(failures) == 0:
        return LawOutcome(outcomes[0].cases)

    first = min(failures, key=lambda outcome: outcome.failure_index)
    return first

def run_suites(
    suite: str,
    max_degree: int,
    jobs: int = 1,
    show_progress_bar: bool = True,
) -> list[CheckResult]:
    names = suite_names(suite)
    shard_count = max(jobs, 1)

    tasks = []
    for name in names:
        for index in range(len(build_suite(name))):
            for shard in range(shard_count):
                tasks.append((name, index, max_degree, shard, shard_count))

    order = list(range(len(tasks)))
    seed = read_seed()
    if seed is not None:
        random.Random(seed).shuffle(order)
    logger.debug("running %d tasks over %d workers", len(tasks), shard_count)

    scheduled = [tasks[i] for i in order]
    outcomes: dict[Task, LawOutcome] = {}

    if shard_count == 1:
        iterator = tqdm(scheduled, ascii=True) if show_progress_bar else scheduled
        for task in iterator:
            outcomes[task] = run_task(task)
    else:
        with ProcessPoolExecutor(max_workers=shard_count) as executor:
            results = executor.map(run_task, scheduled)
            if show_progress_bar:
                results = tqdm(results, total=len(scheduled), ascii=True)
            for task, outcome in zip(scheduled, results):
                outcomes[task] = outcome

    reports = []
    for name in names:
        for index, law in enumerate(build_suite(name)):
            shards = [outcomes[(name, index, max_degree, shard, shard_count)] for shard in range(shard_count)]
            merged = merge_outcomes(shards)
            reports.append(CheckResult(name, law.axiom, law.bound(max_degree), merged.cases, merged.witness))

    return reports
