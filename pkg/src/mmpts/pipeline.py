"""The enumeration pipeline: seeds -> completions -> canonical dedupe.

Work is cut into tasks (one per seed, or per split subproblem).  Each task
fills its own store; stores are merged in task order, so the outcome does not
depend on the number of workers or on scheduling.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .canonical import IsoStore, canonical_form, merge
from .design import Claim, Design, SystemType, classify_type, validate
from .search import CoverProblem, Engine, Seed, build_problem, enumerate_completions, split_work
from .seeds import SEARCH_SEED_NAMES, paper_seeds, staged_seeds
from .transforms import derive_all

log = logging.getLogger(__name__)

# number of points whose stars are fixed before completing, by order
STAGES = {13: 3, 14: 4, 15: 4}


class EngineMismatch(RuntimeError):
    pass


@dataclass
class EnumerationResult:
    v: int
    method: str
    raw: int
    store: IsoStore
    per_seed: list[tuple[str, int]] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def classes(self) -> int:
        return len(self.store)

    def designs(self) -> list[Design]:
        return self.store.designs()

    def type_counts(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for d in self.designs():
            t = classify_type(d).value
            counts[t] = counts.get(t, 0) + 1
        return counts


def default_method(v: int) -> str:
    # matching and tripod leaves come most cheaply from the next order up
    if v % 6 in (0, 2) and v >= 14:
        return "derive"
    if v % 6 == 4 and v >= 16:
        return "derive"
    return "direct"


def auto_seeds(v: int) -> list[Seed]:
    return staged_seeds(v, STAGES.get(v, 1))


def search_seeds(v: int, kind: str = "auto", type_filter: str = "both") -> list[Seed]:
    if kind == "paper":
        if v != 17:
            raise ValueError("the paper seeds are for v = 17 only")
        table = paper_seeds()
        names = [n for n in SEARCH_SEED_NAMES if type_filter == "both" or n[0].lower() == type_filter]
        return [table[n] for n in names]
    if kind != "auto":
        raise ValueError(f"unknown seed set {kind!r}")
    return auto_seeds(v)


@dataclass(frozen=True)
class _Task:
    seed: str
    problem: CoverProblem
    engines: tuple[str, ...]
    check: bool


def _run_task(task: _Task) -> tuple[str, int, IsoStore]:
    store = IsoStore()
    v = task.problem.v

    def visit(d: Design) -> None:
        if task.check:
            validate(d, Claim.MMPTS).raise_first()
        form, _ = canonical_form(d, with_group=False)
        store.add(form.key, form.design)

    count = enumerate_completions(task.problem, visit, task.engines[0])
    for other in task.engines[1:]:
        n = enumerate_completions(task.problem, None, other)
        if n != count:
            raise EngineMismatch(f"{task.seed}: {task.engines[0]} found {count}, {other} found {n}")
    log.debug("task %s (v=%d): %d completions, %d classes", task.seed, v, count, len(store))
    return task.seed, count, store


def run_tasks(tasks: Sequence[_Task], workers: int = 1) -> list[tuple[str, int, IsoStore]]:
    if workers <= 1 or len(tasks) <= 1:
        return [_run_task(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run_task, tasks, chunksize=max(1, len(tasks) // (8 * workers))))


def complete_seeds(
    seeds: Sequence[Seed],
    engine: str = "backtrack",
    workers: int = 1,
    split_depth: int = 0,
    check: bool = False,
) -> tuple[int, list[tuple[str, int]], IsoStore]:
    engines = ("backtrack", "dlx") if engine == "both" else (Engine(engine).value,)
    tasks = []
    for s in seeds:
        for sub in split_work(build_problem(s), split_depth):
            tasks.append(_Task(s.name, sub, engines, check))
    results = run_tasks(tasks, workers)
    per_seed: dict[str, int] = {}
    for name, count, _ in results:
        per_seed[name] = per_seed.get(name, 0) + count
    store = merge(r[2] for r in results)
    order = list(dict.fromkeys(s.name for s in seeds))
    return sum(per_seed.values()), [(n, per_seed.get(n, 0)) for n in order], store


def _filter_type(store: IsoStore, type_filter: str) -> IsoStore:
    if type_filter == "both":
        return store
    want = SystemType(type_filter.upper())
    out = IsoStore()
    for k in store.keys():
        e = store.entries[k]
        if classify_type(e.design) is want:
            out.add(k, e.design, e.hits)
    return out


def enumerate_designs(
    v: int,
    method: str = "auto",
    seeds: str = "auto",
    engine: str = "backtrack",
    workers: int = 1,
    split_depth: int = 0,
    type_filter: str = "both",
    check: bool = False,
    progress: Callable[[str], None] | None = None,
    parent: EnumerationResult | None = None,
) -> EnumerationResult:
    """All MMPTS(v) up to isomorphism, one canonical representative per class.

    With ``method="derive"`` the classes of order v + 1 are enumerated (or
    taken from ``parent``) and every admissible point is deleted.
    """
    start = time.perf_counter()
    if method == "auto":
        method = default_method(v)
    if method == "derive":
        if v % 6 not in (0, 2, 4):
            raise ValueError(f"derivation needs v = 0, 2 or 4 mod 6, got {v}")
        if parent is None:
            parent = enumerate_designs(
                v + 1, "auto", seeds, engine, workers, split_depth, "both", check, progress
            )
        elif parent.v != v + 1:
            raise ValueError(f"parent corpus has order {parent.v}, expected {v + 1}")
        if progress:
            progress(f"derived from {parent.classes} classes of order {v + 1}")
        derived = derive_all(parent.designs(), "delete-point")
        store = IsoStore()
        for k in sorted(derived.classes):
            store.add(k, derived.classes[k])
        store = _filter_type(store, type_filter)
        per_seed = [(f"order{v + 1}", parent.classes)]
        return EnumerationResult(v, method, derived.raw, store, per_seed, time.perf_counter() - start)
    if method != "direct":
        raise ValueError(f"unknown method {method!r}")
    seed_list = search_seeds(v, seeds, type_filter)
    if progress:
        progress(f"v={v}: {len(seed_list)} seeds")
    raw, per_seed, store = complete_seeds(seed_list, engine, workers, split_depth, check)
    store = _filter_type(store, type_filter)
    return EnumerationResult(v, method, raw, store, per_seed, time.perf_counter() - start)
