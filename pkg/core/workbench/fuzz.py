"""Seeded sweeps that re-check the theorems on random graphs.

Instance i uses the seed `seed ^ i`, so a sweep gives the same instances and the same report
whether it runs inline, in a process pool, or on Celery workers.
"""

import logging
import random
from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from core._compat import StrEnum
from fractions import Fraction
from typing import Any

import django
import sentry_sdk
from celery import group
from django.core.exceptions import ValidationError

from core.analysis.bounds import check_frame_equality, check_regular_claw_free, evaluate_bounds, lattice_violations
from core.analysis.observations import check_observations
from core.analysis.small_values import classify_small
from core.analysis.trees import classify_tree
from core.analysis.types import Classification
from core.common.exceptions import WorkbenchError
from core.common.utils import derive_seed
from core.graphs.generators import random_connected_graph, random_regular_graph, random_triangle_free_graph, random_tree
from core.graphs.graph import Graph
from core.graphs.structure import is_claw_free, is_connected, regular_degree
from core.graphs.graph6 import to_graph6
from core.solvers.brute_force import brute_force
from core.solvers.problems import PROBLEMS, Parameter
from core.solvers.services import parameter_table, solve
from core.solvers.types import Engine

logger = logging.getLogger(__name__)

ORACLE_CEILING = 7
ORACLE_TREE_CEILING = 12
OBSERVATIONS_CEILING = 7
# orders below this are raised to it in regular mode
REGULAR_MIN_ORDER = 3


class Mode(StrEnum):
    GRAPHS = "graphs"
    TREES = "trees"
    REGULAR = "regular"
    TRIANGLE_FREE = "triangle_free"


class Check(StrEnum):
    BOUNDS = "bounds"
    CLASSIFY = "classify"
    ORACLE = "oracle"
    OBSERVATIONS = "observations"
    FRAME = "frame"
    CLAW_FREE = "claw_free"


class Backend(StrEnum):
    LOCAL = "local"
    CELERY = "celery"


@dataclass(frozen=True)
class FuzzConfig:
    n_min: int
    n_max: int
    count: int
    seed: int
    mode: Mode = Mode.GRAPHS
    checks: tuple[Check, ...] = tuple(Check)
    budget: int | None = None

    def validate(self) -> None:
        if not 1 <= self.n_min <= self.n_max:
            raise ValidationError(f"need 1 <= n_min <= n_max, got {self.n_min}..{self.n_max}", code="range")
        if self.count < 0:
            raise ValidationError(f"count must be non-negative, got {self.count}", code="range")
        if self.mode is Mode.REGULAR and self.n_max < REGULAR_MIN_ORDER:
            raise ValidationError(f"regular instances need n_max >= {REGULAR_MIN_ORDER}", code="range")
        if Check.ORACLE in self.checks:
            ceiling = ORACLE_TREE_CEILING if self.mode is Mode.TREES else ORACLE_CEILING
            if self.n_max > ceiling:
                raise ValidationError(f"the oracle check allows n_max <= {ceiling} in {self.mode} mode", code="range")
        if Check.OBSERVATIONS in self.checks and self.n_max > OBSERVATIONS_CEILING:
            raise ValidationError(f"the observations check allows n_max <= {OBSERVATIONS_CEILING}", code="range")

    def to_dict(self) -> dict[str, Any]:
        return {**asdict(self), "mode": str(self.mode), "checks": [str(check) for check in self.checks]}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "FuzzConfig":
        return cls(
            **{
                **data,
                "mode": Mode(data["mode"]),
                "checks": tuple(Check(check) for check in data["checks"]),
            },
        )


@dataclass(frozen=True)
class Counterexample:
    index: int
    graph6: str
    check: Check
    detail: str
    # budget exhaustion: nothing was refuted, nothing was certified either
    inconclusive: bool = False
    parameters: dict[str, int] | None = None


@dataclass(frozen=True)
class InstanceResult:
    index: int
    graph6: str
    n: int
    counterexamples: tuple[Counterexample, ...] = ()

    def to_dict(self) -> dict[str, Any]:
        return {
            "index": self.index,
            "graph6": self.graph6,
            "n": self.n,
            "counterexamples": [{**asdict(item), "check": str(item.check)} for item in self.counterexamples],
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "InstanceResult":
        return cls(
            index=data["index"],
            graph6=data["graph6"],
            n=data["n"],
            counterexamples=tuple(
                Counterexample(**{**item, "check": Check(item["check"])}) for item in data["counterexamples"]
            ),
        )


@dataclass(frozen=True)
class FuzzReport:
    config: FuzzConfig
    instances: tuple[InstanceResult, ...] = field(default_factory=tuple)

    @property
    def counterexamples(self) -> tuple[Counterexample, ...]:
        return tuple(item for result in self.instances for item in result.counterexamples if not item.inconclusive)

    @property
    def inconclusive(self) -> tuple[Counterexample, ...]:
        return tuple(item for result in self.instances for item in result.counterexamples if item.inconclusive)

    @property
    def clean(self) -> bool:
        return not any(result.counterexamples for result in self.instances)


def generate_instance(config: FuzzConfig, index: int) -> Graph:
    instance_seed = derive_seed(config.seed, index)
    rng = random.Random(instance_seed)
    n_min = max(config.n_min, REGULAR_MIN_ORDER) if config.mode is Mode.REGULAR else config.n_min
    n = rng.randint(n_min, config.n_max)
    edge_prob = Fraction(rng.randint(3, 7), 10)
    if config.mode is Mode.TREES:
        return random_tree(n, instance_seed)
    if config.mode is Mode.REGULAR:
        return random_regular_graph(n, instance_seed)
    if config.mode is Mode.TRIANGLE_FREE:
        return random_triangle_free_graph(n, edge_prob, instance_seed)
    return random_connected_graph(n, edge_prob, instance_seed)


def _oracle(graph: Graph, config: FuzzConfig) -> list[str]:
    problems = []
    if config.mode is Mode.TREES:
        tree = solve(graph, Parameter.RDRD, engine=Engine.TREE)
        search = solve(graph, Parameter.RDRD, budget=config.budget, engine=Engine.BRANCH_AND_BOUND)
        if tree.value != search.value:
            problems.append(f"tree DP gives {tree.value}, branch and bound gives {search.value}")
        if not PROBLEMS[Parameter.RDRD].check(graph, tree.witness):
            problems.append("tree DP witness is not a valid RDRD labeling")
        return problems
    for parameter in Parameter:
        search = solve(graph, parameter, budget=config.budget, engine=Engine.BRANCH_AND_BOUND)
        naive = brute_force(graph, parameter)
        if search.value != naive.value:
            problems.append(f"{parameter}: branch and bound gives {search.value}, enumeration gives {naive.value}")
        verdict = PROBLEMS[parameter].check(graph, search.witness)
        if not verdict:
            problems.append(f"{parameter}: witness rejected, {verdict.describe()}")
    return problems


def _bounds(graph: Graph, config: FuzzConfig) -> list[str]:
    report = evaluate_bounds(graph, config.budget)
    problems = [f"{entry.name}: {entry.lhs} > {entry.rhs}" for entry in report.violations]
    return problems + lattice_violations(report.parameters)


def _classify(graph: Graph, config: FuzzConfig) -> list[str]:
    value = solve(graph, Parameter.RDRD, budget=config.budget).value
    n = graph.n
    if config.mode is Mode.TREES:
        if n < 2:
            return []
        tag = classify_tree(graph)
        problems = []
        if value < n + 1:
            problems.append(f"value {value} below n + 1")
        if (tag.classification is Classification.TREE_STAR) != (value == n + 1):
            problems.append(f"tag {tag.describe()} but value {value} (n + 1 = {n + 1})")
        if (tag.classification in (Classification.TREE_T1, Classification.TREE_T2)) != (value == n + 2):
            problems.append(f"tag {tag.describe()} but value {value} (n + 2 = {n + 2})")
        return problems
    tag = classify_small(graph)
    if tag.value is None and value <= 5:
        return [f"tag OTHER but value {value}"]
    if tag.value is not None and tag.value != value:
        return [f"tag {tag.describe()} but value {value}"]
    return []


def _observations(graph: Graph, config: FuzzConfig) -> list[str]:
    report = check_observations(graph, ceiling=OBSERVATIONS_CEILING, budget=config.budget)
    problems = [f"leaf labeled 0 in optimum {labeling.values}" for labeling in report.leaf_violations]
    problems += [f"max-zero optimum {labeling.values} has a 1 next to a 0 or 1" for labeling in report.structure_violations]
    return problems


def _frame(graph: Graph, config: FuzzConfig) -> list[str]:
    frame = check_frame_equality(graph, config.budget)
    if frame.equality_holds != frame.condition_holds:
        return [f"equality {frame.equality_holds} but condition {frame.condition_holds} ({frame})"]
    return []



def _claw_free(graph: Graph, config: FuzzConfig) -> list[str]:
    if not is_connected(graph) or regular_degree(graph) is None or not is_claw_free(graph):
        return []
    check = check_regular_claw_free(graph, config.budget)
    if not check.consistent:
        frame = check.gamma + check.gamma_r
        return [f"family {check.family} but gamma_rdR {check.gamma_rdrd} vs gamma + gamma_r {frame}"]
    return []


CHECKS: dict[Check, Callable[[Graph, FuzzConfig], list[str]]] = {
    Check.ORACLE: _oracle,
    Check.BOUNDS: _bounds,
    Check.CLASSIFY: _classify,
    Check.OBSERVATIONS: _observations,
    Check.FRAME: _frame,
    Check.CLAW_FREE: _claw_free,
}


def _parameters(graph: Graph, config: FuzzConfig) -> dict[str, int] | None:
    try:
        return {str(parameter): value for parameter, value in parameter_table(graph, config.budget).items()}
    except WorkbenchError:
        return None


def run_instance(config: FuzzConfig, index: int) -> InstanceResult:
    graph = generate_instance(config, index)
    graph6 = to_graph6(graph).decode()
    found = []
    for check in config.checks:
        try:
            problems = CHECKS[check](graph, config)
        except WorkbenchError as exc:
            found.append(Counterexample(index, graph6, check, str(exc), inconclusive=True))
            continue
        if problems:
            parameters = _parameters(graph, config)
            found.extend(Counterexample(index, graph6, check, detail, parameters=parameters) for detail in problems)
    return InstanceResult(index=index, graph6=graph6, n=graph.n, counterexamples=tuple(found))


def _setup_worker() -> None:
    django.setup()


def _run_pair(pair: tuple[FuzzConfig, int]) -> InstanceResult:
    return run_instance(*pair)


def run_fuzz(config: FuzzConfig, *, jobs: int = 1, backend: Backend = Backend.LOCAL) -> FuzzReport:
    config.validate()
    if jobs < 1:
        raise ValidationError(f"jobs must be at least 1, got {jobs}", code="range")
    logger.info("Fuzzing %s %s instances, n in %s..%s, seed %s", config.count, config.mode, config.n_min, config.n_max, config.seed)

    if backend is Backend.CELERY:
        from .tasks import fuzz_instance

        payload = config.to_dict()
        outcome = group(fuzz_instance.s(payload, index) for index in range(config.count)).apply_async()
        # eager results never reach the result backend; join reads each one directly
        results = [InstanceResult.from_dict(data) for data in outcome.join()]
    elif jobs == 1:
        results = [run_instance(config, index) for index in range(config.count)]
    else:
        with ProcessPoolExecutor(max_workers=jobs, initializer=_setup_worker) as executor:
            results = list(executor.map(_run_pair, ((config, index) for index in range(config.count))))

    report = FuzzReport(config=config, instances=tuple(sorted(results, key=lambda result: result.index)))
    for item in report.counterexamples:
        logger.info("Counterexample #%s %s [%s]: %s", item.index, item.graph6, item.check, item.detail)
        sentry_sdk.capture_message(f"fuzz counterexample {item.graph6} [{item.check}]: {item.detail}", level="error")
    logger.info(
        "Fuzz finished: %s instances, %s counterexamples, %s inconclusive",
        len(report.instances),
        len(report.counterexamples),
        len(report.inconclusive),
    )
    return report
