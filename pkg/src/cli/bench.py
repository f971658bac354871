import logging
import time
from dataclasses import dataclass
from random import Random
from typing import Any, Callable, Iterator, Optional, TypeVar

from src.cli.fuzz import MIN_N, random_family_input
from src.closedform.families import evaluate_family, expand_family
from src.config import FamilyInput
from src.constants import Family, Method
from src.error import DiscriminantError, ErrorKind
from src.resultant.discriminant import discriminant_oracle

logger = logging.getLogger(__name__)

CSV_HEADER = ("family", "n", "method", "nanos", "digits")
SKIPPED = "skipped"
MAX_DRAWS = 8

T = TypeVar("T")


@dataclass(frozen=True)
class BenchRecord:
    family: Family
    n: int
    method: str
    nanos: Optional[int]
    digits: Optional[int]

    @property
    def skipped(self) -> bool:
        return self.nanos is None

    def to_row(self) -> tuple[Any, ...]:
        if self.skipped:
            return str(self.family), self.n, self.method, SKIPPED, ""
        return str(self.family), self.n, self.method, self.nanos, self.digits

    def to_dict(self) -> dict[str, Any]:
        return dict(zip(CSV_HEADER, self.to_row()))


def ladder(start: int, cap: int) -> Iterator[int]:
    """``start, 2 start, 4 start, ...`` up to ``cap``."""
    n = start
    while n <= cap:
        yield n
        n *= 2


def min_time(fn: Callable[[], T], trials: int) -> tuple[int, T]:
    """Smallest wall time in nanoseconds over ``trials`` calls, with the last result."""
    best: Optional[int] = None
    result: Any = None
    for _ in range(trials):
        started = time.perf_counter_ns()
        result = fn()
        elapsed = time.perf_counter_ns() - started
        if best is None or elapsed < best:
            best = elapsed
    assert best is not None
    return best, result


def _draw_instance(family: Family, n: int, seed: int) -> FamilyInput:
    """First seeded instance whose closed form has no vanishing divisor."""
    rng = Random(f"{seed}:{family}:{n}")
    for _ in range(MAX_DRAWS - 1):
        family_input = random_family_input(family, n, rng)
        try:
            evaluate_family(family_input)
            return family_input
        except DiscriminantError as error:
            if error.kind != ErrorKind.DEGENERATE:
                raise
            logger.info("%s n=%d: %s, drawing again", family, n, error.message)
    return random_family_input(family, n, rng)


def bench_degree(
    family: Family, n: int, seed: int, trials: int, oracle_cutoff: int
) -> tuple[list[BenchRecord], bool]:
    """
    Times the closed form and, while the polynomial's degree is at most ``oracle_cutoff``,
    the oracle on one seeded instance. Rows are only produced once both values agree; the
    flag is ``False`` and the list empty on a mismatch.
    """
    family_input = _draw_instance(family, n, seed)
    f = expand_family(family_input)

    nanos, result = min_time(lambda: evaluate_family(family_input), trials)
    formula = BenchRecord(family, n, str(result.method), nanos, result.value.digits())
    if int(f.degree) > oracle_cutoff:
        return [formula, BenchRecord(family, n, str(Method.ORACLE_SYLVESTER), None, None)], True

    oracle_nanos, oracle = min_time(lambda: discriminant_oracle(f), trials)
    if oracle.value != result.value:
        logger.error(
            "%s n=%d: closed form %s and oracle %s disagree on %s",
            family,
            n,
            result.value,
            oracle.value,
            family_input,
        )
        return [], False
    return [
        formula,
        BenchRecord(family, n, str(oracle.method), oracle_nanos, oracle.value.digits()),
    ], True


def bench_ladder(family: Family, start: int, cap: int) -> list[int]:
    degrees = [n for n in ladder(start, cap) if n >= MIN_N[family]]
    if not degrees:
        logger.warning("no ladder value between %d and %d is valid for %s", start, cap, family)
    return degrees
