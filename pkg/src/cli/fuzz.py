import logging
from dataclasses import dataclass
from fractions import Fraction
from random import Random
from typing import Optional

from src.closedform.families import evaluate_family, expand_family, quadrinomial_spec
from src.config import FamilyInput
from src.constants import Family
from src.error import DiscriminantError, ErrorKind
from src.exact.gaussian import GaussianRational
from src.poly.quadrinomial import QUADRINOMIAL_FAMILIES
from src.resultant.discriminant import discriminant_oracle

logger = logging.getLogger(__name__)

# smallest n each family accepts
MIN_N = {
    Family.BINOMIAL: 1,
    Family.TRINOMIAL: 3,
    Family.K2: 4,
    Family.K3: 5,
    Family.K_N_MINUS_1: 5,
    Family.RECIP_N2: 4,
    Family.RECIP_N3: 6,
    Family.TWO_N: 3,
    Family.OTAKE_SHASKA: 4,
}

FUZZ_FAMILIES = tuple(MIN_N)


def random_coefficient(rng: Random) -> GaussianRational:
    """Non-zero Gaussian rational with numerators in [-99, 99] and denominators in [1, 9]."""
    while True:
        value = GaussianRational.from_fractions(
            Fraction(rng.randint(-99, 99), rng.randint(1, 9)),
            Fraction(rng.randint(-99, 99), rng.randint(1, 9)),
        )
        if not value.is_zero():
            return value


def max_n(family: Family, max_degree: int) -> int:
    return max_degree // 2 if family == Family.TWO_N else max_degree


def random_family_input(family: Family, n: int, rng: Random) -> FamilyInput:
    """Draws coefficients until every precondition of the family's closed form holds."""
    if n < MIN_N[family]:
        raise ValueError(f"family {str(family)!r} needs n >= {MIN_N[family]}, got {n}")
    while True:
        match family:
            case Family.BINOMIAL:
                candidate = FamilyInput(family=family, n=n, a=random_coefficient(rng))
            case Family.TRINOMIAL:
                candidate = FamilyInput(
                    family=family,
                    n=n,
                    k=rng.randint(1, n - 1),
                    a=random_coefficient(rng),
                    b=random_coefficient(rng),
                )
            case Family.OTAKE_SHASKA:
                candidate = FamilyInput(
                    family=family,
                    n=n,
                    a=random_coefficient(rng),
                    b=random_coefficient(rng),
                    t=random_coefficient(rng),
                )
            case _:
                candidate = FamilyInput(
                    family=family,
                    n=n,
                    l=rng.randint(1, (n - 1) // 2) if family == Family.TWO_N else None,
                    a=random_coefficient(rng),
                    b=random_coefficient(rng),
                    c=random_coefficient(rng),
                )
        if family not in QUADRINOMIAL_FAMILIES:
            return candidate
        try:
            quadrinomial_spec(candidate)
        except DiscriminantError:
            logger.debug("rejected %s instance, drawing again", family)
            continue
        return candidate


def random_instance(seed: int, index: int, max_degree: int) -> FamilyInput:
    """The ``index``-th instance of the stream for ``seed``; independent of every other index."""
    rng = Random(f"{seed}:{index}")
    candidates = [
        family for family in FUZZ_FAMILIES if MIN_N[family] <= max_n(family, max_degree)
    ]
    family = rng.choice(candidates)
    n = rng.randint(MIN_N[family], max_n(family, max_degree))
    return random_family_input(family, n, rng)


@dataclass(frozen=True)
class TrialOutcome:
    index: int
    family: Family
    n: int
    polynomial: str
    method: Optional[str]
    formula: Optional[str]
    oracle: str
    status: str

    @property
    def passed(self) -> bool:
        return self.status != "mismatch"


def run_trial(seed: int, index: int, max_degree: int) -> TrialOutcome:
    """Compares the closed form with the oracle on one seeded instance."""
    family_input = random_instance(seed, index, max_degree)
    f = expand_family(family_input)
    oracle = discriminant_oracle(f).value
    try:
        result = evaluate_family(family_input)
    except DiscriminantError as error:
        if error.kind != ErrorKind.DEGENERATE:
            raise
        logger.info("trial %d: %s", index, error.message)
        return TrialOutcome(
            index=index,
            family=family_input.family,
            n=family_input.n,
            polynomial=str(f),
            method=None,
            formula=None,
            oracle=str(oracle),
            status="degenerate",
        )
    return TrialOutcome(
        index=index,
        family=family_input.family,
        n=family_input.n,
        polynomial=str(f),
        method=str(result.method),
        formula=str(result.value),
        oracle=str(oracle),
        status="equal" if result.value == oracle else "mismatch",
    )
