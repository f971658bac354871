from dataclasses import dataclass, field, fields
from typing import Any, Optional, Union

from src.constants import Command, Family, MethodChoice, OutputFormat
from src.exact.gaussian import GaussianRational

_COEFFICIENT_NAMES = ("a", "b", "c", "t")

# fields each family reads besides 'n'
_REQUIRED_FIELDS: dict[Family, tuple[str, ...]] = {
    Family.BINOMIAL: ("a",),
    Family.TRINOMIAL: ("k", "a", "b"),
    Family.K2: ("a", "b", "c"),
    Family.K3: ("a", "b", "c"),
    Family.K_N_MINUS_1: ("a", "b", "c"),
    Family.RECIP_N2: ("a", "b", "c"),
    Family.RECIP_N3: ("a", "b", "c"),
    Family.TWO_N: ("l", "a", "b", "c"),
    Family.OTAKE_SHASKA: ("a", "b", "t"),
}


@dataclass
class FamilyInput:
    """A family tag with its parameters, as given on the command line."""

    family: Family
    n: int
    k: Optional[int] = None
    l: Optional[int] = None  # noqa: E741
    a: Optional[GaussianRational] = None
    b: Optional[GaussianRational] = None
    c: Optional[GaussianRational] = None
    t: Optional[GaussianRational] = None

    def __post_init__(self):
        self.family = Family(self.family)
        if not isinstance(self.n, int) or isinstance(self.n, bool):
            raise ValueError("'n' must be an integer")
        for name in _COEFFICIENT_NAMES:
            value = getattr(self, name)
            if value is not None:
                setattr(self, name, GaussianRational.coerce(value))

        required = _REQUIRED_FIELDS[self.family]
        for name in required:
            if getattr(self, name) is None:
                raise ValueError(f"family {str(self.family)!r} requires {name!r}")
        for item in fields(self):
            if item.name in ("family", "n") or item.name in required:
                continue
            if getattr(self, item.name) is not None:
                raise ValueError(f"{item.name!r} is not used by family {str(self.family)!r}")

    @property
    def required_fields(self) -> tuple[str, ...]:
        return _REQUIRED_FIELDS[self.family]


@dataclass
class BenchOptions:
    family: Family = Family.K2
    start: int = 8
    cap: int = 256
    oracle_cutoff: int = 400

    def __post_init__(self):
        self.family = Family(self.family)
        if self.start < 1:
            raise ValueError("'start' must be at least 1")
        if self.cap < self.start:
            raise ValueError("'cap' must not be smaller than 'start'")
        if self.oracle_cutoff < 0:
            raise ValueError("'oracle_cutoff' must not be negative")


@dataclass
class RunConfig:
    command: Command
    input: Optional[str] = None
    family: Optional[FamilyInput] = None
    method: MethodChoice = MethodChoice.AUTO
    seed: Optional[int] = None
    trials: Optional[int] = None
    output_format: OutputFormat = OutputFormat.TEXT
    bench: BenchOptions = field(default_factory=BenchOptions)
    max_degree: int = 40
    workers: int = 1

    def __post_init__(self):
        self.command = Command(self.command)
        self.method = MethodChoice(self.method)
        self.output_format = OutputFormat(self.output_format)
        if self.command in (Command.DISC, Command.COMPARE):
            if (self.input is None) == (self.family is None):
                raise ValueError(
                    f"exactly one of polynomial text and family must be given "
                    f"for the {self.command} command"
                )
        if self.command in (Command.FUZZ, Command.BENCH):
            if self.seed is None or self.trials is None:
                raise ValueError(
                    f"'seed' and 'trials' must be specified for the {self.command} command"
                )
        if self.trials is not None and self.trials < 1:
            raise ValueError("'trials' must be at least 1")
        if self.workers < 1:
            raise ValueError("'workers' must be at least 1")
        if self.max_degree < 2:
            raise ValueError("'max_degree' must be at least 2")


def create_family_input(
    family: Union[Family, str],
    n: int,
    k: Optional[int] = None,
    l: Optional[int] = None,  # noqa: E741
    **coefficients: Any,
) -> FamilyInput:
    """Builds a ``FamilyInput``, parsing coefficients given as canonical text."""
    parsed = {}
    for name, value in coefficients.items():
        if name not in _COEFFICIENT_NAMES:
            raise ValueError(f"unknown coefficient {name!r}")
        if isinstance(value, str):
            value = GaussianRational.parse(value)
        parsed[name] = value
    return FamilyInput(family=Family(family), n=n, k=k, l=l, **parsed)


def create_run_config(
    command: Union[Command, str],
    input_: Optional[str] = None,
    family: Optional[dict[str, Any]] = None,
    method: Union[MethodChoice, str] = MethodChoice.AUTO,
    seed: Optional[int] = None,
    trials: Optional[int] = None,
    output_format: Union[OutputFormat, str] = OutputFormat.TEXT,
    bench: Optional[dict[str, Any]] = None,
    max_degree: int = 40,
    workers: int = 1,
) -> RunConfig:
    return RunConfig(
        command=Command(command),
        input=input_,
        family=create_family_input(**family) if family else None,
        method=MethodChoice(method),
        seed=seed,
        trials=trials,
        output_format=OutputFormat(output_format),
        bench=BenchOptions(**(bench or {})),
        max_degree=max_degree,
        workers=workers,
    )
