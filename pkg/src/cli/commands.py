import logging
from concurrent.futures import ProcessPoolExecutor
from itertools import repeat
from typing import Callable, Iterable, Iterator, TextIO, TypeVar

from src.cli.bench import bench_degree, bench_ladder
from src.cli.fuzz import run_trial
from src.cli.render import render_fuzz, render_results, write_bench_header, write_bench_records
from src.closedform.dispatch import closed_form, dispatch, dispatch_family
from src.closedform.families import evaluate_family, expand_family
from src.config import RunConfig
from src.constants import ExitCode, MethodChoice
from src.error import DiscriminantError
from src.poly.parser import parse_polynomial
from src.poly.polynomial import Polynomial
from src.resultant.discriminant import DiscriminantResult, discriminant_oracle

logger = logging.getLogger(__name__)

T = TypeVar("T")


def _input_polynomial(config: RunConfig) -> Polynomial:
    if config.family is not None:
        return expand_family(config.family)
    assert config.input is not None
    return parse_polynomial(config.input)


def _formula(config: RunConfig, f: Polynomial) -> DiscriminantResult:
    if config.family is not None:
        return evaluate_family(config.family)
    return closed_form(f)


def _map_ordered(
    workers: int, fn: Callable[..., T], *iterables: Iterable
) -> Iterator[T]:
    """Results in input order, fanned out over processes when ``workers > 1``."""
    if workers == 1:
        yield from map(fn, *iterables)
        return
    with ProcessPoolExecutor(max_workers=workers) as executor:
        yield from executor.map(fn, *iterables)


def cmd_disc(config: RunConfig, out: TextIO) -> ExitCode:
    f = _input_polynomial(config)
    if f.is_zero() or int(f.degree) < 1:
        raise DiscriminantError.degree_too_low(degree=f.degree, minimum=1)

    results: list[DiscriminantResult] = []
    match config.method:
        case MethodChoice.AUTO:
            if config.family is not None:
                results.append(dispatch_family(config.family))
            else:
                results.append(dispatch(f))
        case MethodChoice.FORMULA:
            results.append(_formula(config, f))
        case MethodChoice.ORACLE:
            results.append(discriminant_oracle(f))
        case MethodChoice.BOTH:
            results.append(_formula(config, f))
            results.append(discriminant_oracle(f))
    out.write(render_results(f, results, config.output_format))
    return ExitCode.OK


def cmd_compare(config: RunConfig, out: TextIO) -> ExitCode:
    f = _input_polynomial(config)
    formula = _formula(config, f)
    oracle = discriminant_oracle(f)
    out.write(render_results(f, [formula, oracle], config.output_format))
    if formula.value != oracle.value:
        logger.warning("closed form and oracle disagree on %s", f)
        return ExitCode.MISMATCH
    return ExitCode.OK


def cmd_fuzz(config: RunConfig, out: TextIO) -> ExitCode:
    assert config.seed is not None and config.trials is not None
    outcomes = list(
        _map_ordered(
            config.workers,
            run_trial,
            repeat(config.seed, config.trials),
            range(config.trials),
            repeat(config.max_degree, config.trials),
        )
    )
    out.write(render_fuzz(config.seed, outcomes, config.output_format))
    if all(outcome.passed for outcome in outcomes):
        return ExitCode.OK
    return ExitCode.MISMATCH


def cmd_bench(config: RunConfig, out: TextIO) -> ExitCode:
    assert config.seed is not None and config.trials is not None
    options = config.bench
    degrees = bench_ladder(options.family, options.start, options.cap)
    count = len(degrees)
    write_bench_header(out, config.output_format)
    status = ExitCode.OK
    for records, equal in _map_ordered(
        config.workers,
        bench_degree,
        repeat(options.family, count),
        degrees,
        repeat(config.seed, count),
        repeat(config.trials, count),
        repeat(options.oracle_cutoff, count),
    ):
        write_bench_records(out, records, config.output_format)
        if not equal:
            status = ExitCode.MISMATCH
    return status
