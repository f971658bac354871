import csv
import json
from io import StringIO
from typing import Iterable, Sequence, TextIO, TypedDict

from src.cli.bench import CSV_HEADER, BenchRecord
from src.cli.fuzz import TrialOutcome
from src.constants import OutputFormat
from src.poly.polynomial import Polynomial
from src.resultant.discriminant import DiscriminantResult

RESULT_FIELDS = ("input", "method", "value", "sign_exponent_audit")


class ResultPayload(TypedDict):
    input: str
    method: str
    value: str
    sign_exponent_audit: int


def result_payload(f: Polynomial, result: DiscriminantResult) -> ResultPayload:
    return {"input": str(f), **result.to_dict()}  # type: ignore[typeddict-item]


def _csv_text(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buffer = StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def render_results(
    f: Polynomial, results: Sequence[DiscriminantResult], output_format: OutputFormat
) -> str:
    payloads = [result_payload(f, result) for result in results]
    if output_format == OutputFormat.JSON:
        return "".join(json.dumps(payload) + "\n" for payload in payloads)
    if output_format == OutputFormat.CSV:
        return _csv_text(RESULT_FIELDS, ([p[key] for key in RESULT_FIELDS] for p in payloads))
    lines = [str(f)]
    lines.extend(f"{p['method']}: {p['value']}" for p in payloads)
    return "\n".join(lines) + "\n"


def render_fuzz(
    seed: int, outcomes: Sequence[TrialOutcome], output_format: OutputFormat
) -> str:
    passed = sum(outcome.passed for outcome in outcomes)
    degenerate = sum(outcome.status == "degenerate" for outcome in outcomes)
    failures = [outcome for outcome in outcomes if not outcome.passed]
    if output_format == OutputFormat.JSON:
        summary = {
            "seed": seed,
            "trials": len(outcomes),
            "passed": passed,
            "degenerate": degenerate,
            "failures": [
                {
                    "trial": failure.index,
                    "family": str(failure.family),
                    "n": failure.n,
                    "input": failure.polynomial,
                    "formula": failure.formula,
                    "oracle": failure.oracle,
                }
                for failure in failures
            ],
        }
        return json.dumps(summary) + "\n"
    if output_format == OutputFormat.CSV:
        return _csv_text(
            ("trial", "family", "n", "method", "status"),
            (
                (item.index, str(item.family), item.n, item.method or "", item.status)
                for item in outcomes
            ),
        )
    lines = [
        f"mismatch seed={seed} trial={failure.index} family={failure.family} n={failure.n}\n"
        f"  input:   {failure.polynomial}\n"
        f"  formula: {failure.formula}\n"
        f"  oracle:  {failure.oracle}"
        for failure in failures
    ]
    lines.append(
        f"{passed}/{len(outcomes)} passed (seed {seed}, {degenerate} fell back to the oracle)"
    )
    return "\n".join(lines) + "\n"


def write_bench_header(out: TextIO, output_format: OutputFormat) -> None:
    if output_format != OutputFormat.JSON:
        csv.writer(out, lineterminator="\n").writerow(CSV_HEADER)


def write_bench_records(
    out: TextIO, records: Iterable[BenchRecord], output_format: OutputFormat
) -> None:
    if output_format == OutputFormat.JSON:
        for record in records:
            out.write(json.dumps(record.to_dict()) + "\n")
        return
    csv.writer(out, lineterminator="\n").writerows(record.to_row() for record in records)
