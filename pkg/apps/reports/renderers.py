"""
Deterministic rendering of reports as text, CSV or JSON bytes.

Decimal output rounds half to even from the exact binary value of each float.
"""
import csv
import io
from decimal import ROUND_HALF_EVEN, Decimal
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple

from django.conf import settings
from rest_framework.renderers import JSONRenderer

from apps.diagnostics.domain import DiagnosticReport
from apps.diagnostics.serializers import DiagnosticReportSerializer
from apps.sequential.domain import OperatingCharacteristics, SequenceRun, SimulationReport
from apps.sequential.serializers import (
    OperatingCharacteristicsSerializer,
    SequenceRunSerializer,
    SimulationReportSerializer,
)

from .constants import ReportFormat
from .domain import ScenarioResult, TableReport
from .serializers import ScenarioResultSerializer, TableReportSerializer

COLUMN_GAP = '  '
STATISTIC_PLACES = 6


def format_decimal(value: float, places: int) -> str:
    """``value`` rounded half-to-even to ``places`` decimals."""
    quantum = Decimal(1).scaleb(-places)
    return str(Decimal(value).quantize(quantum, rounding=ROUND_HALF_EVEN))


def _optional(value: Optional[float], places: int) -> str:
    return 'undefined' if value is None else format_decimal(value, places)


def _positives_header(n: int) -> str:
    return f'{n} Positive' if n == 1 else f'{n} Positives'


def _table_cells(report: TableReport) -> Tuple[List[str], List[List[str]]]:
    header = ['Region', 'Prevalence'] + [_positives_header(n) for n in range(1, report.max_positives + 1)]
    rows = [
        [row.region, format_decimal(row.prevalence, report.prevalence_places)]
        + [format_decimal(value, report.decimal_places) for value in row.ppvs]
        for row in report.rows
    ]
    return header, rows


def render_table_text(report: TableReport) -> str:
    header, rows = _table_cells(report)
    widths = [max(len(cells[i]) for cells in [header] + rows) for i in range(len(header))]

    def line(cells: List[str]) -> str:
        first = cells[0].ljust(widths[0])
        rest = [cell.rjust(width) for cell, width in zip(cells[1:], widths[1:])]
        return COLUMN_GAP.join([first] + rest)

    caption = (
        f'Probability of disease given 1 to {report.max_positives} positive test(s) '
        f'(sensitivity {report.profile.sensitivity:g}, specificity {report.profile.specificity:g})'
    )
    rule = '-' * (sum(widths) + len(COLUMN_GAP) * (len(widths) - 1))
    return '\n'.join([caption, line(header), rule] + [line(cells) for cells in rows]) + '\n'


def render_table_csv(report: TableReport) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(['region', 'prevalence'] + [f'ppv_{n}' for n in range(1, report.max_positives + 1)])
    writer.writerows(_table_cells(report)[1])
    return buffer.getvalue()


def _diagnostic_lines(report: DiagnosticReport) -> List[str]:
    places = settings.DXBAYES['DIAGNOSTIC_DECIMAL_PLACES']
    ratio = report.likelihood_ratio
    lines = [
        f'sensitivity: {report.profile.sensitivity:g}',
        f'specificity: {report.profile.specificity:g}',
        f'prevalence: {report.disease.prevalence:g}',
        f"results: {report.results_text or '(none)'}",
        f'posterior: {format_decimal(report.posterior, places)}',
        f"trace: {', '.join(format_decimal(p, places) for p in report.trace) or '(empty)'}",
        f'ppv: {_optional(report.ppv, places)}',
        f'npv: {_optional(report.npv, places)}',
        f'likelihood ratio: {ratio if ratio.is_infinite or ratio.is_indeterminate else format_decimal(ratio.value, places)}',
    ]
    if report.threshold is not None:
        lines.append(f'tests to reach {report.threshold:g}: {report.tests_to_confidence}')
    return lines


def _sequence_lines(run: SequenceRun) -> List[str]:
    places = settings.DXBAYES['DIAGNOSTIC_DECIMAL_PLACES']
    state = run.state
    return [
        f'status: {state.status}',
        f'tests: {state.tests_done}',
        f'posterior: {format_decimal(state.posterior, places)}',
        f"trace: {', '.join(format_decimal(p, places) for p in run.trace) or '(empty)'}",
        f"history: {''.join(str(r) for r in state.history) or '(none)'}",
        f"unconsumed: {''.join(str(r) for r in run.unconsumed) or '(none)'}",
    ]


def _simulation_lines(report: SimulationReport) -> List[str]:
    def stat(value: Optional[float]) -> str:
        return _optional(value, STATISTIC_PLACES)

    lines = [
        f'trials: {report.trials}',
        f'seed: {report.seed}',
        f'max tests: {report.max_tests}',
        f"fixed truth: {report.fix_truth or 'sampled'}",
        f'mean stopping time: {stat(report.mean_stopping_time)} (se {stat(report.stopping_time_standard_error)})',
    ]
    lines += [f'rate {status}: {stat(rate)}' for status, rate in report.decision_rates.items()]
    lines += [
        f'diseased trials: {report.diseased_trials}',
        f'healthy trials: {report.healthy_trials}',
        f'P(absent | diseased): {stat(report.false_negative_rate)} (se {stat(report.false_negative_standard_error)})',
        f'P(present | healthy): {stat(report.false_positive_rate)} (se {stat(report.false_positive_standard_error)})',
    ]
    return lines


def _exact_lines(exact: OperatingCharacteristics) -> List[str]:
    lines = [f'exact mean stopping time: {format_decimal(exact.expected_stopping_time, STATISTIC_PLACES)}']
    lines += [
        f'exact probability {status}: {format_decimal(p, STATISTIC_PLACES)}'
        for status, p in exact.decision_probabilities.items()
    ]
    lines += [
        f'exact P(absent | diseased): {_optional(exact.false_negative_rate, STATISTIC_PLACES)}',
        f'exact P(present | healthy): {_optional(exact.false_positive_rate, STATISTIC_PLACES)}',
    ]
    return lines


def _scenario_lines(result: ScenarioResult) -> List[str]:
    heading = f'scenario: {result.name} ({result.kind}'
    heading += f', |S|={result.space_size})' if result.space_size is not None else ')'
    lines = [heading]
    for outcome in result.checks:
        lines.append(f'{outcome.label}: {outcome.value}')
        lines += [f'  {key}: {value}' for key, value in outcome.details]
    if result.diagnostic is not None:
        lines += _diagnostic_lines(result.diagnostic)
    if result.simulation is not None:
        lines += _simulation_lines(result.simulation)
    if result.exact is not None:
        lines += _exact_lines(result.exact)
    return lines


def _flatten(data: Any, prefix: str = '') -> Iterable[Tuple[str, str]]:
    if isinstance(data, dict):
        for key, value in data.items():
            yield from _flatten(value, f'{prefix}.{key}' if prefix else str(key))
    elif isinstance(data, list) and any(isinstance(item, (dict, list)) for item in data):
        for index, item in enumerate(data):
            yield from _flatten(item, f'{prefix}.{index}')
    elif isinstance(data, list):
        yield prefix, ' '.join(str(item) for item in data)
    else:
        yield prefix, '' if data is None else str(data)


def _records_csv(data: Dict[str, Any]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(['field', 'value'])
    writer.writerows(_flatten(data))
    return buffer.getvalue()


def _lines(lines: List[str]) -> str:
    return '\n'.join(lines) + '\n'


# type -> (text renderer, output serializer)
RENDERERS: Dict[type, Tuple[Callable[[Any], str], Any]] = {
    TableReport: (render_table_text, TableReportSerializer),
    DiagnosticReport: (lambda r: _lines(_diagnostic_lines(r)), DiagnosticReportSerializer),
    SequenceRun: (lambda r: _lines(_sequence_lines(r)), SequenceRunSerializer),
    SimulationReport: (lambda r: _lines(_simulation_lines(r)), SimulationReportSerializer),
    OperatingCharacteristics: (lambda r: _lines(_exact_lines(r)), OperatingCharacteristicsSerializer),
    ScenarioResult: (lambda r: _lines(_scenario_lines(r)), ScenarioResultSerializer),
}


def structured_data(report: Any) -> Dict[str, Any]:
    """The report as plain JSON-compatible data."""
    _, serializer_class = RENDERERS[type(report)]
    return serializer_class(report).data


def render_report(report: Any, report_format: str = ReportFormat.TEXT) -> bytes:
    """Render any supported report; identical inputs give identical bytes."""
    text_renderer, _ = RENDERERS[type(report)]
    report_format = ReportFormat(report_format)

    if report_format == ReportFormat.TEXT:
        return text_renderer(report).encode('utf-8')

    if report_format == ReportFormat.CSV:
        if isinstance(report, TableReport):
            return render_table_csv(report).encode('utf-8')
        return _records_csv(structured_data(report)).encode('utf-8')

    return JSONRenderer().render(structured_data(report)) + b'\n'
