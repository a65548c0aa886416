"""
Services for region tables and scenario files.
"""
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

import yaml
from django.conf import settings

from apps.diagnostics.domain import DiseaseModel, TestProfile
from apps.diagnostics.exceptions import DiagnosticsBusinessError
from apps.diagnostics.serializers import disease_from, profile_from
from apps.diagnostics.services import DiagnosticReportService, likelihood_ratio, ppv_n_positives
from apps.diagnostics.validators import DiagnosticValidator
from apps.finite_prob.domain import SampleSpace
from apps.finite_prob.exceptions import FiniteProbBusinessError
from apps.finite_prob.services import (
    classify_pair,
    conditional_probability,
    is_conditionally_independent,
    is_conditionally_independent_many,
    is_independent,
    pair_probabilities,
    probability,
    theorem1_premises_hold,
)
from apps.sequential.exceptions import SequentialBusinessError
from apps.sequential.serializers import config_from
from apps.sequential.services import SimulationService, exact_operating_characteristics

from .constants import CheckName, ReportFormat, ScenarioKind
from .domain import CheckOutcome, RegionRecord, ScenarioResult, TableReport, TableRow
from .exceptions import ScenarioExecutionError, ScenarioSchemaError, TableProfileError, TableRowError
from .renderers import render_report
from .serializers import SCENARIO_SERIALIZERS

logger = logging.getLogger(__name__)


class TableBuildService:
    """Service for building the PPV-by-region table."""

    def __init__(self, records: Sequence[RegionRecord], profile: TestProfile, max_positives: int = 3) -> None:
        self.records = tuple(records)
        self.profile = profile
        self.max_positives = max_positives

    def execute(self) -> TableReport:
        """Compute every row at full precision; rounding happens when rendering."""
        DiagnosticValidator.validate_test_count(self.max_positives)

        ratio = likelihood_ratio(self.profile)
        if ratio.is_indeterminate or (not ratio.is_infinite and ratio.value < 1.0):
            raise TableProfileError(f'likelihood ratio {ratio} is below 1, so repeated positives lower the PPV')

        rows = []
        for record in self.records:
            disease = DiseaseModel(prevalence=record.prevalence)
            try:
                ppvs = tuple(
                    ppv_n_positives(self.profile, disease, n)
                    for n in range(1, self.max_positives + 1)
                )
            except DiagnosticsBusinessError as e:
                raise TableRowError(record.region, e.message)
            rows.append(TableRow(region=record.region, prevalence=record.prevalence, ppvs=ppvs))

        logger.info(f"Built table with {len(rows)} row(s) for {self.max_positives} positive test(s)")
        return TableReport(
            rows=tuple(rows),
            profile=self.profile,
            max_positives=self.max_positives,
            decimal_places=settings.DXBAYES['TABLE_DECIMAL_PLACES'],
            prevalence_places=settings.DXBAYES['PREVALENCE_DECIMAL_PLACES'],
        )


def build_table(records: Sequence[RegionRecord], profile: TestProfile, max_positives: int = 3) -> TableReport:
    return TableBuildService(records, profile, max_positives).execute()


def _yes_no(flag: bool) -> str:
    return 'yes' if flag else 'no'


def _first_error(errors: Any) -> str:
    """Flatten DRF errors into a single line."""
    if isinstance(errors, dict):
        for field, detail in errors.items():
            inner = _first_error(detail)
            return inner if field == 'non_field_errors' else f'{field}: {inner}'
    if isinstance(errors, list):
        for detail in errors:
            inner = _first_error(detail)
            if inner:
                return inner
        return ''
    return str(errors)


class ScenarioRunService:
    """Service for validating and running one scenario."""

    def __init__(self, data: Any, source: str = '<scenario>') -> None:
        self.data = data
        self.source = source

    @classmethod
    def from_path(cls, path: Union[str, Path]) -> 'ScenarioRunService':
        """Read a YAML (or JSON) scenario file."""
        try:
            text = Path(path).read_text(encoding='utf-8')
        except OSError as e:
            raise ScenarioSchemaError(f'cannot read {path}: {e.strerror}')
        try:
            data = yaml.safe_load(text)
        except yaml.YAMLError as e:
            raise ScenarioSchemaError(f'{path} is not valid YAML: {e}')
        return cls(data, source=str(path))

    def validate(self) -> Dict[str, Any]:
        """Validate against the schema of the scenario's kind."""
        if not isinstance(self.data, dict):
            raise ScenarioSchemaError(f'{self.source} must hold a mapping at the top level')

        kind = self.data.get('kind')
        serializer_class = SCENARIO_SERIALIZERS.get(kind) if isinstance(kind, str) else None
        if serializer_class is None:
            kinds = ', '.join(ScenarioKind.values)
            raise ScenarioSchemaError(
                f"'kind' must be one of {kinds}, got {kind!r}",
                errors={'kind': [f'Must be one of {kinds}.']}
            )

        serializer = serializer_class(data=self.data)
        if not serializer.is_valid():
            raise ScenarioSchemaError(_first_error(serializer.errors), errors=serializer.errors)
        return serializer.validated_data

    def execute(self) -> ScenarioResult:
        data = self.validate()
        name, kind = data['name'], data['kind']

        try:
            if kind == ScenarioKind.FINITE_SPACE:
                result = self._run_finite_space(data)
            elif kind == ScenarioKind.DIAGNOSTIC:
                result = self._run_diagnostic(data)
            else:
                result = self._run_simulation(data)
        except (FiniteProbBusinessError, DiagnosticsBusinessError, SequentialBusinessError) as e:
            raise ScenarioExecutionError(name, e.message, error_code=e.error_code)

        logger.info(f"Scenario {name!r} ({kind}) executed from {self.source}")
        return result

    def _run_finite_space(self, data: Dict[str, Any]) -> ScenarioResult:
        space = SampleSpace.of_size(data['space_size'])
        events = {label: space.event(members) for label, members in data['events'].items()}
        outcomes = [self._run_check(space, events, check) for check in data['checks']]
        return ScenarioResult(
            name=data['name'],
            kind=data['kind'],
            checks=tuple(outcomes),
            space_size=data['space_size'],
        )

    def _run_check(self, space: SampleSpace, events: Dict[str, Any], check: Dict[str, Any]) -> CheckOutcome:
        name = check['check']
        given = check.get('given')
        b = events[given] if given else None
        members = [events[label] for label in check.get('events', [])]
        pair = ', '.join(check.get('events', []))

        if name == CheckName.PROBABILITY:
            value = probability(space, events[check['event']])
            return CheckOutcome(name, f"P({check['event']})", str(value))

        if name == CheckName.CONDITIONAL_PROBABILITY:
            value = conditional_probability(space, events[check['event']], b)
            return CheckOutcome(name, f"P({check['event']} | {given})", str(value))

        if name == CheckName.INDEPENDENT:
            return CheckOutcome(name, f'independent({pair})', _yes_no(is_independent(space, *members)))

        if name == CheckName.CONDITIONALLY_INDEPENDENT:
            flag = is_conditionally_independent(space, *members, b)
            return CheckOutcome(name, f'independent({pair} | {given})', _yes_no(flag))

        if name == CheckName.CONDITIONALLY_INDEPENDENT_MANY:
            flag = is_conditionally_independent_many(space, members, b, check['mode'])
            return CheckOutcome(name, f"{check['mode']} independent({pair} | {given})", _yes_no(flag))

        if name == CheckName.THEOREM1_PREMISES:
            premises = theorem1_premises_hold(space, *members, b)
            conclusion = is_conditionally_independent(space, *members, b)
            return CheckOutcome(
                name,
                f'premises({pair} | {given})',
                _yes_no(premises),
                details=((f'independent({pair} | {given})', _yes_no(conclusion)),),
            )

        return self._classify(space, members, b, check['events'], given)

    @staticmethod
    def _classify(space, members, b, labels: List[str], given: str) -> CheckOutcome:
        first, second = labels
        complement = f"{given}'"
        flags = classify_pair(space, *members, b)
        fractions = pair_probabilities(space, *members, b)

        details = (
            ('independent', _yes_no(flags.independent)),
            (f'ci_given_{given}', _yes_no(flags.ci_given_b)),
            (f'ci_given_{complement}', _yes_no(flags.ci_given_b_complement)),
            (f'P({first})', str(fractions.p_a1)),
            (f'P({second})', str(fractions.p_a2)),
            (f'P({first} & {second})', str(fractions.p_a1_a2)),
            (f'P({first} | {given})', str(fractions.p_a1_given_b)),
            (f'P({second} | {given})', str(fractions.p_a2_given_b)),
            (f'P({first} & {second} | {given})', str(fractions.p_a1_a2_given_b)),
            (f'P({first} | {complement})', str(fractions.p_a1_given_b_complement)),
            (f'P({second} | {complement})', str(fractions.p_a2_given_b_complement)),
            (f'P({first} & {second} | {complement})', str(fractions.p_a1_a2_given_b_complement)),
        )
        summary = ', '.join(f'{key}={value}' for key, value in details[:3])
        return CheckOutcome(CheckName.CLASSIFY_PAIR, f'classify({first}, {second} | {given})', summary, details)

    def _run_diagnostic(self, data: Dict[str, Any]) -> ScenarioResult:
        report = DiagnosticReportService(
            profile=profile_from(data),
            disease=disease_from(data),
            results=data.get('results', ()),
            n_positives=data.get('n_positives'),
            threshold=data.get('threshold'),
        ).execute()
        return ScenarioResult(name=data['name'], kind=data['kind'], diagnostic=report)

    def _run_simulation(self, data: Dict[str, Any]) -> ScenarioResult:
        config, profile, disease = config_from(data), profile_from(data), disease_from(data)
        fix_truth = data.get('fix_truth')
        report = SimulationService.execute(
            config, profile, disease,
            trials=data['trials'],
            seed=data['seed'],
            fix_truth=fix_truth,
            workers=data.get('workers'),
        )
        exact: Optional[Any] = None
        if data['exact']:
            exact = exact_operating_characteristics(config, profile, disease, fix_truth)
        return ScenarioResult(name=data['name'], kind=data['kind'], simulation=report, exact=exact)


def run_scenario_file(path: Union[str, Path], report_format: str = ReportFormat.TEXT) -> bytes:
    """Validate, run and render a scenario file."""
    return render_report(ScenarioRunService.from_path(path).execute(), report_format)
