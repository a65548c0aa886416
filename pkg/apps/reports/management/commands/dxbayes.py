"""
Command line for the toolkit: ``python manage.py dxbayes <subcommand>``.

Exit status is 0 on success, 1 on domain errors and 2 on usage or schema
errors. Output is rendered completely before anything is written, so a
failing run prints nothing to stdout.
"""
import argparse
import logging

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError
from rest_framework.renderers import JSONRenderer

from apps.bayes_core.exceptions import BayesCoreBusinessError
from apps.diagnostics.domain import DiseaseModel, TestProfile
from apps.diagnostics.exceptions import DiagnosticsBusinessError
from apps.diagnostics.services import (
    DiagnosticReportService,
    closed_form_tests_to_confidence,
    parse_results,
    tests_to_confidence,
)
from apps.finite_prob.exceptions import FiniteProbBusinessError
from apps.reports.constants import ReportFormat, ScenarioKind
from apps.reports.exceptions import ReportsBusinessError, ScenarioSchemaError
from apps.reports.loaders import load_regions
from apps.reports.renderers import render_report
from apps.reports.services import ScenarioRunService, TableBuildService
from apps.sequential.constants import FixedTruth
from apps.sequential.domain import StoppingRuleConfig, ThresholdSchedule
from apps.sequential.exceptions import SequentialBusinessError
from apps.sequential.services import SimulationService, exact_operating_characteristics, run_sequence

logger = logging.getLogger(__name__)

DOMAIN_ERRORS = (
    FiniteProbBusinessError,
    BayesCoreBusinessError,
    DiagnosticsBusinessError,
    SequentialBusinessError,
)


def threshold_list(text: str) -> tuple:
    """Parse ``0.01`` or ``0.01,0.02,0.03``."""
    try:
        return tuple(float(part) for part in text.split(','))
    except ValueError:
        raise argparse.ArgumentTypeError(f'expected comma-separated numbers, got {text!r}')


def result_sequence(text: str) -> tuple:
    try:
        return parse_results(text)
    except DiagnosticsBusinessError as e:
        raise argparse.ArgumentTypeError(e.message)


def _add_format(parser) -> None:
    parser.add_argument('--format', choices=ReportFormat.values, default=ReportFormat.TEXT)


def _add_profile(parser, required: bool = True) -> None:
    parser.add_argument('--sensitivity', type=float, required=required)
    parser.add_argument('--specificity', type=float, required=required)


def _add_schedule(parser) -> None:
    parser.add_argument('--alpha', type=threshold_list, required=True, help='α_1,α_2,... (last value repeats)')
    parser.add_argument('--beta', type=threshold_list, required=True, help='β_1,β_2,... (last value repeats)')
    parser.add_argument('--max-tests', type=int, default=None)


class Command(BaseCommand):
    help = 'Conditional independence checks, diagnostic posteriors, the stopping rule and region tables.'

    def add_arguments(self, parser):
        subparsers = parser.add_subparsers(dest='subcommand', required=True)

        check = subparsers.add_parser('check', help='Run a finite-space scenario file')
        check.add_argument('scenario')
        _add_format(check)

        scenario = subparsers.add_parser('scenario', help='Run any scenario file')
        scenario.add_argument('scenario')
        _add_format(scenario)

        ppv = subparsers.add_parser('ppv', help='Posterior after test results')
        _add_profile(ppv)
        ppv.add_argument('--prevalence', type=float, required=True)
        given = ppv.add_mutually_exclusive_group(required=True)
        given.add_argument('--results', type=result_sequence, help="e.g. '++-'")
        given.add_argument('--n-positives', type=int)
        ppv.add_argument('--threshold', type=float)
        _add_format(ppv)

        sequence = subparsers.add_parser('sequence', help='Run the stopping rule over observed results')
        _add_profile(sequence)
        sequence.add_argument('--prevalence', type=float, required=True)
        _add_schedule(sequence)
        sequence.add_argument('--results', type=result_sequence, required=True)
        _add_format(sequence)

        table = subparsers.add_parser('table', help='PPV by region after repeated positives')
        table.add_argument('--input', default=None, help='region CSV (defaults to the bundled data)')
        table.add_argument('--sensitivity', type=float, default=0.99)
        table.add_argument('--specificity', type=float, default=0.99)
        table.add_argument('--max-positives', type=int, default=3)
        _add_format(table)

        simulate = subparsers.add_parser('simulate', help='Monte Carlo evaluation of the stopping rule')
        _add_profile(simulate)
        simulate.add_argument('--prevalence', type=float, required=True)
        _add_schedule(simulate)
        simulate.add_argument('--trials', type=int, required=True)
        simulate.add_argument('--seed', type=int, required=True)
        simulate.add_argument('--fix-truth', choices=FixedTruth.values, default=None)
        simulate.add_argument('--workers', type=int, default=None)
        simulate.add_argument('--exact', action='store_true', help='also compute exact operating characteristics')
        _add_format(simulate)

        threshold = subparsers.add_parser('threshold', help='Positive tests needed to reach a confidence level')
        _add_profile(threshold)
        threshold.add_argument('--prevalence', type=float, required=True)
        threshold.add_argument('--threshold', type=float, required=True)
        _add_format(threshold)

    def handle(self, *args, **options):
        handler = getattr(self, f"handle_{options['subcommand']}")
        logger.debug(f"dxbayes {options['subcommand']} invoked")
        try:
            output = handler(options)
        except ReportsBusinessError as e:
            raise CommandError(e.message, returncode=e.exit_code)
        except DOMAIN_ERRORS as e:
            raise CommandError(e.message, returncode=1)

        self.stdout.write(output.decode('utf-8'), ending='')

    def handle_check(self, options) -> bytes:
        service = ScenarioRunService.from_path(options['scenario'])
        if isinstance(service.data, dict) and service.data.get('kind') != ScenarioKind.FINITE_SPACE:
            raise ScenarioSchemaError("'check' runs finite_space scenarios only; use 'scenario' for other kinds")
        return render_report(service.execute(), options['format'])

    def handle_scenario(self, options) -> bytes:
        return render_report(ScenarioRunService.from_path(options['scenario']).execute(), options['format'])

    def handle_ppv(self, options) -> bytes:
        report = DiagnosticReportService(
            profile=self._profile(options),
            disease=DiseaseModel(options['prevalence']),
            results=options['results'] or (),
            n_positives=options['n_positives'],
            threshold=options['threshold'],
        ).execute()
        return render_report(report, options['format'])

    def handle_sequence(self, options) -> bytes:
        outcome = run_sequence(
            self._config(options),
            self._profile(options),
            DiseaseModel(options['prevalence']),
            options['results'],
        )
        return render_report(outcome, options['format'])

    def handle_table(self, options) -> bytes:
        records = load_regions(options['input'] or settings.DXBAYES['REGIONS_FIXTURE'])
        report = TableBuildService(records, self._profile(options), options['max_positives']).execute()
        return render_report(report, options['format'])

    def handle_simulate(self, options) -> bytes:
        config, profile = self._config(options), self._profile(options)
        disease = DiseaseModel(options['prevalence'])
        report = SimulationService.execute(
            config, profile, disease,
            trials=options['trials'],
            seed=options['seed'],
            fix_truth=options['fix_truth'],
            workers=options['workers'],
        )
        output = render_report(report, options['format'])
        if options['exact']:
            exact = exact_operating_characteristics(config, profile, disease, options['fix_truth'])
            output += render_report(exact, options['format'])
        return output

    def handle_threshold(self, options) -> bytes:
        profile, disease = self._profile(options), DiseaseModel(options['prevalence'])
        data = {
            'threshold': options['threshold'],
            'tests_to_confidence': tests_to_confidence(profile, disease, options['threshold']),
            'closed_form': closed_form_tests_to_confidence(profile, disease, options['threshold']),
        }
        report_format = ReportFormat(options['format'])

        if report_format == ReportFormat.STRUCTURED:
            return JSONRenderer().render(data) + b'\n'
        if report_format == ReportFormat.CSV:
            rows = ''.join(f'{key},{value}\n' for key, value in data.items())
            return f'field,value\n{rows}'.encode('utf-8')
        return f"{data['tests_to_confidence']}\n".encode('utf-8')

    @staticmethod
    def _profile(options) -> TestProfile:
        return TestProfile(sensitivity=options['sensitivity'], specificity=options['specificity'])

    @staticmethod
    def _config(options) -> StoppingRuleConfig:
        max_tests = options['max_tests']
        return StoppingRuleConfig(
            schedule=ThresholdSchedule(alphas=options['alpha'], betas=options['beta']),
            max_tests=settings.DXBAYES['DEFAULT_MAX_TESTS'] if max_tests is None else max_tests,
        )
