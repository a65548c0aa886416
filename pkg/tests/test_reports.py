"""
Tests for region files, the PPV table, report rendering and scenario files.
"""
import csv
import io
import json

import pytest

from apps.diagnostics.domain import TestProfile
from apps.reports.constants import ReportFormat
from apps.reports.domain import RegionRecord
from apps.reports.exceptions import (
    RegionDomainError,
    RegionParseError,
    ScenarioExecutionError,
    ScenarioSchemaError,
    TableProfileError,
)
from apps.reports.loaders import load_regions
from apps.reports.renderers import format_decimal, render_report
from apps.reports.services import ScenarioRunService, build_table, run_scenario_file

REGIONS_HEADER = 'region,prevalence\n'


class TestLoadRegions:
    """Tests for load_regions."""

    def test_bundled_data(self, regions):
        assert len(regions) == 8
        assert regions[0] == RegionRecord(region='Asia and the Pacific', prevalence=0.002)
        assert regions[2].prevalence == 0.07

    def test_header_only(self, write_csv):
        assert load_regions(write_csv(REGIONS_HEADER)) == []

    def test_extra_columns_are_ignored(self, write_csv):
        path = write_csv('code,region,prevalence,year\nCAR,Caribbean,0.012,2018\n')
        assert load_regions(path) == [RegionRecord(region='Caribbean', prevalence=0.012)]

    @pytest.mark.parametrize('value', ['1.5', '0', '-0.1', 'nan'])
    def test_prevalence_out_of_domain(self, write_csv, value):
        with pytest.raises(RegionDomainError) as exc_info:
            load_regions(write_csv(f'{REGIONS_HEADER}Caribbean,{value}\n'))
        assert exc_info.value.line == 2
        assert exc_info.value.error_code == 'ERROR_REGION_DOMAIN'

    def test_prevalence_not_a_number(self, write_csv):
        with pytest.raises(RegionParseError) as exc_info:
            load_regions(write_csv(f'{REGIONS_HEADER}Caribbean,0.012\nLatin America,four\n'))
        assert exc_info.value.line == 3

    def test_missing_column(self, write_csv):
        with pytest.raises(RegionParseError) as exc_info:
            load_regions(write_csv('region,rate\nCaribbean,0.012\n'))
        assert 'prevalence' in exc_info.value.message

    def test_empty_file(self, write_csv):
        with pytest.raises(RegionParseError):
            load_regions(write_csv(''))

    def test_duplicate_region(self, write_csv):
        with pytest.raises(RegionDomainError):
            load_regions(write_csv(f'{REGIONS_HEADER}Caribbean,0.012\nCaribbean,0.013\n'))

    def test_empty_region_name(self, write_csv):
        with pytest.raises(RegionDomainError):
            load_regions(write_csv(f'{REGIONS_HEADER} ,0.012\n'))

    def test_missing_file(self, tmp_path):
        with pytest.raises(RegionParseError):
            load_regions(tmp_path / 'absent.csv')


class TestBuildTable:
    """Tests for build_table."""

    def test_caribbean_row(self, regions, table_profile):
        row = build_table(regions, table_profile).rows[1]
        assert row.region == 'Caribbean'
        assert [format_decimal(value, 4) for value in row.ppvs] == ['0.5460', '0.9917', '0.9999']

    def test_high_prevalence_rounds_to_one(self, regions, table_profile):
        row = build_table(regions, table_profile).rows[2]
        assert row.region == 'Eastern and Southern Africa'
        assert format_decimal(row.ppvs[2], 4) == '1.0000'
        assert row.ppvs[2] < 1.0

    def test_uninformative_test(self):
        report = build_table([RegionRecord('Anywhere', 0.5)], TestProfile(0.5, 0.5))
        assert report.rows[0].ppvs == (0.5, 0.5, 0.5)

    def test_likelihood_ratio_below_one(self, regions):
        with pytest.raises(TableProfileError):
            build_table(regions, TestProfile(sensitivity=0.3, specificity=0.4))

    def test_rows_are_monotone(self, regions, table_profile):
        for row in build_table(regions, table_profile, max_positives=6).rows:
            assert all(a <= b for a, b in zip(row.ppvs, row.ppvs[1:]))
            assert all(0.0 < value <= 1.0 for value in row.ppvs)

    def test_rows_keep_input_order(self, regions, table_profile):
        report = build_table(regions, table_profile)
        assert [row.region for row in report.rows] == [record.region for record in regions]


class TestRendering:
    """Tests for render_report on tables."""

    def test_text_matches_golden_file(self, regions, table_profile, golden_dir):
        expected = (golden_dir / 'table1.txt').read_bytes()
        assert render_report(build_table(regions, table_profile)) == expected

    def test_rendering_is_deterministic(self, regions, table_profile):
        report = build_table(regions, table_profile)
        for report_format in ReportFormat.values:
            assert render_report(report, report_format) == render_report(report, report_format)

    def test_empty_table_has_header_only(self, table_profile):
        lines = render_report(build_table([], table_profile)).decode('utf-8').splitlines()
        assert len(lines) == 3
        assert lines[1].split() == ['Region', 'Prevalence', '1', 'Positive', '2', 'Positives', '3', 'Positives']
        assert set(lines[2]) == {'-'}

    def test_csv(self, regions, table_profile):
        text = render_report(build_table(regions, table_profile), ReportFormat.CSV).decode('utf-8')
        rows = list(csv.reader(io.StringIO(text)))

        assert rows[0] == ['region', 'prevalence', 'ppv_1', 'ppv_2', 'ppv_3']
        assert rows[2] == ['Caribbean', '0.012', '0.5460', '0.9917', '0.9999']
        assert len(rows) == 9

    @pytest.mark.parametrize('records', [
        None,
        [RegionRecord('Bonaire, Sint Eustatius and Saba', 0.004), RegionRecord('"Outer" Islands', 0.25)],
    ])
    def test_csv_reads_back_as_region_file(self, tmp_path, regions, table_profile, records):
        records = regions if records is None else records
        report = build_table(records, table_profile)
        path = tmp_path / 'table.csv'
        path.write_bytes(render_report(report, ReportFormat.CSV))

        assert load_regions(path) == records
        with open(path, newline='', encoding='utf-8') as handle:
            ppv_columns = [
                [row[f'ppv_{n}'] for n in range(1, report.max_positives + 1)]
                for row in csv.DictReader(handle)
            ]
        expected = [[format_decimal(value, report.decimal_places) for value in row.ppvs] for row in report.rows]
        assert ppv_columns == expected

    def test_structured(self, regions, table_profile):
        data = json.loads(render_report(build_table(regions, table_profile), ReportFormat.STRUCTURED))
        assert data['max_positives'] == 3
        assert data['sensitivity'] == 0.99
        assert data['rows'][0]['region'] == 'Asia and the Pacific'
        assert len(data['rows'][0]['ppvs']) == 3

    @pytest.mark.parametrize('value, places, expected', [
        (0.125, 2, '0.12'),
        (0.375, 2, '0.38'),
        (0.5, 0, '0'),
        (0.07, 3, '0.070'),
    ])
    def test_format_decimal(self, value, places, expected):
        assert format_decimal(value, places) == expected


class TestScenarioFiles:
    """Tests for ScenarioRunService and run_scenario_file."""

    def test_finite_space_scenario(self, scenario_dir):
        text = run_scenario_file(scenario_dir / 'independent_but_dependent_given_complement.yaml').decode('utf-8')
        lines = text.splitlines()

        assert lines[0] == 'scenario: independent-but-dependent-given-complement (finite_space, |S|=16)'
        assert 'P(A1): 3/4' in lines
        assert "classify(A1, A2 | B): independent=yes, ci_given_B=yes, ci_given_B'=no" in lines
        assert "  P(A1 & A2 | B'): 1/2" in lines

    def test_diagnostic_scenario(self, scenario_dir):
        text = run_scenario_file(scenario_dir / 'two_positive_results.yaml').decode('utf-8')
        assert 'posterior: 0.265' in text.splitlines()
        assert 'trace: 0.019, 0.265' in text.splitlines()

    def test_simulation_scenario(self, scenario_dir):
        data = json.loads(run_scenario_file(scenario_dir / 'perfect_test_simulation.yaml', ReportFormat.STRUCTURED))
        assert data['simulation']['mean_stopping_time'] == 1.0
        assert data['exact']['expected_stopping_time'] == pytest.approx(1.0)
        assert data['checks'] == []

    def test_unknown_check(self, scenario_dir):
        with pytest.raises(ScenarioSchemaError) as exc_info:
            run_scenario_file(scenario_dir / 'unknown_check.yaml')
        assert exc_info.value.exit_code == 2

    def test_missing_file(self, tmp_path):
        with pytest.raises(ScenarioSchemaError):
            run_scenario_file(tmp_path / 'nothing.yaml')

    def test_invalid_yaml(self, tmp_path):
        path = tmp_path / 'broken.yaml'
        path.write_text('kind: [finite_space\n', encoding='utf-8')
        with pytest.raises(ScenarioSchemaError):
            run_scenario_file(path)

    @pytest.mark.parametrize('data', [
        ['not', 'a', 'mapping'],
        {'schema_version': 1, 'kind': 'regression', 'name': 'x'},
        {'schema_version': 2, 'kind': 'diagnostic', 'name': 'x',
         'sensitivity': 0.9, 'specificity': 0.9, 'prevalence': 0.1, 'n_positives': 1},
        {'schema_version': 1, 'kind': 'diagnostic', 'name': 'x',
         'sensitivity': 0.9, 'specificity': 0.9, 'prevalence': 0.1, 'n_positives': 1, 'extra': True},
        {'schema_version': 1, 'kind': 'finite_space', 'name': 'x', 'space_size': 4,
         'events': {'A': [1]}, 'checks': [{'check': 'probability', 'event': 'Z'}]},
        {'schema_version': 1, 'kind': 'finite_space', 'name': 'x', 'space_size': 4,
         'events': {'A': [1], 'B': [2]}, 'checks': [{'check': 'independent', 'events': ['A', 'B'], 'given': 'B'}]},
        {'schema_version': 1, 'kind': ['diagnostic'], 'name': 'x'},
        {'schema_version': 1, 'kind': {'diagnostic': True}, 'name': 'x'},
        {'schema_version': 1, 'kind': 'diagnostic', 'name': 'x', 1: 'one',
         'sensitivity': 0.9, 'specificity': 0.9, 'prevalence': 0.1, 'n_positives': 1},
    ])
    def test_schema_errors(self, data):
        with pytest.raises(ScenarioSchemaError):
            ScenarioRunService(data).execute()

    def test_domain_error_while_running(self):
        data = {
            'schema_version': 1, 'kind': 'finite_space', 'name': 'outside', 'space_size': 4,
            'events': {'A': [1, 9]}, 'checks': [{'check': 'probability', 'event': 'A'}],
        }
        with pytest.raises(ScenarioExecutionError) as exc_info:
            ScenarioRunService(data).execute()
        assert exc_info.value.exit_code == 1

    def test_many_events_check(self):
        data = {
            'schema_version': 1, 'kind': 'finite_space', 'name': 'family', 'space_size': 4,
            'events': {'A1': [1, 2], 'A2': [1, 3], 'A3': [1, 4], 'B': [1, 2, 3, 4]},
            'checks': [{
                'check': 'conditionally_independent_many', 'events': ['A1', 'A2', 'A3'],
                'given': 'B', 'mode': 'pairwise',
            }],
        }
        outcome = ScenarioRunService(data).execute().checks[0]
        assert outcome.value == 'yes'
