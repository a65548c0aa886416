"""
Serializers for reports app: scenario file schema and report output.
"""
from django.conf import settings
from rest_framework import serializers

from apps.api.serializers import StrictFieldsMixin
from apps.diagnostics.serializers import DiagnosticReportSerializer, PosteriorRequestSerializer
from apps.finite_prob.constants import IndependenceMode
from apps.sequential.serializers import (
    OperatingCharacteristicsSerializer,
    SimulateRequestSerializer,
    SimulationReportSerializer,
)

from .constants import CheckName, ReportFormat, ScenarioKind

# Events each check needs: (single event, size of the event list, needs a condition)
CHECK_REQUIREMENTS = {
    CheckName.PROBABILITY: (True, None, False),
    CheckName.CONDITIONAL_PROBABILITY: (True, None, True),
    CheckName.INDEPENDENT: (False, 2, False),
    CheckName.CONDITIONALLY_INDEPENDENT: (False, 2, True),
    CheckName.CONDITIONALLY_INDEPENDENT_MANY: (False, 0, True),
    CheckName.CLASSIFY_PAIR: (False, 2, True),
    CheckName.THEOREM1_PREMISES: (False, 2, True),
}


class ScenarioHeaderSerializer(serializers.Serializer):
    """Fields every scenario carries."""

    schema_version = serializers.IntegerField()
    kind = serializers.ChoiceField(choices=ScenarioKind.choices)
    name = serializers.CharField(max_length=200)
    description = serializers.CharField(required=False, allow_blank=True)

    def validate_schema_version(self, value):
        expected = settings.DXBAYES['SCENARIO_SCHEMA_VERSION']
        if value != expected:
            raise serializers.ValidationError(f"Unsupported schema version {value}; expected {expected}.")
        return value


class CheckSerializer(StrictFieldsMixin, serializers.Serializer):
    """One requested finite-space check."""

    check = serializers.ChoiceField(choices=CheckName.choices)
    event = serializers.CharField(required=False)
    events = serializers.ListField(child=serializers.CharField(), required=False)
    given = serializers.CharField(required=False)
    mode = serializers.ChoiceField(choices=IndependenceMode.choices, default=IndependenceMode.MUTUAL)

    def validate(self, data):
        """Validate that the check names the events it needs."""
        single, count, conditional = CHECK_REQUIREMENTS[data['check']]

        if single and 'event' not in data:
            raise serializers.ValidationError(f"'{data['check']}' needs 'event'.")
        if not single and 'event' in data:
            raise serializers.ValidationError(f"'{data['check']}' takes 'events', not 'event'.")
        if count is not None:
            events = data.get('events', [])
            if count and len(events) != count:
                raise serializers.ValidationError(f"'{data['check']}' needs exactly {count} events.")
            if not count and len(events) < 2:
                raise serializers.ValidationError(f"'{data['check']}' needs at least 2 events.")
        if conditional and 'given' not in data:
            raise serializers.ValidationError(f"'{data['check']}' needs 'given'.")
        if not conditional and 'given' in data:
            raise serializers.ValidationError(f"'{data['check']}' does not take 'given'.")
        return data


class FiniteSpaceScenarioSerializer(StrictFieldsMixin, ScenarioHeaderSerializer):
    """Named events on {1..space_size} and the checks to run on them."""

    space_size = serializers.IntegerField(min_value=1, max_value=100000)
    events = serializers.DictField(child=serializers.ListField(child=serializers.IntegerField()))
    checks = CheckSerializer(many=True, allow_empty=False)

    def validate(self, data):
        """Validate that checks only reference declared events."""
        declared = set(data['events'])
        for position, check in enumerate(data['checks'], start=1):
            names = [check.get('event'), check.get('given'), *check.get('events', [])]
            unknown = sorted(name for name in names if name is not None and name not in declared)
            if unknown:
                raise serializers.ValidationError(
                    {'checks': [f"Check {position} references undeclared event(s): {', '.join(unknown)}."]}
                )
        return data


class DiagnosticScenarioSerializer(ScenarioHeaderSerializer, PosteriorRequestSerializer):
    """Diagnostic computation for a result sequence or n positives."""


class SimulationScenarioSerializer(ScenarioHeaderSerializer, SimulateRequestSerializer):
    """Stopping rule simulation; local runs are not capped like HTTP requests."""

    workers = serializers.IntegerField(min_value=1, required=False)

    def validate_trials(self, value):
        return value


SCENARIO_SERIALIZERS = {
    ScenarioKind.FINITE_SPACE: FiniteSpaceScenarioSerializer,
    ScenarioKind.DIAGNOSTIC: DiagnosticScenarioSerializer,
    ScenarioKind.SIMULATION: SimulationScenarioSerializer,
}


class ScenarioRequestSerializer(StrictFieldsMixin, serializers.Serializer):
    """Serializer for running a scenario posted over HTTP."""

    scenario = serializers.DictField()
    output = serializers.ChoiceField(choices=ReportFormat.choices, default=ReportFormat.STRUCTURED)


class TableRequestSerializer(StrictFieldsMixin, serializers.Serializer):
    """Serializer for building the region table from the bundled data."""

    sensitivity = serializers.FloatField(min_value=0.0, max_value=1.0, default=0.99)
    specificity = serializers.FloatField(min_value=0.0, max_value=1.0, default=0.99)
    max_positives = serializers.IntegerField(min_value=1, max_value=20, default=3)


class RegionRecordSerializer(serializers.Serializer):
    """Output serializer for a RegionRecord."""

    region = serializers.CharField()
    prevalence = serializers.FloatField()


class TableRowSerializer(serializers.Serializer):
    region = serializers.CharField()
    prevalence = serializers.FloatField()
    ppvs = serializers.ListField(child=serializers.FloatField())


class TableReportSerializer(serializers.Serializer):
    """Output serializer for a TableReport."""

    sensitivity = serializers.FloatField(source='profile.sensitivity')
    specificity = serializers.FloatField(source='profile.specificity')
    max_positives = serializers.IntegerField()
    decimal_places = serializers.IntegerField()
    rows = TableRowSerializer(many=True)


class CheckOutcomeSerializer(serializers.Serializer):
    check = serializers.CharField()
    label = serializers.CharField()
    value = serializers.CharField()
    details = serializers.SerializerMethodField()

    def get_details(self, obj) -> dict:
        return dict(obj.details)


class ScenarioResultSerializer(serializers.Serializer):
    """Output serializer for a ScenarioResult."""

    name = serializers.CharField()
    kind = serializers.CharField()
    space_size = serializers.IntegerField(allow_null=True)
    checks = CheckOutcomeSerializer(many=True)
    diagnostic = DiagnosticReportSerializer(allow_null=True)
    simulation = SimulationReportSerializer(allow_null=True)
    exact = OperatingCharacteristicsSerializer(allow_null=True)
