"""
Serializers for sequential app.
"""
from django.conf import settings
from rest_framework import serializers

from apps.diagnostics.serializers import ResultSequenceField, ScreeningInputSerializer

from .constants import FixedTruth
from .domain import StoppingRuleConfig, ThresholdSchedule


class ThresholdSequenceField(serializers.Field):
    """A single threshold or a list of thresholds, stored as a tuple."""

    default_error_messages = {
        'invalid': 'Expected a number or a non-empty list of numbers.',
    }

    def to_internal_value(self, data):
        values = data if isinstance(data, (list, tuple)) else [data]
        if not values or any(isinstance(value, bool) for value in values):
            self.fail('invalid')
        try:
            return tuple(float(value) for value in values)
        except (TypeError, ValueError):
            self.fail('invalid')

    def to_representation(self, value):
        return list(value)


def default_max_tests() -> int:
    return settings.DXBAYES['DEFAULT_MAX_TESTS']


class StoppingRuleInputSerializer(ScreeningInputSerializer):
    """Test model plus a threshold schedule and cap."""

    alpha = ThresholdSequenceField()
    beta = ThresholdSequenceField()
    max_tests = serializers.IntegerField(min_value=1, default=default_max_tests)


class RunRequestSerializer(StoppingRuleInputSerializer):
    """Serializer for running the stopping rule over observed results."""

    results = ResultSequenceField()


class SimulateRequestSerializer(StoppingRuleInputSerializer):
    """Serializer for a Monte Carlo evaluation."""

    trials = serializers.IntegerField(min_value=1)
    seed = serializers.IntegerField(min_value=0)
    fix_truth = serializers.ChoiceField(choices=FixedTruth.choices, required=False, allow_null=True)
    exact = serializers.BooleanField(default=False)

    def validate_trials(self, value):
        """Keep HTTP requests bounded."""
        maximum = settings.DXBAYES['MAX_API_TRIALS']
        if value > maximum:
            raise serializers.ValidationError(f"At most {maximum} trials per request.")
        return value


class SessionStateSerializer(serializers.Serializer):
    """Output serializer for a SessionState."""

    prevalence = serializers.FloatField()
    tests_done = serializers.IntegerField()
    posterior = serializers.FloatField()
    history = serializers.SerializerMethodField()
    status = serializers.CharField()

    def get_history(self, obj) -> str:
        return ''.join(str(result) for result in obj.history)


class SequenceRunSerializer(serializers.Serializer):
    """Output serializer for a SequenceRun."""

    state = SessionStateSerializer()
    trace = serializers.ListField(child=serializers.FloatField())
    unconsumed = serializers.SerializerMethodField()

    def get_unconsumed(self, obj) -> str:
        return ''.join(str(result) for result in obj.unconsumed)


class SimulationReportSerializer(serializers.Serializer):
    """Output serializer for a SimulationReport."""

    trials = serializers.IntegerField()
    seed = serializers.IntegerField()
    max_tests = serializers.IntegerField()
    fix_truth = serializers.CharField(allow_null=True)
    mean_stopping_time = serializers.FloatField()
    stopping_time_standard_error = serializers.FloatField()
    decision_rates = serializers.DictField(child=serializers.FloatField())
    diseased_trials = serializers.IntegerField()
    healthy_trials = serializers.IntegerField()
    false_negative_rate = serializers.FloatField(allow_null=True)
    false_negative_standard_error = serializers.FloatField(allow_null=True)
    false_positive_rate = serializers.FloatField(allow_null=True)
    false_positive_standard_error = serializers.FloatField(allow_null=True)


class OperatingCharacteristicsSerializer(serializers.Serializer):
    """Output serializer for exact operating characteristics."""

    max_tests = serializers.IntegerField()
    fix_truth = serializers.CharField(allow_null=True)
    expected_stopping_time = serializers.FloatField()
    decision_probabilities = serializers.DictField(child=serializers.FloatField())
    false_negative_rate = serializers.FloatField(allow_null=True)
    false_positive_rate = serializers.FloatField(allow_null=True)


def config_from(data: dict) -> StoppingRuleConfig:
    return StoppingRuleConfig(
        schedule=ThresholdSchedule(alphas=data['alpha'], betas=data['beta']),
        max_tests=data['max_tests'],
    )
