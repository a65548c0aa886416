"""
Serializers for diagnostics app.
"""
from rest_framework import serializers

from apps.api.serializers import ProbabilityField, StrictFieldsMixin

from .domain import DiseaseModel, TestProfile
from .exceptions import DiagnosticsBusinessError
from .services import parse_results


class ResultSequenceField(serializers.CharField):
    """A result sequence written as '+' and '-' characters."""

    def __init__(self, **kwargs):
        kwargs.setdefault('allow_blank', True)
        super().__init__(**kwargs)

    def to_internal_value(self, data):
        text = super().to_internal_value(data)
        try:
            return parse_results(text)
        except DiagnosticsBusinessError as e:
            raise serializers.ValidationError(e.message)


class ScreeningInputSerializer(StrictFieldsMixin, serializers.Serializer):
    """Sensitivity, specificity and prevalence."""

    sensitivity = ProbabilityField()
    specificity = ProbabilityField()
    prevalence = ProbabilityField()


class PosteriorRequestSerializer(ScreeningInputSerializer):
    """Serializer for a posterior computation."""

    results = ResultSequenceField(required=False)
    n_positives = serializers.IntegerField(min_value=1, max_value=10000, required=False)
    threshold = serializers.FloatField(required=False)

    def validate(self, data):
        """Exactly one of results and n_positives."""
        if ('results' in data) == ('n_positives' in data):
            raise serializers.ValidationError("Provide either 'results' or 'n_positives'.")
        return data


class ThresholdRequestSerializer(ScreeningInputSerializer):
    """Serializer for the tests-to-confidence question."""

    threshold = serializers.FloatField()


class LikelihoodRatioSerializer(serializers.Serializer):
    """Likelihood ratio; the value is a string so that 'inf' survives JSON."""

    value = serializers.SerializerMethodField(method_name='format_value')
    is_infinite = serializers.BooleanField()
    is_indeterminate = serializers.BooleanField()

    def format_value(self, obj) -> str:
        return str(obj)


class DiagnosticReportSerializer(serializers.Serializer):
    """Output serializer for a DiagnosticReport."""

    sensitivity = serializers.FloatField(source='profile.sensitivity')
    specificity = serializers.FloatField(source='profile.specificity')
    prevalence = serializers.FloatField(source='disease.prevalence')
    results = serializers.CharField(source='results_text')
    posterior = serializers.FloatField()
    trace = serializers.ListField(child=serializers.FloatField())
    ppv = serializers.FloatField(allow_null=True)
    npv = serializers.FloatField(allow_null=True)
    likelihood_ratio = LikelihoodRatioSerializer()
    threshold = serializers.FloatField(allow_null=True)
    tests_to_confidence = serializers.IntegerField(allow_null=True)


def profile_from(data: dict) -> TestProfile:
    return TestProfile(sensitivity=data['sensitivity'], specificity=data['specificity'])


def disease_from(data: dict) -> DiseaseModel:
    return DiseaseModel(prevalence=data['prevalence'])
