"""
Shared serializer helpers.
"""
from rest_framework import serializers


class StrictFieldsMixin:
    """Reject input keys that the serializer does not declare."""

    def to_internal_value(self, data):
        if isinstance(data, dict):
            # YAML keys need not be strings.
            unknown = sorted(str(key) for key in data if key not in self.fields)
            if unknown:
                raise serializers.ValidationError(
                    {name: ['Unknown field.'] for name in unknown}
                )
        return super().to_internal_value(data)


class ProbabilityField(serializers.FloatField):
    """A float in [0, 1]."""

    def __init__(self, **kwargs):
        kwargs.setdefault('min_value', 0.0)
        kwargs.setdefault('max_value', 1.0)
        super().__init__(**kwargs)
