"""
Views for sequential app.
"""
import logging

from drf_yasg.utils import swagger_auto_schema
from rest_framework import status
from rest_framework.decorators import api_view

from apps.api.utils import APIResponse
from apps.diagnostics.exceptions import DiagnosticsBusinessError
from apps.diagnostics.serializers import disease_from, profile_from

from .exceptions import SequentialBusinessError
from .serializers import (
    OperatingCharacteristicsSerializer,
    RunRequestSerializer,
    SequenceRunSerializer,
    SimulateRequestSerializer,
    SimulationReportSerializer,
    config_from,
)
from .services import SimulationService, exact_operating_characteristics, run_sequence

logger = logging.getLogger(__name__)


@swagger_auto_schema(
    method='post',
    operation_summary="Run the stopping rule",
    operation_description=(
        "Apply observed results in order until the posterior leaves the "
        "(alpha_n, beta_n) corridor or the cap is reached."
    ),
    request_body=RunRequestSerializer,
    tags=["Sequential"],
)
@api_view(['POST'])
def run(request):
    """Run the stopping rule over a result sequence."""
    serializer = RunRequestSerializer(data=request.data)

    if not serializer.is_valid():
        return APIResponse.validation_error(
            errors=serializer.errors,
            message="Validation error in sequence request"
        )

    try:
        data = serializer.validated_data
        outcome = run_sequence(config_from(data), profile_from(data), disease_from(data), data['results'])

        return APIResponse.success(
            data=SequenceRunSerializer(outcome).data,
            message=f"Session finished with status {outcome.state.status}"
        )

    except (SequentialBusinessError, DiagnosticsBusinessError) as e:
        return APIResponse.validation_error(
            errors=e.error_dict if hasattr(e, 'error_dict') else {'error': [str(e)]},
            message=e.message,
            error_code=e.error_code
        )
    except Exception:
        logger.exception("Unexpected error running sequence")
        return APIResponse.error(
            message="An unexpected error occurred while running the sequence",
            error_code="SEQUENCE_ERROR",
            status_code=status.HTTP_500_INTERNAL_SERVER_ERROR
        )


@swagger_auto_schema(
    method='post',
    operation_summary="Simulate the stopping rule",
    operation_description=(
        "Seeded Monte Carlo estimate of E[N], decision rates and conditional "
        "error rates; optionally the exact values from the forward recursion."
    ),
    request_body=SimulateRequestSerializer,
    tags=["Sequential"],
)
@api_view(['POST'])
def simulate(request):
    """Simulate the stopping rule."""
    serializer = SimulateRequestSerializer(data=request.data)

    if not serializer.is_valid():
        return APIResponse.validation_error(
            errors=serializer.errors,
            message="Validation error in simulation request"
        )

    try:
        data = serializer.validated_data
        config, profile, disease = config_from(data), profile_from(data), disease_from(data)
        fix_truth = data.get('fix_truth')

        report = SimulationService.execute(
            config, profile, disease,
            trials=data['trials'],
            seed=data['seed'],
            fix_truth=fix_truth,
        )
        payload = {'simulation': SimulationReportSerializer(report).data, 'exact': None}
        if data['exact']:
            exact = exact_operating_characteristics(config, profile, disease, fix_truth)
            payload['exact'] = OperatingCharacteristicsSerializer(exact).data

        return APIResponse.success(
            data=payload,
            message=f"Simulated {report.trials} trials"
        )

    except (SequentialBusinessError, DiagnosticsBusinessError) as e:
        return APIResponse.validation_error(
            errors=e.error_dict if hasattr(e, 'error_dict') else {'error': [str(e)]},
            message=e.message,
            error_code=e.error_code
        )
    except Exception:
        logger.exception("Unexpected error simulating")
        return APIResponse.error(
            message="An unexpected error occurred while simulating",
            error_code="SIMULATION_ERROR",
            status_code=status.HTTP_500_INTERNAL_SERVER_ERROR
        )
