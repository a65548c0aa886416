"""
Views for diagnostics app.
"""
import logging

from drf_yasg.utils import swagger_auto_schema
from rest_framework import status
from rest_framework.decorators import api_view

from apps.api.utils import APIResponse

from .exceptions import DiagnosticsBusinessError
from .serializers import (
    DiagnosticReportSerializer,
    PosteriorRequestSerializer,
    ThresholdRequestSerializer,
    disease_from,
    profile_from,
)
from .services import (
    DiagnosticReportService,
    closed_form_tests_to_confidence,
    likelihood_ratio,
    tests_to_confidence,
)

logger = logging.getLogger(__name__)


@swagger_auto_schema(
    method='post',
    operation_summary="Posterior after test results",
    operation_description=(
        "PPV, NPV, likelihood ratio and the posterior trajectory for a sequence "
        "of conditionally independent results, or for n positive results."
    ),
    request_body=PosteriorRequestSerializer,
    tags=["Diagnostics"],
)
@api_view(['POST'])
def posterior(request):
    """Compute a diagnostic report."""
    serializer = PosteriorRequestSerializer(data=request.data)

    if not serializer.is_valid():
        return APIResponse.validation_error(
            errors=serializer.errors,
            message="Validation error in posterior request"
        )

    try:
        data = serializer.validated_data
        service = DiagnosticReportService(
            profile=profile_from(data),
            disease=disease_from(data),
            results=data.get('results', ()),
            n_positives=data.get('n_positives'),
            threshold=data.get('threshold'),
        )
        report = service.execute()

        return APIResponse.success(
            data=DiagnosticReportSerializer(report).data,
            message="Posterior computed successfully"
        )

    except DiagnosticsBusinessError as e:
        return APIResponse.validation_error(
            errors=e.error_dict if hasattr(e, 'error_dict') else {'error': [str(e)]},
            message=e.message,
            error_code=e.error_code
        )
    except Exception:
        logger.exception("Unexpected error computing posterior")
        return APIResponse.error(
            message="An unexpected error occurred while computing the posterior",
            error_code="POSTERIOR_ERROR",
            status_code=status.HTTP_500_INTERNAL_SERVER_ERROR
        )


@swagger_auto_schema(
    method='post',
    operation_summary="Positive tests needed for a confidence level",
    operation_description="Smallest number of positive results whose PPV reaches the threshold.",
    request_body=ThresholdRequestSerializer,
    tags=["Diagnostics"],
)
@api_view(['POST'])
def threshold(request):
    """Compute tests-to-confidence."""
    serializer = ThresholdRequestSerializer(data=request.data)

    if not serializer.is_valid():
        return APIResponse.validation_error(
            errors=serializer.errors,
            message="Validation error in threshold request"
        )

    try:
        data = serializer.validated_data
        profile, disease = profile_from(data), disease_from(data)

        return APIResponse.success(
            data={
                'threshold': data['threshold'],
                'tests_to_confidence': tests_to_confidence(profile, disease, data['threshold']),
                'closed_form': closed_form_tests_to_confidence(profile, disease, data['threshold']),
                'likelihood_ratio': str(likelihood_ratio(profile)),
            },
            message="Threshold computed successfully"
        )

    except DiagnosticsBusinessError as e:
        return APIResponse.validation_error(
            errors=e.error_dict if hasattr(e, 'error_dict') else {'error': [str(e)]},
            message=e.message,
            error_code=e.error_code
        )
    except Exception:
        logger.exception("Unexpected error computing threshold")
        return APIResponse.error(
            message="An unexpected error occurred while computing the threshold",
            error_code="THRESHOLD_ERROR",
            status_code=status.HTTP_500_INTERNAL_SERVER_ERROR
        )
