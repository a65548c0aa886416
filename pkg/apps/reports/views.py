"""
Views for reports app.
"""
import logging

from django.conf import settings
from drf_yasg import openapi
from drf_yasg.utils import swagger_auto_schema
from rest_framework import status, viewsets
from rest_framework.decorators import action, api_view

from apps.api.mixins import StandardResponseMixin
from apps.api.utils import APIResponse
from apps.diagnostics.domain import TestProfile
from apps.diagnostics.exceptions import DiagnosticsBusinessError

from .constants import ReportFormat
from .exceptions import ReportsBusinessError
from .loaders import load_regions
from .renderers import render_report, structured_data
from .serializers import RegionRecordSerializer, ScenarioRequestSerializer, TableRequestSerializer
from .services import ScenarioRunService, TableBuildService

logger = logging.getLogger(__name__)


class RegionViewSet(StandardResponseMixin, viewsets.ViewSet):
    """
    ViewSet for the bundled region prevalence data.
    """

    @swagger_auto_schema(
        operation_summary="List regions",
        operation_description="Regions and adult prevalence from the bundled data file",
        tags=["Regions"],
    )
    def list(self, request):
        """List bundled region records."""
        try:
            records = load_regions(settings.DXBAYES['REGIONS_FIXTURE'])
            return self.success_response(
                data=RegionRecordSerializer(records, many=True).data,
                message="List retrieved successfully",
                meta={'count': len(records)}
            )
        except ReportsBusinessError as e:
            logger.exception("Bundled region data is unreadable")
            return self.server_error_response(e.message, e.error_code)

    @swagger_auto_schema(
        operation_summary="Region table",
        operation_description="Probability of disease per region after 1..max_positives positive tests",
        manual_parameters=[
            openapi.Parameter('sensitivity', openapi.IN_QUERY, type=openapi.TYPE_NUMBER, default=0.99),
            openapi.Parameter('specificity', openapi.IN_QUERY, type=openapi.TYPE_NUMBER, default=0.99),
            openapi.Parameter('max_positives', openapi.IN_QUERY, type=openapi.TYPE_INTEGER, default=3),
        ],
        tags=["Regions"],
    )
    @action(detail=False, methods=['get'])
    def table(self, request):
        """Build the region table."""
        serializer = TableRequestSerializer(data=request.query_params.dict())

        if not serializer.is_valid():
            return self.validation_error_response(
                errors=serializer.errors,
                message="Validation error in table request"
            )

        try:
            data = serializer.validated_data
            records = load_regions(settings.DXBAYES['REGIONS_FIXTURE'])
            profile = TestProfile(sensitivity=data['sensitivity'], specificity=data['specificity'])
            report = TableBuildService(records, profile, data['max_positives']).execute()

            payload = structured_data(report)
            payload['text'] = render_report(report, ReportFormat.TEXT).decode('utf-8')
            return self.success_response(data=payload, message="Table built successfully")

        except (ReportsBusinessError, DiagnosticsBusinessError) as e:
            return self.business_error_response(e)


@swagger_auto_schema(
    method='post',
    operation_summary="Run a scenario",
    operation_description="Validate and run a scenario document (same schema as scenario files).",
    request_body=ScenarioRequestSerializer,
    tags=["Scenarios"],
)
@api_view(['POST'])
def run_scenario(request):
    """Run a posted scenario."""
    serializer = ScenarioRequestSerializer(data=request.data)

    if not serializer.is_valid():
        return APIResponse.validation_error(
            errors=serializer.errors,
            message="Validation error in scenario request"
        )

    try:
        data = serializer.validated_data
        scenario = data['scenario']
        trials = scenario.get('trials')
        maximum = settings.DXBAYES['MAX_API_TRIALS']
        if isinstance(trials, int) and trials > maximum:
            return APIResponse.validation_error(
                errors={'trials': [f"At most {maximum} trials per request."]},
                message="Validation error in scenario request"
            )

        result = ScenarioRunService(scenario, source='request').execute()

        if data['output'] == ReportFormat.STRUCTURED:
            payload = structured_data(result)
        else:
            payload = {'rendered': render_report(result, data['output']).decode('utf-8')}
        return APIResponse.success(data=payload, message=f"Scenario {result.name!r} executed")

    except ReportsBusinessError as e:
        return APIResponse.validation_error(
            errors=e.error_dict if hasattr(e, 'error_dict') else {'error': [str(e)]},
            message=e.message,
            error_code=e.error_code
        )
    except Exception:
        logger.exception("Unexpected error running scenario")
        return APIResponse.error(
            message="An unexpected error occurred while running the scenario",
            error_code="SCENARIO_ERROR",
            status_code=status.HTTP_500_INTERNAL_SERVER_ERROR
        )
