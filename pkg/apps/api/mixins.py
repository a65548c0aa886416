"""
Response helpers for viewsets.
"""
from typing import Any, Dict, List, Optional

from django.core.exceptions import ValidationError
from rest_framework import status
from rest_framework.response import Response

from .utils import APIResponse


class StandardResponseMixin:
    """
    Wraps viewset results in the APIResponse envelope.

    Business errors from any dxbayes app carry ``message``, ``error_code``
    and ``error_dict``; ``business_error_response`` turns one into a 400.
    """

    def success_response(
        self,
        data: Any = None,
        message: str = "Operation successful",
        meta: Optional[Dict[str, Any]] = None
    ) -> Response:
        return APIResponse.success(data, message, status.HTTP_200_OK, meta)

    def server_error_response(self, message: str, error_code: str) -> Response:
        return APIResponse.error(
            message=message,
            error_code=error_code,
            status_code=status.HTTP_500_INTERNAL_SERVER_ERROR
        )

    def validation_error_response(
        self,
        errors: Dict[str, List[str]],
        message: str = "Validation error",
    ) -> Response:
        return APIResponse.validation_error(errors, message)

    def business_error_response(self, exc: ValidationError) -> Response:
        """Map a business error to a validation error keeping its code."""
        errors = getattr(exc, 'error_dict', None) or {'error': [str(exc)]}
        return APIResponse.validation_error(
            errors=errors,
            message=getattr(exc, 'message', str(exc)),
            error_code=getattr(exc, 'error_code', 'VALIDATION_ERROR')
        )
