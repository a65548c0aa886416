"""
API URL configuration.
"""
from django.urls import include, path

app_name = 'api'

urlpatterns = [
    # API versioning
    path('v1/', include([
        path('diagnostics/', include('apps.diagnostics.urls')),
        path('sequential/', include('apps.sequential.urls')),
        path('', include('apps.reports.urls')),
    ])),
]
