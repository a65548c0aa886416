"""
URL configuration for diagnostics app.
"""
from django.urls import path

from . import views

app_name = "diagnostics"

urlpatterns = [
    path('posterior/', views.posterior, name='posterior'),
    path('threshold/', views.threshold, name='threshold'),
]
