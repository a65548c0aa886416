"""
URL configuration for reports app.
"""
from django.urls import include, path
from rest_framework.routers import DefaultRouter

from . import views

app_name = "reports"

router = DefaultRouter()
router.register(r'regions', views.RegionViewSet, basename='region')

urlpatterns = [
    path('scenarios/', views.run_scenario, name='run-scenario'),
    path('', include(router.urls)),
]
