"""
URL configuration for sequential app.
"""
from django.urls import path

from . import views

app_name = "sequential"

urlpatterns = [
    path('run/', views.run, name='run'),
    path('simulate/', views.simulate, name='simulate'),
]
