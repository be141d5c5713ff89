"""
URL configuration for lk_representations project.
"""
from django.contrib import admin
from django.urls import path

# Configuración del admin
admin.site.site_header = 'Representaciones de Lawrence–Krammer'
admin.site.site_title = 'Administración'
admin.site.index_title = 'Historial de verificaciones'

urlpatterns = [
    path("admin/", admin.site.urls),
]
