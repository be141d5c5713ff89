from django.contrib import admin
from django.utils.html import format_html

from .models import RunStatus, VerificationRun


@admin.register(VerificationRun)
class VerificationRunAdmin(admin.ModelAdmin):
    """
    Configuración del admin para VerificationRun
    """

    list_display = (
        "command",
        "graph",
        "status_display",
        "duration",
        "created_at",
    )

    list_filter = (
        "command",
        "status",
        "created_at",
    )

    search_fields = (
        "command",
        "graph",
    )

    readonly_fields = (
        "command",
        "graph",
        "config",
        "report",
        "status",
        "duration",
        "created_at",
        "updated_at",
    )

    fieldsets = (
        ("Ejecución", {"fields": ("command", "graph", "status", "duration")}),
        ("Datos", {"fields": ("config", "report")}),
        ("Fechas", {"fields": ("created_at", "updated_at"), "classes": ("collapse",)}),
    )

    ordering = ("-created_at",)

    def status_display(self, obj):
        """Estado con color."""
        color = "green" if obj.status == RunStatus.PASSED else "red"
        return format_html('<span style="color: {};">{}</span>', color, obj.get_status_display())

    status_display.short_description = "Estado"
