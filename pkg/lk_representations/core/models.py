"""
Modelos base y registro de ejecuciones de los comandos.
"""
from django.db import models
from django.utils.translation import gettext_lazy as _

from .managers import VerificationRunManager


class TimestampedModel(models.Model):
    """Mixin para agregar timestamps a los modelos."""

    created_at = models.DateTimeField(
        auto_now_add=True,
        verbose_name="Fecha de creación",
        help_text="Fecha y hora de creación del registro",
    )
    updated_at = models.DateTimeField(
        auto_now=True,
        verbose_name="Última actualización",
        help_text="Fecha y hora de la última modificación",
    )

    class Meta:
        abstract = True


class RunStatus(models.TextChoices):
    """Choices para el resultado de una ejecución."""
    PASSED = "PASSED", _("Superada")
    FAILED = "FAILED", _("Fallida")
    CAP_EXCEEDED = "CAP_EXCEEDED", _("Límite excedido")
    ERROR = "ERROR", _("Error")


class VerificationRun(TimestampedModel):
    """
    Una ejecución registrada de un subcomando (``--record``).

    Guarda la configuración y el informe JSON tal como se exportaron, para
    que ``generate_report`` pueda resumirlos sin recalcular nada.
    """

    command = models.CharField(
        max_length=32,
        verbose_name=_("Comando"),
        help_text=_("Subcomando que produjo el informe"),
    )
    graph = models.CharField(
        max_length=64,
        blank=True,
        verbose_name=_("Grafo"),
        help_text=_("Etiqueta del grafo de Coxeter, p. ej. A3 o Atilde2"),
    )
    config = models.JSONField(
        default=dict,
        verbose_name=_("Configuración"),
    )
    report = models.JSONField(
        default=dict,
        blank=True,
        verbose_name=_("Informe"),
    )
    status = models.CharField(
        max_length=16,
        choices=RunStatus.choices,
        default=RunStatus.PASSED,
        verbose_name=_("Estado"),
    )
    duration = models.FloatField(
        default=0.0,
        verbose_name=_("Duración (s)"),
    )

    objects = VerificationRunManager()

    class Meta:
        verbose_name = _("Ejecución de verificación")
        verbose_name_plural = _("Ejecuciones de verificación")
        ordering = ["-created_at"]
        indexes = [
            models.Index(fields=["command", "status"]),
            models.Index(fields=["created_at"]),
        ]

    def __str__(self):
        return f"{self.command} {self.graph} ({self.get_status_display()})"

    @property
    def passed(self):
        return self.status == RunStatus.PASSED

    @classmethod
    def status_for_exit_code(cls, exit_code):
        """Estado correspondiente a un código de salida de los comandos."""
        return {
            0: RunStatus.PASSED,
            2: RunStatus.CAP_EXCEEDED,
            3: RunStatus.FAILED,
        }.get(exit_code, RunStatus.ERROR)
