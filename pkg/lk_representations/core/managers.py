"""
Managers personalizados para el registro de ejecuciones.
"""
from datetime import timedelta

from django.db import models
from django.db.models import Avg, Count
from django.utils import timezone


class VerificationRunQuerySet(models.QuerySet):
    """QuerySet personalizado para VerificationRun."""

    def passed(self):
        """Ejecuciones superadas."""
        return self.filter(status='PASSED')

    def failed(self):
        """Ejecuciones con verificación fallida, límite excedido o error."""
        return self.exclude(status='PASSED')

    def for_command(self, command):
        return self.filter(command=command)

    def older_than(self, days):
        """Ejecuciones anteriores a ``days`` días."""
        cutoff = timezone.now() - timedelta(days=days)
        return self.filter(created_at__lt=cutoff)

    def recent(self, days=30):
        cutoff = timezone.now() - timedelta(days=days)
        return self.filter(created_at__gte=cutoff)

    def by_command(self):
        """Conteo y duración media por comando."""
        return self.values('command').annotate(
            count=Count('id'),
            average_duration=Avg('duration'),
        ).order_by('command')

    def by_status(self):
        return self.values('status').annotate(count=Count('id')).order_by('status')


class VerificationRunManager(models.Manager):
    """Manager personalizado para VerificationRun."""

    def get_queryset(self):
        return VerificationRunQuerySet(self.model, using=self._db)

    def passed(self):
        return self.get_queryset().passed()

    def failed(self):
        return self.get_queryset().failed()

    def for_command(self, command):
        return self.get_queryset().for_command(command)

    def older_than(self, days):
        return self.get_queryset().older_than(days)

    def recent(self, days=30):
        return self.get_queryset().recent(days)

    def record(self, command, config, report, exit_code=0, graph='', duration=0.0):
        """Factory method para registrar la ejecución de un subcomando."""
        return self.create(
            command=command,
            graph=graph,
            config=config,
            report=report,
            status=self.model.status_for_exit_code(exit_code),
            duration=duration,
        )
