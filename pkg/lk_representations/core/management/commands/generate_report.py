"""
Comando para generar reportes de las ejecuciones registradas.
"""
from django.core.management.base import BaseCommand

from core.models import RunStatus, VerificationRun
from core.serializers import VerificationRunSerializer, render_json


class Command(BaseCommand):
    help = 'Generar reportes de las ejecuciones registradas con --record'

    def add_arguments(self, parser):
        parser.add_argument(
            '--type',
            choices=['summary', 'commands', 'failures'],
            default='summary',
            help='Tipo de reporte a generar'
        )
        parser.add_argument(
            '--days',
            type=int,
            default=30,
            help='Período en días para el reporte (default: 30)'
        )
        parser.add_argument(
            '--format',
            choices=['text', 'json'],
            default='text',
            help='Formato de salida'
        )

    def handle(self, *args, **options):
        """Ejecuta el comando."""
        report_type = options['type']
        days = options['days']
        runs = VerificationRun.objects.recent(days)

        if options['format'] == 'json':
            self.stdout.write(render_json(self.build_json(runs, report_type, days)), ending='')
            return

        self.stdout.write(f'Generando reporte: {report_type.upper()}')
        self.stdout.write(f'Período: últimos {days} días')
        self.stdout.write('=' * 50)

        if report_type == 'summary':
            self.generate_summary_report(runs)
        elif report_type == 'commands':
            self.generate_commands_report(runs)
        elif report_type == 'failures':
            self.generate_failures_report(runs)

    def build_json(self, runs, report_type, days):
        data = {'type': report_type, 'days': days, 'total': runs.count()}
        if report_type == 'failures':
            data['runs'] = VerificationRunSerializer(runs.failed(), many=True).data
        else:
            data['by_status'] = {row['status']: row['count'] for row in runs.by_status()}
            data['by_command'] = {row['command']: row['count'] for row in runs.by_command()}
        return data

    def generate_summary_report(self, runs):
        """Genera reporte resumen."""
        statuses = dict(RunStatus.choices)

        self.stdout.write('\nEJECUCIONES')
        self.stdout.write(f'Total ejecuciones: {runs.count()}')
        self.stdout.write(f'Total históricas: {VerificationRun.objects.count()}')

        for row in runs.by_status():
            self.stdout.write(f"  - {statuses.get(row['status'], row['status'])}: {row['count']}")

        failed = runs.failed().count()
        if failed:
            self.stdout.write(self.style.WARNING(f'Ejecuciones no superadas: {failed}'))
        else:
            self.stdout.write(self.style.SUCCESS('Todas las ejecuciones superadas'))

    def generate_commands_report(self, runs):
        """Genera reporte por subcomando."""
        self.stdout.write('\nPOR COMANDO')
        for row in runs.by_command():
            passed = runs.for_command(row['command']).passed().count()
            self.stdout.write(
                f"{row['command']}: {row['count']} ejecuciones, {passed} superadas, "
                f"{row['average_duration'] or 0:.2f} s de media"
            )

    def generate_failures_report(self, runs):
        """Genera reporte de fallos recientes."""
        failures = runs.failed()[:20]
        self.stdout.write('\nFALLOS RECIENTES')
        if not failures:
            self.stdout.write('Sin fallos en el período')
        for run in failures:
            error = run.report.get('error', '') if isinstance(run.report, dict) else ''
            self.stdout.write(
                f"{run.created_at:%Y-%m-%d %H:%M} {run.command} {run.graph} "
                f"{run.get_status_display()} {error}"
            )
