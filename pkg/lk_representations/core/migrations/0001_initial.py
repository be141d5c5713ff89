# Generated by Django 5.2.5 on 2025-09-14 10:12

from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='VerificationRun',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('created_at', models.DateTimeField(auto_now_add=True, help_text='Fecha y hora de creación del registro', verbose_name='Fecha de creación')),
                ('updated_at', models.DateTimeField(auto_now=True, help_text='Fecha y hora de la última modificación', verbose_name='Última actualización')),
                ('command', models.CharField(help_text='Subcomando que produjo el informe', max_length=32, verbose_name='Comando')),
                ('graph', models.CharField(blank=True, help_text='Etiqueta del grafo de Coxeter, p. ej. A3 o Atilde2', max_length=64, verbose_name='Grafo')),
                ('config', models.JSONField(default=dict, verbose_name='Configuración')),
                ('report', models.JSONField(blank=True, default=dict, verbose_name='Informe')),
                ('status', models.CharField(choices=[('PASSED', 'Superada'), ('FAILED', 'Fallida'), ('CAP_EXCEEDED', 'Límite excedido'), ('ERROR', 'Error')], default='PASSED', max_length=16, verbose_name='Estado')),
                ('duration', models.FloatField(default=0.0, verbose_name='Duración (s)')),
            ],
            options={
                'verbose_name': 'Ejecución de verificación',
                'verbose_name_plural': 'Ejecuciones de verificación',
                'ordering': ['-created_at'],
                'indexes': [models.Index(fields=['command', 'status'], name='core_verifi_command_54e67d_idx'), models.Index(fields=['created_at'], name='core_verifi_created_203582_idx')],
            },
        ),
    ]
