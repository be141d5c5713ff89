"""
Base común de los subcomandos de cálculo.

Cada subcomando implementa ``run(**options)`` y devuelve un informe (dict).
La base imprime el informe en JSON estable, lo registra con ``--record`` y
traduce los errores a códigos de salida: 0 éxito, 1 uso, 2 límite excedido,
3 verificación fallida.
"""
import json
import logging
import time
from functools import cache
from pathlib import Path

from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand, CommandError
from rest_framework.exceptions import ValidationError as SerializerError

from core.conf import DEFAULTS, LOGGER_NAME, lkrep_setting
from core.exceptions import LKRepError
from core.models import VerificationRun
from core.serializers import (
    GraphSpecSerializer, ParamsSerializer, RunConfigSerializer, SeedSerializer, render_json,
)
from coxeter.graphs import connected_components, is_connected, is_spherical
from coxeter.words import parse_word
from families.affine import AffineSeed, affine_family, mu_affine
from families.builders import direct_sum_family, mu_spherical, paris_family, spherical_family

logger = logging.getLogger(LOGGER_NAME)

USAGE = 1
VERIFICATION_FAILED = 3

# Opciones que pasan por RunConfigSerializer o que no forman parte de la configuración
CONFIG_OPTIONS = {
    'graph_type', 'graph_rank', 'matrix', 'depth', 'pqr', 'b', 'c', 'd', 'f',
    'construction', 'seed', 'length', 'regime', 'output', 'format', 'record',
}


@cache
def django_options():
    """Destinos de las opciones que Django añade a todo comando."""
    parser = BaseCommand().create_parser('manage.py', 'lkrep')
    return {action.dest for action in parser._actions} | set(BaseCommand.base_stealth_options) | {'skip_checks'}


def _message(exc):
    if isinstance(exc, ValidationError):
        return '; '.join(str(message) for message in exc.messages)
    return str(exc.detail if hasattr(exc, 'detail') else exc)


class LKRepCommand(BaseCommand):
    """Subcomando con informe JSON, registro opcional y códigos de salida."""

    command_name = ''
    config = {}
    config_repr = {}

    def add_arguments(self, parser):
        parser.add_argument('--output', default='', help='Archivo de salida (por defecto, stdout)')
        parser.add_argument('--format', choices=['json', 'csv'], default='json', help='Formato de salida')
        parser.add_argument('--record', action='store_true', help='Registrar la ejecución en la base de datos')
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    # Argumentos compartidos

    @staticmethod
    def add_graph_arguments(parser):
        parser.add_argument('--type', '--ambient', dest='graph_type', help='Tipo: A, D, E, Atilde, Dtilde, Etilde')
        parser.add_argument('--rank', dest='graph_rank', type=int, help='Rango del tipo')
        parser.add_argument('--matrix', help='Matriz de Coxeter como archivo JSON o texto JSON')
        parser.add_argument('--depth', type=int, default=None, help='Cota de profundidad (grafos no esféricos)')

    @staticmethod
    def add_params_arguments(parser):
        parser.add_argument('--pqr', default='1,0,0', help='Exponentes p,q,r: b = y^p, c = y^q, d = y^r')
        parser.add_argument('--b', help='Unidad b explícita (anula --pqr)')
        parser.add_argument('--c', help='Unidad c explícita')
        parser.add_argument('--d', help='Unidad d explícita')
        parser.add_argument('--f', default='x*y^2', help='Semilla f = f_{i,α_i}')

    @staticmethod
    def add_family_arguments(parser):
        parser.add_argument(
            '--construction', choices=['spherical', 'paris', 'affine'], default='spherical',
            help='Constructor de la familia LK',
        )
        parser.add_argument('--seed', help='Archivo JSON {"seq": [...]} con la semilla afín')

    # Lectura de entradas

    @staticmethod
    def graph_data(options):
        matrix = options.get('matrix')
        if matrix:
            source = Path(matrix)
            text = source.read_text(encoding='utf-8') if source.is_file() else matrix
            try:
                return {'m': json.loads(text)}
            except ValueError as exc:
                raise SerializerError({'matrix': f'JSON inválido: {exc}'}) from exc
        data = {'type': options.get('graph_type'), 'rank': options.get('graph_rank')}
        return {key: value for key, value in data.items() if value is not None}

    @staticmethod
    def params_data(options):
        data = {'f': options.get('f') or '1'}
        if options.get('b') or options.get('c') or options.get('d'):
            data.update({name: options.get(name) or '' for name in ('b', 'c', 'd')})
        else:
            data['pqr'] = [part.strip() for part in options['pqr'].split(',')]
        return data

    def config_data(self, options):
        """Entradas de ``RunConfigSerializer`` a partir de las opciones que declara el subcomando."""
        data = {'output': options.get('output') or '', 'format': options.get('format') or 'json'}
        if 'graph_type' in options:
            data['graph'] = self.graph_data(options)
            data['depth_bound'] = options.get('depth')
        if 'pqr' in options:
            data['params'] = self.params_data(options)
        if 'construction' in options:
            data['construction'] = options.get('construction') or 'spherical'
            data['seed'] = options.get('seed') or ''
        for name in ('length', 'regime'):
            if name in options:
                data[name] = options[name]
        return data

    def validate_config(self, options):
        serializer = RunConfigSerializer(data=self.config_data(options))
        serializer.is_valid(raise_exception=True)
        self.config = serializer.validated_data
        self.config_repr = json.loads(render_json(serializer.data))

    def graph_from_options(self, options):
        if 'graph' in self.config:
            return self.config['graph']['graph']
        serializer = GraphSpecSerializer(data=self.graph_data(options))
        serializer.is_valid(raise_exception=True)
        return serializer.validated_data['graph']

    def params_from_options(self, options):
        if 'params' in self.config:
            return self.config['params']['params']
        serializer = ParamsSerializer(data=self.params_data(options))
        serializer.is_valid(raise_exception=True)
        return serializer.validated_data['params']

    def seed_from_file(self, path):
        serializer = SeedSerializer(data=json.loads(Path(path).read_text(encoding='utf-8')))
        serializer.is_valid(raise_exception=True)
        return serializer.validated_data['seq']

    def family_from_options(self, g, params, options):
        """La familia pedida y un informe de su construcción."""
        construction = options.get('construction') or 'spherical'
        depth = self.depth_for(g, options)
        if construction == 'paris':
            return paris_family(g, params, depth_bound=depth)
        if construction == 'affine':
            seed = AffineSeed(graph=g, seq=tuple(self.seed_from_file(options['seed'])))
            family = affine_family(seed, params, depth)
            mu = mu_affine(family)
            common = min(len(mu), len(seed))
            return family, {
                'mu': [str(value) for value in mu],
                'mu_roundtrip': mu[:common] == list(seed.seq[:common]),
            }
        if not is_connected(g):
            family = direct_sum_family(g, lambda sub: spherical_family(sub, params), depth)
            return family, {'components': [list(component) for component in connected_components(g)]}
        family = spherical_family(g, params)
        mu = mu_spherical(family)
        return family, {'mu': str(mu), 'mu_roundtrip': mu == params.f}

    def depth_for(self, g, options):
        """``--depth`` o, en grafos no esféricos, la cota por defecto."""
        if options.get('depth') is not None:
            return options['depth']
        if is_spherical(g):
            return None
        depth = lkrep_setting('DEFAULT_DEPTH')
        logger.warning(f"{g} no es esférico: se usa la cota de profundidad {depth}")
        return depth

    @staticmethod
    def word_from_text(text, g):
        return parse_word(text or '', g.n)

    # Ejecución

    def header(self, options):
        """Configuración validada más las opciones propias del subcomando."""
        skip = django_options() | CONFIG_OPTIONS
        extras = {key: value for key, value in sorted(options.items()) if key not in skip}
        return {
            'command': self.command_name,
            'config': {**self.config_repr, 'options': extras},
            'caps': {name: lkrep_setting(name) for name in DEFAULTS},
        }

    def run(self, **options):
        raise NotImplementedError

    def render(self, report, options):
        """Texto de salida; los subcomandos con CSV lo sobrescriben."""
        return render_json(report)

    def write(self, text, options):
        if options.get('output'):
            Path(options['output']).write_text(text, encoding='utf-8')
            self.stdout.write(self.style.SUCCESS(f"Informe escrito en {options['output']}"))
        else:
            self.stdout.write(text, ending='')

    def record(self, options, report, exit_code, duration):
        if not options.get('record'):
            return
        run = VerificationRun.objects.record(
            command=self.command_name,
            graph=str(report.get('graph', '')),
            config=self.header(options)['config'],
            report=json.loads(render_json(report)),
            exit_code=exit_code,
            duration=duration,
        )
        logger.info(f"Ejecución registrada: {run}")

    def handle(self, *args, **options):
        start = time.monotonic()
        try:
            self.validate_config(options)
            body = self.run(**options)
        except (ValidationError, SerializerError) as exc:
            message = _message(exc)
            logger.error(f"{self.command_name}: entrada inválida: {message}")
            self.record(options, {'error': message}, USAGE, time.monotonic() - start)
            raise CommandError(message, returncode=USAGE) from exc
        except LKRepError as exc:
            logger.error(f"{self.command_name}: {type(exc).__name__}: {exc.message}")
            self.record(options, exc.as_dict(), exc.exit_code, time.monotonic() - start)
            raise CommandError(render_json(exc.as_dict()).strip(), returncode=exc.exit_code) from exc
        report = {**self.header(options), **body}
        exit_code = 0 if report.get('passed', True) else VERIFICATION_FAILED
        self.write(self.render(report, options), options)
        self.record(options, report, exit_code, time.monotonic() - start)
        if exit_code:
            raise CommandError(f'{self.command_name}: verification failed', returncode=exit_code)
