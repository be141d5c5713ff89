"""
Tests para validators, serializers, el registro de ejecuciones y los comandos.
"""
import json
from datetime import timedelta
from io import StringIO

from django.core.exceptions import ValidationError
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, TestCase, override_settings
from django.utils import timezone

from laurent.params import LKParams
from laurent.ring import X, Y

from .conf import DEFAULTS, lkrep_setting
from .exceptions import (
    BadDiagonal, BadRank, BadRegime, CapExceeded, FaithfulnessViolation, NonSmallType,
    NotSymmetric, StabilizationFailure, UnsupportedOrbit,
)
from .factories import LKParamsFactory, VerificationRunFactory
from .models import RunStatus, VerificationRun
from .serializers import (
    GraphSpecSerializer, ParamsSerializer, RunConfigSerializer, SeedSerializer, VerificationRunSerializer,
    render_json,
)
from .validators import (
    validate_coxeter_matrix, validate_depth_bound, validate_length_cap, validate_rank,
    validate_regime,
)


def run(*args, **kwargs):
    out, err = StringIO(), StringIO()
    call_command(*args, stdout=out, stderr=err, **kwargs)
    return out.getvalue()


def run_json(*args, **kwargs):
    return json.loads(run(*args, **kwargs))


class ValidatorsTestCase(SimpleTestCase):
    """Tests para validadores personalizados."""

    def test_coxeter_matrix_valid(self):
        """Test matrices de tipo pequeño válidas."""
        validate_coxeter_matrix([[1, 3], [3, 1]])
        validate_coxeter_matrix([[1, 2, 3], [2, 1, 3], [3, 3, 1]])

    def test_coxeter_matrix_invalid(self):
        """Test entradas fuera de {1, 2, 3}, asimetría y diagonal."""
        with self.assertRaises(NonSmallType):
            validate_coxeter_matrix([[1, 4], [4, 1]])
        with self.assertRaises(NotSymmetric):
            validate_coxeter_matrix([[1, 3], [2, 1]])
        with self.assertRaises(BadDiagonal):
            validate_coxeter_matrix([[2, 3], [3, 1]])
        with self.assertRaises(ValidationError):
            validate_coxeter_matrix([])

    def test_ranges(self):
        """Test rango, profundidad, longitud y régimen."""
        validate_rank(3, 3)
        with self.assertRaises(BadRank):
            validate_rank(2, 3)
        validate_depth_bound(None)
        with self.assertRaises(ValidationError):
            validate_depth_bound(0)
        validate_length_cap(0)
        with self.assertRaises(ValidationError):
            validate_length_cap(13)
        validate_regime('y>1')
        with self.assertRaises(BadRegime):
            validate_regime('y<0')

    def test_error_codes(self):
        """Test códigos estables y códigos de salida."""
        self.assertEqual(BadRank().code, 'bad_rank')
        self.assertEqual(CapExceeded().exit_code, 2)
        self.assertEqual(StabilizationFailure().exit_code, 3)
        self.assertEqual(UnsupportedOrbit().exit_code, 1)
        error = FaithfulnessViolation(first='010', second='101')
        self.assertEqual(error.as_dict()['error'], 'FaithfulnessViolation')
        self.assertEqual(error.as_dict()['details'], {'first': '010', 'second': '101'})

    def test_settings_defaults(self):
        """Test LKREP con valores por defecto."""
        self.assertEqual(lkrep_setting('ROOT_CAP'), DEFAULTS['ROOT_CAP'])
        with override_settings(LKREP={'CAP': 7}):
            self.assertEqual(lkrep_setting('CAP'), 7)
            self.assertEqual(lkrep_setting('W_CAP'), 10000)


class SerializersTestCase(SimpleTestCase):
    """Tests para los serializers de entrada."""

    def test_graph_by_type(self):
        """Test {"type", "rank"}."""
        serializer = GraphSpecSerializer(data={'type': 'D', 'rank': 4})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(str(serializer.validated_data['graph']), 'D4')

    def test_graph_by_matrix(self):
        """Test {"n", "m"} y errores de la matriz."""
        serializer = GraphSpecSerializer(data={'n': 2, 'm': [[1, 3], [3, 1]]})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.validated_data['graph'].n, 2)
        self.assertFalse(GraphSpecSerializer(data={'n': 3, 'm': [[1, 3], [3, 1]]}).is_valid())
        self.assertFalse(GraphSpecSerializer(data={'m': [[1, 5], [5, 1]]}).is_valid())
        self.assertFalse(GraphSpecSerializer(data={}).is_valid())

    def test_params_pqr(self):
        """Test (p, q, r) y semilla."""
        serializer = ParamsSerializer(data={'pqr': [1, 0, 0], 'f': 'x*y^2'})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        params = serializer.validated_data['params']
        self.assertEqual(params.pqr, (1, 0, 0))
        self.assertEqual(params.f, X * Y ** 2)
        self.assertEqual(params.b, Y)

    def test_params_explicit(self):
        """Test unidades explícitas y unidades inválidas."""
        serializer = ParamsSerializer(data={'b': 'y', 'c': 'y^2', 'd': 'x*y'})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertIsInstance(serializer.validated_data['params'], LKParams)
        self.assertFalse(ParamsSerializer(data={'b': '1+y', 'c': '1', 'd': '1'}).is_valid())
        self.assertFalse(ParamsSerializer(data={'b': 'y'}).is_valid())
        self.assertFalse(ParamsSerializer(data={'pqr': [1, 0, 0], 'b': 'y'}).is_valid())

    def test_seed(self):
        """Test semillas y polinomios mal formados."""
        serializer = SeedSerializer(data={'seq': ['x*y^2', 'x', '2']})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.validated_data['seq'][1], X)
        self.assertFalse(SeedSerializer(data={'seq': ['x/(1+y)']}).is_valid())
        self.assertFalse(SeedSerializer(data={'seq': []}).is_valid())

    def test_run_config(self):
        """Test configuración válida y combinaciones rechazadas."""
        serializer = RunConfigSerializer(data={
            'graph': {'type': 'Atilde', 'rank': 2}, 'construction': 'affine', 'seed': 'seed.json',
            'depth_bound': 5,
        })
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.data['graph']['type'], 'Atilde')

        serializer = RunConfigSerializer(data={
            'graph': {'type': 'A', 'rank': 3}, 'construction': 'affine', 'seed': 'seed.json',
        })
        self.assertFalse(serializer.is_valid())
        self.assertIn('construction', serializer.errors)

        serializer = RunConfigSerializer(data={'graph': {'type': 'Atilde', 'rank': 2}, 'construction': 'affine'})
        self.assertFalse(serializer.is_valid())
        self.assertIn('seed', serializer.errors)

        serializer = RunConfigSerializer(data={'graph': {'m': [[1, 2], [2, 1]]}, 'construction': 'paris'})
        self.assertFalse(serializer.is_valid())
        self.assertIn('construction', serializer.errors)

        serializer = RunConfigSerializer(data={'graph': {'type': 'A', 'rank': 3}, 'seed': 'seed.json'})
        self.assertFalse(serializer.is_valid())
        self.assertIn('seed', serializer.errors)

    def test_render_json_is_stable(self):
        """Test claves ordenadas."""
        self.assertEqual(render_json({'b': 1, 'a': 2}), render_json({'a': 2, 'b': 1}))

    def test_params_factory(self):
        """Test LKParamsFactory produce parámetros monomiales válidos."""
        params = LKParamsFactory.build(p=1, q=0, r=0)
        self.assertEqual(params.pqr, (1, 0, 0))
        for _ in range(5):
            self.assertTrue(LKParamsFactory.build().b.is_unit())


class VerificationRunTestCase(TestCase):
    """Tests para el modelo y el manager de ejecuciones."""

    def test_status_for_exit_code(self):
        """Test 0, 2, 3 y otros códigos."""
        self.assertEqual(VerificationRun.status_for_exit_code(0), RunStatus.PASSED)
        self.assertEqual(VerificationRun.status_for_exit_code(2), RunStatus.CAP_EXCEEDED)
        self.assertEqual(VerificationRun.status_for_exit_code(3), RunStatus.FAILED)
        self.assertEqual(VerificationRun.status_for_exit_code(1), RunStatus.ERROR)

    def test_queryset(self):
        """Test passed, failed, for_command, older_than y recent."""
        VerificationRunFactory(command='roots')
        VerificationRunFactory(command='faithful', status=RunStatus.FAILED)
        old = VerificationRunFactory(command='roots')
        VerificationRun.objects.filter(pk=old.pk).update(created_at=timezone.now() - timedelta(days=100))
        self.assertEqual(VerificationRun.objects.passed().count(), 2)
        self.assertEqual(VerificationRun.objects.failed().count(), 1)
        self.assertEqual(VerificationRun.objects.for_command('roots').count(), 2)
        self.assertEqual(VerificationRun.objects.older_than(90).count(), 1)
        self.assertEqual(VerificationRun.objects.recent(30).count(), 2)

    def test_record(self):
        """Test el factory method del manager."""
        run = VerificationRun.objects.record('typeb', {'n': 3}, {'passed': False}, exit_code=3, graph='A5')
        self.assertEqual(run.status, RunStatus.FAILED)
        self.assertFalse(run.passed)
        self.assertIn('typeb', str(run))

    def test_serializer(self):
        """Test VerificationRunSerializer."""
        run = VerificationRunFactory(command='rep', graph='A2')
        data = VerificationRunSerializer(run).data
        self.assertEqual(data['command'], 'rep')
        self.assertEqual(data['status_display'], str(RunStatus.PASSED.label))


class ComputationCommandsTestCase(SimpleTestCase):
    """Tests para los subcomandos de cálculo."""

    def test_roots(self):
        """Test A_3 tiene 6 raíces positivas."""
        report = run_json('roots', '--type', 'A', '--rank', '3')
        self.assertEqual(report['count'], 6)
        self.assertEqual(report['command'], 'roots')
        self.assertIn('CAP', report['caps'])

    def test_roots_affine(self):
        """Test Ã_2 con profundidad 6 anota el nivel de δ."""
        report = run_json('roots', '--type', 'Atilde', '--rank', '2', '--depth', '6')
        levels = {row['delta_level'] for row in report['table']['roots']}
        self.assertIn(0, levels)
        self.assertIn(1, levels)
        self.assertFalse(report['table']['complete'])

    def test_roots_csv(self):
        """Test salida CSV."""
        text = run('roots', '--type', 'A', '--rank', '2', '--format', 'csv')
        self.assertEqual(text.splitlines()[0], 'index,root,depth')
        self.assertEqual(len(text.splitlines()), 4)

    def test_deterministic_output(self):
        """Test la misma configuración produce la misma salida."""
        args = ('family', '--type', 'A', '--rank', '3', '--pqr', '1,0,0', '--f', 'x*y^2')
        self.assertEqual(run(*args), run(*args))

    def test_bad_rank(self):
        """Test rango inválido: código de salida 1."""
        with self.assertRaises(CommandError) as ctx:
            run('roots', '--type', 'A', '--rank', '0')
        self.assertEqual(ctx.exception.returncode, 1)
        with self.assertRaises(CommandError) as ctx:
            run('roots', '--type', 'Q', '--rank', '3')
        self.assertEqual(ctx.exception.returncode, 1)

    def test_family(self):
        """Test familia esférica de A_3 sin violaciones."""
        report = run_json('family', '--type', 'A', '--rank', '3', '--pqr', '1,0,0', '--f', 'x*y^2')
        self.assertTrue(report['passed'])
        self.assertEqual(report['table1']['violations'], [])
        self.assertTrue(report['construction_report']['mu_roundtrip'])

    def test_affine_needs_seed(self):
        """Test --construction affine sin --seed."""
        with self.assertRaises(CommandError) as ctx:
            run('family', '--type', 'Atilde', '--rank', '2', '--construction', 'affine')
        self.assertEqual(ctx.exception.returncode, 1)

    def test_affine_on_spherical_graph(self):
        """Test --construction affine sobre un grafo que no es afín."""
        with self.assertRaises(CommandError) as ctx:
            run('family', '--type', 'A', '--rank', '3', '--construction', 'affine', '--seed', 'seed.json')
        self.assertEqual(ctx.exception.returncode, 1)

    def test_report_config(self):
        """Test la cabecera lleva la configuración validada."""
        report = run_json('family', '--type', 'A', '--rank', '3', '--pqr', '1,0,0')
        self.assertEqual(report['config']['graph']['type'], 'A')
        self.assertEqual(report['config']['params']['pqr'], [1, 0, 0])
        self.assertEqual(report['config']['construction'], 'spherical')
        self.assertNotIn('verbosity', report['config']['options'])

    def test_rep_braid_relation(self):
        """Test 010 y 101 dan la misma matriz en A_2."""
        first = run_json('rep', '--type', 'A', '--rank', '2', '--word', '010')
        second = run_json('rep', '--type', 'A', '--rank', '2', '--word', '101')
        self.assertEqual(first['matrix'], second['matrix'])
        self.assertEqual(first['size'], 3)

    def test_rep_identity_and_inverse(self):
        """Test palabra vacía e inversa."""
        identity = run_json('rep', '--type', 'A', '--rank', '2')
        self.assertEqual(identity['matrix']['columns']['0'], [[0, '1']])
        inverse = run_json('rep', '--type', 'A', '--rank', '2', '--word', '0', '--inverse', '--det')
        self.assertTrue(inverse['inverse'])
        self.assertNotEqual(inverse['det'], '0')

    def test_rep_csv(self):
        """Test la matriz densa en CSV."""
        text = run('rep', '--type', 'A', '--rank', '2', '--word', '0', '--format', 'csv')
        self.assertEqual(len(text.splitlines()), 4)

    def test_rep_bad_word(self):
        """Test letra fuera del grafo."""
        with self.assertRaises(CommandError) as ctx:
            run('rep', '--type', 'A', '--rank', '2', '--word', '030')
        self.assertEqual(ctx.exception.returncode, 1)

    def test_twisted(self):
        """Test A_5 con el flip: grado 9 y formas cerradas correctas."""
        report = run_json('twisted', '--ambient', 'A', '--rank', '5', '--group', 'flip')
        self.assertTrue(report['passed'])
        self.assertEqual(report['degree'], 9)
        self.assertEqual([entry['closed_form'] for entry in report['generators']], ['pass'] * 3)
        self.assertEqual(report['alpha_theta_collisions'], [])

    def test_twisted_unknown_group(self):
        """Test grupo sin nombre en A_3."""
        with self.assertRaises(CommandError) as ctx:
            run('twisted', '--ambient', 'A', '--rank', '3', '--group', 'rotation')
        self.assertEqual(ctx.exception.returncode, 1)

    def test_typeb(self):
        """Test B_3 desde A_5 y D_4 con la comprobación de no equivalencia."""
        report = run_json('typeb', '--n', '3', '--k', '1,3', '--pqr', '1,0,0', '--nonequiv')
        self.assertTrue(report['passed'])
        self.assertEqual([suite['degree'] for suite in report['suites']], [9, 9])
        self.assertTrue(report['nonequivalence']['condition'])
        self.assertEqual(report['nonequivalence']['value'], 6)
        self.assertTrue(report['nonequivalence']['determinants']['nonequivalent'])

    def test_faithful(self):
        """Test A_2 hasta longitud 4 sin colisiones."""
        report = run_json('faithful', '--type', 'A', '--rank', '2', '--L', '4', '--relations')
        self.assertTrue(report['passed'])
        self.assertEqual(report['experiment']['collisions'], 0)
        self.assertIn('caveat', report['experiment'])

    def test_faithful_refuses_without_criterion(self):
        """Test f = y² no cumple el criterio."""
        out = StringIO()
        with self.assertRaises(CommandError) as ctx:
            call_command('faithful', '--type', 'A', '--rank', '2', '--f', 'y^2', stdout=out, stderr=StringIO())
        self.assertEqual(ctx.exception.returncode, 1)
        self.assertFalse(json.loads(out.getvalue())['criterion']['passed'])

    @override_settings(LKREP={'CAP': 5})
    def test_cap_exceeded(self):
        """Test el límite de clases da código de salida 2."""
        with self.assertRaises(CommandError) as ctx:
            run('faithful', '--type', 'A', '--rank', '2', '--L', '3')
        self.assertEqual(ctx.exception.returncode, 2)

    def test_selftest(self):
        """Test comprobación de colisiones de α_Θ."""
        report = run_json('selftest', '--only', 'collisions')
        self.assertTrue(report['passed'])
        self.assertGreaterEqual(report['checks'][0]['atilde3'], 1)


class RunLogCommandsTestCase(TestCase):
    """Tests para --record, generate_report y cleanup_old_data."""

    def test_record(self):
        """Test --record guarda el informe."""
        run('roots', '--type', 'A', '--rank', '2', '--record')
        stored = VerificationRun.objects.get()
        self.assertEqual(stored.command, 'roots')
        self.assertEqual(stored.graph, 'A2')
        self.assertEqual(stored.report['count'], 3)
        self.assertEqual(stored.status, RunStatus.PASSED)

    def test_record_error(self):
        """Test los errores también se registran."""
        with self.assertRaises(CommandError):
            run('roots', '--type', 'A', '--rank', '0', '--record')
        self.assertEqual(VerificationRun.objects.get().status, RunStatus.ERROR)

    def test_generate_report(self):
        """Test resumen en texto y JSON."""
        VerificationRunFactory.create_batch(3, command='roots')
        VerificationRunFactory(command='typeb', status=RunStatus.FAILED, report={'error': 'boom'})
        self.assertIn('Total ejecuciones: 4', run('generate_report'))
        data = json.loads(run('generate_report', '--format', 'json'))
        self.assertEqual(data['by_status'], {'FAILED': 1, 'PASSED': 3})
        self.assertEqual(data['by_command'], {'roots': 3, 'typeb': 1})
        failures = json.loads(run('generate_report', '--type', 'failures', '--format', 'json'))
        self.assertEqual(len(failures['runs']), 1)
        self.assertIn('boom', run('generate_report', '--type', 'failures'))

    def test_cleanup(self):
        """Test dry-run y borrado de ejecuciones antiguas."""
        recent = VerificationRunFactory()
        old = VerificationRunFactory()
        VerificationRun.objects.filter(pk=old.pk).update(created_at=timezone.now() - timedelta(days=200))
        run('cleanup_old_data', '--days', '90', '--dry-run')
        self.assertEqual(VerificationRun.objects.count(), 2)
        run('cleanup_old_data', '--days', '90')
        self.assertEqual(list(VerificationRun.objects.values_list('pk', flat=True)), [recent.pk])
