"""
Comando para la batería de autocomprobación a escala de escritorio.
"""
import logging

from core.conf import LOGGER_NAME
from core.exceptions import LKRepError
from core.management.base import LKRepCommand
from coxeter.graphs import named_graph
from faithcheck.experiments import faithfulness_experiment
from families.affine import affine_family, paris_seed
from families.builders import mu_spherical, paris_family, spherical_family, values_of
from laurent.params import make_params
from laurent.ring import LaurentPoly
from lkcore.checks import check_table1
from lkcore.maps import LKRepresentation
from rootsys.roots import enumerate_roots
from twisted.closed_forms import closed_form_delta
from twisted.groups import named_group
from twisted.orbits import OrbitBasis, collision_scan
from twisted.representation import TwistedRepresentation, fixed_generators

logger = logging.getLogger(LOGGER_NAME)

PQRS = [(1, 0, 0), (0, 1, 0), (1, 1, 0)]


def _seed():
    return LaurentPoly.parse('x*y^2')


def check_braid_spherical():
    graphs = [('A', 2), ('A', 3), ('D', 4)]
    failures = []
    for label, rank in graphs:
        for pqr in PQRS:
            family = spherical_family(named_graph(label, rank), make_params(*pqr, f=_seed()))
            if not LKRepresentation(family.table, family).braid_relations()['passed']:
                failures.append(f'{label}{rank} {pqr}')
    return {'passed': not failures, 'failures': failures}


def check_braid_affine():
    g = named_graph('Atilde', 2)
    params = make_params(1, 0, 0, f=_seed())
    family = affine_family(paris_seed(g, params, p_max=4), params, 5)
    report = LKRepresentation(family.table, family).braid_relations()
    return {'passed': report['passed'], 'checked': report['checked']}


def check_spherical_families():
    failures = []
    for label, rank in [('A', 3), ('D', 4)]:
        params = make_params(1, 0, 0, f=_seed())
        family = spherical_family(named_graph(label, rank), params)
        if not check_table1(family)['passed'] or mu_spherical(family) != params.f:
            failures.append(f'{label}{rank}')
    return {'passed': not failures, 'failures': failures}


def check_paris_is_affine():
    g = named_graph('Atilde', 2)
    params = make_params(1, 0, 0, f=_seed())
    paris, report = paris_family(g, params, depth_bound=5)
    affine = affine_family(paris_seed(g, params, p_max=4), params, 5)
    found = {key: value for key, value in values_of(affine).items() if key[1] in paris.table}
    return {'passed': report['independent'] and found == values_of(paris)}


def check_closed_forms():
    failures = []
    checked = 0
    for rank in (3, 5):
        g = named_graph('A', rank)
        family = spherical_family(g, make_params(1, 0, 0, f=_seed()))
        group = named_group(g, 'flip')
        basis = OrbitBasis(family.table, group)
        rep = TwistedRepresentation(basis, family)
        for item in fixed_generators(g, group)['generators']:
            checked += 1
            closed = closed_form_delta(item['orbit'], basis.table, family, basis)
            if closed != rep.word(item['word']):
                failures.append(f"A{rank} {list(item['orbit'])}")
    return {'passed': not failures, 'checked': checked, 'failures': failures}


def check_faithfulness():
    g = named_graph('A', 2)
    family = spherical_family(g, make_params(1, 0, 0, f=_seed()))
    report = faithfulness_experiment(g, family, 4)
    return {'passed': report['passed'], 'elements': report['elements']}


def check_collisions():
    atilde3 = named_graph('Atilde', 3)
    affine = collision_scan(OrbitBasis(enumerate_roots(atilde3, 4), named_group(atilde3, 'half-turn')))
    a5 = named_graph('A', 5)
    spherical = collision_scan(OrbitBasis(enumerate_roots(a5), named_group(a5, 'flip')))
    return {'passed': bool(affine) and not spherical, 'atilde3': len(affine), 'a5': len(spherical)}


CHECKS = {
    'braid_spherical': check_braid_spherical,
    'braid_affine': check_braid_affine,
    'spherical_families': check_spherical_families,
    'paris_is_affine': check_paris_is_affine,
    'closed_forms': check_closed_forms,
    'faithfulness': check_faithfulness,
    'collisions': check_collisions,
}


class Command(LKRepCommand):
    help = 'Batería de autocomprobación de los módulos de cálculo'
    command_name = 'selftest'

    def add_command_arguments(self, parser):
        parser.add_argument('--only', action='append', choices=sorted(CHECKS), help='Ejecutar sólo esta comprobación')

    def run(self, **options):
        names = options.get('only') or list(CHECKS)
        results = []
        for name in names:
            try:
                result = CHECKS[name]()
            except LKRepError as exc:
                logger.error(f"selftest {name}: {type(exc).__name__}")
                result = {'passed': False, 'error': exc.as_dict()}
            result['name'] = name
            self.stderr.write(f"{name}: {'ok' if result['passed'] else 'FAIL'}")
            results.append(result)
        return {'checks': results, 'passed': all(result['passed'] for result in results)}
