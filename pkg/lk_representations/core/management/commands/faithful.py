"""
Comando para los experimentos de fidelidad hasta una longitud dada.
"""
from django.core.management.base import CommandError

from core.management.base import USAGE, LKRepCommand
from faithcheck.criterion import criterion_report
from faithcheck.experiments import (
    faithfulness_experiment, monotonicity_check, relation_homomorphism_check,
    twisted_faithfulness_experiment,
)
from faithcheck.relations import hee_properties
from twisted.groups import named_group
from twisted.orbits import OrbitBasis


class Command(LKRepCommand):
    help = 'Experimento de fidelidad: matrices distintas para elementos distintos de longitud ≤ L'
    command_name = 'faithful'

    def add_command_arguments(self, parser):
        self.add_graph_arguments(parser)
        self.add_params_arguments(parser)
        parser.add_argument('--L', dest='length', type=int, default=4, help='Longitud máxima')
        parser.add_argument('--regime', default='0<y<1', help="'0<y<1' o 'y>1'")
        parser.add_argument('--twisted', action='store_true', help='Elementos fijos y ψ^G')
        parser.add_argument('--group', default='flip', help='Grupo para --twisted')
        parser.add_argument('--relations', action='store_true', help='Comprobar R_{bb′} = R_b R_{b′} y la monotonía')

    def run(self, **options):
        g = self.graph_from_options(options)
        params = self.params_from_options(options)
        family, _construction = self.family_from_options(g, params, {**options, 'construction': 'spherical'})
        regime, length = options['regime'], options['length']
        criterion = criterion_report(family, params, regime)
        if not criterion['passed']:
            self.write(self.render({**self.header(options), 'criterion': criterion, 'passed': False}, options), options)
            raise CommandError('faithfulness criterion not satisfied; experiment refused', returncode=USAGE)
        if options['twisted']:
            group = named_group(g, options['group'])
            basis = OrbitBasis(family.table, group)
            experiment = twisted_faithfulness_experiment(g, group, family, length, regime, basis=basis)
        else:
            experiment = faithfulness_experiment(g, family, length, regime)
        body = {
            'graph': str(g),
            'criterion': criterion,
            'hee': hee_properties(family.table, family, params, regime),
            'experiment': experiment,
        }
        if options['relations']:
            body['homomorphism'] = relation_homomorphism_check(g, family, length, regime)
            body['monotonicity'] = monotonicity_check(g, family, length, regime)
        body['passed'] = all(
            body[key]['passed'] for key in ('hee', 'experiment', 'homomorphism', 'monotonicity') if key in body
        )
        return body
