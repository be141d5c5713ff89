"""
Comando para las tres realizaciones de B_n como submonoides fijos.
"""
from core.management.base import LKRepCommand
from core.validators import validate_rank
from twisted.typeb import (
    determinant_obstruction, nonequivalence_condition, nonequivalence_value, typeB_suite,
)


class Command(LKRepCommand):
    help = 'Generadores de B_n desde A_{2n-1}, A_{2n} y D_{n+1}, con sus determinantes'
    command_name = 'typeb'

    def add_command_arguments(self, parser):
        self.add_params_arguments(parser)
        parser.add_argument('--n', type=int, default=3, help='Rango de B_n (n ≥ 3)')
        parser.add_argument('--k', default='1,2,3', help='Realizaciones: 1 = A_{2n-1}, 2 = A_{2n}, 3 = D_{n+1}')
        parser.add_argument('--nonequiv', action='store_true', help='Comprobar la no equivalencia de k = 1 y k = 3')

    def run(self, **options):
        n = options['n']
        validate_rank(n, 3)
        params = self.params_from_options(options)
        suites = []
        for k in sorted({int(part) for part in options['k'].split(',') if part.strip()}):
            suite = typeB_suite(n, k, params)
            suites.append({
                'k': k,
                'ambient': suite['ambient'],
                'degree': suite['degree'],
                'orbits': suite['orbits'],
                'words': suite['words'],
                'coxeter_matrix': suite['coxeter_matrix'],
                'dets': [str(value) for value in suite['dets']],
                'predicted': [str(value) for value in suite['predicted']],
                'dets_match': suite['dets_match'],
                'failures': suite['failures'],
                'braid': suite['braid'],
            })
        body = {
            'n': n,
            'params': params.as_dict(),
            'suites': suites,
            'passed': all(not suite['failures'] and suite['braid']['passed'] for suite in suites),
        }
        if options['nonequiv']:
            pqr = params.pqr
            body['nonequivalence'] = {
                'pqr': list(pqr) if pqr else None,
                'value': nonequivalence_value(n, *pqr) if pqr else None,
                'condition': nonequivalence_condition(n, *pqr) if pqr else None,
                'determinants': determinant_obstruction(n, params),
            }
        return body
