"""
Comando para calcular la matriz de ψ_b (o de su inversa) sobre una palabra.
"""
from django.core.management.base import CommandError

from core.conf import lkrep_setting
from core.management.base import USAGE, LKRepCommand
from coxeter.words import format_word
from lkcore.maps import LKRepresentation, det


class Command(LKRepCommand):
    help = 'Matriz de ψ_b para una palabra positiva'
    command_name = 'rep'

    def add_command_arguments(self, parser):
        self.add_graph_arguments(parser)
        self.add_params_arguments(parser)
        self.add_family_arguments(parser)
        parser.add_argument('--word', default='', help='Palabra, p. ej. 010 o 0.1.10')
        parser.add_argument('--inverse', action='store_true', help='Inversa sobre la localización de R')
        parser.add_argument('--det', action='store_true', help='Incluir det ψ_b (tablas completas)')

    def run(self, **options):
        g = self.graph_from_options(options)
        word = self.word_from_text(options['word'], g)
        params = self.params_from_options(options)
        family, _construction = self.family_from_options(g, params, options)
        rep = LKRepresentation(family.table, family)
        endo = rep.inverse_word(word) if options['inverse'] else rep.word(word)
        self._endo = endo
        body = {
            'graph': str(g),
            'word': format_word(word),
            'inverse': options['inverse'],
            'size': endo.size,
            'matrix': endo.export(),
        }
        if options['det']:
            body['det'] = str(det(rep.word(word)))
        return body

    def render(self, report, options):
        if options['format'] != 'csv':
            return super().render(report, options)
        limit = lkrep_setting('CSV_MAX_COLUMNS')
        if self._endo.size > limit:
            raise CommandError(f'CSV output is limited to {limit} columns', returncode=USAGE)
        return self._endo.to_csv()
