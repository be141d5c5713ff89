"""
Comando para construir una familia LK y comprobar sus relaciones.
"""
from core.management.base import LKRepCommand
from lkcore.checks import check_family_conditions, check_table1


class Command(LKRepCommand):
    help = 'Construir una familia LK (esférica, de Paris o afín) y verificarla'
    command_name = 'family'

    def add_command_arguments(self, parser):
        self.add_graph_arguments(parser)
        self.add_params_arguments(parser)
        self.add_family_arguments(parser)

    def run(self, **options):
        g = self.graph_from_options(options)
        params = self.params_from_options(options)
        family, construction = self.family_from_options(g, params, options)
        relations = check_table1(family)
        conditions = check_family_conditions(family)
        passed = (
            relations['passed']
            and conditions['passed']
            and construction.get('independent', True)
            and construction.get('mu_roundtrip', True)
        )
        return {
            'graph': str(g),
            'construction': options['construction'],
            'family': family.export(),
            'construction_report': construction,
            'table1': relations,
            'conditions': conditions,
            'passed': passed,
        }
