"""
Comando para la representación torcida ψ^G sobre V^G.
"""
from core.exceptions import UnsupportedOrbit
from core.management.base import LKRepCommand
from coxeter.words import format_word
from lkcore.maps import det
from twisted.closed_forms import closed_form_delta, determinant_census
from twisted.groups import group_from_generators, named_group
from twisted.orbits import OrbitBasis, collision_scan
from twisted.representation import TwistedRepresentation, fixed_generators


class Command(LKRepCommand):
    help = 'Órbitas, generadores de ψ^G y comprobación de las formas cerradas'
    command_name = 'twisted'

    def add_command_arguments(self, parser):
        self.add_graph_arguments(parser)
        self.add_params_arguments(parser)
        self.add_family_arguments(parser)
        parser.add_argument('--group', default='flip', help='flip, rotation, half-turn, full o trivial')
        parser.add_argument('--perm', help='Generadores explícitos: "2,1,0;..." (anula --group)')
        parser.add_argument('--matrices', action='store_true', help='Incluir las matrices de los generadores')

    def group_from_options(self, g, options):
        if options.get('perm'):
            generators = [
                [int(k) for k in chunk.split(',')] for chunk in options['perm'].split(';') if chunk.strip()
            ]
            return group_from_generators(g, generators)
        return named_group(g, options['group'])

    def check_generator(self, orbit, word, rep, basis, family):
        endo = rep.word(word)
        entry = {'orbit': list(orbit), 'word': format_word(word)}
        try:
            closed = closed_form_delta(orbit, basis.table, family, basis)
        except UnsupportedOrbit:
            entry['closed_form'] = 'skipped'
        else:
            entry['closed_form'] = 'pass' if closed == endo else 'fail'
        if basis.complete and basis.group.order == 2 and len(orbit) <= 2:
            predicted = determinant_census(orbit, family, basis)
            value = det(endo)
            entry['census'] = {key: count for key, count in sorted(predicted['census'].items())}
            entry['det'] = str(value)
            entry['det_matches_census'] = value == predicted['det']
        return endo, entry

    def run(self, **options):
        g = self.graph_from_options(options)
        params = self.params_from_options(options)
        family, _construction = self.family_from_options(g, params, options)
        group = self.group_from_options(g, options)
        basis = OrbitBasis(family.table, group)
        rep = TwistedRepresentation(basis, family)
        found = fixed_generators(g, group)
        generators = []
        for item in found['generators']:
            endo, entry = self.check_generator(item['orbit'], item['word'], rep, basis, family)
            if options['matrices']:
                entry['matrix'] = endo.export()
            generators.append(entry)
        collisions = collision_scan(basis)
        passed = all(
            entry['closed_form'] != 'fail' and entry.get('det_matches_census', True)
            for entry in generators
        )
        return {
            'graph': str(g),
            'group': group.as_dict(),
            'degree': len(basis),
            'orbits': basis.export()['orbits'],
            'generators': generators,
            'skipped_orbits': [list(orbit) for orbit in found['skipped']],
            'alpha_theta_collisions': [[basis.label(first), basis.label(second)] for first, second in collisions],
            'passed': passed,
        }
