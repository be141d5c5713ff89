"""
Comando para enumerar las raíces positivas de un grafo de Coxeter.
"""
import csv
import io

from core.management.base import LKRepCommand
from coxeter.graphs import is_affine
from rootsys.affine import affine_decompose
from rootsys.meshes import mesh_census
from rootsys.roots import enumerate_roots


class Command(LKRepCommand):
    help = 'Enumerar raíces positivas, profundidades y censo de mallas'
    command_name = 'roots'

    def add_command_arguments(self, parser):
        self.add_graph_arguments(parser)

    def run(self, **options):
        g = self.graph_from_options(options)
        table = enumerate_roots(g, self.depth_for(g, options))
        export = table.export()
        if is_affine(g):
            for row in export['roots']:
                p, _beta = affine_decompose(g, table.root(row['index']))
                row['delta_level'] = p
        census = mesh_census(table)
        self.stderr.write(f'{g}: {len(table)} raíces; mallas por tipo {census}')
        return {
            'graph': str(g),
            'count': len(table),
            'table': export,
            'mesh_census': {str(mesh_type): count for mesh_type, count in census.items()},
        }

    def render(self, report, options):
        if options['format'] != 'csv':
            return super().render(report, options)
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        rows = report['table']['roots']
        extra = ['delta_level'] if rows and 'delta_level' in rows[0] else []
        writer.writerow(['index', 'root', 'depth'] + extra)
        for row in rows:
            writer.writerow([row['index'], row['root'], row['depth']] + [row[key] for key in extra])
        return buffer.getvalue()
