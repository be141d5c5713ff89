"""
Constructores de familias LK por inducción sobre la profundidad: caso
esférico, construcción de Paris y suma directa por componentes.
"""
import logging

from core.conf import LOGGER_NAME
from core.exceptions import InconsistentRelations, NotSpherical, PreconditionFailed
from coxeter.graphs import build_graph, connected_components, is_connected, is_spherical
from laurent.ring import as_poly
from lkcore.checks import check_table1
from lkcore.family import LKFamily
from rootsys.roots import enumerate_roots

from .relations import RelationSolver, agreed

logger = logging.getLogger(LOGGER_NAME)


def _basis_step(table, values, f):
    for i in table.graph.vertices:
        values[(i, table.simple[i])] = f


def _levels(table):
    for depth in range(2, table.max_depth + 1):
        yield depth, table.at_depth(depth)


def spherical_family(g, params, f=None):
    """La única familia LK con f_{i,α_i} = f, vía las relaciones (6)–(10)."""
    if not is_spherical(g):
        raise NotSpherical(graph=str(g))
    if not is_connected(g):
        raise PreconditionFailed(graph=str(g), reason='disconnected graph; use direct_sum_family')
    f = params.f if f is None else as_poly(f)
    table = enumerate_roots(g)
    values = {}
    _basis_step(table, values, f)
    solver = RelationSolver(table, params, values)
    for _depth, level in _levels(table):
        for idx in level:
            for i in g.vertices:
                value = agreed(solver.candidates(i, idx), i, idx, table)
                if value:
                    values[(i, idx)] = value
    family = LKFamily(table, params.with_seed(f), values, name=f'spherical {g}')
    logger.info(f"Familia esférica sobre {g}: {len(table)} raíces, f = {f}")
    return family


def mu_spherical(family):
    """f_{i0,α_{i0}}, el mismo para todo i0."""
    table = family.table
    seeds = {family.value(i, table.simple[i]) for i in family.graph.vertices}
    if len(seeds) != 1:
        raise InconsistentRelations(reason='f_{i,alpha_i} depends on i')
    return seeds.pop()


class ParisBuilder:
    """
    Construcción de Paris con j_α el menor índice válido. Después cada
    valor del paso inductivo se recalcula con cada j_α alternativo sobre la
    familia ya construida.
    """

    def __init__(self, table, params, f):
        self.table = table
        self.params = params
        self.f = f
        self.values = {}
        self.solver = RelationSolver(table, params, self.values)
        a, b, c, d = params.a, params.b, params.c, params.d
        self.ratio = b * d.unit_inverse()
        self.positive_term = -a * f * c.unit_inverse()
        self.hexagon_term = a * d * f * (c * c).unit_inverse()

    def choices(self, idx):
        return [j for j in self.table.graph.vertices if self.table.pair(idx, j) > 0]

    def inductive(self, i, idx, j):
        """Valor para (α|α_i) ≤ 0 a partir de s_j(α), con j_α = j."""
        table, solver = self.table, self.solver
        a, b, c, d = self.params.a, self.params.b, self.params.c, self.params.d
        beta = solver.lower(j, idx)
        if table.graph.m[i][j] == 2:
            return b * solver.inv_d * solver.f(i, beta)
        pairing = table.pair(beta, i)
        if pairing > 0:
            gamma = solver.lower(i, beta)
            return (b * solver.f(j, gamma) - a * solver.f(i, beta)) * solver.inv_c
        if pairing == 0:
            return (d * solver.f(j, beta) - a * solver.f(i, beta)) * solver.inv_c
        extra = self.hexagon_term * self.ratio ** (table.depth(idx) - 3)
        return solver.hexagon_step(i, idx, j, extra)

    def value(self, i, idx, j):
        if self.table.pair(idx, i) > 0:
            return self.positive_term * self.ratio ** (self.table.depth(idx) - 2)
        return self.inductive(i, idx, j)

    def build(self):
        _basis_step(self.table, self.values, self.f)
        for _depth, level in _levels(self.table):
            for idx in level:
                least = self.choices(idx)[0]
                for i in self.table.graph.vertices:
                    value = self.value(i, idx, least)
                    if value:
                        self.values[(i, idx)] = value
        return self.values

    def independence(self):
        disagreements = []
        checked = 0
        for _depth, level in _levels(self.table):
            for idx in level:
                options = self.choices(idx)
                for i in self.table.graph.vertices:
                    if self.table.pair(idx, i) > 0:
                        continue
                    alternatives = [j for j in options if j != i]
                    results = {j: self.inductive(i, idx, j) for j in alternatives}
                    checked += 1
                    first = results[alternatives[0]]
                    if any(value != first for value in results.values()):
                        disagreements.append({
                            'i': i,
                            'root': self.table.label(idx),
                            'values': {str(j): str(value) for j, value in results.items()},
                        })
        return {'independent': not disagreements, 'checked': checked, 'disagreements': disagreements}


def paris_family(g, params, f=None, depth_bound=None):
    """Familia de Paris e informe de independencia de la elección de j_α."""
    if not is_connected(g):
        raise PreconditionFailed(graph=str(g), reason='disconnected graph; use direct_sum_family')
    f = params.f if f is None else as_poly(f)
    table = enumerate_roots(g, depth_bound)
    builder = ParisBuilder(table, params, f)
    values = builder.build()
    report = builder.independence()
    family = LKFamily(table, params.with_seed(f), values, name=f'paris {g}')
    if report['independent']:
        relations = check_table1(family)
        report['table1_passed'] = relations['passed']
        if not relations['passed']:
            logger.error(f"La familia de Paris sobre {g} incumple la tabla de relaciones")
            raise InconsistentRelations(graph=str(g), violations=len(relations['violations']))
    else:
        logger.warning(
            f"La familia de Paris sobre {g} depende de j_α en "
            f"{len(report['disagreements'])} casos"
        )
    logger.info(f"Familia de Paris sobre {g}: {len(table)} raíces, independiente={report['independent']}")
    return family, report


def is_group_family(family, units=()):
    """True si cada f_{i,α_i} es unidad de R o una de las ``units`` declaradas."""
    declared = {as_poly(unit) for unit in units}
    table = family.table
    for i in family.graph.vertices:
        value = family.value(i, table.simple[i])
        if not value:
            return False
        if not (value.is_unit() or value in declared):
            return False
    return True


def _subgraph(g, component):
    matrix = [[g.m[i][j] for j in component] for i in component]
    return build_graph(matrix, label=f'{g.label}|{",".join(map(str, component))}')


def direct_sum_family(g, builder, depth_bound=None):
    """
    Familia sobre un grafo no conexo: ``builder(subgrafo)`` por componente;
    los valores entre componentes distintas son nulos.
    """
    table = enumerate_roots(g, depth_bound)
    values = {}
    params = None
    for component in connected_components(g):
        part = builder(_subgraph(g, component))
        params = params or part.params
        if part.params != params:
            raise PreconditionFailed(reason='components built with different parameters')
        for (i, idx), value in part.items():
            local = part.table.root(idx)
            alpha = [0] * g.n
            for position, vertex in enumerate(component):
                alpha[vertex] = local[position]
            alpha = tuple(alpha)
            if alpha in table:
                values[(component[i], table.index_of(alpha))] = value
    family = LKFamily(table, params, values, name=f'direct sum {g}')
    logger.info(f"Suma directa sobre {g}: {len(connected_components(g))} componentes")
    return family


def values_of(family):
    """Copia de los valores de ``family`` indexados por (i, raíz)."""
    return {(i, family.table.root(idx)): value for (i, idx), value in family.items()}
