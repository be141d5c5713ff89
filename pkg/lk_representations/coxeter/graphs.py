"""
Grafos de Coxeter de tipo pequeño (m_ij ∈ {1, 2, 3}).

Los índices de vértice son 0-based. Los grafos con nombre siguen la numeración
de Bourbaki desplazada en uno; en los tipos afines el vértice añadido es el 0
y los vértices 1..n conservan la etiqueta de Bourbaki del tipo finito.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations

import networkx as nx
import numpy as np

from core.conf import LOGGER_NAME
from core.exceptions import BadRank, UnknownLabel
from core.validators import validate_coxeter_matrix, validate_rank

logger = logging.getLogger(LOGGER_NAME)

FAMILY_LABELS = ('A', 'D', 'E', 'Atilde', 'Dtilde', 'Etilde')


@dataclass(frozen=True)
class CoxeterGraph:
    """Matriz de Coxeter validada con etiqueta de tipo opcional."""

    m: tuple
    label: str = ''

    @property
    def n(self):
        return len(self.m)

    @property
    def vertices(self):
        return range(len(self.m))

    def entry(self, i, j):
        return self.m[i][j]

    def neighbors(self, i):
        return [j for j in self.vertices if self.m[i][j] == 3]

    def edges(self):
        """Aristas {i, j} con m_ij = 3, como pares i < j."""
        return [(i, j) for i, j in combinations(self.vertices, 2) if self.m[i][j] == 3]

    @cached_property
    def gram(self):
        """Matriz de la forma (α_i|α_j): 2, 0 ó −1."""
        matrix = np.zeros((self.n, self.n), dtype=np.int64)
        for i in self.vertices:
            for j in self.vertices:
                matrix[i, j] = {1: 2, 2: 0, 3: -1}[self.m[i][j]]
        matrix.setflags(write=False)
        return matrix

    def to_networkx(self):
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.edges())
        return graph

    def as_dict(self):
        return {'n': self.n, 'm': [list(row) for row in self.m], 'label': self.label}

    def __str__(self):
        return self.label or f'Gamma({self.n})'


def build_graph(matrix, label=''):
    """Valida una matriz simétrica y construye el grafo."""
    rows = [[int(entry) for entry in row] for row in matrix]
    validate_coxeter_matrix(rows)
    logger.debug(f"Grafo de Coxeter {label or 'sin etiqueta'}: {len(rows)} vértices")
    return CoxeterGraph(m=tuple(tuple(row) for row in rows), label=label)


def graph_from_edges(n, edges, label=''):
    matrix = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    for i, j in edges:
        matrix[i][j] = matrix[j][i] = 3
    return build_graph(matrix, label=label)


def _path(vertices):
    return list(zip(vertices, vertices[1:]))


def _named_edges(family, n):
    if family == 'A':
        validate_rank(n, 1)
        return n, _path(list(range(n)))
    if family == 'D':
        validate_rank(n, 4)
        return n, _path(list(range(n - 1))) + [(n - 3, n - 1)]
    if family == 'E':
        if n not in (6, 7, 8):
            raise BadRank(params={'rank': n, 'minimum': 6})
        return n, [(0, 2), (1, 3)] + _path(list(range(2, n)))
    if family == 'Atilde':
        validate_rank(n, 2)
        return n + 1, _path(list(range(n + 1))) + [(n, 0)]
    if family == 'Dtilde':
        validate_rank(n, 4)
        chain = list(range(2, n - 1))
        return n + 1, [(0, 2), (1, 2)] + _path(chain) + [(n - 2, n - 1), (n - 2, n)]
    if family == 'Etilde':
        if n == 6:
            return 7, [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4), (0, 2)]
        if n == 7:
            return 8, _path([1, 3, 4, 5, 6, 7]) + [(2, 4), (0, 1)]
        if n == 8:
            return 9, _path([1, 3, 4, 5, 6, 7, 8]) + [(2, 4), (0, 8)]
        raise BadRank(params={'rank': n, 'minimum': 6})
    raise UnknownLabel(params={'label': family})


def named_graph(label, n=None):
    """Grafo estándar por etiqueta: ``('A', 5)``, ``('E6', None)``, ``('Atilde', 2)``."""
    family = str(label)
    stem = family.rstrip('0123456789')
    if stem != family:
        suffix = int(family[len(stem):])
        if n is not None and int(n) != suffix:
            raise BadRank(params={'rank': n, 'minimum': suffix})
        family, n = stem, suffix
    if family not in FAMILY_LABELS:
        raise UnknownLabel(params={'label': label})
    if n is None:
        raise BadRank(params={'rank': n, 'minimum': 1})
    size, edges = _named_edges(family, int(n))
    return graph_from_edges(size, edges, label=f'{family}{int(n)}')


def graph_from_spec(spec):
    """``{"n": .., "m": [[..]]}`` o ``{"type": .., "rank": ..}``."""
    if 'm' in spec:
        return build_graph(spec['m'], label=spec.get('label', ''))
    return named_graph(spec['type'], spec.get('rank'))


def connected_components(g, J=None):
    """Componentes conexas de Γ_J, cada una como tupla ordenada."""
    vertices = list(g.vertices) if J is None else sorted(J)
    sub = g.to_networkx().subgraph(vertices)
    return sorted(tuple(sorted(component)) for component in nx.connected_components(sub))


def is_connected(g):
    return len(connected_components(g)) == 1


def triangles(g):
    """Ternas {i, j, k} con m = 3 en los tres lados."""
    return [
        (i, j, k) for i, j, k in combinations(g.vertices, 3)
        if g.m[i][j] == g.m[j][k] == g.m[i][k] == 3
    ]


def has_triangle(g):
    return bool(triangles(g))


def _is_ade_component(sub):
    """Reconoce A/D/E: árbol con a lo sumo un vértice de grado 3 y brazos admisibles."""
    if sub.number_of_edges() != sub.number_of_nodes() - 1:
        return False
    degrees = dict(sub.degree())
    if any(value > 3 for value in degrees.values()):
        return False
    branch = [vertex for vertex, value in degrees.items() if value == 3]
    if not branch:
        return True
    if len(branch) > 1:
        return False
    rest = sub.copy()
    rest.remove_node(branch[0])
    legs = [len(component) for component in nx.connected_components(rest)]
    return sum(Fraction(1, length + 1) for length in legs) > 1


def is_spherical(g, J=None):
    """True si W_J es finito, es decir Γ_J es unión disjunta de diagramas A/D/E."""
    vertices = list(g.vertices) if J is None else sorted(J)
    if not vertices:
        return True
    sub = g.to_networkx().subgraph(vertices)
    return all(
        _is_ade_component(sub.subgraph(component))
        for component in nx.connected_components(sub)
    )


def is_affine(g):
    """Conexo, no esférico y con todo subgrafo propio esférico."""
    if not is_connected(g) or is_spherical(g):
        return False
    return all(
        is_spherical(g, [v for v in g.vertices if v != removed])
        for removed in g.vertices
    )


def is_atilde(g):
    """Γ es un ciclo con al menos tres vértices."""
    graph = g.to_networkx()
    return (
        g.n >= 3
        and nx.is_connected(graph)
        and all(value == 2 for _vertex, value in graph.degree())
    )
