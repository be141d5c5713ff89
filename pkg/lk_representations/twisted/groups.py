"""
Automorfismos de grafos de Coxeter y su acción sobre vértices, raíces y palabras.

Una permutación se guarda como tupla ``g`` con ``g[i]`` la imagen de i. La
composición es (g∘h)(i) = g[h[i]]; la acción sobre coordenadas de raíces es
(g·α)_{g(k)} = α_k.
"""
import logging
from collections import deque
from dataclasses import dataclass

from networkx.algorithms.isomorphism import GraphMatcher

from core.conf import LOGGER_NAME
from core.exceptions import BadAutomorphism, UnknownGroup

logger = logging.getLogger(LOGGER_NAME)


def compose(first, second):
    """first ∘ second."""
    return tuple(first[k] for k in second)


def inverse(perm):
    result = [0] * len(perm)
    for k, image in enumerate(perm):
        result[image] = k
    return tuple(result)


def identity_perm(n):
    return tuple(range(n))


def is_automorphism(g, perm):
    if sorted(perm) != list(g.vertices):
        return False
    return all(g.m[perm[i]][perm[j]] == g.m[i][j] for i in g.vertices for j in g.vertices)


@dataclass(frozen=True)
class GraphAutGroup:
    """Subgrupo de Aut(Γ) dado por sus elementos y un sistema de generadores."""

    graph: object
    elements: tuple
    generators: tuple

    @property
    def order(self):
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def is_trivial(self):
        return len(self.elements) == 1

    def vertex_orbits(self):
        """Órbitas de I ordenadas por su menor vértice."""
        seen = set()
        orbits = []
        for vertex in self.graph.vertices:
            if vertex in seen:
                continue
            orbit = tuple(sorted({perm[vertex] for perm in self.elements}))
            seen.update(orbit)
            orbits.append(orbit)
        return orbits

    def root_image(self, perm, alpha):
        image = [0] * len(alpha)
        for k, value in enumerate(alpha):
            image[perm[k]] = value
        return tuple(image)

    def word_image(self, perm, word):
        return tuple(perm[letter] for letter in word)

    def as_dict(self):
        return {
            'order': self.order,
            'generators': [list(perm) for perm in self.generators],
            'vertex_orbits': [list(orbit) for orbit in self.vertex_orbits()],
        }


def group_from_generators(g, generators):
    """Cierre de ``generators`` por composición; BadAutomorphism si alguno no preserva m."""
    generators = tuple(tuple(int(k) for k in perm) for perm in generators)
    for perm in generators:
        if not is_automorphism(g, perm):
            raise BadAutomorphism(params={'perm': list(perm)})
    start = identity_perm(g.n)
    seen = {start}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for perm in generators:
            image = compose(perm, current)
            if image not in seen:
                seen.add(image)
                queue.append(image)
    elements = tuple(sorted(seen))
    logger.debug(f"Subgrupo de Aut({g}) de orden {len(elements)}")
    return GraphAutGroup(graph=g, elements=elements, generators=generators)


def automorphisms(g):
    """Aut(Γ) completo por búsqueda con vuelta atrás (VF2 de networkx)."""
    graph = g.to_networkx()
    matcher = GraphMatcher(graph, graph)
    elements = sorted(
        tuple(mapping[k] for k in g.vertices)
        for mapping in matcher.isomorphisms_iter()
    )
    group = GraphAutGroup(graph=g, elements=tuple(elements), generators=tuple(elements[1:]))
    logger.info(f"Aut({g}) tiene orden {group.order}")
    return group


def _stem(g):
    return g.label.rstrip('0123456789')


def named_generators(g, name):
    """Generadores de los subgrupos con nombre: flip, rotation, half-turn."""
    stem, n = _stem(g), g.n
    if name == 'flip':
        if stem == 'A':
            return [tuple(n - 1 - k for k in range(n))]
        if stem == 'D':
            perm = list(range(n))
            perm[n - 2], perm[n - 1] = n - 1, n - 2
            return [tuple(perm)]
        if stem == 'Atilde':
            return [tuple((-k) % n for k in range(n))]
    if name == 'rotation' and stem == 'Atilde':
        return [tuple((k + 1) % n for k in range(n))]
    if name == 'half-turn' and stem == 'Atilde' and n % 2 == 0:
        return [tuple((k + n // 2) % n for k in range(n))]
    raise UnknownGroup(params={'name': name, 'graph': str(g)})


def named_group(g, name):
    """``full``, ``trivial`` o uno de los subgrupos de ``named_generators``."""
    if name == 'full':
        return automorphisms(g)
    if name == 'trivial':
        return group_from_generators(g, [])
    return group_from_generators(g, named_generators(g, name))
