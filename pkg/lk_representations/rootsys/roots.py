"""
Raíces positivas con profundidad.

Una raíz es una tupla de enteros (coordenadas sobre las raíces simples). La
tabla se llena por niveles: si (α|α_i) < 0 entonces s_i(α) tiene profundidad
dep(α) + 1, así que el nivel de la búsqueda es la profundidad. En grafos
esféricos la tabla es completa; en los demás se corta en ``depth_bound`` y las
imágenes que salen de la tabla se marcan como ``BOUNDARY``.
"""
import logging

import numpy as np

from core.conf import LOGGER_NAME, lkrep_setting
from core.exceptions import BadRoot, NonTerminating
from core.validators import validate_depth_bound
from coxeter.graphs import is_spherical
from coxeter.weyl import weyl_elements

logger = logging.getLogger(LOGGER_NAME)

NEGATIVE = -1
BOUNDARY = -2


def gram_matrix(g):
    """(α_i|α_j): 2 en la diagonal, −1 si m_ij = 3 y 0 si m_ij = 2."""
    return g.gram


def simple_root(n, i):
    return tuple(1 if k == i else 0 for k in range(n))


def pairing(g, alpha, beta):
    """(α|β) como entero exacto."""
    return int(np.asarray(alpha, dtype=np.int64) @ gram_matrix(g) @ np.asarray(beta, dtype=np.int64))


def coroot_pairings(g, alpha):
    """Vector ((α|α_i))_i."""
    return tuple(int(value) for value in gram_matrix(g) @ np.asarray(alpha, dtype=np.int64))


def reflect(g, i, alpha):
    """s_i(α) = α − (α|α_i) α_i (puede ser negativa)."""
    shift = coroot_pairings(g, alpha)[i]
    return tuple(value - shift if k == i else value for k, value in enumerate(alpha))


def is_positive(alpha):
    return all(value >= 0 for value in alpha) and any(alpha)


def root_str(alpha):
    return ','.join(str(value) for value in alpha)


def parse_root(text):
    try:
        return tuple(int(piece) for piece in str(text).split(','))
    except ValueError as exc:
        raise BadRoot(params={'value': text}) from exc


class RootTable:
    """
    Raíces positivas ordenadas por profundidad y, dentro de cada nivel, por
    coordenadas decrecientes; así α_i tiene índice i.
    """

    def __init__(self, graph, roots, depths, depth_bound):
        self.graph = graph
        self.roots = list(roots)
        self.depths = list(depths)
        self.depth_bound = depth_bound
        self.index = {alpha: idx for idx, alpha in enumerate(self.roots)}
        self.pairings = [coroot_pairings(graph, alpha) for alpha in self.roots]
        self.simple = [self.index[simple_root(graph.n, i)] for i in graph.vertices]
        self.reflect_map = [self._reflections(i) for i in graph.vertices]

    def _reflections(self, i):
        images = []
        for idx, alpha in enumerate(self.roots):
            if idx == self.simple[i]:
                images.append(NEGATIVE)
                continue
            shift = self.pairings[idx][i]
            image = tuple(value - shift if k == i else value for k, value in enumerate(alpha))
            images.append(self.index.get(image, BOUNDARY))
        return images

    @property
    def complete(self):
        return self.depth_bound is None

    @property
    def max_depth(self):
        return max(self.depths)

    def __len__(self):
        return len(self.roots)

    def __iter__(self):
        return iter(range(len(self.roots)))

    def __contains__(self, alpha):
        return tuple(alpha) in self.index

    def index_of(self, alpha):
        try:
            return self.index[tuple(alpha)]
        except KeyError as exc:
            raise BadRoot(params={'value': root_str(alpha)}) from exc

    def root(self, idx):
        return self.roots[idx]

    def depth(self, idx):
        return self.depths[idx]

    def pair(self, idx, i):
        """(α|α_i) para la raíz de índice ``idx``."""
        return self.pairings[idx][i]

    def reflect_index(self, i, idx):
        return self.reflect_map[i][idx]

    def simple_vertex(self, idx):
        """i si la raíz es α_i, si no None."""
        alpha = self.roots[idx]
        if self.depths[idx] != 1:
            return None
        return alpha.index(1)

    def is_safe(self, idx, margin=1):
        """Columna exacta para productos de ``margin`` aplicaciones."""
        if self.depth_bound is None:
            return True
        return self.depths[idx] <= self.depth_bound - margin

    def safe_indices(self, margin=1):
        return [idx for idx in range(len(self.roots)) if self.is_safe(idx, margin)]

    def at_depth(self, depth):
        return [idx for idx, value in enumerate(self.depths) if value == depth]

    def label(self, idx):
        return root_str(self.roots[idx])

    def export(self):
        return {
            'graph': self.graph.as_dict(),
            'complete': self.complete,
            'depth_bound': self.depth_bound,
            'roots': [
                {'index': idx, 'root': root_str(alpha), 'depth': self.depths[idx]}
                for idx, alpha in enumerate(self.roots)
            ],
        }


def enumerate_roots(g, depth_bound=None, cap=None):
    """Tabla de raíces positivas; ``depth_bound`` se ignora si Γ es esférico."""
    cap = cap or lkrep_setting('ROOT_CAP')
    spherical = is_spherical(g)
    if spherical:
        depth_bound = None
    else:
        if depth_bound is None:
            depth_bound = lkrep_setting('DEFAULT_DEPTH')
        validate_depth_bound(depth_bound)
    level = sorted((simple_root(g.n, i) for i in g.vertices), reverse=True)
    roots, depths = [], []
    seen = set(level)
    depth = 1
    while level:
        roots.extend(level)
        depths.extend([depth] * len(level))
        if len(roots) > cap:
            raise NonTerminating(cap=cap, graph=str(g))
        if depth_bound is not None and depth >= depth_bound:
            break
        following = set()
        for alpha in level:
            for i, value in enumerate(coroot_pairings(g, alpha)):
                if value < 0:
                    image = reflect(g, i, alpha)
                    if image not in seen:
                        following.add(image)
        seen.update(following)
        level = sorted(following, reverse=True)
        depth += 1
        logger.debug(f"{g}: {len(level)} raíces de profundidad {depth}")
    table = RootTable(g, roots, depths, depth_bound)
    logger.info(
        f"{g}: {len(table)} raíces positivas"
        + ('' if spherical else f" hasta profundidad {depth_bound}")
    )
    return table


def depth_by_definition(g, alpha, cap=None):
    """dep(α) = mín ℓ(w) con w(α) negativa, recorriendo W por longitud."""
    vector = np.asarray(alpha, dtype=np.int64)
    for length, element in weyl_elements(g, cap=cap):
        if (element @ vector <= 0).all():
            return length
    raise BadRoot(params={'value': root_str(alpha)})
