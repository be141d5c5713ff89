"""
Mallas [α]_{i,j} = W_{i,j}(α) ∩ Φ⁺ y su clasificación en ocho tipos.

m = 2: tipos 1 (raíz simple), 2 (fija), 3 (par), 4 (cuadrado).
m = 3: tipos 5 (α_i, α_j, α_i+α_j), 6 (fija), 7 (cadena de tres), 8 (hexágono).

El ``layout`` nombra las posiciones de cada tipo: ``lower``/``upper`` con el
generador ``k`` que las une (tipo 3); ``bottom``, ``si``, ``sj``, ``top``
(tipo 4); ``simple_i``, ``simple_j``, ``sum`` (tipo 5); ``bottom``, ``mid``,
``top`` con ``k`` y ``l`` (tipo 7); ``delta``, ``gamma``, ``gamma_p``,
``beta``, ``beta_p``, ``alpha`` (tipo 8, γ = s_iδ, γ′ = s_jδ, β = s_jγ,
β′ = s_iγ′).
"""
import logging
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations

from core.conf import LOGGER_NAME
from core.exceptions import BoundaryTruncated

from .roots import BOUNDARY, NEGATIVE

logger = logging.getLogger(LOGGER_NAME)


@dataclass(frozen=True)
class Mesh:
    pair: tuple
    members: tuple
    mesh_type: int
    layout: dict = field(default_factory=dict, compare=False, hash=False)

    def __len__(self):
        return len(self.members)


def _orbit(table, idx, pair):
    members = {idx}
    stack = [idx]
    while stack:
        current = stack.pop()
        for i in pair:
            image = table.reflect_index(i, current)
            if image == NEGATIVE:
                continue
            if image == BOUNDARY:
                raise BoundaryTruncated(root=table.label(idx), pair=pair)
            if image not in members:
                members.add(image)
                stack.append(image)
    return members


def _layout(table, pair, members, mesh_type):
    i, j = pair
    bottom = min(members, key=lambda idx: (table.depth(idx), idx))
    if mesh_type == 1:
        return {'simple': bottom}
    if mesh_type in (2, 6):
        return {'fixed': bottom}
    if mesh_type == 3:
        k = i if table.pair(bottom, i) < 0 else j
        return {'lower': bottom, 'upper': table.reflect_index(k, bottom),
                'k': k, 'l': j if k == i else i}
    if mesh_type == 4:
        si = table.reflect_index(i, bottom)
        sj = table.reflect_index(j, bottom)
        return {'bottom': bottom, 'si': si, 'sj': sj, 'top': table.reflect_index(j, si)}
    if mesh_type == 5:
        return {
            'simple_i': table.simple[i],
            'simple_j': table.simple[j],
            'sum': next(idx for idx in members if table.depth(idx) == 2),
        }
    if mesh_type == 7:
        k = i if table.pair(bottom, i) < 0 else j
        l = j if k == i else i
        mid = table.reflect_index(k, bottom)
        return {'bottom': bottom, 'mid': mid, 'top': table.reflect_index(l, mid), 'k': k, 'l': l}
    gamma = table.reflect_index(i, bottom)
    gamma_p = table.reflect_index(j, bottom)
    beta = table.reflect_index(j, gamma)
    return {
        'delta': bottom,
        'gamma': gamma,
        'gamma_p': gamma_p,
        'beta': beta,
        'beta_p': table.reflect_index(i, gamma_p),
        'alpha': table.reflect_index(i, beta),
    }


def classify(table, pair, members):
    """Tipo 1–8 según m_ij, el tamaño de la órbita y si contiene una raíz simple."""
    i, j = pair
    has_simple = table.simple[i] in members or table.simple[j] in members
    size = len(members)
    if table.graph.m[i][j] == 2:
        return {1: 1 if has_simple else 2, 2: 3, 4: 4}[size]
    if size == 3:
        return 5 if has_simple else 7
    return {1: 6, 6: 8}[size]


def mesh(table, idx, pair):
    """Malla de la raíz ``idx`` para el par {i, j}; BoundaryTruncated si sale de la tabla."""
    pair = tuple(sorted(pair))
    members = _orbit(table, idx, pair)
    mesh_type = classify(table, pair, members)
    ordered = tuple(sorted(members, key=lambda item: (table.depth(item), item)))
    return Mesh(pair=pair, members=ordered, mesh_type=mesh_type,
                layout=_layout(table, pair, members, mesh_type))


def meshes_of_pair(table, pair, margin=0):
    """Mallas completas del par cuyos miembros caen en la región segura."""
    pair = tuple(sorted(pair))
    seen = set()
    found = []
    for idx in table.safe_indices(margin):
        if idx in seen:
            continue
        try:
            current = mesh(table, idx, pair)
        except BoundaryTruncated:
            continue
        seen.update(current.members)
        if all(table.is_safe(member, margin) for member in current.members):
            found.append(current)
    return found


def all_pairs(table):
    return list(combinations(table.graph.vertices, 2))


def mesh_census(table, margin=0):
    """Número de mallas de cada tipo 1–8 sobre todos los pares."""
    counts = Counter()
    for pair in all_pairs(table):
        for current in meshes_of_pair(table, pair, margin):
            counts[current.mesh_type] += 1
    census = {mesh_type: counts.get(mesh_type, 0) for mesh_type in range(1, 9)}
    logger.debug(f"Censo de mallas de {table.graph}: {census}")
    return census
