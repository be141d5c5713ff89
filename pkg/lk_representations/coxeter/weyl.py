"""
Acción de W por reflexiones sobre coordenadas de raíces.

s_i(v) = v − (v|α_i) α_i con matrices enteras de numpy; de aquí salen los
elementos de Garside Δ_J, el orden de W_J y la matriz de Coxeter del
submonoide fijo.
"""
import logging
from collections import deque
from itertools import combinations

import numpy as np

from core.conf import LOGGER_NAME, lkrep_setting
from core.exceptions import CapExceeded, NotSpherical, PreconditionFailed, VerificationFailure

from .graphs import is_spherical
from .words import format_word, word_class

logger = logging.getLogger(LOGGER_NAME)


def reflection_matrix(g, i):
    """Matriz de s_i: identidad menos e_i ⊗ (fila i de la matriz de Gram)."""
    matrix = np.eye(g.n, dtype=np.int64)
    matrix[i, :] -= g.gram[i, :]
    return matrix


def reflection_matrices(g):
    return [reflection_matrix(g, i) for i in g.vertices]


def weyl_elements(g, J=None, cap=None):
    """Recorre W_J por longitud creciente, produciendo (longitud, matriz)."""
    cap = cap or lkrep_setting('W_CAP')
    generators = sorted(g.vertices if J is None else J)
    reflections = {i: reflection_matrix(g, i) for i in generators}
    identity = np.eye(g.n, dtype=np.int64)
    seen = {identity.tobytes()}
    queue = deque([(0, identity)])
    while queue:
        length, element = queue.popleft()
        yield length, element
        for i in generators:
            image = element @ reflections[i]
            key = image.tobytes()
            if key not in seen:
                seen.add(key)
                if len(seen) > cap:
                    raise CapExceeded(cap=cap, subset=generators)
                queue.append((length + 1, image))


def weyl_group_order(g, J=None, cap=None):
    """|W_J| por enumeración; CapExceeded si el grupo supera el límite."""
    return sum(1 for _item in weyl_elements(g, J, cap))


def is_spherical_by_enumeration(g, J=None, cap=None):
    try:
        weyl_group_order(g, J, cap)
    except CapExceeded:
        return False
    return True


def garside_word(g, J):
    """Palabra de Δ_J: ascenso voraz añadiendo el menor i ∈ J con w(α_i) > 0."""
    subset = sorted(set(J))
    if not is_spherical(g, subset):
        raise NotSpherical(subset=subset)
    reflections = {i: reflection_matrix(g, i) for i in subset}
    element = np.eye(g.n, dtype=np.int64)
    word = []
    while True:
        for i in subset:
            if (element[:, i] >= 0).all():
                element = element @ reflections[i]
                word.append(i)
                break
        else:
            return tuple(word)


def fixed_coxeter_matrix(g, orbits, verify=False, cap=None):
    """
    Matriz de Coxeter Γ′ del submonoide generado por los Δ_J, J órbita esférica.

    m′_{J,K} es el número de factores alternados Δ_J Δ_K ⋯ cuyo producto es
    Δ_{J∪K}; 0 codifica ∞ cuando J ∪ K no es esférico. Con ``verify`` se
    comprueba la igualdad en B⁺ con el oráculo de reescritura.
    """
    orbits = [tuple(sorted(orbit)) for orbit in orbits]
    deltas = [garside_word(g, orbit) for orbit in orbits]
    size = len(orbits)
    matrix = [[1] * size for _row in range(size)]
    for a, b in combinations(range(size), 2):
        union = set(orbits[a]) | set(orbits[b])
        if not is_spherical(g, union):
            value = 0
        else:
            target = garside_word(g, union)
            factors, total = [], 0
            while total < len(target):
                factor = deltas[a] if len(factors) % 2 == 0 else deltas[b]
                factors.append(factor)
                total += len(factor)
            if total != len(target):
                raise PreconditionFailed(
                    'Alternating product of Garside elements overshoots Delta_{J u K}.',
                    orbits=(orbits[a], orbits[b]),
                )
            if verify:
                product = sum(factors, ())
                if product not in word_class(g, target, cap):
                    logger.error(f"{format_word(product)} no representa Delta de {sorted(union)}")
                    raise VerificationFailure(word=format_word(product))
            value = len(factors)
        matrix[a][b] = matrix[b][a] = value
    return matrix
