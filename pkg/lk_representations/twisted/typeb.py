"""
El grupo de Artin–Tits de tipo B_n como submonoide fijo de A_{2n−1}, A_{2n} y
D_{n+1}, y la comparación de las tres representaciones torcidas.

Etiquetas (índices desde 0, Δ_1 … Δ_n):

    k = 1, A_{2n−1}: Δ_i = s_{i−1} s_{2n−1−i},   Δ_n = s_{n−1}
    k = 2, A_{2n}:   Δ_i = s_{i−1} s_{2n−i},     Δ_n = s_{n−1} s_n s_{n−1}
    k = 3, D_{n+1}:  Δ_i = s_{i−1},              Δ_n = s_{n−1} s_n
"""
import logging

from core.conf import LOGGER_NAME
from core.exceptions import BadRank, VerificationFailure
from core.validators import validate_rank
from coxeter.graphs import named_graph
from coxeter.weyl import fixed_coxeter_matrix, garside_word
from coxeter.words import format_word
from families.builders import spherical_family
from laurent.ring import ring_divide
from lkcore.maps import check_braid_relations, det

from .closed_forms import determinant_census
from .groups import named_group
from .orbits import OrbitBasis
from .representation import TwistedRepresentation

logger = logging.getLogger(LOGGER_NAME)

AMBIENTS = {1: ('A', lambda n: 2 * n - 1), 2: ('A', lambda n: 2 * n), 3: ('D', lambda n: n + 1)}


def typeB_labels(n, k):
    """Órbitas J_1, …, J_n de vértices del grafo ambiente, en el orden de B_n."""
    validate_rank(n, 3)
    if k == 1:
        return [(i - 1, 2 * n - 1 - i) for i in range(1, n)] + [(n - 1,)]
    if k == 2:
        return [(i - 1, 2 * n - i) for i in range(1, n)] + [(n - 1, n)]
    if k == 3:
        return [(i - 1,) for i in range(1, n)] + [(n - 1, n)]
    raise BadRank(params={'rank': k, 'minimum': 1})


def ambient_graph(n, k):
    if k not in AMBIENTS:
        raise BadRank(params={'rank': k, 'minimum': 1})
    family, size = AMBIENTS[k]
    return named_graph(family, size(n))


def determinant_failures(labels, dets, predicted):
    """Generadores cuyo determinante difiere del recuento de bloques."""
    return [
        {'orbit': list(orbit), 'det': str(value), 'predicted': str(expected)}
        for orbit, value, expected in zip(labels, dets, predicted)
        if value != expected
    ]


def typeB_suite(n, k, params, f=None):
    """
    Los n generadores de ψ^{G_k} para B_n, sus determinantes por eliminación y
    por el recuento de bloques, y la comprobación de las relaciones de B_n.
    """
    labels = typeB_labels(n, k)
    g = ambient_graph(n, k)
    group = named_group(g, 'flip')
    family = spherical_family(g, params, f)
    basis = OrbitBasis(family.table, group)
    rep = TwistedRepresentation(basis, family)
    words = [garside_word(g, orbit) for orbit in labels]
    generators = [rep.word(word, check_fixed=False) for word in words]
    dets = [det(endo) for endo in generators]
    predicted = [determinant_census(orbit, family, basis)['det'] for orbit in labels]
    matrix = fixed_coxeter_matrix(g, labels)
    braid = check_braid_relations(generators, matrix)
    if not braid['passed']:
        logger.error(f"B_{n} desde {g}: relaciones de trenza incumplidas {braid['failures']}")
        raise VerificationFailure(ambient=str(g), failures=braid['failures'])
    failures = determinant_failures(labels, dets, predicted)
    if failures:
        logger.error(f"B_{n} desde {g}: {len(failures)} determinantes no coinciden con el recuento de bloques")
    logger.info(f"B_{n} desde {g}: grado {len(basis)}, {braid['checked']} relaciones de trenza")
    return {
        'n': n,
        'k': k,
        'ambient': str(g),
        'degree': len(basis),
        'orbits': [list(orbit) for orbit in labels],
        'words': [format_word(word) for word in words],
        'coxeter_matrix': matrix,
        'generators': generators,
        'dets': dets,
        'predicted': predicted,
        'dets_match': not failures,
        'failures': failures,
        'braid': braid,
        'passed': braid['passed'] and not failures,
        'basis': basis,
    }


def nonequivalence_condition(n, p, q, r):
    """True si 2n(p+q) + 2(n²−3n+1)r ≠ 0: ψ^{G_1} y ψ^{G_3} no son equivalentes."""
    validate_rank(n, 3)
    return nonequivalence_value(n, p, q, r) != 0


def nonequivalence_value(n, p, q, r):
    return 2 * n * (p + q) + 2 * (n * n - 3 * n + 1) * r


def determinant_obstruction(n, params, f1=None, f3=None):
    """
    Cociente (det¹_< · det³_n) / (det³_< · det¹_n) con los determinantes
    calculados; si no es 1, ψ^{G_1} y ψ^{G_3} no son equivalentes.
    """
    first = typeB_suite(n, 1, params, f1)['dets']
    third = typeB_suite(n, 3, params, f3)['dets']
    ratio = ring_divide(first[0] * third[-1], third[0] * first[-1])
    nonequivalent = ratio != 1
    logger.info(f"n = {n}: cociente de determinantes {ratio}")
    return {'n': n, 'ratio': str(ratio), 'nonequivalent': nonequivalent}
