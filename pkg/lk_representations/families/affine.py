"""
Familias LK sobre grafos afines.

La familia queda determinada por la sucesión μ = (𝔣_0, 𝔣_1, …) con
𝔣_{2p} = f_{i0,pδ+α_{i0}} y
𝔣_{2p−1} = cd f_{i0,pδ−α_{i0}} − bc f_{i0,γ} − d² f_{j0,γ},
γ = pδ − α_{i0} − α_{j0}. La construcción inversa recorre las raíces por
profundidad: pδ + α_i toma el valor de la semilla, pδ − α_i se obtiene del
hexágono de fondo γ y las demás raíces de las relaciones (6)–(10).
"""
import logging
from dataclasses import dataclass

from core.conf import LOGGER_NAME
from core.exceptions import (
    DepthBoundTooSmall, InconsistentRelations, InsufficientDepth, NotAtilde, SeedTooShort,
)
from coxeter.graphs import is_atilde
from laurent.ring import ZERO, as_poly
from lkcore.family import LKFamily
from rootsys.affine import antilde_domain, delta, pdelta_shift
from rootsys.roots import enumerate_roots

from .relations import RelationSolver, agreed

logger = logging.getLogger(LOGGER_NAME)

MARGIN = 2


@dataclass(frozen=True)
class AffineSeed:
    """Semilla (𝔣_0, …, 𝔣_N) sobre un grafo afín."""

    graph: object
    seq: tuple

    def __post_init__(self):
        object.__setattr__(self, 'seq', tuple(as_poly(value) for value in self.seq))
        delta(self.graph)

    def __len__(self):
        return len(self.seq)

    def __getitem__(self, index):
        return self.seq[index]

    def as_list(self):
        return [str(value) for value in self.seq]


def _seed_index(shift):
    p, _i, sign = shift
    return 2 * p if sign > 0 else 2 * p - 1


def required_seed_length(table):
    """Índices de semilla que usan las raíces pδ ± α_i presentes en la tabla."""
    imaginary = delta(table.graph)
    needed = 0
    for idx in table:
        shift = pdelta_shift(imaginary, table.root(idx))
        if shift is not None:
            needed = max(needed, _seed_index(shift) + 1)
    return needed


def affine_family(seed, params, depth_bound):
    """
    La familia LK con μ = ``seed`` hasta ``depth_bound``; la tabla se enumera
    dos niveles más para que toda la profundidad anunciada sea segura.
    """
    g = seed.graph
    if depth_bound < 2:
        raise DepthBoundTooSmall(depth_bound=depth_bound, minimum=2)
    imaginary = delta(g)
    table = enumerate_roots(g, depth_bound + MARGIN)
    needed = required_seed_length(table)
    if len(seed) < needed:
        raise SeedTooShort(length=len(seed), needed=needed)
    values = {}
    for i in g.vertices:
        if seed[0]:
            values[(i, table.simple[i])] = seed[0]
    solver = RelationSolver(table, params, values)
    cd_inverse = (params.c * params.d).unit_inverse()
    for depth in range(2, table.max_depth + 1):
        for idx in table.at_depth(depth):
            shift = pdelta_shift(imaginary, table.root(idx))
            for i in g.vertices:
                if shift is not None and shift[1] == i:
                    if shift[2] > 0:
                        value = seed[_seed_index(shift)]
                    else:
                        extra = seed[_seed_index(shift)] * cd_inverse
                        value = _pdelta_minus(solver, table, i, idx, extra)
                else:
                    value = agreed(solver.candidates(i, idx), i, idx, table)
                if value:
                    values[(i, idx)] = value
    family = LKFamily(table, params.with_seed(seed[0]), values, name=f'affine {g}')
    logger.info(f"Familia afín sobre {g}: {len(table)} raíces, semilla de longitud {len(seed)}")
    return family


def _pdelta_minus(solver, table, i, idx, extra):
    """f_{i,pδ−α_i} por cada vecino j; todos deben coincidir."""
    results = {
        j: solver.hexagon_step(i, idx, j, extra)
        for j in table.graph.neighbors(i)
    }
    first = next(iter(results.values()))
    if any(value != first for value in results.values()):
        logger.error(f"f_{{{i},{table.label(idx)}}} depende del vecino elegido: {results}")
        raise InconsistentRelations(i=i, root=table.label(idx), step='pdelta-minus')
    return first


def _mu_terms(family):
    """{índice: {(i0, j0): valor}} para cada par admisible presente en la tabla."""
    table = family.table
    g = family.graph
    params = family.params
    b, c, d = params.b, params.c, params.d
    imaginary = delta(g)
    terms = {}
    for idx in table:
        shift = pdelta_shift(imaginary, table.root(idx))
        if shift is None:
            continue
        p, i, sign = shift
        index = _seed_index(shift)
        if sign > 0:
            terms.setdefault(index, {})[(i, None)] = family.value(i, idx)
            continue
        for j in g.neighbors(i):
            gamma = table.reflect_index(j, idx)
            if gamma < 0:
                continue
            value = (
                c * d * family.value(i, idx)
                - b * c * family.value(i, gamma)
                - d * d * family.value(j, gamma)
            )
            terms.setdefault(index, {})[(i, j)] = value
    return terms


def mu_affine(family, length=None):
    """
    (𝔣_0, 𝔣_1, …) leídos de la familia, comprobando que no dependen de
    (i0, j0). Sin ``length`` devuelve el prefijo más largo disponible para
    todos los vértices.
    """
    g = family.graph
    terms = _mu_terms(family)
    sequence = []
    index = 0
    while True:
        available = terms.get(index, {})
        covered = {i for i, _j in available}
        if covered != set(g.vertices):
            break
        values = set(available.values())
        if len(values) != 1:
            logger.error(f"𝔣_{index} depende de (i0, j0): {available}")
            raise InconsistentRelations(index=index, step='mu')
        sequence.append(values.pop())
        index += 1
    if length is not None:
        if len(sequence) < length:
            raise InsufficientDepth(length=length, available=len(sequence))
        sequence = sequence[:length]
    return sequence


def paris_seed(g, params, f=None, p_max=1):
    """μ de la familia de Paris: sus valores en pδ ± α_{i0}, en forma cerrada."""
    f = params.f if f is None else as_poly(f)
    imaginary = delta(g)
    bound = 2 * (p_max + 1)
    while True:
        table = enumerate_roots(g, bound)
        shifts = {}
        for idx in table:
            shift = pdelta_shift(imaginary, table.root(idx))
            if shift is not None and shift[1] == 0:
                shifts[_seed_index(shift)] = table.depth(idx)
        if all(index in shifts for index in range(1, 2 * p_max + 1)):
            break
        bound += 2
    a, b, c, d = params.a, params.b, params.c, params.d
    ratio = b * d.unit_inverse()
    sequence = [f]
    for index in range(1, 2 * p_max + 1):
        depth = shifts[index]
        if index % 2:
            sequence.append(a * d * d * f * c.unit_inverse() * ratio ** (depth - 3))
        else:
            sequence.append(-a * f * c.unit_inverse() * ratio ** (depth - 2))
    return AffineSeed(graph=g, seq=tuple(sequence))


def antilde_closed_form(g, i, alpha, seed, params):
    """Valor cerrado de f_{i,α} en Ã_n según i esté en el borde, el interior o fuera de ᾱ."""
    if not is_atilde(g):
        raise NotAtilde(graph=str(g))
    n = g.n - 1
    a, b, c, d = params.a, params.b, params.c, params.d
    u = b * d.unit_inverse()
    r = b ** (n - 1) * (c * d ** (n - 2)).unit_inverse()
    inv_c = c.unit_inverse()
    domain = antilde_domain(g, alpha)
    p, length = domain.p, domain.length

    def total(upper, weight):
        result = ZERO
        for q in range(upper + 1):
            result = result + weight(q) * r ** (p - q) * seed[2 * q]
        return result

    if i in domain.boundary:
        if length == 0:
            return seed[2 * p]
        return -a * inv_c * u ** (length - 1) * total(p, lambda q: 1)
    if i in domain.interior:
        return (a * inv_c) ** 2 * u ** (length - 2) * total(p, lambda q: p - q + 1)
    outside = a * a * (b * c).unit_inverse() * total(p - 1, lambda q: p - q)
    if length <= n - 2:
        return outside * u ** length
    return (
        outside * (u + d * inv_c) * u ** (n - 2)
        + seed[2 * p + 1] * (c * d).unit_inverse()
    )
