"""
Raíz imaginaria δ, descomposición α = pδ + β y dominios de Ã_n.
"""
from dataclasses import dataclass
from functools import reduce
from math import gcd, lcm

import networkx as nx
from sympy import Matrix

from core.exceptions import BadRoot, NotAffine, NotAtilde
from coxeter.graphs import is_affine, is_atilde

from .roots import gram_matrix, pairing, root_str


def delta(g):
    """Vector entero primitivo positivo que genera el radical de la forma."""
    if not is_affine(g):
        raise NotAffine(graph=str(g))
    kernel = Matrix(gram_matrix(g).tolist()).nullspace()
    if len(kernel) != 1:
        raise NotAffine(graph=str(g), kernel=len(kernel))
    vector = kernel[0]
    scale = reduce(lcm, (int(entry.q) for entry in vector), 1)
    coords = [int(entry * scale) for entry in vector]
    divisor = reduce(gcd, coords)
    coords = [value // divisor for value in coords]
    if coords[0] < 0:
        coords = [-value for value in coords]
    if not all(value > 0 for value in coords):
        raise NotAffine(graph=str(g))
    return tuple(coords)


def affine_node(g):
    """Vértice añadido: el menor con coeficiente 1 en δ (el 0 en los grafos con nombre)."""
    coeffs = delta(g)
    return next(vertex for vertex, value in enumerate(coeffs) if value == 1)


def affine_decompose(g, alpha):
    """(p, β) con α = pδ + β y β ∈ Φ₀ (raíces del grafo sin el vértice añadido)."""
    imaginary = delta(g)
    node = affine_node(g)
    alpha = tuple(alpha)
    p = alpha[node]
    beta = tuple(value - p * weight for value, weight in zip(alpha, imaginary))
    if not any(alpha) or min(alpha) < 0 or pairing(g, beta, beta) != 2:
        raise BadRoot(params={'value': root_str(alpha)})
    return p, beta


def recompose(g, p, beta):
    imaginary = delta(g)
    return tuple(p * weight + value for weight, value in zip(imaginary, beta))


def pdelta_shift(imaginary, alpha):
    """(p, i, ±1) si α = pδ ± α_i, si no None."""
    alpha = tuple(alpha)
    for i in range(len(alpha)):
        for sign in (1, -1):
            rest = [value - (sign if k == i else 0) for k, value in enumerate(alpha)]
            p = delta_multiple(imaginary, rest)
            if p is not None and p >= (1 if sign < 0 else 0):
                return p, i, sign
    return None


def delta_multiple(imaginary, alpha):
    """p si α = pδ, si no None."""
    p, rest = divmod(alpha[0], imaginary[0])
    if rest or not all(value == p * weight for value, weight in zip(alpha, imaginary)):
        return None
    return p


@dataclass(frozen=True)
class AtildeDomain:
    p: int
    domain: frozenset
    interior: frozenset
    boundary: frozenset

    @property
    def length(self):
        """ℓ: el intervalo cíclico tiene ℓ + 1 vértices."""
        return len(self.domain) - 1


def antilde_domain(g, alpha):
    """Dominio ᾱ, interior α° y borde ∂α de α = pδ + Σ_{k=j}^{j+ℓ} α_k en Ã_n."""
    if not is_atilde(g):
        raise NotAtilde(graph=str(g))
    alpha = tuple(alpha)
    p = min(alpha)
    rest = [value - p for value in alpha]
    support = frozenset(vertex for vertex, value in enumerate(rest) if value)
    if any(value not in (0, 1) for value in rest) or not support:
        raise BadRoot(params={'value': root_str(alpha)})
    boundary = frozenset(
        vertex for vertex in support
        if any(neighbor not in support for neighbor in g.neighbors(vertex))
    )
    if not nx.is_connected(g.to_networkx().subgraph(support)):
        raise BadRoot(params={'value': root_str(alpha)})
    return AtildeDomain(p=p, domain=support, interior=support - boundary, boundary=boundary)
