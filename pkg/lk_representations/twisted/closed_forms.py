"""
Formas cerradas de ψ^G_{Δ_J} para órbitas J de tamaño 1 o 2.

φ_{Δ_J} se arma malla a malla con el bloque de cada tipo (columnas = imágenes),
se restringe a coordenadas de órbitas y se le suman las correcciones de rango
uno:

- J = {i}:        ψ = φ_i + f_J ⊠ e_{Θ_J}
- J = {i, j}, m=2: ψ = φ_Δ + d f_J ⊠ e_{Θ_J}
- J = {i, j}, m=3: ψ = φ_Δ + (bc f_J + a f′_J) ⊠ e_{Θ_J} + c f′_J ⊠ e_{Θ′_J}

con f_J(e_Θ) = Σ_{α∈Θ} f_{i,α} (i = min J), f′_J = f_i φ_j sobre V^G,
Θ_J la órbita de α_i y Θ′_J la de α_i + α_j.
"""
import logging
from collections import Counter

from core.conf import LOGGER_NAME
from core.exceptions import PreconditionFailed, TruncatedTable, UnsupportedOrbit
from coxeter.weyl import garside_word
from lkcore.endo import SparseEndo
from lkcore.maps import phi
from rootsys.meshes import meshes_of_pair

from .orbits import restrict
from .representation import orbit_form

logger = logging.getLogger(LOGGER_NAME)


def mesh_block(current, params):
    """Columnas de φ_{Δ_{i,j}} sobre una {i,j}-malla."""
    a, b, c, d = params.a, params.b, params.c, params.d
    place = current.layout
    kind = current.mesh_type
    if kind in (1, 5):
        return {}
    if kind == 2:
        fixed = place['fixed']
        return {fixed: {fixed: d * d}}
    if kind == 6:
        fixed = place['fixed']
        return {fixed: {fixed: d * d * d}}
    if kind == 3:
        low, up = place['lower'], place['upper']
        return {low: {low: a * d, up: c * d}, up: {low: b * d}}
    if kind == 4:
        bottom, si, sj, top = place['bottom'], place['si'], place['sj'], place['top']
        return {
            bottom: {bottom: a * a, si: a * c, sj: a * c, top: c * c},
            si: {bottom: a * b, sj: b * c},
            sj: {bottom: a * b, si: b * c},
            top: {bottom: b * b},
        }
    if kind == 7:
        bottom, mid, top = place['bottom'], place['mid'], place['top']
        return {
            bottom: {bottom: a * d * d, mid: a * c * d, top: c * c * d},
            mid: {bottom: a * b * d, mid: b * c * d},
            top: {bottom: b * b * d},
        }
    delta, gamma, gamma_p = place['delta'], place['gamma'], place['gamma_p']
    beta, beta_p, top = place['beta'], place['beta_p'], place['alpha']
    return {
        delta: {
            delta: a * a * a + a * b * c,
            gamma: a * a * c, gamma_p: a * a * c,
            beta: a * c * c, beta_p: a * c * c,
            top: c * c * c,
        },
        gamma: {delta: a * a * b, gamma: a * b * c, gamma_p: a * b * c, beta_p: b * c * c},
        gamma_p: {delta: a * a * b, gamma: a * b * c, gamma_p: a * b * c, beta: b * c * c},
        beta: {delta: a * b * b, gamma_p: b * b * c},
        beta_p: {delta: a * b * b, gamma: b * b * c},
        top: {delta: b * b * b},
    }


def phi_delta(J, table, params):
    """φ_{Δ_J} en coordenadas de raíces, sin componer generadores."""
    J = tuple(sorted(J))
    word = garside_word(table.graph, J)
    if len(J) == 1:
        return phi(J[0], table, params)
    columns = {}
    for current in meshes_of_pair(table, J):
        columns.update(mesh_block(current, params))
    safe_depth = None if table.complete else table.depth_bound - len(word)
    return SparseEndo(table, columns, safe_depth=safe_depth, reach=len(word))


def closed_form_delta(J, table, family, basis):
    """ψ^G_{Δ_J} ensamblado desde los bloques de malla y las correcciones."""
    J = tuple(sorted(J))
    if len(J) > 2:
        raise UnsupportedOrbit(orbit=list(J))
    params = family.params
    a, b, c, d = params.a, params.b, params.c, params.d
    table = basis.table
    base = phi_delta(J, table, params)
    result = restrict(base, basis)
    i = J[0]
    theta = basis.simple_orbit(i)
    f_J = orbit_form(family, i, basis)
    safe = result.safe_depth
    if len(J) == 1:
        result = result + SparseEndo.rank_one(basis, f_J, theta, safe_depth=safe)
    elif table.graph.m[J[0]][J[1]] == 2:
        form = {k: d * value for k, value in f_J.items()}
        result = result + SparseEndo.rank_one(basis, form, theta, safe_depth=safe)
    else:
        j = J[1]
        f_prime = orbit_form(family, i, basis, phi(j, table, params))
        theta_p = basis.orbit_of[table.index_of(_sum_root(table, i, j))]
        form = {}
        for k in set(f_J) | set(f_prime):
            form[k] = b * c * f_J.get(k, 0) + a * f_prime.get(k, 0)
        correction = {k: c * value for k, value in f_prime.items()}
        result = (
            result
            + SparseEndo.rank_one(basis, form, theta, safe_depth=safe)
            + SparseEndo.rank_one(basis, correction, theta_p, safe_depth=safe)
        )
    logger.debug(f"Forma cerrada de ψ^G para J = {list(J)} en {table.graph}")
    return result


def _sum_root(table, i, j):
    alpha = [0] * table.graph.n
    alpha[i] = alpha[j] = 1
    return tuple(alpha)


# Determinantes de los bloques de φ^G_{Δ_J} cuando |G| = 2
def _block_dets(params):
    b, c, d = params.b, params.c, params.d
    bc = b * c
    return {
        'loop': d,
        'pair': -bc,
        'fixed2': d * d,
        'pair2': -(bc * d * d),
        'square_stabilized': -(bc ** 3),
        'square_free': bc ** 4,
        'fixed3': d ** 3,
        'chain3': -((bc * d) ** 3),
        'hexagon_stabilized': bc ** 6,
        'hexagon_free': -(bc ** 9),
    }


_MESH_BLOCKS = {
    2: 'fixed2', 3: 'pair2', 4: 'square', 6: 'fixed3', 7: 'chain3', 8: 'hexagon',
}


def _orbit_key(basis, members):
    return frozenset(basis.orbit_of[member] for member in members)


def block_census(J, basis):
    """Número de bloques de cada configuración de órbita en φ^G_{Δ_J}."""
    table = basis.table
    J = tuple(sorted(J))
    seen = set()
    census = Counter()
    if len(J) == 1:
        i = J[0]
        for idx in table:
            if idx == table.simple[i]:
                continue
            value = table.pair(idx, i)
            if value > 0:
                continue
            members = (idx,) if value == 0 else (idx, table.reflect_index(i, idx))
            key = _orbit_key(basis, members)
            if key in seen:
                continue
            seen.add(key)
            census['loop' if value == 0 else 'pair'] += 1
        return census
    for current in meshes_of_pair(table, J):
        if current.mesh_type in (1, 5):
            continue
        key = _orbit_key(basis, current.members)
        if key in seen:
            continue
        seen.add(key)
        name = _MESH_BLOCKS[current.mesh_type]
        if current.mesh_type in (4, 8):
            name += '_stabilized' if len(key) < len(current.members) else '_free'
        census[name] += 1
    return census


def determinant_census(J, family, basis):
    """
    det ψ^G_{Δ_J} como producto de los determinantes de bloque por el factor
    de las órbitas simples: f, d·f o (bcf)² según J.
    """
    if not basis.complete:
        raise TruncatedTable(graph=str(basis.graph))
    if basis.group.order != 2:
        raise PreconditionFailed(order=basis.group.order, reason='census tables assume |G| = 2')
    J = tuple(sorted(J))
    if len(J) > 2:
        raise UnsupportedOrbit(orbit=list(J))
    params = family.params
    f = family.value(J[0], basis.table.simple[J[0]])
    if len(J) == 1:
        leading = f
    elif basis.graph.m[J[0]][J[1]] == 2:
        leading = params.d * f
    else:
        leading = (params.b * params.c * f) ** 2
    census = block_census(J, basis)
    dets = _block_dets(params)
    value = leading
    for name, count in sorted(census.items()):
        value = value * dets[name] ** count
    return {'census': dict(sorted(census.items())), 'det': value}
