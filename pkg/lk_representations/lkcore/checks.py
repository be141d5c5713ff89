"""
Comprobaciones de las condiciones de familia y de las relaciones (1)–(10).

``check_family_conditions`` evalúa las identidades de formas lineales
f_i(e_{α_j}) = 0, f_iφ_j = d f_i (m = 2) y f_iφ_j = f_jφ_i (m = 3) sobre la
unión de las mallas completas. ``check_table1`` recorre esas mismas mallas y
atribuye cada fallo a la relación numerada que lo detecta. Ambas dan el mismo
veredicto.
"""
import logging

from core.conf import LOGGER_NAME
from core.exceptions import NoTriangle
from coxeter.graphs import triangles
from rootsys.meshes import all_pairs, meshes_of_pair
from rootsys.roots import enumerate_roots

from .maps import phi

logger = logging.getLogger(LOGGER_NAME)

RELATIONS = tuple(range(1, 11))


def _report(violations, checked):
    return {'passed': not violations, 'checked': checked, 'violations': violations}


def _compose_form(family, i, endo, col):
    """(f_i ∘ endo)(e_col)."""
    total = 0
    for row, coeff in endo.columns.get(col, {}).items():
        total = total + coeff * family.value(i, row)
    return total


def check_family_conditions(family):
    """
    Condiciones (i)–(iii) sobre cada vector de la base cuya {i,j}-malla está
    entera en la tabla (en tablas completas, todos).
    """
    table = family.table
    d = family.params.d
    graph = family.graph
    violations = []
    checked = 0
    for i, j in family.simple_root_violations():
        violations.append({'condition': '(i)', 'i': i, 'j': j, 'root': table.label(table.simple[j])})
    maps = {i: phi(i, table, family.params) for i in graph.vertices}
    for i, j in all_pairs(table):
        m = graph.m[i][j]
        columns = sorted(
            member for current in meshes_of_pair(table, (i, j)) for member in current.members
        )
        for col in columns:
            checked += 1
            if m == 2:
                for s, t in ((i, j), (j, i)):
                    if _compose_form(family, s, maps[t], col) != d * family.value(s, col):
                        violations.append(
                            {'condition': '(ii)', 'i': s, 'j': t, 'root': table.label(col)}
                        )
            elif _compose_form(family, i, maps[j], col) != _compose_form(family, j, maps[i], col):
                violations.append({'condition': '(iii)', 'i': i, 'j': j, 'root': table.label(col)})
    if violations:
        logger.warning(f"{len(violations)} violaciones de las condiciones de familia")
    return _report(violations, checked)


class _MeshRelations:
    """Las relaciones numeradas que impone cada tipo de malla."""

    def __init__(self, family):
        self.family = family
        params = family.params
        self.a, self.b, self.c, self.d = params.a, params.b, params.c, params.d

    def f(self, i, idx):
        return self.family.value(i, idx)

    def chain(self, s, t, x, y, z):
        """Relación (8) sobre x —s→ y —t→ z: c f_{s,z} = b f_{t,x} − a f_{s,y}."""
        return self.c * self.f(s, z), self.b * self.f(t, x) - self.a * self.f(s, y)

    def instances(self, mesh):
        i, j = mesh.pair
        place = mesh.layout
        a, b, c, d, f = self.a, self.b, self.c, self.d, self.f
        if mesh.mesh_type == 3:
            l, low, up = place['l'], place['lower'], place['upper']
            yield 6, d * f(l, up), b * f(l, low)
        elif mesh.mesh_type == 4:
            bottom, si, sj, top = place['bottom'], place['si'], place['sj'], place['top']
            yield 6, d * f(j, si), b * f(j, bottom)
            yield 6, d * f(j, top), b * f(j, sj)
            yield 6, d * f(i, sj), b * f(i, bottom)
            yield 6, d * f(i, top), b * f(i, si)
        elif mesh.mesh_type == 5:
            si, sj, total = place['simple_i'], place['simple_j'], place['sum']
            yield 2, f(i, si), f(j, sj)
            yield 7, c * f(i, total), -a * f(i, si)
            yield 7, c * f(j, total), -a * f(j, sj)
        elif mesh.mesh_type == 6:
            yield 5, f(i, place['fixed']), f(j, place['fixed'])
        elif mesh.mesh_type == 7:
            k, l = place['k'], place['l']
            bottom, mid, top = place['bottom'], place['mid'], place['top']
            yield (8, *self.chain(k, l, bottom, mid, top))
            yield 9, c * f(l, mid), d * f(k, bottom) - a * f(l, bottom)
            yield 10, d * f(l, top), b * f(k, mid)
        elif mesh.mesh_type == 8:
            delta, gamma, gamma_p = place['delta'], place['gamma'], place['gamma_p']
            beta, beta_p, top = place['beta'], place['beta_p'], place['alpha']
            yield 3, f(i, beta_p), f(j, beta)
            yield 4, c * f(i, gamma_p) + a * f(i, delta), c * f(j, gamma) + a * f(j, delta)
            yield (8, *self.chain(i, j, delta, gamma, beta))
            yield (8, *self.chain(j, i, delta, gamma_p, beta_p))
            yield (8, *self.chain(j, i, gamma, beta, top))
            yield (8, *self.chain(i, j, gamma_p, beta_p, top))


def check_table1(family, relations=RELATIONS):
    """Relaciones numeradas sobre cada malla completa de la región segura."""
    table = family.table
    graph = family.graph
    checker = _MeshRelations(family)
    violations = []
    checked = 0
    if 1 in relations:
        for l in graph.vertices:
            for k in graph.vertices:
                if l == k:
                    continue
                checked += 1
                if family.value(l, table.simple[k]):
                    violations.append({
                        'relation': 1, 'pair': [min(k, l), max(k, l)],
                        'roots': [table.label(table.simple[k])],
                    })
    for pair in all_pairs(table):
        if graph.m[pair[0]][pair[1]] not in (2, 3):
            continue
        for current in meshes_of_pair(table, pair):
            for number, left, right in checker.instances(current):
                if number not in relations:
                    continue
                checked += 1
                if left != right:
                    violations.append({
                        'relation': number,
                        'pair': list(pair),
                        'mesh_type': current.mesh_type,
                        'roots': [table.label(idx) for idx in current.members],
                    })
    if violations:
        found = sorted({item['relation'] for item in violations})
        logger.warning(f"Relaciones incumplidas: {found}")
    return _report(violations, checked)


def lemma_cool_check(g, depth_bound=None):
    """(α_i|α) + (α_j|α) + (α_k|α) ≤ 0 para cada triángulo y cada raíz enumerada."""
    found = triangles(g)
    if not found:
        raise NoTriangle(graph=str(g))
    table = enumerate_roots(g, depth_bound)
    for triangle in found:
        for idx in table:
            if sum(table.pair(idx, vertex) for vertex in triangle) > 0:
                logger.warning(f"{g}: {table.label(idx)} incumple la desigualdad en {triangle}")
                return False
    return True


def relation5_redundancy_check(family):
    """Si pasan todas las relaciones salvo la (5), también pasa la (5)."""
    others = check_table1(family, relations=tuple(n for n in RELATIONS if n != 5))
    if not others['passed']:
        return True
    return check_table1(family, relations=(5,))['passed']
