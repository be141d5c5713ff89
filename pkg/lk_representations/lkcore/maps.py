"""
Las aplicaciones φ_i y ψ_i = φ_i + f_i ⊠ e_{α_i}, su inversa y ψ_b.

Convención de columnas: la columna α guarda ψ_i(e_α). Para α con
(α|α_i) < 0 y β = s_i(α) (un 2-malla de s_i):
φ_i(e_α) = a e_α + c e_β y φ_i(e_β) = b e_α; si (α|α_i) = 0, φ_i(e_α) = d e_α;
φ_i(e_{α_i}) = 0. La fila α_i de ψ_i contiene los valores f_{i,α}.
"""
import logging

from sympy import ZZ, symbols
from sympy.polys.matrices import DomainMatrix

from core.conf import LOGGER_NAME
from core.exceptions import NonUnitPivot, TruncatedTable
from laurent.ring import ONE, LaurentFraction, LaurentPoly, ring_divide

from .endo import SparseEndo

logger = logging.getLogger(LOGGER_NAME)


def _safe_depth(table):
    return None if table.complete else table.depth_bound - 1


def phi(i, table, params):
    """φ_i en bloques (0), (d) y [[a, b], [c, 0]]."""
    columns = {}
    for idx in table:
        if idx == table.simple[i]:
            continue
        value = table.pair(idx, i)
        if value == 0:
            columns[idx] = {idx: params.d}
        elif value < 0:
            column = {idx: params.a}
            partner = table.reflect_index(i, idx)
            if partner >= 0:
                column[partner] = params.c
            columns[idx] = column
        else:
            columns[idx] = {table.reflect_index(i, idx): params.b}
    return SparseEndo(table, columns, safe_depth=_safe_depth(table), reach=1)


def psi(i, table, family):
    """φ_i con la fila α_i sustituida por (f_{i,α})_α."""
    base = phi(i, table, family.params)
    columns = {col: dict(entries) for col, entries in base.columns.items()}
    row = table.simple[i]
    for idx, value in family.form(i).items():
        columns.setdefault(idx, {})[row] = value
    return SparseEndo(table, columns, safe_depth=base.safe_depth, reach=1)


def psi_inverse(i, table, family):
    """Inversa de ψ_i sobre la localización de R; NonUnitPivot si f_{i,α_i} = 0."""
    params = family.params
    a, b, c, d = params.a, params.b, params.c, params.d
    pivot_row = table.simple[i]
    pivot = family.value(i, pivot_row)
    if not pivot:
        raise NonUnitPivot(i=i)
    columns = {pivot_row: {pivot_row: ring_divide(ONE, pivot)}}
    for idx in table:
        if idx == pivot_row:
            continue
        value = table.pair(idx, i)
        f_here = family.value(i, idx)
        if value == 0:
            columns[idx] = {
                idx: ring_divide(ONE, d),
                pivot_row: -ring_divide(f_here, d * pivot),
            }
            continue
        partner = table.reflect_index(i, idx)
        if partner < 0:
            continue
        f_partner = family.value(i, partner)
        if value < 0:
            # α inferior, β = s_i(α) superior
            columns[idx] = {
                partner: ring_divide(ONE, b),
                pivot_row: -ring_divide(f_partner, b * pivot),
            }
        else:
            # β = idx superior, α = s_i(β) inferior
            columns[idx] = {
                partner: ring_divide(ONE, c),
                idx: -ring_divide(a, b * c),
                pivot_row: ring_divide(a * f_here - b * f_partner, b * c * pivot),
            }
    return SparseEndo(table, columns, safe_depth=_safe_depth(table), reach=1)


class LKRepresentation:
    """ψ sobre una tabla, con las matrices de los generadores en caché."""

    def __init__(self, table, family):
        self.table = table
        self.family = family
        self._generators = {}
        self._inverses = {}

    def generator(self, i):
        if i not in self._generators:
            self._generators[i] = psi(i, self.table, self.family)
        return self._generators[i]

    def inverse_generator(self, i):
        if i not in self._inverses:
            self._inverses[i] = psi_inverse(i, self.table, self.family)
        return self._inverses[i]

    def word(self, word):
        """ψ_{w_1} ∘ ψ_{w_2} ∘ ⋯ compuesto de izquierda a derecha."""
        result = SparseEndo.identity(self.table)
        for letter in word:
            result = result @ self.generator(letter)
        return result

    def inverse_word(self, word):
        """ψ_w^{-1} = ψ_{w_k}^{-1} ∘ ⋯ ∘ ψ_{w_1}^{-1}, sobre la localización."""
        result = SparseEndo.identity(self.table)
        for letter in reversed(tuple(word)):
            result = result @ self.inverse_generator(letter)
        return result

    def braid_relations(self):
        graph = self.table.graph
        return check_braid_relations([self.generator(i) for i in graph.vertices], graph.m)


def apply_word(word, table, family):
    return LKRepresentation(table, family).word(word)


def braid_product(x, y, length):
    """x ∘ y ∘ x ∘ ⋯ con ``length`` factores."""
    result = x
    for step in range(1, length):
        result = result @ (y if step % 2 else x)
    return result


def check_braid_relations(generators, matrix):
    """Relaciones de trenza de la matriz de Coxeter ``matrix`` entre ``generators``; 0 codifica ∞."""
    failures = []
    checked = 0
    for a in range(len(generators)):
        for b in range(a + 1, len(generators)):
            m = matrix[a][b]
            if m == 0:
                continue
            checked += 1
            x, y = generators[a], generators[b]
            if braid_product(x, y, m) != braid_product(y, x, m):
                failures.append({'pair': [a, b], 'm': m})
    return {'passed': not failures, 'checked': checked, 'failures': failures}


def phi_braid_defect(params):
    """a(d(a − d) + bc): se anula para todos los parámetros válidos."""
    a, b, c, d = params.a, params.b, params.c, params.d
    return a * (d * (a - d) + b * c)


def block_structure(i, table):
    """Número de bloques nulos, de lazo (d) y de 2-malla de φ_i."""
    loops = pairs = 0
    for idx in table:
        if idx == table.simple[i]:
            continue
        value = table.pair(idx, i)
        if value == 0:
            loops += 1
        elif value < 0:
            pairs += 1
    return {'zero': 1, 'loops': loops, 'pairs': pairs}


def det_unit(i, table, params):
    """d^{#lazos} (−bc)^{#2-mallas}: det ψ_i = det_unit · f_{i,α_i}."""
    blocks = block_structure(i, table)
    return params.d ** blocks['loops'] * (-(params.b * params.c)) ** blocks['pairs']


_X, _Y = symbols('x y')
_RING = ZZ[_X, _Y]


def _column_shift(entries):
    """Exponentes mínimos (x, y) de una columna, para volverla polinómica."""
    keys = [key for value in entries for key, _coeff in value.items()]
    return (
        min((xe for xe, _ye in keys), default=0),
        min((ye for _xe, ye in keys), default=0),
    )


def det(endo):
    """
    Determinante exacto: cada columna se multiplica por un monomio para
    quedar en ℤ[x, y] y se elimina sin fracciones sobre ese anillo.
    """
    if not endo.exact or not getattr(endo.basis, 'complete', True):
        raise TruncatedTable(basis=len(endo.basis))
    size = endo.size
    if size == 0:
        return ONE
    rows = [[_RING.zero] * size for _row in range(size)]
    shift_x = shift_y = 0
    for col in range(size):
        entries = {}
        for row, value in endo.columns.get(col, {}).items():
            if isinstance(value, LaurentFraction):
                value = value.to_poly()
            entries[row] = value
        low_x, low_y = _column_shift(entries.values())
        shift_x += low_x
        shift_y += low_y
        for row, value in entries.items():
            rows[row][col] = _RING.ring.from_dict(
                {(xe - low_x, ye - low_y): ZZ(coeff) for (xe, ye), coeff in value.items()}
            )
    result = DomainMatrix(rows, (size, size), _RING).det()
    terms = {
        (xe + shift_x, ye + shift_y): int(coeff)
        for (xe, ye), coeff in result.to_dict().items()
    }
    value = LaurentPoly(terms)
    logger.debug(f"Determinante de {size}x{size}: {value}")
    return value
