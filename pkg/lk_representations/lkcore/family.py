"""
Familias de Lawrence–Krammer: valores f_{i,α} sobre una tabla de raíces.
"""
import logging

from core.conf import LOGGER_NAME
from core.exceptions import InconsistentRelations
from coxeter.graphs import connected_components
from laurent.ring import ZERO, as_poly
from rootsys.roots import parse_root

logger = logging.getLogger(LOGGER_NAME)


class LKFamily:
    """
    Mapa (i, índice de raíz) -> f_{i,α} con sus parámetros (b, c, d).

    Los valores ausentes son cero. La condición f_i(e_{α_j}) = 0 para i ≠ j
    se comprueba al construir salvo con ``check=False`` (familias mutadas
    de las pruebas).
    """

    def __init__(self, table, params, values=None, name='', check=True):
        self.table = table
        self.params = params
        self.name = name
        self._values = {}
        for (i, idx), value in (values or {}).items():
            value = as_poly(value)
            if value:
                self._values[(i, idx)] = value
        if check:
            broken = self.simple_root_violations()
            if broken:
                logger.error(f"Familia {name or ''} viola f_i(e_αj) = 0 en {broken}")
                raise InconsistentRelations(condition='(i)', pairs=broken)

    @property
    def graph(self):
        return self.table.graph

    @property
    def depth_bound(self):
        return self.table.depth_bound

    def value(self, i, idx):
        return self._values.get((i, idx), ZERO)

    def value_at(self, i, alpha):
        return self.value(i, self.table.index_of(alpha))

    def form(self, i):
        """La forma lineal f_i como diccionario índice -> valor."""
        return {idx: value for (k, idx), value in self._values.items() if k == i}

    def items(self):
        return sorted(self._values.items())

    def is_zero(self):
        return not self._values

    def with_value(self, i, idx, value):
        """Copia con un valor cambiado, sin comprobar la condición (i)."""
        values = dict(self._values)
        values[(i, idx)] = as_poly(value)
        return LKFamily(self.table, self.params, values, name=f'{self.name}*', check=False)

    def simple_root_violations(self):
        return [
            (i, j) for i in self.graph.vertices for j in self.graph.vertices
            if i != j and self.value(i, self.table.simple[j])
        ]

    def component_violations(self):
        """(i, α) con f_{i,α} ≠ 0 aunque i y Supp(α) estén en componentes distintas."""
        component_of = {}
        for number, component in enumerate(connected_components(self.graph)):
            for vertex in component:
                component_of[vertex] = number
        found = []
        for (i, idx), _value in self.items():
            support = {k for k, value in enumerate(self.table.root(idx)) if value}
            if any(component_of[k] != component_of[i] for k in support):
                found.append((i, self.table.label(idx)))
        return found

    def export(self):
        return {
            'graph': self.graph.as_dict(),
            'name': self.name,
            'params': self.params.as_dict(),
            'depth_bound': self.depth_bound,
            'values': [
                {'i': i, 'root': self.table.label(idx), 'value': str(value)}
                for (i, idx), value in self.items()
            ],
        }

    def __eq__(self, other):
        if not isinstance(other, LKFamily):
            return NotImplemented
        return (
            self.table.roots == other.table.roots
            and self.params == other.params
            and self._values == other._values
        )

    __hash__ = None

    def __repr__(self):
        return f'LKFamily({self.graph}, {len(self._values)} valores)'


def zero_family(table, params):
    return LKFamily(table, params, {}, name='zero')


def family_from_values(table, params, values, name=''):
    """``values``: {(i, raíz como tupla o texto "1,0,1"): polinomio}."""
    resolved = {}
    for (i, alpha), value in values.items():
        if isinstance(alpha, str):
            alpha = parse_root(alpha)
        resolved[(i, table.index_of(alpha))] = value
    family = LKFamily(table, params, resolved, name=name)
    logger.debug(f"Familia {name} con {len(family.items())} valores sobre {table.graph}")
    return family
