"""
Valores de f_{i,α} que imponen las relaciones (6)–(10) a partir de raíces de
menor profundidad.
"""
import logging

from core.conf import LOGGER_NAME
from core.exceptions import InconsistentRelations
from laurent.ring import ZERO

logger = logging.getLogger(LOGGER_NAME)


class RelationSolver:
    """Evalúa los candidatos de cada relación sobre los valores ya construidos."""

    def __init__(self, table, params, values):
        self.table = table
        self.params = params
        self.values = values
        self.inv_c = params.c.unit_inverse()
        self.inv_d = params.d.unit_inverse()
        self.m = table.graph.m

    def f(self, i, idx):
        return self.values.get((i, idx), ZERO)

    def lower(self, j, idx):
        """s_j(α) si (α|α_j) > 0, si no None."""
        if self.table.pair(idx, j) <= 0:
            return None
        image = self.table.reflect_index(j, idx)
        return image if image >= 0 else None

    def candidates(self, i, idx):
        """Lista de (relación, j, valor) para f_{i,α}."""
        table = self.table
        a, b, c, d = self.params.a, self.params.b, self.params.c, self.params.d
        inv_c, inv_d = self.inv_c, self.inv_d
        found = []
        for j in table.graph.vertices:
            if j == i:
                continue
            beta = self.lower(j, idx)
            if beta is None:
                continue
            if self.m[i][j] == 2:
                found.append((6, j, b * inv_d * self.f(i, beta)))
                continue
            if table.pair(beta, i) > 0:
                gamma = self.lower(i, beta)
                if gamma is not None:
                    found.append((8, j, (b * self.f(j, gamma) - a * self.f(i, beta)) * inv_c))
                elif beta == table.simple[i]:
                    found.append((7, j, -a * inv_c * self.f(i, beta)))
            elif table.pair(beta, i) == 0:
                found.append((9, j, (d * self.f(j, beta) - a * self.f(i, beta)) * inv_c))
        beta = self.lower(i, idx)
        if beta is not None:
            for j in table.graph.vertices:
                if j != i and self.m[i][j] == 3 and table.pair(idx, j) == 0:
                    found.append((10, j, b * inv_d * self.f(j, beta)))
        return found

    def hexagon_step(self, i, idx, j, extra):
        """(b/d) f_{i,β} + (d/c) f_{j,β} + extra, con β = s_j(α) el fondo del hexágono."""
        beta = self.lower(j, idx)
        b, c, d = self.params.b, self.params.c, self.params.d
        return b * self.inv_d * self.f(i, beta) + d * self.inv_c * self.f(j, beta) + extra


def agreed(candidates, i, idx, table):
    """Valor común de los candidatos; InconsistentRelations si discrepan o no hay."""
    if not candidates:
        logger.error(f"f_{{{i},{table.label(idx)}}} no queda determinado")
        raise InconsistentRelations(i=i, root=table.label(idx), reason='undetermined')
    first = candidates[0][2]
    for number, j, value in candidates[1:]:
        if value != first:
            logger.error(
                f"f_{{{i},{table.label(idx)}}}: la relación ({number}) con j={j} "
                f"da {value} y no {first}"
            )
            raise InconsistentRelations(i=i, root=table.label(idx), relation=number, j=j)
    return first
