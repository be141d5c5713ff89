"""
La base (e_Θ) del submódulo fijo V^G y el paso de coordenadas de raíces a
coordenadas de órbitas.
"""
import logging
from fractions import Fraction

from core.conf import LOGGER_NAME
from core.exceptions import StabilizationFailure
from laurent.ring import ONE
from lkcore.endo import SparseEndo

logger = logging.getLogger(LOGGER_NAME)


class OrbitBasis:
    """
    Órbitas Θ ∈ Φ⁺/G de la tabla, ordenadas por su menor índice de raíz.

    Hace de base para ``SparseEndo``: longitud, profundidad y etiqueta de
    cada vector e_Θ = Σ_{α∈Θ} e_α.
    """

    def __init__(self, table, group):
        self.table = table
        self.group = group
        self.orbits = []
        self.orbit_of = [None] * len(table)
        for idx in table:
            if self.orbit_of[idx] is not None:
                continue
            alpha = table.root(idx)
            members = tuple(sorted({
                table.index_of(group.root_image(perm, alpha)) for perm in group
            }))
            for member in members:
                self.orbit_of[member] = len(self.orbits)
            self.orbits.append(members)
        self.vertex_orbits = group.vertex_orbits()
        logger.debug(f"{table.graph}: {len(self.orbits)} órbitas de raíces bajo un grupo de orden {group.order}")

    @property
    def graph(self):
        return self.table.graph

    @property
    def complete(self):
        return self.table.complete

    @property
    def depth_bound(self):
        return self.table.depth_bound

    def __len__(self):
        return len(self.orbits)

    def __iter__(self):
        return iter(range(len(self.orbits)))

    def members(self, k):
        return self.orbits[k]

    def representative(self, k):
        return self.orbits[k][0]

    def depth(self, k):
        return self.table.depth(self.orbits[k][0])

    def simple_orbit(self, i):
        """Órbita de α_i."""
        return self.orbit_of[self.table.simple[i]]

    def label(self, k):
        roots = '; '.join(self.table.label(idx) for idx in self.orbits[k])
        return f'Θ{k}: {{{roots}}}'

    def vector(self, k):
        """e_Θ en coordenadas de raíces."""
        return {idx: ONE for idx in self.orbits[k]}

    def export(self):
        return {
            'graph': self.graph.as_dict(),
            'group': self.group.as_dict(),
            'orbits': [
                {'index': k, 'roots': [self.table.label(idx) for idx in members], 'depth': self.depth(k)}
                for k, members in enumerate(self.orbits)
            ],
        }


def restrict(endo, basis):
    """
    Restricción a V^G de un endomorfismo que conmuta con G, en coordenadas de
    órbitas. En las columnas seguras la imagen de e_Θ debe ser constante
    sobre cada órbita; si no, StabilizationFailure.
    """
    table = basis.table
    columns = {}
    for k in basis:
        image = {}
        for idx in basis.members(k):
            for row, value in endo.columns.get(idx, {}).items():
                image[row] = image.get(row, 0) + value
        safe = endo.is_safe_column(basis.representative(k))
        column = {}
        for row_orbit in sorted({basis.orbit_of[row] for row in image}):
            members = basis.members(row_orbit)
            value = image.get(members[0], 0)
            if safe:
                for other in members[1:]:
                    if image.get(other, 0) != value:
                        logger.error(
                            f"e_{{{basis.label(k)}}} no va a V^G: {table.label(members[0])} -> {value}, "
                            f"{table.label(other)} -> {image.get(other, 0)}"
                        )
                        raise StabilizationFailure(column=basis.label(k), row=basis.label(row_orbit))
            column[row_orbit] = value
        columns[k] = column
    return SparseEndo(basis, columns, safe_depth=endo.safe_depth, reach=endo.reach)


def alpha_theta(basis, k):
    """α_Θ = (1/|Θ|) Σ_{α∈Θ} α con coordenadas racionales exactas."""
    members = basis.members(k)
    size = len(members)
    roots = [basis.table.root(idx) for idx in members]
    return tuple(Fraction(sum(column), size) for column in zip(*roots))


def collision_scan(basis):
    """Pares (Θ, Θ′) de órbitas distintas con α_Θ = α_Θ′."""
    seen = {}
    collisions = []
    for k in basis:
        average = alpha_theta(basis, k)
        for previous in seen.get(average, []):
            collisions.append((previous, k))
        seen.setdefault(average, []).append(k)
    if collisions:
        logger.info(f"{basis.graph}: {len(collisions)} colisiones de α_Θ")
    return collisions
