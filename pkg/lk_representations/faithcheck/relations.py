"""
De matrices positivas a relaciones binarias sobre la base.

β R_b α cuando el coeficiente de e_β en ψ_b(e_α), evaluado en x = 0 y en el
punto de muestra del régimen, es positivo. Sobre un criterio que se cumple,
b ↦ R_b es un morfismo de monoides B⁺ → Bin(Φ⁺).
"""
import logging
from dataclasses import dataclass

from core.conf import LOGGER_NAME
from core.exceptions import NegativeEntry, ZeroA
from laurent.params import positivity_report, sign_at
from laurent.ring import LaurentFraction
from lkcore.maps import psi

logger = logging.getLogger(LOGGER_NAME)


@dataclass(frozen=True)
class RootRelation:
    """Pares (β, α) con β R α; ``columns`` son las columnas donde R es exacta."""

    basis: object
    pairs: frozenset
    columns: frozenset

    @classmethod
    def identity(cls, basis):
        columns = frozenset(range(len(basis)))
        return cls(basis, frozenset((idx, idx) for idx in columns), columns)

    def targets(self, alpha):
        return {beta for beta, col in self.pairs if col == alpha}

    def image(self):
        """R(Ω): los β relacionados con algún α."""
        return {beta for beta, _alpha in self.pairs}

    def image_of(self, alphas):
        alphas = set(alphas)
        return {beta for beta, alpha in self.pairs if alpha in alphas}

    def compose(self, other):
        """β (R R′) α ⟺ ∃γ: β R γ y γ R′ α."""
        by_source = {}
        for beta, gamma in self.pairs:
            by_source.setdefault(gamma, set()).add(beta)
        pairs = {
            (beta, alpha)
            for gamma, alpha in other.pairs
            for beta in by_source.get(gamma, ())
        }
        columns = {
            alpha for alpha in other.columns
            if all(gamma in self.columns for gamma, col in other.pairs if col == alpha)
        }
        return RootRelation(self.basis, frozenset(pairs), frozenset(columns))

    def restricted(self, columns):
        columns = set(columns) & set(self.columns)
        return RootRelation(
            self.basis,
            frozenset((beta, alpha) for beta, alpha in self.pairs if alpha in columns),
            frozenset(columns),
        )

    def __matmul__(self, other):
        return self.compose(other)

    def export(self):
        label = self.basis.label
        return sorted([label(beta), label(alpha)] for beta, alpha in self.pairs)


def relation_of_endo(endo, regime='0<y<1'):
    """R del endomorfismo sobre sus columnas seguras; NegativeEntry si algún valor es negativo."""
    pairs = set()
    columns = endo.safe_columns()
    for col in columns:
        for row, value in endo.columns.get(col, {}).items():
            if isinstance(value, LaurentFraction):
                value = value.to_poly()
            sign = sign_at(value, regime)
            if sign < 0:
                label = endo.basis.label
                logger.error(f"Entrada negativa en ({label(row)}, {label(col)}): {value}")
                raise NegativeEntry(row=label(row), column=label(col), value=value)
            if sign > 0:
                pairs.add((row, col))
    return RootRelation(endo.basis, frozenset(pairs), frozenset(columns))


def recover_initial_set(rel):
    """
    I(b) = {i : α_i ∉ R_b(Φ⁺)}. Sobre una base de órbitas devuelve las
    órbitas J con Θ_J ∉ R_b(Ω).
    """
    image = rel.image()
    basis = rel.basis
    if hasattr(basis, 'vertex_orbits'):
        return {orbit for orbit in basis.vertex_orbits if basis.simple_orbit(orbit[0]) not in image}
    return {i for i in basis.graph.vertices if basis.simple[i] not in image}


def orbit_relation_check(rel, orbit_rel, basis):
    """
    Compara R_b sobre Φ⁺ con la relación de ψ^G_b sobre Φ⁺/G: cada R_b(Θ)
    debe ser unión de órbitas y Θ′ R^G Θ ⟺ algún β ∈ Θ′ está en R_b(Θ).
    Sólo se miran las órbitas cuyas columnas son exactas en ambas relaciones.
    """
    unstable, mismatches = [], []
    checked = 0
    for k in basis:
        members = basis.members(k)
        if k not in orbit_rel.columns or not all(idx in rel.columns for idx in members):
            continue
        checked += 1
        image = rel.image_of(members)
        orbits = {basis.orbit_of[beta] for beta in image}
        if any(not set(basis.members(orbit)) <= image for orbit in orbits):
            unstable.append(basis.label(k))
        if orbits != orbit_rel.targets(k):
            mismatches.append(basis.label(k))
    if unstable or mismatches:
        logger.warning(f"{basis.graph}: R_b no pasa a Φ⁺/G en {len(unstable) + len(mismatches)} órbitas")
    return {
        'passed': not unstable and not mismatches,
        'checked': checked,
        'unstable': unstable,
        'mismatches': mismatches,
    }


def hee_properties(table, family, params, regime='0<y<1'):
    """
    (i) α_i ∉ R_{s_i}(Φ⁺); (ii) α_i R_{s_j} α_i para i ≠ j; (iii) si m_ij = 3,
    α_i R_{s_j} R_{s_i} α_j. Cada fallo se devuelve como testigo.
    """
    graph = table.graph
    relations = {i: relation_of_endo(psi(i, table, family), regime) for i in graph.vertices}
    witnesses = {'i': [], 'ii': [], 'iii': []}
    for i in graph.vertices:
        if table.simple[i] in relations[i].image():
            witnesses['i'].append({'i': i})
    for i in graph.vertices:
        for j in graph.vertices:
            if i == j:
                continue
            alpha = table.simple[i]
            if (alpha, alpha) not in relations[j].pairs:
                witnesses['ii'].append({'i': i, 'j': j})
            if graph.m[i][j] == 3:
                if (alpha, table.simple[j]) not in (relations[j] @ relations[i]).pairs:
                    witnesses['iii'].append({'i': i, 'j': j})
    report = {name: {'passed': not found, 'witnesses': found} for name, found in witnesses.items()}
    report['passed'] = all(item['passed'] for item in report.values())
    report['exact'] = table.complete
    if not report['passed']:
        logger.warning(f"{graph}: propiedades de Hée incumplidas {sorted(k for k, v in witnesses.items() if v)}")
    try:
        report['positivity'] = positivity_report(params, regime)['passed']
    except ZeroA:
        report['positivity'] = False
    return report
