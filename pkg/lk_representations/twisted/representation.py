"""
La representación torcida ψ^G: restricción de ψ_b a V^G para b fijo por G.

Requiere una familia equivariante, f_{g(i),g(α)} = f_{i,α} para todo g ∈ G;
entonces ψ_{g(b)} = g ψ_b g^{-1} y ψ_b deja estable V^G cuando g(b) = b.
"""
import logging

from core.conf import LOGGER_NAME
from core.exceptions import NotEquivariant, NotFixedWord, PreconditionFailed
from coxeter.graphs import is_spherical
from coxeter.weyl import garside_word
from coxeter.words import format_word, word_class
from lkcore.endo import SparseEndo
from lkcore.maps import LKRepresentation, phi

from .orbits import restrict

logger = logging.getLogger(LOGGER_NAME)


def equivariance_defects(family, group):
    """(g, i, α) con f_{g(i),g(α)} ≠ f_{i,α}, recorriendo los generadores de G."""
    table = family.table
    defects = []
    for perm in group.generators:
        for idx in table:
            image = table.index_of(group.root_image(perm, table.root(idx)))
            for i in family.graph.vertices:
                if family.value(perm[i], image) != family.value(i, idx):
                    defects.append((perm, i, table.label(idx)))
    return defects


def check_equivariance(family, group):
    defects = equivariance_defects(family, group)
    if defects:
        logger.warning(f"{family.graph}: la familia no es equivariante ({len(defects)} defectos)")
    return not defects


def is_fixed_word(g, group, word, cap=None):
    """g(b) = b para todo g ∈ G, comparando clases en B⁺."""
    members = word_class(g, word, cap).members
    return all(group.word_image(perm, tuple(word)) in members for perm in group.generators)


class TwistedRepresentation:
    """ψ^G sobre una base de órbitas, con ψ en caché."""

    def __init__(self, basis, family):
        if not check_equivariance(family, basis.group):
            raise NotEquivariant(graph=str(family.graph), group=basis.group.order)
        self.basis = basis
        self.family = family
        self.rep = LKRepresentation(basis.table, family)

    def root_endo(self, word):
        return self.rep.word(word)

    def word(self, word, check_fixed=True):
        word = tuple(word)
        if check_fixed and not is_fixed_word(self.family.graph, self.basis.group, word):
            raise NotFixedWord(word=format_word(word))
        return restrict(self.rep.word(word), self.basis)


def twisted_endo(word, table, family, basis):
    """ψ_w restringido a V^G en coordenadas de órbitas."""
    if basis.table is not table:
        raise PreconditionFailed(reason='the orbit basis was built on another root table')
    return TwistedRepresentation(basis, family).word(word)


def fixed_generators(g, group):
    """Órbitas J de I con su Δ_J; las no esféricas no dan generador de (B⁺)^G."""
    generators, skipped = [], []
    for orbit in group.vertex_orbits():
        if is_spherical(g, orbit):
            generators.append({'orbit': orbit, 'word': garside_word(g, orbit)})
        else:
            skipped.append(orbit)
            logger.info(f"{g}: la órbita {list(orbit)} no es esférica y se omite")
    return {'generators': generators, 'skipped': skipped}


def orbit_form(family, i, basis, endo=None):
    """{Θ: (f_i ∘ endo)(e_Θ)} (sin ``endo``, f_i(e_Θ))."""
    values = {}
    for k in basis:
        total = 0
        for idx in basis.members(k):
            if endo is None:
                total = total + family.value(i, idx)
                continue
            for row, coeff in endo.columns.get(idx, {}).items():
                total = total + coeff * family.value(i, row)
        if total:
            values[k] = total
    return values


def check_stabilized_forms(family, basis, J):
    """f_iφ_j y f_jφ_i coinciden sobre V^G para J = {i, j}."""
    i, j = sorted(J)
    table, params = basis.table, family.params
    phi_i, phi_j = phi(i, table, params), phi(j, table, params)
    left = orbit_form(family, i, basis, phi_j)
    right = orbit_form(family, j, basis, phi_i)
    mismatches = []
    checked = 0
    for k in basis:
        if not phi_i.is_safe_column(basis.representative(k)):
            continue
        checked += 1
        if left.get(k, 0) != right.get(k, 0):
            mismatches.append(basis.label(k))
    return {'passed': not mismatches, 'checked': checked, 'mismatches': mismatches}


def restrict_inverse_check(word, table, family, basis):
    """(ψ_b^{-1})|V^G es la inversa de (ψ_b)|V^G; exige f_{i,α_i} invertibles."""
    forward = twisted_endo(word, table, family, basis)
    backward = restrict(LKRepresentation(basis.table, family).inverse_word(word), basis)
    identity = SparseEndo.identity(basis)
    passed = forward @ backward == identity and backward @ forward == identity
    if not passed:
        logger.error(f"La inversa de ψ^G_{format_word(word)} no es la restricción de la inversa")
    return {'passed': passed, 'word': format_word(word)}
