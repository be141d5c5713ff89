"""
Tests para las representaciones torcidas ψ^G.
"""
from fractions import Fraction

from django.test import SimpleTestCase

from core.exceptions import (
    BadAutomorphism, BadRank, NotEquivariant, NotFixedWord, PreconditionFailed, StabilizationFailure,
    UnknownGroup, UnsupportedOrbit,
)
from coxeter.graphs import graph_from_edges, named_graph
from coxeter.weyl import fixed_coxeter_matrix, garside_word
from families.affine import AffineSeed, affine_family
from families.builders import direct_sum_family, spherical_family
from laurent.params import LKParams, make_params
from laurent.ring import X, Y
from lkcore.endo import SparseEndo
from lkcore.family import zero_family
from lkcore.maps import apply_word, det
from rootsys.roots import enumerate_roots

from .closed_forms import block_census, closed_form_delta, determinant_census, phi_delta
from .groups import automorphisms, group_from_generators, named_group
from .orbits import OrbitBasis, alpha_theta, collision_scan, restrict
from .representation import (
    TwistedRepresentation, check_equivariance, check_stabilized_forms, fixed_generators,
    is_fixed_word, restrict_inverse_check, twisted_endo,
)
from .typeb import (
    ambient_graph, determinant_failures, determinant_obstruction, nonequivalence_condition, typeB_labels,
    typeB_suite,
)

PARAMS = LKParams.from_units(Y, Y ** 2, X * Y)
F = X * Y ** 2
SEED = [F, X, Y, X * Y, X + Y, 2, -Y, X * X, Y ** -1, 3 * X, 1 - Y, X * Y, 5, -X, Y * Y, 7]


def _basis(label, rank, group_name, f=F):
    g = named_graph(label, rank)
    family = spherical_family(g, PARAMS, f)
    return family, OrbitBasis(family.table, named_group(g, group_name))


class GroupTestCase(SimpleTestCase):
    """Tests para los grupos de automorfismos."""

    def test_orders(self):
        """Test órdenes de Aut(Γ)."""
        self.assertEqual(automorphisms(named_graph('A', 5)).order, 2)
        self.assertEqual(automorphisms(named_graph('D', 4)).order, 6)
        self.assertEqual(automorphisms(named_graph('Atilde', 2)).order, 6)
        self.assertEqual(automorphisms(named_graph('E', 6)).order, 2)

    def test_elements_preserve_matrix(self):
        """Test cada elemento preserva m."""
        g = named_graph('D', 4)
        for perm in automorphisms(g):
            for i in g.vertices:
                for j in g.vertices:
                    self.assertEqual(g.m[perm[i]][perm[j]], g.m[i][j])

    def test_named_groups(self):
        """Test subgrupos con nombre."""
        atilde3 = named_graph('Atilde', 3)
        self.assertEqual(named_group(atilde3, 'rotation').order, 4)
        self.assertEqual(named_group(atilde3, 'half-turn').vertex_orbits(), [(0, 2), (1, 3)])
        self.assertEqual(named_group(named_graph('D', 4), 'flip').vertex_orbits(), [(0,), (1,), (2, 3)])
        self.assertTrue(named_group(atilde3, 'trivial').is_trivial)

    def test_errors(self):
        """Test permutaciones inválidas y nombres desconocidos."""
        with self.assertRaises(BadAutomorphism):
            group_from_generators(named_graph('A', 3), [(1, 0, 2)])
        with self.assertRaises(UnknownGroup):
            named_group(named_graph('A', 3), 'rotation')
        with self.assertRaises(UnknownGroup):
            named_group(named_graph('Atilde', 2), 'half-turn')


class OrbitBasisTestCase(SimpleTestCase):
    """Tests para la base de órbitas de V^G."""

    def test_orbit_counts(self):
        """Test |Φ⁺/G|: n² para A_{2n−1} y D_{n+1}, n(n+1) para A_{2n}."""
        cases = [('A', 3, 'flip', 4), ('A', 5, 'flip', 9), ('A', 4, 'flip', 6),
                 ('A', 6, 'flip', 12), ('D', 4, 'flip', 9), ('D', 4, 'full', 6)]
        for label, rank, name, expected in cases:
            _family, basis = _basis(label, rank, name)
            self.assertEqual(len(basis), expected)

    def test_orbits_partition_the_table(self):
        """Test las órbitas son una partición G-estable."""
        _family, basis = _basis('A', 5, 'flip')
        members = sorted(idx for k in basis for idx in basis.members(k))
        self.assertEqual(members, list(basis.table))
        self.assertEqual(basis.members(basis.simple_orbit(0)), (0, 4))
        self.assertEqual(basis.label(basis.simple_orbit(2)), 'Θ2: {0,0,1,0,0}')

    def test_restrict_rejects_non_equivariant_maps(self):
        """Test ψ_0 no deja estable V^G bajo el flip de A_3."""
        family, basis = _basis('A', 3, 'flip')
        with self.assertRaises(StabilizationFailure):
            restrict(apply_word((0,), family.table, family), basis)

    def test_alpha_theta(self):
        """Test α_Θ es la raíz en órbitas unitarias y la media en las demás."""
        _family, basis = _basis('A', 5, 'flip')
        self.assertEqual(alpha_theta(basis, basis.simple_orbit(2)), (0, 0, 1, 0, 0))
        half = Fraction(1, 2)
        self.assertEqual(alpha_theta(basis, basis.simple_orbit(0)), (half, 0, 0, 0, half))
        self.assertEqual(collision_scan(basis), [])

    def test_collision_on_atilde3(self):
        """Test colisión de α_Θ en Ã_3 con el medio giro."""
        g = named_graph('Atilde', 3)
        table = enumerate_roots(g, 4)
        basis = OrbitBasis(table, named_group(g, 'half-turn'))
        first = basis.orbit_of[table.index_of((1, 1, 0, 0))]
        second = basis.orbit_of[table.index_of((0, 1, 1, 0))]
        self.assertNotEqual(first, second)
        self.assertIn((min(first, second), max(first, second)), collision_scan(basis))


class EquivarianceTestCase(SimpleTestCase):
    """Tests para la equivariancia de las familias."""

    def test_spherical_is_equivariant(self):
        """Test familia esférica de A_5 con el flip."""
        family, basis = _basis('A', 5, 'flip')
        self.assertTrue(check_equivariance(family, basis.group))

    def test_affine_is_equivariant(self):
        """Test familia afín de Ã_2 con la rotación."""
        g = named_graph('Atilde', 2)
        family = affine_family(AffineSeed(g, SEED), PARAMS, 4)
        self.assertTrue(check_equivariance(family, named_group(g, 'rotation')))

    def test_mutated_direct_sum_is_not(self):
        """Test suma directa con f_{0,α_0} ≠ f_{2,α_2} no es equivariante."""
        g = graph_from_edges(4, [(0, 1), (2, 3)])
        family = direct_sum_family(g, lambda sub: spherical_family(sub, PARAMS, F))
        swap = group_from_generators(g, [(2, 3, 0, 1)])
        self.assertTrue(check_equivariance(family, swap))
        mutated = family.with_value(2, family.table.simple[2], X)
        self.assertFalse(check_equivariance(mutated, swap))
        basis = OrbitBasis(mutated.table, swap)
        with self.assertRaises(NotEquivariant):
            TwistedRepresentation(basis, mutated)


class TwistedEndoTestCase(SimpleTestCase):
    """Tests para ψ^G."""

    def test_identity_word(self):
        """Test la palabra vacía da la identidad."""
        family, basis = _basis('A', 5, 'flip')
        self.assertEqual(twisted_endo((), family.table, family, basis), SparseEndo.identity(basis))

    def test_fixed_words(self):
        """Test palabras fijas y no fijas."""
        g = named_graph('A', 3)
        group = named_group(g, 'flip')
        self.assertTrue(is_fixed_word(g, group, (0, 2)))
        self.assertFalse(is_fixed_word(g, group, (0, 1)))
        self.assertTrue(is_fixed_word(g, group, (1, 0, 2, 1)))
        family, basis = _basis('A', 3, 'flip')
        with self.assertRaises(NotFixedWord):
            twisted_endo((0,), family.table, family, basis)

    def test_table_must_match_basis(self):
        """Test la tabla de raíces debe ser la de la base de órbitas."""
        family, basis = _basis('A', 3, 'flip')
        other = enumerate_roots(family.graph)
        with self.assertRaises(PreconditionFailed):
            twisted_endo((0, 2), other, family, basis)

    def test_fixed_generators(self):
        """Test órbitas esféricas y no esféricas."""
        d4 = named_graph('D', 4)
        found = fixed_generators(d4, automorphisms(d4))
        self.assertEqual([item['orbit'] for item in found['generators']], [(0, 2, 3), (1,)])
        self.assertEqual(found['skipped'], [])
        atilde2 = named_graph('Atilde', 2)
        found = fixed_generators(atilde2, named_group(atilde2, 'rotation'))
        self.assertEqual(found['generators'], [])
        self.assertEqual(found['skipped'], [(0, 1, 2)])

    def test_orbit_of_size_three(self):
        """Test Δ_J con J de tamaño tres en D_4 bajo Aut(D_4)."""
        family, basis = _basis('D', 4, 'full')
        endo = twisted_endo(garside_word(family.graph, (0, 2, 3)), family.table, family, basis)
        self.assertEqual(endo.size, 6)
        self.assertTrue(det(endo))
        with self.assertRaises(UnsupportedOrbit):
            closed_form_delta((0, 2, 3), family.table, family, basis)

    def test_stabilized_forms(self):
        """Test f_iφ_j = f_jφ_i sobre V^G."""
        family, basis = _basis('A', 4, 'flip')
        report = check_stabilized_forms(family, basis, (1, 2))
        self.assertTrue(report['passed'])
        self.assertGreater(report['checked'], 0)

    def test_restricted_inverse(self):
        """Test la restricción de ψ_b^{-1} invierte ψ^G_b."""
        for label, rank, word in [('A', 4, (1, 2, 1)), ('A', 5, (0, 4)), ('D', 4, (2, 3))]:
            family, basis = _basis(label, rank, 'flip')
            self.assertTrue(restrict_inverse_check(word, family.table, family, basis)['passed'])


class ClosedFormTestCase(SimpleTestCase):
    """Tests para las formas cerradas de ψ^G_{Δ_J}."""

    def assertClosedFormsAgree(self, family, basis):
        for orbit in basis.vertex_orbits:
            word = garside_word(family.graph, orbit)
            expected = twisted_endo(word, basis.table, family, basis)
            closed = closed_form_delta(orbit, basis.table, family, basis)
            self.assertEqual(closed.differences(expected), [], msg=f'{family.graph} {orbit}')

    def test_spherical_cases(self):
        """Test forma cerrada = ψ^G en A_3, A_4, A_5 y D_4."""
        for label, rank in [('A', 3), ('A', 4), ('A', 5), ('D', 4)]:
            family, basis = _basis(label, rank, 'flip')
            self.assertClosedFormsAgree(family, basis)

    def test_affine_cases(self):
        """Test forma cerrada = ψ^G en Ã_2 (flip) y Ã_3 (medio giro)."""
        for rank, name in [(2, 'flip'), (3, 'half-turn')]:
            g = named_graph('Atilde', rank)
            family = affine_family(AffineSeed(g, SEED), PARAMS, 4)
            basis = OrbitBasis(family.table, named_group(g, name))
            self.assertClosedFormsAgree(family, basis)

    def test_phi_delta_matches_products(self):
        """Test φ_{Δ_J} por mallas = producto de los φ_i."""
        for label, rank, J in [('A', 3, (0, 2)), ('A', 4, (1, 2)), ('D', 4, (2, 3)), ('A', 5, (0, 4))]:
            table = enumerate_roots(named_graph(label, rank))
            zero = zero_family(table, PARAMS)
            word = garside_word(table.graph, J)
            self.assertEqual(phi_delta(J, table, PARAMS), apply_word(word, table, zero))

    def test_square_block(self):
        """Test bloque 4×4 del cuadrado en A_3."""
        table = enumerate_roots(named_graph('A', 3))
        a, b, c = PARAMS.a, PARAMS.b, PARAMS.c
        endo = phi_delta((0, 2), table, PARAMS)
        bottom, si, sj, top = (table.index_of(alpha) for alpha in
                               [(0, 1, 0), (1, 1, 0), (0, 1, 1), (1, 1, 1)])
        self.assertEqual(endo.column(bottom), {bottom: a * a, si: a * c, sj: a * c, top: c * c})
        self.assertEqual(endo.column(si), {bottom: a * b, sj: b * c})
        self.assertEqual(endo.column(sj), {bottom: a * b, si: b * c})
        self.assertEqual(endo.column(top), {bottom: b * b})

    def test_stabilized_square_block(self):
        """Test bloque 3×3 del cuadrado estabilizado en A_5."""
        family, basis = _basis('A', 5, 'flip')
        table = basis.table
        a, b, c = PARAMS.a, PARAMS.b, PARAMS.c
        endo = closed_form_delta((0, 4), table, family, basis)
        rows = [basis.orbit_of[table.index_of(alpha)] for alpha in
                [(0, 1, 1, 1, 0), (1, 1, 1, 1, 0), (1, 1, 1, 1, 1)]]
        expected = [[a * a, 2 * a * b, b * b], [a * c, b * c, 0], [c * c, 0, 0]]
        for r, row in enumerate(rows):
            for s, col in enumerate(rows):
                self.assertEqual(endo.entry(row, col), expected[r][s])

    def test_type5_block(self):
        """Test columnas (bc f, 0) y (0, bc f) para m = 3."""
        family, basis = _basis('A', 4, 'flip')
        table = basis.table
        bcf = PARAMS.b * PARAMS.c * F
        endo = closed_form_delta((1, 2), table, family, basis)
        theta = basis.simple_orbit(1)
        theta_p = basis.orbit_of[table.index_of((0, 1, 1, 0))]
        self.assertEqual(endo.column(theta), {theta: bcf})
        self.assertEqual(endo.column(theta_p), {theta_p: bcf})

    def test_loop_block(self):
        """Test bloque (d) de una órbita de lazo con J = {i}."""
        family, basis = _basis('A', 5, 'flip')
        endo = closed_form_delta((2,), basis.table, family, basis)
        loop = basis.simple_orbit(0)
        self.assertEqual(endo.column(loop), {loop: PARAMS.d})

    def test_census(self):
        """Test recuento de bloques y determinante en A_5."""
        family, basis = _basis('A', 5, 'flip')
        b, c, d = PARAMS.b, PARAMS.c, PARAMS.d
        self.assertEqual(
            dict(block_census((0, 4), basis)),
            {'fixed2': 1, 'pair2': 2, 'square_stabilized': 1},
        )
        self.assertEqual(dict(block_census((2,), basis)), {'loop': 4, 'pair': 2})
        census = determinant_census((2,), family, basis)
        self.assertEqual(census['det'], (b * c) ** 2 * d ** 4 * F)
        self.assertEqual(det(closed_form_delta((2,), basis.table, family, basis)), census['det'])


class TypeBTestCase(SimpleTestCase):
    """Tests para B_n en A_{2n−1}, A_{2n} y D_{n+1}."""

    def test_labels_and_coxeter_matrix(self):
        """Test etiquetas y la arista m′ = 4 entre Δ_{n−1} y Δ_n."""
        self.assertEqual(typeB_labels(3, 1), [(0, 4), (1, 3), (2,)])
        self.assertEqual(typeB_labels(3, 2), [(0, 5), (1, 4), (2, 3)])
        self.assertEqual(typeB_labels(3, 3), [(0,), (1,), (2, 3)])
        for n in (3, 4):
            for k in (1, 2, 3):
                matrix = fixed_coxeter_matrix(ambient_graph(n, k), typeB_labels(n, k))
                self.assertEqual(matrix[n - 2][n - 1], 4)
                self.assertEqual(matrix[0][1], 3)
                self.assertEqual(matrix[0][n - 1], 2)

    def test_bad_rank(self):
        """Test n < 3."""
        with self.assertRaises(BadRank):
            typeB_labels(2, 1)
        with self.assertRaises(BadRank):
            nonequivalence_condition(2, 1, 0, 0)

    def test_determinants_n3(self):
        """Test determinantes de los generadores para n = 3."""
        b, c, d = PARAMS.b, PARAMS.c, PARAMS.d
        bc = b * c
        expected = {
            1: [-(bc ** 5) * d ** 7 * F, -(bc ** 5) * d ** 7 * F, bc ** 2 * d ** 4 * F],
            2: [bc ** 6 * d ** 11 * F, bc ** 6 * d ** 11 * F, bc ** 8 * d ** 18 * F * F],
            3: [-(bc ** 3) * d ** 2 * F, -(bc ** 3) * d ** 2 * F, bc ** 6 * d ** 5 * F],
        }
        for k, dets in expected.items():
            suite = typeB_suite(3, k, PARAMS, F)
            self.assertEqual(suite['dets'], dets)
            self.assertTrue(suite['dets_match'])
            self.assertTrue(suite['braid']['passed'])
            self.assertEqual(suite['failures'], [])
            self.assertTrue(suite['passed'])
        self.assertEqual(typeB_suite(3, 2, PARAMS, F)['degree'], 12)

    def test_determinant_mismatch(self):
        """Test un determinante distinto del recuento aparece como fallo."""
        suite = typeB_suite(3, 1, PARAMS, F)
        labels = [tuple(orbit) for orbit in suite['orbits']]
        predicted = list(suite['predicted'])
        predicted[-1] = predicted[-1] * Y
        failures = determinant_failures(labels, suite['dets'], predicted)
        self.assertEqual(len(failures), 1)
        self.assertEqual(failures[0]['orbit'], suite['orbits'][-1])
        self.assertEqual(failures[0]['predicted'], str(predicted[-1]))

    def test_determinants_n4(self):
        """Test determinantes = recuento de bloques para n = 4."""
        params = make_params(1, 0, 0)
        for k, degree in [(1, 16), (2, 20), (3, 16)]:
            suite = typeB_suite(4, k, params)
            self.assertEqual(suite['degree'], degree)
            self.assertTrue(suite['dets_match'])
            self.assertEqual(suite['braid']['checked'], 6)

    def test_nonequivalence_condition(self):
        """Test 2n(p+q) + 2(n²−3n+1)r ≠ 0."""
        self.assertTrue(nonequivalence_condition(3, 1, 0, 0))
        self.assertFalse(nonequivalence_condition(3, 1, 0, -3))
        for n in range(3, 11):
            for p in range(-3, 4):
                for q in range(-3, 4):
                    for r in range(-3, 4):
                        if (p + q) * r > 0:
                            self.assertTrue(nonequivalence_condition(n, p, q, r))
                        zero = n * (p + q) + (n * n - 3 * n + 1) * r == 0
                        self.assertEqual(nonequivalence_condition(n, p, q, r), not zero)

    def test_determinant_obstruction(self):
        """Test cociente de determinantes de ψ^{G_1} y ψ^{G_3}."""
        self.assertTrue(determinant_obstruction(3, make_params(1, 0, 0))['nonequivalent'])
        self.assertFalse(determinant_obstruction(3, make_params(1, 0, -1))['nonequivalent'])
