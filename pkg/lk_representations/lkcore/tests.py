"""
Tests para φ_i, ψ_i, su inversa, las comprobaciones de familia y el determinante.
"""
import csv
import io

from django.test import SimpleTestCase
from hypothesis import given, settings
from hypothesis import strategies as st

from core.exceptions import InconsistentRelations, NonUnitPivot, NoTriangle, TruncatedTable
from coxeter.graphs import graph_from_edges, named_graph
from coxeter.words import word_class
from families.affine import AffineSeed, affine_family
from families.builders import spherical_family
from laurent.params import LKParams, make_params
from laurent.ring import ONE, X, Y, ZERO, LaurentFraction, LaurentPoly
from rootsys.roots import enumerate_roots

from .checks import (
    check_family_conditions, check_table1, lemma_cool_check, relation5_redundancy_check,
)
from .endo import SparseEndo
from .family import LKFamily, zero_family
from .maps import (
    LKRepresentation, apply_word, block_structure, det, det_unit, phi, phi_braid_defect, psi,
    psi_inverse,
)

PARAMS = LKParams.from_units(Y, Y ** 2, X * Y)
F = 1 + X


def relations_of(report):
    return {item['relation'] for item in report['violations']}


class SparseEndoTestCase(SimpleTestCase):
    """Tests para la composición dispersa."""

    def setUp(self):
        self.table = enumerate_roots(named_graph('A', 2))

    def test_identity(self):
        """Test la identidad tiene diagonal unidad."""
        identity = SparseEndo.identity(self.table)
        self.assertEqual(identity.column(1), {1: ONE})
        self.assertEqual(identity @ identity, identity)

    def test_no_zero_entries(self):
        """Test los ceros no se guardan."""
        endo = SparseEndo(self.table, {0: {0: ZERO, 1: Y}, 2: {2: 0}})
        self.assertEqual(endo.columns, {0: {1: Y}})

    def test_composition_is_column_action(self):
        """Test (A∘B)(e_c) = A(B(e_c))."""
        first = SparseEndo(self.table, {0: {1: Y}})
        second = SparseEndo(self.table, {1: {2: X}})
        self.assertEqual((second @ first).column(0), {2: X * Y})
        self.assertEqual((first @ second).columns, {})

    def test_associativity(self):
        """Test composición asociativa."""
        maps = [psi(i, self.table, spherical_family(named_graph('A', 2), PARAMS, F)) for i in (0, 1)]
        left = (maps[0] @ maps[1]) @ maps[0]
        right = maps[0] @ (maps[1] @ maps[0])
        self.assertEqual(left, right)

    def test_export(self):
        """Test exportación JSON y CSV."""
        endo = phi(0, self.table, PARAMS)
        data = endo.export()
        self.assertEqual(data['basis'], ['1,0', '0,1', '1,1'])
        self.assertEqual(data['columns']['1'], [[1, str(PARAMS.a)], [2, str(PARAMS.c)]])
        self.assertNotIn('0', data['columns'])
        rows = list(csv.reader(io.StringIO(endo.to_csv())))
        self.assertEqual(rows[0], ['', '1,0', '0,1', '1,1'])
        self.assertEqual(rows[1], ['1,0', '0', '0', '0'])
        self.assertEqual(rows[2], ['0,1', '0', str(PARAMS.a), str(PARAMS.b)])

    def test_safe_depth_of_products(self):
        """Test un producto de k aplicaciones es exacto hasta profundidad D − k."""
        table = enumerate_roots(named_graph('Atilde', 2), 4)
        family = zero_family(table, PARAMS)
        self.assertEqual(psi(0, table, family).safe_depth, 3)
        self.assertEqual(apply_word([0, 1], table, family).safe_depth, 2)
        self.assertEqual(apply_word([0, 1, 2], table, family).safe_depth, 1)
        self.assertIsNone(apply_word([0, 1], self.table, zero_family(self.table, PARAMS)).safe_depth)


class PhiPsiTestCase(SimpleTestCase):
    """Tests para φ_i y ψ_i."""

    def setUp(self):
        self.a2 = enumerate_roots(named_graph('A', 2))
        self.a3 = enumerate_roots(named_graph('A', 3))
        self.family = spherical_family(named_graph('A', 2), PARAMS, F)

    def test_phi_a2(self):
        """Test φ_0 sobre A_2."""
        endo = phi(0, self.a2, PARAMS)
        self.assertEqual(endo.column(0), {})
        self.assertEqual(endo.column(1), {1: PARAMS.a, 2: PARAMS.c})
        self.assertEqual(endo.column(2), {1: PARAMS.b})

    def test_phi_loop(self):
        """Test φ_0(e_{α_2}) = d e_{α_2} en A_3."""
        endo = phi(0, self.a3, PARAMS)
        self.assertEqual(endo.column(self.a3.simple[2]), {self.a3.simple[2]: PARAMS.d})

    def test_phi_braid_relations(self):
        """Test φ satisface las relaciones de trenzas con unidades arbitrarias."""
        params = LKParams.from_units(-X, Y ** 3, X ** -1 * Y)
        self.assertEqual(phi_braid_defect(params), ZERO)
        p0, p1, p2 = (phi(i, self.a3, params) for i in range(3))
        self.assertEqual(p0 @ p1 @ p0, p1 @ p0 @ p1)
        self.assertEqual(p0 @ p2, p2 @ p0)

    def test_psi_of_zero_family_is_phi(self):
        """Test ψ = φ para la familia nula."""
        family = zero_family(self.a3, PARAMS)
        for i in range(3):
            self.assertEqual(psi(i, self.a3, family), phi(i, self.a3, PARAMS))

    def test_psi_a2(self):
        """Test fila α_0 de ψ_0."""
        endo = psi(0, self.a2, self.family)
        self.assertEqual(endo.column(0), {0: F})
        self.assertEqual(endo.column(1), {1: PARAMS.a, 2: PARAMS.c})
        expected = -PARAMS.a * PARAMS.c.unit_inverse() * F
        self.assertEqual(endo.column(2), {1: PARAMS.b, 0: expected})

    def test_inverse_over_localization(self):
        """Test ψ_i ∘ ψ_i^{-1} = ψ_i^{-1} ∘ ψ_i = id con f no unidad."""
        family = spherical_family(named_graph('A', 3), PARAMS, F)
        identity = SparseEndo.identity(self.a3)
        for i in range(3):
            forward = psi(i, self.a3, family)
            backward = psi_inverse(i, self.a3, family)
            self.assertEqual(forward @ backward, identity)
            self.assertEqual(backward @ forward, identity)
        pivot = psi_inverse(0, self.a3, family).entry(0, 0)
        self.assertIsInstance(pivot, LaurentFraction)
        self.assertEqual(pivot * F, ONE)

    def test_inverse_loop_case(self):
        """Test ψ_0^{-1}(e_{α_2}) = (1/d) e_{α_2} en A_3 (f_{0,α_2} = 0)."""
        family = spherical_family(named_graph('A', 3), PARAMS, ONE)
        column = psi_inverse(0, self.a3, family).column(self.a3.simple[2])
        self.assertEqual(column, {self.a3.simple[2]: PARAMS.d.unit_inverse()})

    def test_inverse_needs_pivot(self):
        """Test familia nula: ψ_i no es invertible."""
        with self.assertRaises(NonUnitPivot):
            psi_inverse(0, self.a2, zero_family(self.a2, PARAMS))

    def test_apply_word(self):
        """Test palabras vacía, 010 = 101 y 02 = 20."""
        self.assertEqual(apply_word([], self.a2, self.family), SparseEndo.identity(self.a2))
        self.assertEqual(
            apply_word([0, 1, 0], self.a2, self.family),
            apply_word([1, 0, 1], self.a2, self.family),
        )
        family = spherical_family(named_graph('A', 3), PARAMS, F)
        self.assertEqual(apply_word([0, 2], self.a3, family), apply_word([2, 0], self.a3, family))
        self.assertNotEqual(apply_word([0, 1], self.a3, family), apply_word([1, 0], self.a3, family))

    def test_word_class_members_agree(self):
        """Test ψ_b no depende del representante."""
        g = named_graph('A', 3)
        family = spherical_family(g, PARAMS, F)
        rep = LKRepresentation(self.a3, family)
        members = sorted(word_class(g, (0, 1, 2, 1, 0)).members)
        first = rep.word(members[0])
        for member in members[1:]:
            self.assertEqual(rep.word(member), first)

    @settings(max_examples=10, deadline=None)
    @given(st.integers(-2, 2), st.integers(-2, 2), st.integers(-2, 2))
    def test_braid_soundness(self, p, q, r):
        """Test ψ_0ψ_1ψ_0 = ψ_1ψ_0ψ_1 para familias esféricas con (p, q, r) arbitrarios."""
        family = spherical_family(named_graph('A', 3), make_params(p, q, r, f=X))
        rep = LKRepresentation(self.a3, family)
        self.assertEqual(rep.word([0, 1, 0]), rep.word([1, 0, 1]))
        self.assertEqual(rep.word([1, 2, 1]), rep.word([2, 1, 2]))
        self.assertEqual(rep.word([0, 2]), rep.word([2, 0]))

    def test_inverse_word(self):
        """Test ψ_w ∘ ψ_w^{-1} = id para w = 0.1.2."""
        family = spherical_family(named_graph('A', 3), PARAMS, F)
        rep = LKRepresentation(family.table, family)
        identity = SparseEndo.identity(family.table)
        self.assertEqual(rep.word([0, 1, 2]) @ rep.inverse_word([0, 1, 2]), identity)
        self.assertEqual(rep.inverse_word([]), identity)

    def test_braid_relations_report(self):
        """Test relaciones de trenza en D_4 y en Ã_2 truncado."""
        family = spherical_family(named_graph('D', 4), make_params(1, 0, 0, f=X * Y ** 2))
        report = LKRepresentation(family.table, family).braid_relations()
        self.assertTrue(report['passed'])
        self.assertEqual(report['checked'], 6)
        g = named_graph('Atilde', 2)
        affine = affine_family(AffineSeed(g, [F, X, Y, ONE, X + Y, 2, -Y, X * X]), PARAMS, 3)
        self.assertTrue(LKRepresentation(affine.table, affine).braid_relations()['passed'])


class FamilyTestCase(SimpleTestCase):
    """Tests para el contenedor de familias."""

    def setUp(self):
        self.table = enumerate_roots(named_graph('A', 2))

    def test_condition_one_at_construction(self):
        """Test f_0(e_{α_1}) ≠ 0 se rechaza al construir."""
        with self.assertRaises(InconsistentRelations):
            LKFamily(self.table, PARAMS, {(0, 1): ONE})

    def test_mutation_copy(self):
        """Test with_value no altera la familia original."""
        family = spherical_family(named_graph('A', 2), PARAMS, F)
        mutated = family.with_value(0, 2, ONE)
        self.assertEqual(mutated.value(0, 2), ONE)
        self.assertNotEqual(family.value(0, 2), ONE)

    def test_component_rule(self):
        """Test valores entre componentes distintas."""
        g = graph_from_edges(3, [(0, 1)])
        table = enumerate_roots(g)
        family = LKFamily(table, PARAMS, {(2, table.index_of((1, 1, 0))): ONE})
        self.assertEqual(family.component_violations(), [(2, '1,1,0')])

    def test_export(self):
        """Test exportación de valores."""
        family = spherical_family(named_graph('A', 2), PARAMS, F)
        data = family.export()
        self.assertEqual(data['params']['f'], str(F))
        self.assertIn({'i': 0, 'root': '1,0', 'value': str(F)}, data['values'])


class ChecksTestCase(SimpleTestCase):
    """Tests para las condiciones (i)–(iii) y las relaciones (1)–(10)."""

    def setUp(self):
        self.a2 = spherical_family(named_graph('A', 2), PARAMS, F)
        self.a3 = spherical_family(named_graph('A', 3), PARAMS, F)
        self.a5 = spherical_family(named_graph('A', 5), PARAMS, F)
        g = named_graph('Atilde', 2)
        self.affine = affine_family(AffineSeed(g, [F, X, Y, ONE, X + Y, 2, -Y, X * X]), PARAMS, 3)

    def assertMutationCaught(self, family, i, alpha, relation):
        idx = family.table.index_of(alpha)
        mutated = family.with_value(i, idx, family.value(i, idx) + 1)
        report = check_table1(mutated)
        self.assertIn(relation, relations_of(report))
        self.assertFalse(check_family_conditions(mutated)['passed'])

    def test_valid_families_pass(self):
        """Test familias construidas y familia nula sin violaciones."""
        for family in (self.a2, self.a3, self.a5, self.affine, zero_family(self.a3.table, PARAMS)):
            self.assertTrue(check_family_conditions(family)['passed'])
            self.assertTrue(check_table1(family)['passed'])

    def test_relation_instances_a2(self):
        """Test relaciones (7) y (2) en A_2."""
        a, c = PARAMS.a, PARAMS.c
        self.assertEqual(c * self.a2.value(0, 2), -a * self.a2.value(0, 0))
        self.assertEqual(self.a2.value(0, 0), self.a2.value(1, 1))

    def test_relation_four_on_hexagon(self):
        """Test relación (4) en el hexágono de Ã_2 con fondo α_2."""
        family, a, c = self.affine, PARAMS.a, PARAMS.c
        f = family.value_at
        left = c * f(0, (0, 1, 1)) + a * f(0, (0, 0, 1))
        right = c * f(1, (1, 0, 1)) + a * f(1, (0, 0, 1))
        self.assertEqual(left, right)

    def test_mutation_relation_1(self):
        """Test falsificación de la relación (1)."""
        self.assertMutationCaught(self.a2, 0, (0, 1), 1)

    def test_mutation_relation_2(self):
        """Test falsificación de la relación (2)."""
        self.assertMutationCaught(self.a2, 0, (1, 0), 2)

    def test_mutation_relation_3(self):
        """Test falsificación de la relación (3)."""
        self.assertMutationCaught(self.affine, 0, (2, 1, 1), 3)

    def test_mutation_relation_4(self):
        """Test falsificación de la relación (4)."""
        self.assertMutationCaught(self.affine, 0, (0, 1, 1), 4)

    def test_mutation_relation_5(self):
        """Test falsificación de la relación (5)."""
        self.assertMutationCaught(self.a5, 0, (0, 0, 0, 1, 1), 5)

    def test_mutation_relation_6(self):
        """Test falsificación de la relación (6)."""
        self.assertMutationCaught(self.a3, 2, (1, 1, 0), 6)

    def test_mutation_relation_7(self):
        """Test falsificación de la relación (7)."""
        self.assertMutationCaught(self.a2, 0, (1, 1), 7)

    def test_mutation_relation_8(self):
        """Test falsificación de la relación (8)."""
        self.assertMutationCaught(self.a3, 1, (1, 1, 1), 8)

    def test_mutation_relation_9(self):
        """Test falsificación de la relación (9)."""
        self.assertMutationCaught(self.a3, 0, (0, 1, 1), 9)

    def test_mutation_relation_10(self):
        """Test falsificación de la relación (10)."""
        self.assertMutationCaught(self.a3, 0, (1, 1, 1), 10)

    def test_checkers_agree_on_every_mutation(self):
        """Test ambos comprobadores dan el mismo veredicto en cada mutación de A_3."""
        for i in range(3):
            for idx in self.a3.table:
                mutated = self.a3.with_value(i, idx, self.a3.value(i, idx) + Y)
                self.assertEqual(
                    check_family_conditions(mutated)['passed'],
                    check_table1(mutated)['passed'],
                )
                self.assertFalse(check_table1(mutated)['passed'])

    def test_lemma_cool(self):
        """Test desigualdad sobre triángulos."""
        self.assertTrue(lemma_cool_check(named_graph('Atilde', 2), 6))
        table = enumerate_roots(named_graph('Atilde', 2), 3)
        idx = table.index_of((0, 1, 1))
        self.assertEqual(sum(table.pair(idx, k) for k in range(3)), 0)
        with self.assertRaises(NoTriangle):
            lemma_cool_check(named_graph('A', 3))

    def test_relation5_redundancy(self):
        """Test la relación (5) se deduce de las demás."""
        self.assertTrue(relation5_redundancy_check(spherical_family(named_graph('D', 4), PARAMS, F)))
        self.assertTrue(relation5_redundancy_check(self.affine))
        self.assertTrue(relation5_redundancy_check(self.a2))


class DeterminantTestCase(SimpleTestCase):
    """Tests para el determinante exacto."""

    def setUp(self):
        self.a2 = enumerate_roots(named_graph('A', 2))
        self.a3 = enumerate_roots(named_graph('A', 3))

    def test_identity_and_phi(self):
        """Test det(id) = 1 y det(φ_0) = 0."""
        self.assertEqual(det(SparseEndo.identity(self.a2)), ONE)
        self.assertEqual(det(phi(0, self.a2, PARAMS)), ZERO)

    def test_psi_a2(self):
        """Test det(ψ_0) = −bc·f en A_2."""
        family = spherical_family(named_graph('A', 2), PARAMS, F)
        expected = -(PARAMS.b * PARAMS.c) * F
        self.assertEqual(det(psi(0, self.a2, family)), expected)

    def test_psi_is_unit_times_pivot(self):
        """Test det(ψ_i) = det_unit · f_{i,α_i} en A_3."""
        family = spherical_family(named_graph('A', 3), PARAMS, F)
        for i in range(3):
            unit = det_unit(i, self.a3, PARAMS)
            self.assertTrue(unit.is_unit())
            self.assertEqual(det(psi(i, self.a3, family)), unit * F)

    def test_block_structure(self):
        """Test bloques de φ_0 en A_3."""
        self.assertEqual(block_structure(0, self.a3), {'zero': 1, 'loops': 1, 'pairs': 2})

    def test_negative_exponents(self):
        """Test columnas con exponentes negativos."""
        endo = SparseEndo(self.a2, {
            0: {0: X ** -2, 1: Y},
            1: {1: Y ** -1},
            2: {2: LaurentPoly.parse('x^-1 + y')},
        })
        expected = X ** -2 * Y ** -1 * LaurentPoly.parse('x^-1 + y')
        self.assertEqual(det(endo), expected)

    def test_truncated_table(self):
        """Test el determinante exige una tabla completa."""
        table = enumerate_roots(named_graph('Atilde', 2), 3)
        with self.assertRaises(TruncatedTable):
            det(SparseEndo.identity(table))
