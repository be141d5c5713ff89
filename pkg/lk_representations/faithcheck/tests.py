"""
Tests para las relaciones R_b, el criterio de fidelidad y los experimentos.
"""
from django.test import SimpleTestCase

from core.exceptions import FaithfulnessViolation, PreconditionFailed
from coxeter.graphs import named_graph
from coxeter.words import enumerate_classes
from families.affine import AffineSeed, affine_family
from families.builders import spherical_family
from laurent.params import make_params
from laurent.ring import ONE, X, Y
from lkcore.endo import SparseEndo
from lkcore.family import zero_family
from lkcore.maps import LKRepresentation, psi
from rootsys.roots import enumerate_roots
from twisted.groups import named_group
from twisted.orbits import OrbitBasis, restrict

from .criterion import criterion_report
from .experiments import (
    CAVEAT, WordMatrices, faithfulness_experiment, matrix_key, monotonicity_check,
    relation_homomorphism_check, twisted_faithfulness_experiment,
)
from .relations import (
    RootRelation, hee_properties, orbit_relation_check, recover_initial_set, relation_of_endo,
)

PARAMS = make_params(1, 0, 0)
F = X * Y ** 2
SEED = [F, X, Y, X * Y, X + Y, 2, -Y, X * X, Y ** -1, 3 * X, 1 - Y, X * Y, 5, -X, Y * Y, 7]


def _family(label, rank, f=F, params=PARAMS):
    return spherical_family(named_graph(label, rank), params, f)


class RootRelationTestCase(SimpleTestCase):
    """Tests para R_b y la recuperación de I(b)."""

    def setUp(self):
        self.family = _family('A', 2)
        self.table = self.family.table
        self.words = WordMatrices(self.table, self.family)

    def test_identity_is_diagonal(self):
        """Test R_1 es la diagonal."""
        rel = relation_of_endo(SparseEndo.identity(self.table))
        self.assertEqual(rel, RootRelation.identity(self.table))
        self.assertEqual(rel.image(), set(range(len(self.table))))

    def test_recover_initial_set(self):
        """Test I(1) = ∅, I(s_0) = {0}, I(Δ) = {0, 1}."""
        self.assertEqual(recover_initial_set(relation_of_endo(self.words(()))), set())
        self.assertEqual(recover_initial_set(relation_of_endo(self.words((0,)))), {0})
        self.assertEqual(recover_initial_set(relation_of_endo(self.words((1,)))), {1})
        self.assertEqual(recover_initial_set(relation_of_endo(self.words((0, 1, 0)))), {0, 1})

    def test_relation_of_product_is_composition(self):
        """Test R_{s_0 s_1} = R_{s_0} R_{s_1}."""
        first = relation_of_endo(psi(0, self.table, self.family))
        second = relation_of_endo(psi(1, self.table, self.family))
        product = relation_of_endo(self.words((0, 1)))
        self.assertEqual(product.pairs, (first @ second).pairs)

    def test_export_uses_labels(self):
        """Test la exportación usa etiquetas de raíz."""
        exported = RootRelation.identity(self.table).export()
        self.assertIn(['1,0', '1,0'], exported)
        self.assertEqual(len(exported), len(self.table))

    def test_hee_properties(self):
        """Test las tres propiedades se cumplen en A_3."""
        family = _family('A', 3)
        report = hee_properties(family.table, family, PARAMS)
        self.assertTrue(report['passed'])
        self.assertTrue(report['exact'])
        self.assertTrue(report['positivity'])
        for name in ('i', 'ii', 'iii'):
            self.assertEqual(report[name]['witnesses'], [])

    def test_hee_properties_with_zero_a(self):
        """Test a = 0 se informa sin excepción."""
        params = make_params(0, 0, 0)
        family = zero_family(enumerate_roots(named_graph('A', 2)), params)
        self.assertFalse(hee_properties(family.table, family, params)['positivity'])

    def test_matrix_key(self):
        """Test matrices distintas tienen claves distintas."""
        self.assertEqual(matrix_key(self.words((0, 1, 0))), matrix_key(self.words((1, 0, 1))))
        self.assertNotEqual(matrix_key(self.words((0, 1))), matrix_key(self.words((1, 0))))


class CriterionTestCase(SimpleTestCase):
    """Tests para el informe del criterio."""

    def test_criterion_passes(self):
        """Test f = x y² con (p, q, r) = (1, 0, 0) en 0 < y < 1."""
        report = criterion_report(_family('A', 3), PARAMS)
        self.assertTrue(report['passed'])
        self.assertTrue(report['positivity']['passed'])
        self.assertEqual(report['vanishing_at_x0']['witnesses'], [])

    def test_wrong_regime_fails(self):
        """Test ā < 0 para y > 1."""
        report = criterion_report(_family('A', 2), PARAMS, 'y>1')
        self.assertFalse(report['passed'])
        self.assertFalse(report['positivity']['a_pos'])

    def test_seed_without_x_fails(self):
        """Test f = y² no se anula en x = 0."""
        report = criterion_report(_family('A', 2, f=Y ** 2), PARAMS)
        self.assertFalse(report['passed'])
        self.assertFalse(report['vanishing_at_x0']['passed'])
        self.assertFalse(report['cancellative']['passed'])

    def test_zero_a(self):
        """Test (0, 0, 0) da a = 0."""
        params = make_params(0, 0, 0)
        family = zero_family(enumerate_roots(named_graph('A', 2)), params)
        report = criterion_report(family, params)
        self.assertFalse(report['passed'])
        self.assertEqual(report['positivity']['reason'], 'a = 0')

    def test_zero_family_is_not_cancellative(self):
        """Test f_{i,α_i} = 0 aparece como testigo."""
        family = zero_family(enumerate_roots(named_graph('A', 2)), PARAMS)
        report = criterion_report(family, PARAMS)
        self.assertFalse(report['cancellative']['passed'])
        self.assertEqual(len(report['cancellative']['witnesses']), 2)


class FaithfulnessExperimentTestCase(SimpleTestCase):
    """Tests para los experimentos hasta longitud L."""

    def test_a2(self):
        """Test A_2 hasta longitud 5."""
        g = named_graph('A', 2)
        report = faithfulness_experiment(g, _family('A', 2), 5)
        self.assertTrue(report['passed'])
        self.assertEqual(report['elements'], len(enumerate_classes(g, 5)))
        self.assertEqual(report['caveat'], CAVEAT)

    def test_a3(self):
        """Test A_3 hasta longitud 4."""
        report = faithfulness_experiment(named_graph('A', 3), _family('A', 3), 4)
        self.assertTrue(report['passed'])
        self.assertEqual(report['collisions'], 0)

    def test_length_zero(self):
        """Test L = 0 sólo contiene la identidad."""
        report = faithfulness_experiment(named_graph('A', 2), _family('A', 2), 0)
        self.assertEqual(report['elements'], 1)

    def test_zero_family_is_rejected(self):
        """Test sin criterio no hay experimento."""
        g = named_graph('A', 2)
        with self.assertRaises(PreconditionFailed):
            faithfulness_experiment(g, zero_family(enumerate_roots(g), PARAMS), 3)

    def test_affine_is_rejected(self):
        """Test grafos no esféricos no se aceptan."""
        g = named_graph('Atilde', 2)
        family = affine_family(AffineSeed(g, SEED), PARAMS, 4)
        with self.assertRaises(PreconditionFailed):
            faithfulness_experiment(g, family, 2)

    def test_twisted_a3(self):
        """Test elementos fijos por el flip de A_3."""
        g = named_graph('A', 3)
        report = twisted_faithfulness_experiment(g, named_group(g, 'flip'), _family('A', 3), 5)
        self.assertTrue(report['passed'])
        self.assertEqual(report['degree'], 4)
        self.assertGreater(report['elements'], 1)

    def test_twisted_a5(self):
        """Test A_5 con base de órbitas explícita."""
        g = named_graph('A', 5)
        family = _family('A', 5)
        basis = OrbitBasis(family.table, named_group(g, 'flip'))
        report = twisted_faithfulness_experiment(g, named_group(g, 'flip'), family, 3, basis=basis)
        self.assertTrue(report['passed'])
        self.assertEqual(report['degree'], 9)

    def test_violation_is_an_lkrep_error(self):
        """Test FaithfulnessViolation lleva código de salida 3."""
        self.assertEqual(FaithfulnessViolation(first='0', second='1').exit_code, 3)


class RelationChecksTestCase(SimpleTestCase):
    """Tests para la multiplicatividad y la monotonía de R."""

    def test_homomorphism(self):
        """Test R_{bb′} = R_b R_{b′} en A_2."""
        report = relation_homomorphism_check(named_graph('A', 2), _family('A', 2), 4)
        self.assertTrue(report['passed'])
        self.assertTrue(report['exact'])
        self.assertGreater(report['checked'], 0)

    def test_monotonicity(self):
        """Test b′ ≼ b ⇒ R_b(Φ⁺) ⊆ R_{b′}(Φ⁺) en A_3."""
        report = monotonicity_check(named_graph('A', 3), _family('A', 3), 3)
        self.assertTrue(report['passed'])
        self.assertGreater(report['checked'], 0)


class OrbitRelationTestCase(SimpleTestCase):
    """Tests para el paso de R_b a la relación de ψ^G_b sobre Φ⁺/G."""

    def setUp(self):
        g = named_graph('A', 5)
        family = _family('A', 5)
        self.table = family.table
        self.basis = OrbitBasis(self.table, named_group(g, 'flip'))
        self.rep = LKRepresentation(self.table, family)

    def test_identity(self):
        """Test la identidad pasa a la identidad sobre las órbitas."""
        report = orbit_relation_check(
            RootRelation.identity(self.table), RootRelation.identity(self.basis), self.basis,
        )
        self.assertTrue(report['passed'])
        self.assertEqual(report['checked'], len(self.basis))

    def test_fixed_word(self):
        """Test ψ_{s_0 s_4} es compatible con su restricción a V^G."""
        endo = self.rep.word((0, 4))
        report = orbit_relation_check(
            relation_of_endo(endo), relation_of_endo(restrict(endo, self.basis)), self.basis,
        )
        self.assertTrue(report['passed'])
        self.assertEqual(report['unstable'], [])
        self.assertEqual(report['mismatches'], [])

    def test_non_equivariant_endo_fails(self):
        """Test un endomorfismo que no conmuta con el flip da R_b(Θ) no G-estable."""
        last = self.table.simple[4]
        endo = SparseEndo(self.table, {last: {last: ONE}})
        report = orbit_relation_check(
            relation_of_endo(endo), RootRelation.identity(self.basis), self.basis,
        )
        self.assertFalse(report['passed'])
        self.assertIn(self.basis.label(self.basis.orbit_of[last]), report['unstable'])
        self.assertNotEqual(report['mismatches'], [])
