"""
Tests para los constructores de familias LK y los mapas μ.
"""
from django.test import SimpleTestCase

from core.exceptions import (
    DepthBoundTooSmall, NotAffine, NotAtilde, NotSpherical, PreconditionFailed, SeedTooShort,
)
from coxeter.graphs import graph_from_edges, named_graph
from laurent.params import LKParams
from laurent.ring import ONE, X, Y, ZERO
from lkcore.checks import check_table1
from lkcore.maps import LKRepresentation

from .affine import (
    AffineSeed, affine_family, antilde_closed_form, mu_affine, paris_seed, required_seed_length,
)
from .builders import (
    direct_sum_family, is_group_family, mu_spherical, paris_family, spherical_family, values_of,
)

PARAMS = LKParams.from_units(Y, Y ** 2, X * Y)
F = 1 + X
SEED = [F, X, Y, ONE, X + Y, 2, -Y, X * X, Y ** -1, 3 * X, ONE - Y, X * Y, 5, -X, Y * Y, 7]


class SphericalFamilyTestCase(SimpleTestCase):
    """Tests para el caso esférico."""

    def test_a2_values(self):
        """Test valores en A_2."""
        family = spherical_family(named_graph('A', 2), PARAMS, F)
        a, c = PARAMS.a, PARAMS.c
        self.assertEqual(family.value_at(0, (1, 0)), F)
        self.assertEqual(family.value_at(1, (0, 1)), F)
        self.assertEqual(family.value_at(0, (0, 1)), ZERO)
        self.assertEqual(family.value_at(0, (1, 1)), -a * c.unit_inverse() * F)

    def test_closed_form(self):
        """Test f_{i,α} = −(af/c)(b/d)^{dep(α)−2} cuando (α|α_i) > 0."""
        for label, rank in [('A', 3), ('A', 4), ('D', 4)]:
            family = spherical_family(named_graph(label, rank), PARAMS, F)
            table = family.table
            a, b, c, d = PARAMS.a, PARAMS.b, PARAMS.c, PARAMS.d
            for idx in table:
                for i in table.graph.vertices:
                    if table.depth(idx) >= 2 and table.pair(idx, i) > 0:
                        expected = -a * F * c.unit_inverse() * (b * d.unit_inverse()) ** (table.depth(idx) - 2)
                        self.assertEqual(family.value(i, idx), expected)

    def test_zero_seed(self):
        """Test f = 0 da la familia nula."""
        self.assertTrue(spherical_family(named_graph('D', 5), PARAMS, ZERO).is_zero())

    def test_uniqueness_and_mu(self):
        """Test μ_sph recupera f y la familia pasa todas las relaciones."""
        for label, rank in [('A', 2), ('A', 3), ('D', 4), ('E', 6)]:
            family = spherical_family(named_graph(label, rank), PARAMS, F)
            self.assertEqual(mu_spherical(family), F)
            self.assertTrue(check_table1(family)['passed'])
            self.assertEqual(family, spherical_family(named_graph(label, rank), PARAMS, mu_spherical(family)))

    def test_preconditions(self):
        """Test grafo no esférico o no conexo."""
        with self.assertRaises(NotSpherical):
            spherical_family(named_graph('Atilde', 2), PARAMS, F)
        with self.assertRaises(PreconditionFailed):
            spherical_family(graph_from_edges(3, [(0, 1)]), PARAMS, F)

    def test_direct_sum(self):
        """Test suma directa sobre A_2 ⊔ A_1."""
        g = graph_from_edges(3, [(0, 1)])
        family = direct_sum_family(g, lambda sub: spherical_family(sub, PARAMS, F))
        self.assertEqual(family.value_at(2, (0, 0, 1)), F)
        self.assertEqual(family.value_at(0, (1, 1, 0)), -PARAMS.a * PARAMS.c.unit_inverse() * F)
        self.assertEqual(family.component_violations(), [])
        self.assertTrue(check_table1(family)['passed'])

    def test_is_group_family(self):
        """Test pertenencia a F_gr."""
        g = named_graph('A', 3)
        self.assertTrue(is_group_family(spherical_family(g, PARAMS, X * Y ** 2)))
        self.assertFalse(is_group_family(spherical_family(g, PARAMS, ZERO)))
        self.assertFalse(is_group_family(spherical_family(g, PARAMS, F)))
        self.assertTrue(is_group_family(spherical_family(g, PARAMS, F), units=[F]))


class ParisFamilyTestCase(SimpleTestCase):
    """Tests para la construcción de Paris."""

    def test_spherical_agreement(self):
        """Test en grafos esféricos coincide con la familia esférica."""
        for label, rank in [('A', 3), ('D', 4)]:
            g = named_graph(label, rank)
            family, report = paris_family(g, PARAMS, F)
            self.assertTrue(report['independent'])
            self.assertEqual(family, spherical_family(g, PARAMS, F))

    def test_triangle_free_independence(self):
        """Test Ã_3 sin triángulos: no depende de j_α."""
        family, report = paris_family(named_graph('Atilde', 3), PARAMS, F, depth_bound=6)
        self.assertTrue(report['independent'])
        self.assertTrue(report['table1_passed'])
        self.assertGreater(report['checked'], 0)

    def test_triangle_independence(self):
        """Test Ã_2 (el triángulo) también es independiente."""
        _family, report = paris_family(named_graph('Atilde', 2), PARAMS, F, depth_bound=6)
        self.assertTrue(report['independent'])

    def test_paris_is_affine_with_paris_seed(self):
        """Test sobre Ã_2 la familia de Paris es la familia afín de semilla μ(Paris)."""
        g = named_graph('Atilde', 2)
        paris, _report = paris_family(g, PARAMS, F, depth_bound=5)
        seed = paris_seed(g, PARAMS, F, p_max=4)
        affine = affine_family(seed, PARAMS, 5)
        expected = values_of(paris)
        found = {key: value for key, value in values_of(affine).items() if key[1] in paris.table}
        self.assertEqual(found, expected)

    def test_paris_seed_formula(self):
        """Test 𝔣_1 = (ad²f/c)(b/d)^{−1} y 𝔣_2 = −(af/c)(b/d) en Ã_2."""
        a, b, c, d = PARAMS.a, PARAMS.b, PARAMS.c, PARAMS.d
        seed = paris_seed(named_graph('Atilde', 2), PARAMS, F, p_max=1)
        ratio = b * d.unit_inverse()
        self.assertEqual(seed[0], F)
        self.assertEqual(seed[1], a * d * d * F * c.unit_inverse() * ratio ** -1)
        self.assertEqual(seed[2], -a * F * c.unit_inverse() * ratio)


class AffineFamilyTestCase(SimpleTestCase):
    """Tests para la construcción afín y μ."""

    def setUp(self):
        self.atilde2 = named_graph('Atilde', 2)
        self.family = affine_family(AffineSeed(self.atilde2, SEED), PARAMS, 3)

    def test_basis_values(self):
        """Test semilla (f, 0, 0, …)."""
        seed = AffineSeed(self.atilde2, [F] + [ZERO] * 7)
        family = affine_family(seed, PARAMS, 3)
        for i in range(3):
            self.assertEqual(family.value(i, family.table.simple[i]), F)
        self.assertEqual(family.value_at(0, (2, 1, 1)), ZERO)

    def test_pdelta_minus_step(self):
        """Test f_{i,pδ−α_i} a partir del fondo del hexágono."""
        a, b, c, d = PARAMS.a, PARAMS.b, PARAMS.c, PARAMS.d
        f = self.family.value_at
        gamma = (1, 1, 0)
        expected = (
            b * d.unit_inverse() * f(2, gamma)
            + d * c.unit_inverse() * f(0, gamma)
            + SEED[3] * (c * d).unit_inverse()
        )
        self.assertEqual(f(2, (2, 2, 1)), expected)

    def test_zero_seed(self):
        """Test semilla nula: familia nula."""
        family = affine_family(AffineSeed(self.atilde2, [ZERO] * 8), PARAMS, 3)
        self.assertTrue(family.is_zero())

    def test_round_trips(self):
        """Test μ ∘ construcción = id y construcción ∘ μ = id."""
        sequence = mu_affine(self.family)
        self.assertEqual(len(sequence), required_seed_length(self.family.table))
        self.assertEqual(sequence, list(SEED[:len(sequence)]))
        rebuilt = affine_family(AffineSeed(self.atilde2, sequence), PARAMS, 3)
        self.assertEqual(rebuilt, self.family)

    def test_relations_hold(self):
        """Test las familias afines pasan todas las relaciones."""
        self.assertTrue(check_table1(self.family)['passed'])
        for label, rank, depth in [('Atilde', 3, 4), ('Dtilde', 4, 3)]:
            family = affine_family(AffineSeed(named_graph(label, rank), SEED), PARAMS, depth)
            self.assertTrue(check_table1(family)['passed'])

    def test_braid_relations_on_safe_columns(self):
        """Test relaciones de trenzas exactas en la región segura."""
        rep = LKRepresentation(self.family.table, self.family)
        left, right = rep.word([0, 1, 0]), rep.word([1, 0, 1])
        self.assertEqual(left.safe_depth, 2)
        self.assertTrue(left.equal_on_safe(right))
        self.assertTrue(rep.word([1, 2, 1]).equal_on_safe(rep.word([2, 1, 2])))

    def test_closed_form_oracle(self):
        """Test la construcción coincide con la fórmula cerrada de Ã_2 y Ã_3."""
        for rank, depth in [(2, 4), (3, 4)]:
            g = named_graph('Atilde', rank)
            family = affine_family(AffineSeed(g, SEED), PARAMS, depth)
            for idx in family.table:
                alpha = family.table.root(idx)
                for i in g.vertices:
                    self.assertEqual(
                        family.value(i, idx),
                        antilde_closed_form(g, i, alpha, SEED, PARAMS),
                        msg=f'i={i}, α={alpha}',
                    )

    def test_closed_form_cases(self):
        """Test casos de la fórmula cerrada."""
        g = named_graph('Atilde', 3)
        self.assertEqual(antilde_closed_form(g, 1, (1, 2, 1, 1), SEED, PARAMS), SEED[2])
        self.assertEqual(antilde_closed_form(g, 3, (0, 1, 0, 0), SEED, PARAMS), ZERO)
        with self.assertRaises(NotAtilde):
            antilde_closed_form(named_graph('Dtilde', 4), 0, (1, 0, 0, 0, 0), SEED, PARAMS)

    def test_errors(self):
        """Test semilla corta, profundidad pequeña y grafo no afín."""
        with self.assertRaises(SeedTooShort):
            affine_family(AffineSeed(self.atilde2, [F, X]), PARAMS, 3)
        with self.assertRaises(DepthBoundTooSmall):
            affine_family(AffineSeed(self.atilde2, SEED), PARAMS, 1)
        with self.assertRaises(NotAffine):
            AffineSeed(named_graph('A', 3), SEED)

    def test_group_family(self):
        """Test 𝔣_0 unidad con el resto arbitrario."""
        seed = AffineSeed(self.atilde2, [X * Y] + SEED[1:])
        self.assertTrue(is_group_family(affine_family(seed, PARAMS, 3)))
