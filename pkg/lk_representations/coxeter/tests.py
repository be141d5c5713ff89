"""
Tests para grafos de Coxeter, el oráculo de reescritura y los elementos de Garside.
"""
from itertools import chain, combinations

from django.test import SimpleTestCase
from hypothesis import given, settings
from hypothesis import strategies as st

from core.exceptions import (
    BadDiagonal,
    BadRank,
    BadWord,
    CapExceeded,
    NonSmallType,
    NotSpherical,
    NotSymmetric,
    UnknownLabel,
)

from .graphs import (
    build_graph,
    connected_components,
    graph_from_spec,
    has_triangle,
    is_affine,
    is_atilde,
    is_spherical,
    named_graph,
    triangles,
)
from .weyl import fixed_coxeter_matrix, garside_word, is_spherical_by_enumeration, weyl_group_order
from .words import (
    class_counts,
    enumerate_classes,
    format_word,
    initial_set,
    left_divides,
    parse_word,
    word_class,
)


def _subsets(vertices):
    return chain.from_iterable(combinations(vertices, size) for size in range(len(vertices) + 1))


class CoxeterGraphTestCase(SimpleTestCase):
    """Tests para build_graph y named_graph."""

    def test_build_a2(self):
        """Test matriz [[1,3],[3,1]]."""
        g = build_graph([[1, 3], [3, 1]])
        self.assertEqual(g.n, 2)
        self.assertEqual(g.edges(), [(0, 1)])
        self.assertEqual(g.gram.tolist(), [[2, -1], [-1, 2]])

    def test_build_triangle(self):
        """Test triángulo: Ã_2."""
        g = build_graph([[1, 3, 3], [3, 1, 3], [3, 3, 1]])
        self.assertTrue(is_atilde(g))
        self.assertTrue(is_affine(g))
        self.assertEqual(g.m, named_graph('Atilde', 2).m)

    def test_rejects_invalid_matrices(self):
        """Test errores de validación."""
        with self.assertRaises(NonSmallType):
            build_graph([[1, 4], [4, 1]])
        with self.assertRaises(NotSymmetric):
            build_graph([[1, 3, 2], [2, 1, 2], [2, 2, 1]])
        with self.assertRaises(BadDiagonal):
            build_graph([[2, 3], [3, 1]])
        with self.assertRaises(BadDiagonal):
            build_graph([[1, 1], [1, 1]])

    def test_named_a5(self):
        """Test A_5: 5 vértices, 4 aristas."""
        g = named_graph('A', 5)
        self.assertEqual(g.n, 5)
        self.assertEqual(len(g.edges()), 4)
        self.assertEqual(g.label, 'A5')

    def test_named_d4_center(self):
        """Test D_4: el centro (vértice 2 de Bourbaki) es el índice 1."""
        g = named_graph('D', 4)
        self.assertEqual(g.neighbors(1), [0, 2, 3])

    def test_named_d5(self):
        """Test D_5: cadena 0-1-2 con 3 y 4 colgando de 2."""
        g = named_graph('D', 5)
        self.assertEqual(g.edges(), [(0, 1), (1, 2), (2, 3), (2, 4)])

    def test_named_e6(self):
        """Test E_6: el índice 1 cuelga del índice 3."""
        g = named_graph('E6')
        self.assertEqual(g.neighbors(3), [1, 2, 4])
        self.assertEqual(g.neighbors(1), [3])
        self.assertTrue(is_spherical(g))

    def test_named_affine(self):
        """Test grafos afines con nombre."""
        self.assertEqual(named_graph('Atilde', 2).edges(), [(0, 1), (0, 2), (1, 2)])
        for label, rank, size in [('Dtilde', 4, 5), ('Dtilde', 6, 7), ('Etilde', 6, 7),
                                  ('Etilde', 7, 8), ('Etilde', 8, 9)]:
            g = named_graph(label, rank)
            self.assertEqual(g.n, size)
            self.assertTrue(is_affine(g), g)
            self.assertFalse(is_spherical(g))

    def test_named_errors(self):
        """Test etiquetas y rangos inválidos."""
        with self.assertRaises(UnknownLabel):
            named_graph('F', 4)
        with self.assertRaises(BadRank):
            named_graph('D', 3)
        with self.assertRaises(BadRank):
            named_graph('Atilde', 1)
        with self.assertRaises(BadRank):
            named_graph('E', 9)

    def test_graph_from_spec(self):
        """Test entrada JSON con matriz o con tipo."""
        self.assertEqual(graph_from_spec({'type': 'A', 'rank': 3}).n, 3)
        self.assertEqual(graph_from_spec({'n': 2, 'm': [[1, 2], [2, 1]]}).edges(), [])

    def test_components_and_triangles(self):
        """Test componentes conexas y triángulos."""
        g = build_graph([[1, 3, 2], [3, 1, 2], [2, 2, 1]])
        self.assertEqual(connected_components(g), [(0, 1), (2,)])
        self.assertEqual(triangles(named_graph('Atilde', 2)), [(0, 1, 2)])
        self.assertFalse(has_triangle(named_graph('Atilde', 3)))


class SphericityTestCase(SimpleTestCase):
    """Tests para is_spherical."""

    def test_examples(self):
        """Test Ã_2 completo, par de Ã_2 y conjunto vacío."""
        g = named_graph('Atilde', 2)
        self.assertFalse(is_spherical(g, [0, 1, 2]))
        self.assertTrue(is_spherical(g, [0, 1]))
        self.assertTrue(is_spherical(g, []))

    def test_weyl_orders(self):
        """Test órdenes de W conocidos."""
        self.assertEqual(weyl_group_order(named_graph('A', 2)), 6)
        self.assertEqual(weyl_group_order(named_graph('A', 3)), 24)
        self.assertEqual(weyl_group_order(named_graph('D', 4)), 192)

    def test_agrees_with_enumeration(self):
        """Test forma ADE frente a enumeración de W_J (límite 10000)."""
        graphs = [
            named_graph('A', 5),
            named_graph('D', 5),
            named_graph('Atilde', 3),
            named_graph('Atilde', 4),
            named_graph('Dtilde', 4),
        ]
        for g in graphs:
            for subset in _subsets(list(g.vertices)):
                self.assertEqual(
                    is_spherical(g, subset),
                    is_spherical_by_enumeration(g, subset, cap=10000),
                    (str(g), subset),
                )


class WordClassTestCase(SimpleTestCase):
    """Tests para el oráculo de reescritura."""

    def setUp(self):
        self.a2 = named_graph('A', 2)
        self.a3 = named_graph('A', 3)

    def test_braid_class(self):
        """Test (A_2, 010) → {010, 101}."""
        element = word_class(self.a2, (0, 1, 0))
        self.assertEqual(element.members, {(0, 1, 0), (1, 0, 1)})
        self.assertEqual(element.representative, (0, 1, 0))

    def test_single_letter(self):
        """Test (A_2, 0) → {0}."""
        self.assertEqual(word_class(self.a2, (0,)).members, {(0,)})

    def test_commutation(self):
        """Test (A_3, 02) → {02, 20}."""
        self.assertEqual(word_class(self.a3, (0, 2)).members, {(0, 2), (2, 0)})

    def test_cap(self):
        """Test límite de miembros."""
        with self.assertRaises(CapExceeded):
            word_class(self.a3, (0, 1, 0, 2, 1, 0), cap=3)

    def test_initial_set(self):
        """Test I(b) sobre A_2."""
        self.assertEqual(initial_set(self.a2, (0, 1, 0)), {0, 1})
        self.assertEqual(initial_set(self.a2, (0,)), {0})
        self.assertEqual(initial_set(self.a2, ()), set())

    def test_left_divides(self):
        """Test divisibilidad a izquierda."""
        self.assertTrue(left_divides(self.a2, (1,), (0, 1, 0)))
        self.assertFalse(left_divides(self.a2, (1,), (0, 1)))
        self.assertTrue(left_divides(self.a3, (2,), (0, 2)))

    def test_parse_and_format(self):
        """Test formato textual de palabras."""
        self.assertEqual(parse_word('010', 2), (0, 1, 0))
        self.assertEqual(parse_word('0.1.0', 2), (0, 1, 0))
        self.assertEqual(parse_word('', 2), ())
        self.assertEqual(format_word((0, 10, 2)), '0.10.2')
        with self.assertRaises(BadWord):
            parse_word('0a', 2)
        with self.assertRaises(BadWord):
            parse_word('3', 2)

    def test_homogeneity(self):
        """Test todas las palabras de una clase tienen la misma longitud."""
        for element in enumerate_classes(self.a3, 4):
            self.assertEqual({len(member) for member in element.members}, {element.length})

    @settings(max_examples=50, deadline=None)
    @given(st.lists(st.integers(min_value=0, max_value=2), max_size=6), st.integers(0, 6))
    def test_prefix_monotonicity(self, letters, cut):
        """Test I(b′) ⊆ I(b′c) cuando b′ es prefijo."""
        word = tuple(letters)
        prefix = word[:cut]
        self.assertTrue(left_divides(self.a3, prefix, word))
        self.assertLessEqual(initial_set(self.a3, prefix), initial_set(self.a3, word))


class EnumerationTestCase(SimpleTestCase):
    """Tests para enumerate_classes."""

    def setUp(self):
        self.a2 = named_graph('A', 2)

    def test_identity_only(self):
        """Test L = 0 → 1 clase."""
        self.assertEqual(len(enumerate_classes(self.a2, 0)), 1)

    def test_length_one(self):
        """Test L = 1 → 3 clases con la identidad."""
        classes = enumerate_classes(self.a2, 1)
        self.assertEqual([element.representative for element in classes], [(), (0,), (1,)])

    def test_braid_merges(self):
        """Test L = 3: 010 y 101 en una sola clase."""
        classes = enumerate_classes(self.a2, 3)
        self.assertEqual(class_counts(classes), {0: 1, 1: 2, 2: 4, 3: 7})
        merged = [element for element in classes if (1, 0, 1) in element]
        self.assertEqual(len(merged), 1)
        self.assertEqual(merged[0].representative, (0, 1, 0))

    def test_total_cap(self):
        """Test límite en el número total de clases."""
        with self.assertRaises(CapExceeded):
            enumerate_classes(self.a2, 4, cap=5)


class GarsideTestCase(SimpleTestCase):
    """Tests para garside_word y la matriz del submonoide fijo."""

    def test_singleton(self):
        """Test Δ_{i} = i."""
        self.assertEqual(garside_word(named_graph('A', 3), [1]), (1,))

    def test_pairs(self):
        """Test Δ_{i,j} = ij (m=2) e iji (m=3)."""
        g = named_graph('A', 3)
        self.assertEqual(garside_word(g, [0, 2]), (0, 2))
        self.assertEqual(garside_word(g, [1, 2]), (1, 2, 1))
        self.assertEqual(word_class(g, (1, 2, 1)).members, {(1, 2, 1), (2, 1, 2)})

    def test_lengths(self):
        """Test ℓ(Δ_J) = |Φ⁺_J|."""
        self.assertEqual(len(garside_word(named_graph('A', 2), [0, 1])), 3)
        self.assertEqual(len(garside_word(named_graph('D', 4), [0, 1, 2, 3])), 12)

    def test_not_spherical(self):
        """Test Ã_2 completo."""
        with self.assertRaises(NotSpherical):
            garside_word(named_graph('Atilde', 2), [0, 1, 2])

    def test_fixed_matrix_b3_in_a5(self):
        """Test A_5 con la simetría: B_3 con m = 4 en (1, 2)."""
        g = named_graph('A', 5)
        matrix = fixed_coxeter_matrix(g, [(0, 4), (1, 3), (2,)], verify=True)
        self.assertEqual(matrix, [[1, 3, 2], [3, 1, 4], [2, 4, 1]])

    def test_fixed_matrix_infinite(self):
        """Test órbitas con unión no esférica → 0."""
        g = named_graph('Atilde', 3)
        self.assertEqual(fixed_coxeter_matrix(g, [(0, 2), (1, 3)]), [[1, 0], [0, 1]])
