"""
Tests para raíces, profundidades, mallas y la parte afín.
"""
from django.test import SimpleTestCase

from core.exceptions import BoundaryTruncated, NotAffine, NotAtilde
from coxeter.graphs import named_graph

from .affine import (
    affine_decompose, affine_node, antilde_domain, delta, delta_multiple, pdelta_shift, recompose,
)
from .meshes import mesh, mesh_census, meshes_of_pair
from .roots import (
    NEGATIVE,
    depth_by_definition,
    enumerate_roots,
    gram_matrix,
    pairing,
    reflect,
    root_str,
)


def _sign(value):
    return (value > 0) - (value < 0)


class PairingTestCase(SimpleTestCase):
    """Tests para pairing y reflect."""

    def setUp(self):
        self.a2 = named_graph('A', 2)
        self.a3 = named_graph('A', 3)

    def test_simple_pairings(self):
        """Test 2, 0 y −1 sobre raíces simples."""
        self.assertEqual(pairing(self.a3, (1, 0, 0), (1, 0, 0)), 2)
        self.assertEqual(pairing(self.a3, (1, 0, 0), (0, 0, 1)), 0)
        self.assertEqual(pairing(self.a3, (1, 0, 0), (0, 1, 0)), -1)

    def test_gram_matrix(self):
        """Test matriz de Gram de A_3."""
        self.assertEqual(gram_matrix(self.a3).tolist(), [[2, -1, 0], [-1, 2, -1], [0, -1, 2]])

    def test_reflect(self):
        """Test s_0(α_1) = α_0+α_1, s_i(α_i) = −α_i e involución."""
        self.assertEqual(reflect(self.a2, 0, (0, 1)), (1, 1))
        self.assertEqual(reflect(self.a2, 0, (1, 0)), (-1, 0))
        self.assertEqual(reflect(self.a2, 0, (1, 1)), (0, 1))


class EnumerateRootsTestCase(SimpleTestCase):
    """Tests para enumerate_roots."""

    def test_a2(self):
        """Test A_2: 3 raíces de profundidades 1, 1, 2."""
        table = enumerate_roots(named_graph('A', 2))
        self.assertEqual(table.roots, [(1, 0), (0, 1), (1, 1)])
        self.assertEqual(table.depths, [1, 1, 2])
        self.assertTrue(table.complete)
        self.assertEqual(table.simple, [0, 1])

    def test_spherical_counts(self):
        """Test |Φ⁺(A_n)| = n(n+1)/2, D_4 = 12, E_6 = 36, E_8 = 120."""
        for n in range(1, 7):
            self.assertEqual(len(enumerate_roots(named_graph('A', n))), n * (n + 1) // 2)
        self.assertEqual(len(enumerate_roots(named_graph('D', 4))), 12)
        self.assertEqual(len(enumerate_roots(named_graph('E', 6))), 36)
        self.assertEqual(len(enumerate_roots(named_graph('E', 8))), 120)

    def test_spherical_ignores_bound(self):
        """Test la cota se ignora en grafos esféricos."""
        table = enumerate_roots(named_graph('A', 3), depth_bound=1)
        self.assertEqual(len(table), 6)
        self.assertIsNone(table.depth_bound)

    def test_atilde2_levels(self):
        """Test Ã_2: δ−α_0 = α_1+α_2 tiene profundidad 2 y δ+α_0 profundidad 3."""
        table = enumerate_roots(named_graph('Atilde', 2), depth_bound=4)
        self.assertEqual(len(table), 12)
        self.assertEqual(table.depth(table.index_of((0, 1, 1))), 2)
        self.assertEqual(table.depth(table.index_of((2, 1, 1))), 3)
        self.assertEqual(table.depth(table.index_of((2, 2, 1))), 4)
        self.assertNotIn((1, 1, 1), table)

    def test_lemma_depth_change(self):
        """Test dep(s_i α) − dep(α) = −signo((α|α_i)) sobre toda la tabla."""
        for g, bound in [(named_graph('D', 4), None), (named_graph('Atilde', 3), 8),
                         (named_graph('Dtilde', 4), 6)]:
            table = enumerate_roots(g, depth_bound=bound)
            for idx in table:
                for i in g.vertices:
                    image = table.reflect_index(i, idx)
                    if image < 0:
                        continue
                    self.assertEqual(
                        table.depth(image) - table.depth(idx),
                        -_sign(table.pair(idx, i)),
                    )
                    self.assertEqual(table.reflect_index(i, image), idx)

    def test_reflect_map_markers(self):
        """Test α_i se marca negativa y la frontera se marca fuera de tabla."""
        table = enumerate_roots(named_graph('Atilde', 2), depth_bound=2)
        self.assertEqual(table.reflect_index(0, table.simple[0]), NEGATIVE)
        top = table.index_of((0, 1, 1))
        self.assertLess(table.reflect_index(0, top), 0)
        self.assertFalse(table.is_safe(top))

    def test_depth_by_definition(self):
        """Test la profundidad por niveles coincide con la definición en A_2 y A_3."""
        for g in [named_graph('A', 2), named_graph('A', 3)]:
            table = enumerate_roots(g)
            for idx in table:
                self.assertEqual(depth_by_definition(g, table.root(idx)), table.depth(idx))

    def test_export(self):
        """Test exportación ordenada por índice."""
        rows = enumerate_roots(named_graph('A', 2)).export()['roots']
        self.assertEqual([row['root'] for row in rows], ['1,0', '0,1', '1,1'])
        self.assertEqual(root_str((1, 0, 1)), '1,0,1')


class MeshTestCase(SimpleTestCase):
    """Tests para mesh y su clasificación."""

    def test_type5(self):
        """Test (A_2, α_0, {0,1}) → tipo 5."""
        table = enumerate_roots(named_graph('A', 2))
        current = mesh(table, 0, (0, 1))
        self.assertEqual(current.mesh_type, 5)
        self.assertEqual(set(current.members), {0, 1, 2})
        self.assertEqual(current.layout['sum'], 2)

    def test_m2_types(self):
        """Test tipos 1, 3 y 4 para m = 2."""
        a3 = enumerate_roots(named_graph('A', 3))
        self.assertEqual(mesh(a3, a3.simple[0], (0, 2)).mesh_type, 1)
        self.assertEqual(mesh(a3, a3.simple[1], (0, 2)).mesh_type, 4)
        a4 = enumerate_roots(named_graph('A', 4))
        pair_mesh = mesh(a4, a4.simple[3], (0, 2))
        self.assertEqual(pair_mesh.mesh_type, 3)
        self.assertEqual(pair_mesh.layout['k'], 2)
        self.assertEqual(a4.root(pair_mesh.layout['upper']), (0, 0, 1, 1))

    def test_type2(self):
        """Test raíz fija por los dos generadores de un par con m = 2."""
        d4 = enumerate_roots(named_graph('D', 4))
        current = mesh(d4, d4.simple[3], (0, 2))
        self.assertEqual(current.mesh_type, 2)
        self.assertEqual(current.members, (3,))

    def test_m3_types(self):
        """Test tipos 6 y 7."""
        a3 = enumerate_roots(named_graph('A', 3))
        chain = mesh(a3, a3.simple[2], (0, 1))
        self.assertEqual(chain.mesh_type, 7)
        self.assertEqual(chain.layout['k'], 1)
        self.assertEqual(a3.root(chain.layout['top']), (1, 1, 1))
        a4 = enumerate_roots(named_graph('A', 4))
        self.assertEqual(mesh(a4, a4.simple[3], (0, 1)).mesh_type, 6)

    def test_affine_hexagon(self):
        """Test Ã_2: δ−α_0−α_1 da un hexágono con pδ±α_i, pδ±α_j."""
        table = enumerate_roots(named_graph('Atilde', 2), depth_bound=4)
        current = mesh(table, table.index_of((0, 0, 1)), (0, 1))
        self.assertEqual(current.mesh_type, 8)
        roots = {name: table.root(idx) for name, idx in current.layout.items()}
        self.assertEqual(roots, {
            'delta': (0, 0, 1),
            'gamma': (1, 0, 1),
            'gamma_p': (0, 1, 1),
            'beta': (1, 2, 1),
            'beta_p': (2, 1, 1),
            'alpha': (2, 2, 1),
        })

    def test_truncated(self):
        """Test malla que sale de la tabla."""
        table = enumerate_roots(named_graph('Atilde', 2), depth_bound=3)
        with self.assertRaises(BoundaryTruncated):
            mesh(table, table.index_of((0, 0, 1)), (0, 1))

    def test_census(self):
        """Test censo de A_3 y ausencia de hexágonos en tablas esféricas."""
        census = mesh_census(enumerate_roots(named_graph('A', 3)))
        self.assertEqual(census, {1: 2, 2: 0, 3: 0, 4: 1, 5: 2, 6: 0, 7: 2, 8: 0})
        self.assertEqual(mesh_census(enumerate_roots(named_graph('E', 6)))[8], 0)

    def test_affine_hexagons_are_pdelta(self):
        """Test en Ã_3 los hexágonos tienen fondo pδ−α_i−α_j."""
        g = named_graph('Atilde', 3)
        table = enumerate_roots(g, depth_bound=10)
        imaginary = delta(g)
        found = 0
        for i, j in g.edges():
            for current in meshes_of_pair(table, (i, j)):
                if current.mesh_type != 8:
                    continue
                found += 1
                bottom = table.root(current.layout['delta'])
                shifted = tuple(
                    value + (1 if k in (i, j) else 0) for k, value in enumerate(bottom)
                )
                p = shifted[0]
                self.assertGreaterEqual(p, 1)
                self.assertEqual(shifted, tuple(p * weight for weight in imaginary))
                gamma = table.root(current.layout['gamma'])
                self.assertEqual(pdelta_shift(imaginary, gamma), (p, j, -1))
        self.assertGreater(found, 0)


class AffineTestCase(SimpleTestCase):
    """Tests para delta, affine_decompose y antilde_domain."""

    def test_delta(self):
        """Test δ de Ã_2, Ã_4, D̃_4 y Ẽ_6."""
        self.assertEqual(delta(named_graph('Atilde', 2)), (1, 1, 1))
        self.assertEqual(delta(named_graph('Atilde', 4)), (1, 1, 1, 1, 1))
        self.assertEqual(delta(named_graph('Dtilde', 4)), (1, 1, 2, 1, 1))
        self.assertEqual(delta(named_graph('Etilde', 6)), (1, 1, 2, 2, 3, 2, 1))
        self.assertEqual(delta(named_graph('Etilde', 8)), (1, 2, 3, 4, 6, 5, 4, 3, 2))

    def test_delta_in_radical(self):
        """Test (δ|α_i) = 0."""
        for label, rank in [('Atilde', 3), ('Dtilde', 5), ('Etilde', 7)]:
            g = named_graph(label, rank)
            imaginary = delta(g)
            for i in g.vertices:
                self.assertEqual(pairing(g, imaginary, tuple(int(k == i) for k in g.vertices)), 0)

    def test_affine_node(self):
        """Test vértice añadido y múltiplos de δ."""
        self.assertEqual(affine_node(named_graph('Etilde', 8)), 0)
        imaginary = delta(named_graph('Dtilde', 4))
        self.assertEqual(delta_multiple(imaginary, (3, 3, 6, 3, 3)), 3)
        self.assertIsNone(delta_multiple(imaginary, (1, 1, 1, 1, 1)))
        self.assertIsNone(delta_multiple(imaginary, (2, 2, 4, 2, 3)))

    def test_not_affine(self):
        """Test A_3 es esférico."""
        with self.assertRaises(NotAffine):
            delta(named_graph('A', 3))

    def test_decompose(self):
        """Test α_1, δ−α_1 y δ+α_0 en Ã_2."""
        g = named_graph('Atilde', 2)
        self.assertEqual(affine_decompose(g, (0, 1, 0)), (0, (0, 1, 0)))
        self.assertEqual(affine_decompose(g, (1, 0, 1)), (1, (0, -1, 0)))
        self.assertEqual(affine_decompose(g, (2, 1, 1)), (2, (0, -1, -1)))

    def test_decompose_roundtrip(self):
        """Test (p, β) ↦ pδ+β invierte la descomposición."""
        g = named_graph('Dtilde', 4)
        table = enumerate_roots(g, depth_bound=7)
        for idx in table:
            p, beta = affine_decompose(g, table.root(idx))
            self.assertEqual(beta[0], 0)
            self.assertEqual(recompose(g, p, beta), table.root(idx))

    def test_antilde_domain(self):
        """Test dominios, interiores y bordes."""
        a2 = named_graph('Atilde', 2)
        first = antilde_domain(a2, (0, 1, 0))
        self.assertEqual((first.p, first.domain, first.interior, first.boundary),
                         (0, {1}, set(), {1}))
        second = antilde_domain(a2, (0, 1, 1))
        self.assertEqual((second.domain, second.interior, second.boundary),
                         ({1, 2}, set(), {1, 2}))
        third = antilde_domain(named_graph('Atilde', 3), (2, 2, 2, 1))
        self.assertEqual((third.p, third.domain, third.interior, third.boundary),
                         (1, {0, 1, 2}, {1}, {0, 2}))
        self.assertEqual(third.length, 2)
        with self.assertRaises(NotAtilde):
            antilde_domain(named_graph('Dtilde', 4), (1, 0, 0, 0, 0))
