"""
Tests para el anillo de Laurent, los parámetros y la positividad.
"""

from django.core.exceptions import ValidationError
from django.test import SimpleTestCase
from hypothesis import given, settings
from hypothesis import strategies as st

from core.exceptions import NegativeXExponent, NotAUnit, ZeroA

from .params import LKParams, make_params, positivity_report, sign_at
from .ring import ONE, X, Y, ZERO, LaurentFraction, LaurentPoly, div_by_unit, eval_x0, ring_divide

exponents = st.integers(min_value=-3, max_value=3)
polys = st.dictionaries(
    keys=st.tuples(exponents, exponents),
    values=st.integers(min_value=-5, max_value=5),
    max_size=4,
).map(LaurentPoly)
x_free_or_positive = st.dictionaries(
    keys=st.tuples(st.integers(min_value=0, max_value=3), exponents),
    values=st.integers(min_value=-5, max_value=5),
    max_size=4,
).map(LaurentPoly)


class LaurentPolyTestCase(SimpleTestCase):
    """Tests para la aritmética exacta."""

    def test_unit_times_inverse(self):
        """Test x·x^{-1} = 1."""
        self.assertEqual(X * X ** -1, ONE)

    def test_difference_annihilates(self):
        """Test (y − y)·p = 0."""
        p = LaurentPoly.parse('3*x^-1*y^2 + 1')
        self.assertEqual((Y - Y) * p, ZERO)
        self.assertFalse((Y - Y) * p)

    def test_exponent_addition(self):
        """Test y^r · y^{p+q−2r} = y^{p+q−r}."""
        p, q, r = 2, 1, -1
        left = LaurentPoly.monomial(1, 0, r) * LaurentPoly.monomial(1, 0, p + q - 2 * r)
        self.assertEqual(left, LaurentPoly.monomial(1, 0, p + q - r))

    def test_no_zero_coefficients_stored(self):
        """Test los coeficientes nulos se descartan."""
        poly = LaurentPoly({(1, 0): 0, (0, 1): 2})
        self.assertEqual(poly.terms, {(0, 1): 2})

    def test_text_form(self):
        """Test forma textual canónica."""
        poly = LaurentPoly({(-1, 2): 3, (0, 0): 1})
        self.assertEqual(str(poly), '3*x^-1*y^2 + 1')
        self.assertEqual(str(ONE - Y), '1 - y')
        self.assertEqual(str(ZERO), '0')
        self.assertEqual(LaurentPoly.parse(str(poly)), poly)

    def test_parse_rejects_non_integer_and_foreign_symbols(self):
        """Test lectura inválida."""
        for text in ['x/2', 'z + 1', 'x**y', 'x +* 2']:
            with self.assertRaises(ValidationError):
                LaurentPoly.parse(text)

    def test_json_triples(self):
        """Test lista de ternas [exp_x, exp_y, coef]."""
        poly = LaurentPoly.parse('x*y^2 - 4')
        self.assertEqual(poly.to_triples(), [[0, 0, -4], [1, 2, 1]])
        self.assertEqual(LaurentPoly.from_triples(poly.to_triples()), poly)

    def test_div_by_unit(self):
        """Test cocientes exactos por unidades."""
        self.assertEqual(div_by_unit(Y ** 3, Y), Y ** 2)
        self.assertEqual(div_by_unit(X * Y ** 2 + Y, Y), X * Y + 1)
        self.assertEqual(div_by_unit(ONE, X ** 2), LaurentPoly.monomial(1, -2, 0))

    def test_div_by_non_unit(self):
        """Test división por un no-unidad."""
        with self.assertRaises(NotAUnit):
            div_by_unit(Y, 1 + Y)
        with self.assertRaises(NotAUnit):
            div_by_unit(Y, 2 * Y)

    def test_eval_x0(self):
        """Test evaluación en x = 0."""
        self.assertEqual(eval_x0(X * Y ** 2), ZERO)
        self.assertEqual(eval_x0(Y + X), Y)
        with self.assertRaises(NegativeXExponent):
            eval_x0(X ** -1)

    @given(polys, polys, polys)
    def test_ring_axioms(self, p, q, r):
        """Test asociatividad, conmutatividad y distributividad."""
        self.assertEqual((p + q) + r, p + (q + r))
        self.assertEqual((p * q) * r, p * (q * r))
        self.assertEqual(p * q, q * p)
        self.assertEqual(p * (q + r), p * q + p * r)
        self.assertEqual(p + ZERO, p)
        self.assertEqual(p * ONE, p)
        self.assertEqual(p - p, ZERO)

    @given(x_free_or_positive, x_free_or_positive)
    def test_eval_x0_is_ring_homomorphism(self, p, q):
        """Test eval(pq) = eval(p)eval(q) y eval(p+q) = eval(p)+eval(q)."""
        self.assertEqual(eval_x0(p * q), eval_x0(p) * eval_x0(q))
        self.assertEqual(eval_x0(p + q), eval_x0(p) + eval_x0(q))

    @given(polys)
    def test_hash_matches_equality(self, p):
        """Test igualdad canónica y hash."""
        copy = LaurentPoly(p.terms)
        self.assertEqual(copy, p)
        self.assertEqual(hash(copy), hash(p))


class LaurentFractionTestCase(SimpleTestCase):
    """Tests para la localización."""

    def test_cross_multiplied_equality(self):
        """Test (y+1)/(x+1) = (xy+y+x+1)/(x+1)^2."""
        left = LaurentFraction(Y + 1, X + 1)
        right = LaurentFraction((Y + 1) * (X + 1), (X + 1) * (X + 1))
        self.assertEqual(left, right)

    def test_unit_denominator_normalizes(self):
        """Test denominador unidad se absorbe."""
        value = LaurentFraction(X + Y, Y)
        self.assertTrue(value.is_polynomial())
        self.assertEqual(value, X * Y ** -1 + 1)

    def test_mixed_arithmetic(self):
        """Test operaciones con polinomios."""
        half = ring_divide(ONE, 1 + X)
        self.assertIsInstance(half, LaurentFraction)
        self.assertEqual(half * (1 + X), ONE)
        self.assertEqual((1 + X) * half - 1, ZERO)


class LKParamsTestCase(SimpleTestCase):
    """Tests para make_params y la identidad de a."""

    def test_paris_choice(self):
        """Test (p,q,r) = (1,0,0)."""
        params = make_params(1, 0, 0, X * Y ** 2)
        self.assertEqual(params.b, Y)
        self.assertEqual(params.c, ONE)
        self.assertEqual(params.d, ONE)
        self.assertEqual(params.a, 1 - Y)

    def test_digne_choice(self):
        """Test (p,q,r) = (0,1,0)."""
        params = make_params(0, 1, 0, X * Y ** 2)
        self.assertEqual(params.b, ONE)
        self.assertEqual(params.c, Y)
        self.assertEqual(params.a, 1 - Y)

    def test_cohen_wales_choice(self):
        """Test (p,q,r) = (1,1,0)."""
        self.assertEqual(make_params(1, 1, 0).a, 1 - Y ** 2)

    @given(exponents, exponents, exponents)
    def test_defining_identity(self, p, q, r):
        """Test d·a + b·c = d²."""
        params = make_params(p, q, r)
        self.assertEqual(params.d * params.a + params.b * params.c, params.d * params.d)

    def test_from_units(self):
        """Test unidades arbitrarias con x."""
        params = LKParams.from_units(-X * Y, Y ** 2, X)
        self.assertEqual(params.d * params.a, params.d ** 2 - params.b * params.c)

    def test_rejects_inconsistent_a(self):
        """Test a incoherente."""
        with self.assertRaises(ValidationError):
            LKParams(b=Y, c=ONE, d=ONE, a=ONE)
        with self.assertRaises(ValidationError):
            LKParams(b=1 + Y, c=ONE, d=ONE, a=-Y)


class PositivityTestCase(SimpleTestCase):
    """Tests para positivity_report."""

    def test_paris_regime(self):
        """Test (1,0,0) con 0<y<1: todo positivo."""
        report = positivity_report(make_params(1, 0, 0), '0<y<1')
        self.assertTrue(report['passed'])

    def test_zero_a(self):
        """Test (0,0,0) da a = 0."""
        with self.assertRaises(ZeroA):
            positivity_report(make_params(0, 0, 0), '0<y<1')

    def test_negative_a(self):
        """Test (1,0,1): a = y − 1 < 0 en y = 1/2."""
        report = positivity_report(make_params(1, 0, 1), '0<y<1')
        self.assertFalse(report['a_pos'])
        self.assertTrue(positivity_report(make_params(1, 0, 1), 'y>1')['a_pos'])

    def test_bad_regime(self):
        """Test régimen desconocido."""
        with self.assertRaises(ValidationError):
            positivity_report(make_params(1, 0, 0), 'y<0')

    def test_evaluation_fallback(self):
        """Test parámetros sin forma monomial."""
        params = LKParams.from_units(Y, ONE, ONE)
        report = positivity_report(params, '0<y<1')
        self.assertEqual(report['method'], 'evaluation')
        self.assertTrue(report['passed'])

    @settings(max_examples=1000)
    @given(exponents, exponents, exponents, st.sampled_from(['0<y<1', 'y>1']))
    def test_monomial_path_agrees_with_evaluation(self, p, q, r, regime):
        """Test vía rápida frente a evaluación racional en y = 1/2 y y = 2."""
        params = make_params(p, q, r)
        if 2 * r == p + q:
            return
        fast = positivity_report(params, regime)['a_pos']
        self.assertEqual(fast, sign_at(params.a, regime) > 0)
        self.assertEqual(sign_at(params.b, regime), 1)
