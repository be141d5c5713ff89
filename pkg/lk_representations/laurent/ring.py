"""
Anillo exacto R = Z[x^{±1}, y^{±1}] y su localización.

``LaurentPoly`` guarda un diccionario (exp_x, exp_y) -> coeficiente entero sin
ceros; ``LaurentFraction`` es un par (num, den) cuya igualdad se decide por
productos cruzados.
"""
from fractions import Fraction
from tokenize import TokenError

from django.utils.translation import gettext_lazy as _
from sympy import Symbol, SympifyError, expand
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from core.exceptions import BadPolynomial, NegativeXExponent, NotAUnit

_X = Symbol('x')
_Y = Symbol('y')
_TRANSFORMATIONS = standard_transformations + (convert_xor,)


def _coerce(value):
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, int):
        return LaurentPoly.constant(value)
    return NotImplemented


class LaurentPoly:
    """Polinomio de Laurent en x, y con coeficientes enteros (inmutable)."""

    __slots__ = ('_terms', '_hash')

    def __init__(self, terms=None):
        clean = {}
        for (xe, ye), coeff in (terms or {}).items():
            if coeff:
                clean[(int(xe), int(ye))] = int(coeff)
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, terms):
        poly = cls.__new__(cls)
        poly._terms = terms
        poly._hash = None
        return poly

    # Constructores

    @classmethod
    def zero(cls):
        return cls._wrap({})

    @classmethod
    def one(cls):
        return cls._wrap({(0, 0): 1})

    @classmethod
    def constant(cls, value):
        return cls._wrap({(0, 0): int(value)} if value else {})

    @classmethod
    def monomial(cls, coeff=1, x=0, y=0):
        return cls._wrap({(int(x), int(y)): int(coeff)} if coeff else {})

    @classmethod
    def from_triples(cls, triples):
        """Construye desde una lista de ternas [exp_x, exp_y, coef]."""
        terms = {}
        for xe, ye, coeff in triples:
            key = (int(xe), int(ye))
            terms[key] = terms.get(key, 0) + int(coeff)
        return cls(terms)

    @classmethod
    def parse(cls, text):
        """Lee la forma textual, p. ej. ``"3*x^-1*y^2 + 1"``."""
        if isinstance(text, LaurentPoly):
            return text
        if isinstance(text, int):
            return cls.constant(text)
        try:
            expr = expand(
                parse_expr(
                    str(text),
                    local_dict={'x': _X, 'y': _Y},
                    transformations=_TRANSFORMATIONS,
                )
            )
        except (SyntaxError, TypeError, ValueError, SympifyError, TokenError) as exc:
            raise BadPolynomial(params={'text': text}) from exc
        terms = {}
        for monomial, coeff in expr.as_coefficients_dict().items():
            if not coeff.is_Integer:
                raise BadPolynomial(params={'text': text})
            powers = {
                base: exp for base, exp in monomial.as_powers_dict().items()
                if not base.is_Number
            }
            xe = powers.pop(_X, 0)
            ye = powers.pop(_Y, 0)
            if powers or not (xe == 0 or xe.is_Integer) or not (ye == 0 or ye.is_Integer):
                raise BadPolynomial(params={'text': text})
            key = (int(xe), int(ye))
            terms[key] = terms.get(key, 0) + int(coeff)
        return cls(terms)

    # Consultas

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_monomial(self):
        return len(self._terms) == 1

    def is_unit(self):
        """Las unidades de R son los monomios de coeficiente ±1."""
        if len(self._terms) != 1:
            return False
        (coeff,) = self._terms.values()
        return coeff in (1, -1)

    def unit_inverse(self):
        if not self.is_unit():
            raise NotAUnit(params={'value': str(self)})
        ((xe, ye), coeff), = self._terms.items()
        return LaurentPoly._wrap({(-xe, -ye): coeff})

    def min_x_exponent(self):
        return min((xe for xe, ye in self._terms), default=0)

    def is_x_free(self):
        return all(xe == 0 for xe, ye in self._terms)

    def evaluate_y(self, value):
        """Evalúa un polinomio sin x en un racional exacto."""
        value = Fraction(value)
        total = Fraction(0)
        for (xe, ye), coeff in self._terms.items():
            if xe:
                raise BadPolynomial(_('Expected a polynomial in y only.'), params={'text': str(self)})
            total += coeff * value ** ye
        return total

    # Aritmética

    def __neg__(self):
        return LaurentPoly._wrap({key: -coeff for key, coeff in self._terms.items()})

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        result = dict(self._terms)
        for key, coeff in other._terms.items():
            value = result.get(key, 0) + coeff
            if value:
                result[key] = value
            else:
                result.pop(key, None)
        return LaurentPoly._wrap(result)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._terms or not other._terms:
            return LaurentPoly.zero()
        result = {}
        for (x1, y1), c1 in self._terms.items():
            for (x2, y2), c2 in other._terms.items():
                key = (x1 + x2, y1 + y2)
                value = result.get(key, 0) + c1 * c2
                if value:
                    result[key] = value
                else:
                    result.pop(key, None)
        return LaurentPoly._wrap(result)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if exponent < 0:
            return self.unit_inverse() ** (-exponent)
        result = LaurentPoly.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # Igualdad y formato

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def sorted_terms(self):
        """Términos en orden canónico (exp_x, exp_y) creciente."""
        return sorted(self._terms.items())

    def to_triples(self):
        return [[xe, ye, coeff] for (xe, ye), coeff in self.sorted_terms()]

    def __str__(self):
        if not self._terms:
            return '0'
        pieces = []
        for (xe, ye), coeff in self.sorted_terms():
            factors = []
            for name, exp in (('x', xe), ('y', ye)):
                if exp == 1:
                    factors.append(name)
                elif exp:
                    factors.append(f'{name}^{exp}')
            magnitude = abs(coeff)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = '*'.join(factors)
            else:
                body = '*'.join([str(magnitude)] + factors)
            sign = '-' if coeff < 0 else '+'
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ('-' if first_sign == '-' else '') + first_body
        for sign, body in pieces[1:]:
            text += f' {sign} {body}'
        return text

    def __repr__(self):
        return f"LaurentPoly('{self}')"


ZERO = LaurentPoly.zero()
ONE = LaurentPoly.one()
X = LaurentPoly.monomial(1, 1, 0)
Y = LaurentPoly.monomial(1, 0, 1)


def as_poly(value):
    """Convierte enteros y textos en ``LaurentPoly``."""
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, int):
        return LaurentPoly.constant(value)
    return LaurentPoly.parse(value)


def div_by_unit(poly, unit):
    """Cociente exacto de ``poly`` por una unidad de R."""
    unit = as_poly(unit)
    if not unit.is_unit():
        raise NotAUnit(params={'value': str(unit)})
    return as_poly(poly) * unit.unit_inverse()


def unit_power(unit, exponent):
    """Potencia entera (posiblemente negativa) de una unidad."""
    unit = as_poly(unit)
    if not unit.is_unit():
        raise NotAUnit(params={'value': str(unit)})
    return unit ** exponent


def eval_x0(poly):
    """Morfismo R -> Z[y^{±1}] dado por x -> 0."""
    poly = as_poly(poly)
    if poly.min_x_exponent() < 0:
        raise NegativeXExponent(params={'value': str(poly)})
    return LaurentPoly._wrap({key: coeff for key, coeff in poly.items() if key[0] == 0})


class LaurentFraction:
    """Elemento de la localización de R: ``num / den`` con ``den`` no nulo."""

    __slots__ = ('num', 'den')

    def __init__(self, num, den=1):
        num = as_poly(num)
        den = as_poly(den)
        if not den:
            raise ZeroDivisionError('LaurentFraction with zero denominator')
        if den.is_unit():
            num, den = num * den.unit_inverse(), ONE
        elif not num:
            den = ONE
        self.num = num
        self.den = den

    @staticmethod
    def _lift(value):
        if isinstance(value, LaurentFraction):
            return value
        if isinstance(value, (LaurentPoly, int)):
            return LaurentFraction(value)
        return NotImplemented

    def is_polynomial(self):
        return self.den == ONE

    def to_poly(self):
        if not self.is_polynomial():
            raise NotAUnit(params={'value': str(self.den)})
        return self.num

    def __bool__(self):
        return bool(self.num)

    def __neg__(self):
        return LaurentFraction(-self.num, self.den)

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return LaurentFraction(self.num + other.num, self.den)
        return LaurentFraction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return LaurentFraction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return LaurentFraction(self.num * other.den, self.den * other.num)

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def __str__(self):
        if self.is_polynomial():
            return str(self.num)
        return f'({self.num})/({self.den})'

    def __repr__(self):
        return f"LaurentFraction('{self}')"


def ring_divide(num, den):
    """Divide en R si ``den`` es unidad; si no, en la localización."""
    den = as_poly(den)
    if den.is_unit():
        return as_poly(num) * den.unit_inverse()
    return LaurentFraction(num, den)
