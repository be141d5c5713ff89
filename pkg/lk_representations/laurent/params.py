"""
Parámetros (b, c, d) de una representación de Lawrence–Krammer.

``a`` se almacena y la identidad d·a = d² − b·c se comprueba una sola vez al
construir. La positividad del criterio de faithfulness se decide por la vía
rápida monomial (p, q, r) o por evaluación racional exacta en y.
"""
import logging
from dataclasses import dataclass, field, replace
from fractions import Fraction

from core.conf import LOGGER_NAME
from core.exceptions import InvalidParams, ZeroA
from core.validators import validate_regime

from .ring import ONE, ZERO, LaurentPoly, as_poly, div_by_unit, eval_x0

logger = logging.getLogger(LOGGER_NAME)

REGIME_SAMPLES = {
    '0<y<1': Fraction(1, 2),
    'y>1': Fraction(2),
}


@dataclass(frozen=True)
class LKParams:
    """Terna de unidades (b, c, d), el elemento a y la semilla f."""

    b: LaurentPoly
    c: LaurentPoly
    d: LaurentPoly
    a: LaurentPoly
    f: LaurentPoly = field(default=ZERO)
    pqr: tuple = None

    def __post_init__(self):
        for name in ('b', 'c', 'd', 'a', 'f'):
            object.__setattr__(self, name, as_poly(getattr(self, name)))
        for name in ('b', 'c', 'd'):
            if not getattr(self, name).is_unit():
                raise InvalidParams(params={'name': name, 'value': str(getattr(self, name))})
        if self.d * self.a != self.d * self.d - self.b * self.c:
            raise InvalidParams(params={'a': str(self.a)})

    @classmethod
    def from_units(cls, b, c, d, f=ZERO):
        """Calcula a = d − bc/d a partir de unidades arbitrarias."""
        b, c, d = as_poly(b), as_poly(c), as_poly(d)
        return cls(b=b, c=c, d=d, a=d - div_by_unit(b * c, d), f=as_poly(f))

    def with_seed(self, f):
        return replace(self, f=as_poly(f))

    def as_dict(self):
        data = {name: str(getattr(self, name)) for name in ('a', 'b', 'c', 'd', 'f')}
        if self.pqr is not None:
            data['pqr'] = list(self.pqr)
        return data


def make_params(p, q, r, f=ONE):
    """b = y^p, c = y^q, d = y^r y a = y^r − y^{p+q−r}."""
    b = LaurentPoly.monomial(1, 0, p)
    c = LaurentPoly.monomial(1, 0, q)
    d = LaurentPoly.monomial(1, 0, r)
    a = d - LaurentPoly.monomial(1, 0, p + q - r)
    return LKParams(b=b, c=c, d=d, a=a, f=as_poly(f), pqr=(p, q, r))


def sign_at(poly, regime):
    """Signo de la imagen x -> 0 de ``poly`` en el punto de muestra del régimen."""
    value = eval_x0(poly).evaluate_y(REGIME_SAMPLES[regime])
    return (value > 0) - (value < 0)


def positivity_report(params, regime):
    """Positividad de ā, b̄, c̄, d̄ en el régimen dado."""
    validate_regime(regime)
    if not params.a:
        raise ZeroA(pqr=params.pqr)
    if params.pqr is not None:
        p, q, r = params.pqr
        a_pos = 2 * r < p + q if regime == '0<y<1' else 2 * r > p + q
        report = {
            'a_pos': a_pos,
            'b_pos': True,
            'c_pos': True,
            'd_pos': True,
            'method': 'monomial',
        }
    else:
        a_bar = eval_x0(params.a)
        if not a_bar:
            raise ZeroA()
        report = {
            f'{name}_pos': sign_at(getattr(params, name), regime) > 0
            for name in ('a', 'b', 'c', 'd')
        }
        report['method'] = 'evaluation'
    report['regime'] = regime
    report['passed'] = all(report[key] for key in ('a_pos', 'b_pos', 'c_pos', 'd_pos'))
    logger.debug(f"Positividad ({regime}, {report['method']}): {report}")
    return report
