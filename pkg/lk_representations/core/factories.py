"""
Factories de factory-boy para los tests.
"""
import factory
from factory.django import DjangoModelFactory

from laurent.params import LKParams, make_params
from laurent.ring import LaurentPoly

from .models import RunStatus, VerificationRun

COMMANDS = ['roots', 'family', 'rep', 'twisted', 'typeb', 'faithful', 'selftest']


class LKParamsFactory(factory.Factory):
    """Parámetros monomiales con exponentes pequeños aleatorios."""

    class Meta:
        model = LKParams

    p = factory.Faker('random_int', min=-3, max=3)
    q = factory.Faker('random_int', min=-3, max=3)
    r = factory.Faker('random_int', min=-3, max=3)
    f = factory.LazyFunction(lambda: LaurentPoly.parse('x*y^2'))

    @classmethod
    def _build(cls, model_class, p, q, r, f):
        return make_params(p, q, r, f=f)

    @classmethod
    def _create(cls, model_class, p, q, r, f):
        return make_params(p, q, r, f=f)


class VerificationRunFactory(DjangoModelFactory):
    class Meta:
        model = VerificationRun

    command = factory.Iterator(COMMANDS)
    graph = factory.Faker('random_element', elements=['A2', 'A3', 'D4', 'Atilde2'])
    config = factory.LazyAttribute(lambda obj: {'graph': obj.graph})
    status = RunStatus.PASSED
    report = factory.LazyAttribute(lambda obj: {'passed': obj.status == RunStatus.PASSED})
    duration = factory.Faker('pyfloat', min_value=0, max_value=60)
