"""
Jerarquía de errores del proyecto.

Dos familias:
- Errores de entrada: subclases de ``ValidationError`` con código estable y
  mensaje traducible; los comandos los convierten en código de salida 1.
- Errores de cálculo: subclases de ``LKRepError`` con ``exit_code``
  (1 uso, 2 límite excedido, 3 verificación fallida).
"""
from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _


class InputError(ValidationError):
    """Base para errores de validación con mensaje y código por defecto."""

    default_message = _('Invalid input.')
    default_code = 'invalid'

    def __init__(self, message=None, code=None, params=None):
        super().__init__(
            message or self.default_message,
            code=code or self.default_code,
            params=params,
        )


class NonSmallType(InputError):
    default_message = _('Coxeter matrix entries must lie in {1, 2, 3} (small type).')
    default_code = 'non_small_type'


class NotSymmetric(InputError):
    default_message = _('Coxeter matrix must be symmetric.')
    default_code = 'not_symmetric'


class BadDiagonal(InputError):
    default_message = _('Coxeter matrix must have 1 on the diagonal and only there.')
    default_code = 'bad_diagonal'


class UnknownLabel(InputError):
    default_message = _('Unknown Coxeter type label.')
    default_code = 'unknown_label'


class BadRank(InputError):
    default_message = _('Rank is not valid for this Coxeter type.')
    default_code = 'bad_rank'


class BadWord(InputError):
    default_message = _('Word letters must be generator indices of the graph.')
    default_code = 'bad_word'


class BadPolynomial(InputError):
    default_message = _('Could not read a Laurent polynomial in x, y with integer coefficients.')
    default_code = 'bad_polynomial'


class BadRegime(InputError):
    default_message = _("Regime must be '0<y<1' or 'y>1'.")
    default_code = 'bad_regime'


class NotAUnit(InputError):
    default_message = _('Divisor is not a unit (a monomial with coefficient 1 or -1).')
    default_code = 'not_a_unit'


class NegativeXExponent(InputError):
    default_message = _('Evaluation at x = 0 is undefined for negative powers of x.')
    default_code = 'negative_x_exponent'


class InvalidParams(InputError):
    default_message = _('Parameters must satisfy d*a = d^2 - b*c with b, c, d units.')
    default_code = 'invalid_params'


class BadRoot(InputError):
    default_message = _('Vector is not a positive root of the graph.')
    default_code = 'bad_root'


class BadAutomorphism(InputError):
    default_message = _('Permutation does not preserve the Coxeter matrix.')
    default_code = 'bad_automorphism'


class UnknownGroup(InputError):
    default_message = _('Unknown named group of graph automorphisms for this graph.')
    default_code = 'unknown_group'


class LKRepError(Exception):
    """Error de cálculo con código de salida para la línea de comandos."""

    exit_code = 1
    default_message = 'Computation error.'

    def __init__(self, message=None, **details):
        self.message = message or self.default_message
        self.details = details
        super().__init__(self.message)

    def as_dict(self):
        return {
            'error': type(self).__name__,
            'message': self.message,
            'details': {key: str(value) for key, value in self.details.items()},
        }


# Límites
class CapExceeded(LKRepError):
    exit_code = 2
    default_message = 'Enumeration cap exceeded.'


class NonTerminating(LKRepError):
    exit_code = 2
    default_message = 'Root enumeration exceeded the root cap.'


# Uso
class BoundaryTruncated(LKRepError):
    default_message = 'Mesh reaches beyond the enumerated depth.'


class NotAffine(LKRepError):
    default_message = 'Graph is not of affine type.'


class NotAtilde(LKRepError):
    default_message = 'Graph is not of type Atilde_n.'


class NotSpherical(LKRepError):
    default_message = 'Vertex subset is not spherical.'


class NoTriangle(LKRepError):
    default_message = 'Graph has no triangle.'


class TruncatedTable(LKRepError):
    default_message = 'Operation requires a complete (spherical) root table.'


class NonUnitPivot(LKRepError):
    default_message = 'f_{i,alpha_i} is zero; psi_i is not invertible.'


class ZeroA(LKRepError):
    default_message = 'a = 0 (2r = p+q); the positivity criterion does not apply.'


class DepthBoundTooSmall(LKRepError):
    default_message = 'Depth bound too small for this construction.'


class SeedTooShort(LKRepError):
    default_message = 'Affine seed is shorter than the delta-levels of the table.'


class InsufficientDepth(LKRepError):
    default_message = 'Family is not enumerated deep enough.'


class UnsupportedOrbit(LKRepError):
    default_message = 'Closed forms only cover vertex orbits of size 1 or 2.'


class NotEquivariant(LKRepError):
    default_message = 'Family is not equivariant under the group.'


class NotFixedWord(LKRepError):
    default_message = 'Word class is not fixed by the group.'


class PreconditionFailed(LKRepError):
    default_message = 'Experiment preconditions are not met.'


# Verificación
class VerificationFailure(LKRepError):
    exit_code = 3
    default_message = 'Verification failed.'


class InconsistentRelations(VerificationFailure):
    default_message = 'Defining relations disagree.'


class StabilizationFailure(VerificationFailure):
    default_message = 'Image of an orbit vector is not G-invariant.'


class NegativeEntry(VerificationFailure):
    default_message = 'Evaluated matrix entry is negative.'


class FaithfulnessViolation(VerificationFailure):
    default_message = 'Distinct monoid elements share an image.'
