"""
Validadores reutilizables para las entradas de los cálculos.
Aplicando principio DRY y Single Responsibility.
"""
from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _

from .exceptions import BadDiagonal, BadRank, BadRegime, BadWord, NonSmallType, NotSymmetric

REGIMES = ('0<y<1', 'y>1')


def validate_coxeter_matrix(matrix):
    """Valida una matriz de Coxeter de tipo pequeño."""
    n = len(matrix)
    if n == 0:
        raise ValidationError(_('Coxeter matrix must have at least one vertex.'), code='empty')
    for row in matrix:
        if len(row) != n:
            raise NotSymmetric(_('Coxeter matrix must be square.'))
    for i in range(n):
        if matrix[i][i] != 1:
            raise BadDiagonal()
        for j in range(n):
            entry = matrix[i][j]
            if i != j and entry == 1:
                raise BadDiagonal()
            if entry not in (1, 2, 3):
                raise NonSmallType(params={'i': i, 'j': j, 'value': entry})
            if matrix[j][i] != entry:
                raise NotSymmetric()


def validate_word_letters(letters, n):
    """Valida que las letras de una palabra sean generadores en [0, n)."""
    for letter in letters:
        if not 0 <= letter < n:
            raise BadWord(params={'letter': letter, 'n': n})


def validate_depth_bound(value):
    """Valida una cota de profundidad (al menos 1)."""
    if value is not None and value < 1:
        raise ValidationError(_('Depth bound must be at least 1.'), code='bad_depth')


def validate_length_cap(value):
    """Valida la longitud máxima de los experimentos."""
    if not 0 <= value <= 12:
        raise ValidationError(_('Length cap must be between 0 and 12.'), code='bad_length')


def validate_regime(value):
    """Valida el régimen de evaluación en y."""
    if value not in REGIMES:
        raise BadRegime(params={'value': value})


def validate_rank(value, minimum):
    """Valida que el rango alcance el mínimo de la familia."""
    if value < minimum:
        raise BadRank(params={'rank': value, 'minimum': minimum})
