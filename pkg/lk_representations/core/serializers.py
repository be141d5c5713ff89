"""
Serializers de entrada y de exportación.

Las entradas de los comandos (grafo, parámetros, semillas) se validan aquí;
los errores de dominio (``ValidationError`` de Django) se convierten en
errores de campo de DRF.
"""
import json

from rest_framework import serializers

from coxeter.graphs import graph_from_spec, is_affine, is_connected
from laurent.params import LKParams, make_params
from laurent.ring import LaurentPoly

from .models import VerificationRun
from .validators import REGIMES, validate_depth_bound, validate_length_cap

CONSTRUCTIONS = ('spherical', 'paris', 'affine')


def render_json(data):
    """JSON estable: claves ordenadas, UTF-8 y salto de línea final."""
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False, default=str) + '\n'


class PolynomialField(serializers.Field):
    """Polinomio de Laurent en forma textual ("x*y^2 - 1") o entero."""

    def to_internal_value(self, data):
        if not isinstance(data, (str, int)) or isinstance(data, bool):
            raise serializers.ValidationError('Se esperaba un polinomio en forma de texto.')
        return LaurentPoly.parse(data)

    def to_representation(self, value):
        return str(value)


class GraphSpecSerializer(serializers.Serializer):
    """``{"n", "m"}`` o ``{"type", "rank"}``."""

    type = serializers.CharField(required=False)
    rank = serializers.IntegerField(required=False, min_value=1)
    n = serializers.IntegerField(required=False, min_value=1)
    m = serializers.ListField(
        child=serializers.ListField(child=serializers.IntegerField()),
        required=False,
    )
    label = serializers.CharField(required=False, allow_blank=True, default='')

    def validate(self, attrs):
        if 'm' not in attrs and 'type' not in attrs:
            raise serializers.ValidationError('Indique una matriz "m" o un tipo "type".')
        if 'm' in attrs and 'n' in attrs and attrs['n'] != len(attrs['m']):
            raise serializers.ValidationError({'n': 'No coincide con el tamaño de "m".'})
        attrs['graph'] = graph_from_spec(attrs)
        return attrs


class ParamsSerializer(serializers.Serializer):
    """Parámetros (p, q, r) monomiales o unidades b, c, d explícitas, y la semilla f."""

    pqr = serializers.ListField(
        child=serializers.IntegerField(), min_length=3, max_length=3, required=False,
    )
    b = PolynomialField(required=False)
    c = PolynomialField(required=False)
    d = PolynomialField(required=False)
    f = PolynomialField(required=False)

    def validate(self, attrs):
        explicit = [name for name in ('b', 'c', 'd') if name in attrs]
        f = attrs.get('f', LaurentPoly.one())
        if 'pqr' in attrs:
            if explicit:
                raise serializers.ValidationError('Use "pqr" o b, c, d, no ambos.')
            attrs['params'] = make_params(*attrs['pqr'], f=f)
        elif len(explicit) == 3:
            attrs['params'] = LKParams.from_units(attrs['b'], attrs['c'], attrs['d'], f=f)
        else:
            raise serializers.ValidationError('Faltan parámetros: "pqr" o b, c, d.')
        return attrs


class SeedSerializer(serializers.Serializer):
    """Secuencia (𝔣_0, 𝔣_1, …) para las familias afines."""

    seq = serializers.ListField(child=PolynomialField(), min_length=1)


class RunConfigSerializer(serializers.Serializer):
    """Configuración común de los subcomandos, impresa en la cabecera de cada informe."""

    graph = GraphSpecSerializer(required=False)
    params = ParamsSerializer(required=False)
    construction = serializers.ChoiceField(choices=CONSTRUCTIONS, required=False)
    seed = serializers.CharField(required=False, allow_blank=True)
    depth_bound = serializers.IntegerField(required=False, allow_null=True, validators=[validate_depth_bound])
    length = serializers.IntegerField(required=False, validators=[validate_length_cap])
    regime = serializers.ChoiceField(choices=REGIMES, required=False)
    output = serializers.CharField(required=False, allow_blank=True)
    format = serializers.ChoiceField(choices=['json', 'csv'], default='json')

    def validate(self, attrs):
        graph = attrs.get('graph', {}).get('graph')
        construction = attrs.get('construction')
        if construction == 'affine':
            if not attrs.get('seed'):
                raise serializers.ValidationError({'seed': 'La construcción afín necesita una semilla.'})
            if graph is not None and not is_affine(graph):
                raise serializers.ValidationError({'construction': f'{graph} no es un grafo afín.'})
        if construction == 'paris' and graph is not None and not is_connected(graph):
            raise serializers.ValidationError({'construction': f'{graph} no es conexo.'})
        if attrs.get('seed') and construction != 'affine':
            raise serializers.ValidationError({'seed': 'La semilla sólo se usa con la construcción afín.'})
        return attrs


class TimestampedSerializer(serializers.ModelSerializer):
    """Mixin para serializers con timestamps."""

    created_at = serializers.DateTimeField(read_only=True, format='%Y-%m-%d %H:%M:%S')
    updated_at = serializers.DateTimeField(read_only=True, format='%Y-%m-%d %H:%M:%S')


class VerificationRunSerializer(TimestampedSerializer):
    """Serializer para las ejecuciones registradas."""

    status_display = serializers.CharField(source='get_status_display', read_only=True)

    class Meta:
        model = VerificationRun
        fields = [
            'id', 'command', 'graph', 'config', 'report', 'status', 'status_display',
            'duration', 'created_at', 'updated_at',
        ]
        read_only_fields = fields
