"""Acceso a la configuración ``LKREP`` con valores por defecto."""
from django.conf import settings

DEFAULTS = {
    'CAP': 10**6,
    'ROOT_CAP': 20000,
    'DEFAULT_DEPTH': 8,
    'W_CAP': 10000,
    'CSV_MAX_COLUMNS': 200,
}

LOGGER_NAME = 'lk_representations'


def lkrep_setting(name):
    """Valor de ``settings.LKREP[name]`` o el valor por defecto."""
    configured = getattr(settings, 'LKREP', {}) if settings.configured else {}
    return configured.get(name, DEFAULTS[name])
