"""
Informe del criterio de fidelidad para una familia y unos parámetros.
"""
import logging

from core.conf import LOGGER_NAME
from core.exceptions import NegativeXExponent, ZeroA
from laurent.params import positivity_report
from laurent.ring import eval_x0

logger = logging.getLogger(LOGGER_NAME)


def _x0_witnesses(family):
    """Valores f_{i,α} cuya imagen por x ↦ 0 no es nula (o no existe)."""
    table = family.table
    found = []
    for (i, idx), value in family.items():
        try:
            image = eval_x0(value)
        except NegativeXExponent:
            found.append({'i': i, 'root': table.label(idx), 'value': str(value), 'reason': 'negative x power'})
            continue
        if image:
            found.append({'i': i, 'root': table.label(idx), 'value': str(value), 'reason': str(image)})
    return found


def _localization_witnesses(family):
    """f_{i,α} fuera de x·ℤ[x, y^{±1}] o f_{i,α_i} = 0."""
    table = family.table
    found = []
    for (i, idx), value in family.items():
        if value.min_x_exponent() < 1:
            found.append({'i': i, 'root': table.label(idx), 'value': str(value)})
    for i in family.graph.vertices:
        if not family.value(i, table.simple[i]):
            found.append({'i': i, 'root': table.label(table.simple[i]), 'value': '0'})
    return found


def criterion_report(family, params, regime='0<y<1'):
    """
    Condición (ii) directamente: ā, b̄, c̄, d̄ positivos y f̄_{i,α} = 0. Para la
    condición (i) se comprueba la suficiente: todo f_{i,α} en x·R y
    f_{i,α_i} ≠ 0, con lo que ψ es invertible sobre la localización.
    """
    try:
        positivity = positivity_report(params, regime)
    except ZeroA:
        positivity = {'passed': False, 'a_pos': False, 'regime': regime, 'reason': 'a = 0'}
    x0 = _x0_witnesses(family)
    localization = _localization_witnesses(family)
    report = {
        'graph': str(family.graph),
        'regime': regime,
        'params': params.as_dict(),
        'positivity': positivity,
        'vanishing_at_x0': {'passed': not x0, 'witnesses': x0},
        'cancellative': {'passed': not localization, 'witnesses': localization, 'method': 'localization'},
        'exact': family.table.complete,
    }
    report['passed'] = all(
        report[name]['passed'] for name in ('positivity', 'vanishing_at_x0', 'cancellative')
    )
    if report['passed']:
        logger.info(f"Criterio de fidelidad satisfecho en {family.graph} ({regime})")
    else:
        logger.warning(f"Criterio de fidelidad no satisfecho en {family.graph} ({regime})")
    return report
