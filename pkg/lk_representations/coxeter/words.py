"""
El monoide de Artin–Tits B⁺ como sistema de reescritura.

La presentación es homogénea, así que la clase de una palabra es finita y se
obtiene saturando las relaciones de trenza. La clase sirve de oráculo de
igualdad en B⁺, de divisibilidad a izquierda y de I(b).
"""
import logging
from collections import deque
from dataclasses import dataclass

from core.conf import LOGGER_NAME, lkrep_setting
from core.exceptions import BadWord, CapExceeded
from core.validators import validate_word_letters

logger = logging.getLogger(LOGGER_NAME)


def parse_word(text, n):
    """``"010"`` o ``"0.1.10"`` (con puntos cuando algún índice es ≥ 10)."""
    text = (text or '').strip()
    if not text:
        return ()
    pieces = text.split('.') if '.' in text else list(text)
    if not all(piece.isdigit() for piece in pieces):
        raise BadWord(params={'letter': text, 'n': n})
    letters = tuple(int(piece) for piece in pieces)
    validate_word_letters(letters, n)
    return letters


def format_word(word):
    if any(letter >= 10 for letter in word):
        return '.'.join(str(letter) for letter in word)
    return ''.join(str(letter) for letter in word)


@dataclass(frozen=True)
class WordClass:
    """Elemento de B⁺: todas sus palabras positivas y la menor como representante."""

    representative: tuple
    members: frozenset

    @property
    def length(self):
        return len(self.representative)

    def __contains__(self, word):
        return tuple(word) in self.members

    def __str__(self):
        return format_word(self.representative) or '1'


def _rewrites(g, word):
    for pos in range(len(word) - 1):
        i, j = word[pos], word[pos + 1]
        if i == j:
            continue
        m = g.m[i][j]
        if m == 2:
            yield word[:pos] + (j, i) + word[pos + 2:]
        elif m == 3 and pos + 2 < len(word) and word[pos + 2] == i:
            yield word[:pos] + (j, i, j) + word[pos + 3:]


def word_class(g, word, cap=None):
    """Cierre de ``word`` bajo las relaciones de trenza."""
    cap = cap or lkrep_setting('CAP')
    word = tuple(word)
    validate_word_letters(word, g.n)
    members = {word}
    queue = deque([word])
    while queue:
        current = queue.popleft()
        for image in _rewrites(g, current):
            if image not in members:
                members.add(image)
                if len(members) > cap:
                    raise CapExceeded(cap=cap, word=format_word(word))
                queue.append(image)
    return WordClass(representative=min(members), members=frozenset(members))


def initial_set(g, word, cap=None):
    """I(b): generadores que dividen a b por la izquierda."""
    return {member[0] for member in word_class(g, word, cap).members if member}


def left_divides(g, u, w, cap=None):
    """u ≼ w: alguna palabra de la clase de w empieza por u."""
    u = tuple(u)
    if len(u) > len(w):
        return False
    return any(member[:len(u)] == u for member in word_class(g, w, cap).members)


def enumerate_classes(g, length, cap=None):
    """Todos los elementos de B⁺ de longitud ≤ ``length``, por (longitud, representante)."""
    cap = cap or lkrep_setting('CAP')
    seen = {()}
    classes = [WordClass(representative=(), members=frozenset({()}))]
    level = list(classes)
    for current in range(1, length + 1):
        found = []
        for element in level:
            for letter in g.vertices:
                candidate = element.representative + (letter,)
                if candidate in seen:
                    continue
                new = word_class(g, candidate, cap)
                seen.update(new.members)
                found.append(new)
                if len(classes) + len(found) > cap:
                    raise CapExceeded(cap=cap, length=current)
        level = sorted(found, key=lambda item: item.representative)
        classes.extend(level)
        logger.debug(f"Longitud {current}: {len(level)} elementos de B+")
    logger.info(f"Enumerados {len(classes)} elementos de B+ de longitud <= {length} en {g}")
    return classes


def class_counts(classes):
    counts = {}
    for element in classes:
        counts[element.length] = counts.get(element.length, 0) + 1
    return dict(sorted(counts.items()))
