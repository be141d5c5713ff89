"""
Endomorfismos dispersos por columnas del módulo libre sobre una base indexada.

La columna ``c`` guarda la imagen e(b_c) como diccionario fila -> escalar
(``LaurentPoly`` o ``LaurentFraction``) sin ceros. ``safe_depth`` es la mayor
profundidad de columna cuya imagen es exacta pese al truncamiento (None: todas)
y ``reach`` es cuánto puede subir la profundidad al aplicar el endomorfismo.
"""
import csv
import io

from laurent.ring import ONE


def _min_safe(first, second):
    if first is None:
        return second
    if second is None:
        return first
    return min(first, second)


class SparseEndo:
    def __init__(self, basis, columns=None, safe_depth=None, reach=0):
        self.basis = basis
        self.columns = {}
        for col, entries in (columns or {}).items():
            clean = {row: value for row, value in entries.items() if value}
            if clean:
                self.columns[col] = clean
        self.safe_depth = safe_depth
        self.reach = reach

    @classmethod
    def identity(cls, basis):
        return cls(basis, {idx: {idx: ONE} for idx in range(len(basis))})

    @property
    def size(self):
        return len(self.basis)

    def column(self, col):
        return dict(self.columns.get(col, {}))

    def entry(self, row, col):
        return self.columns.get(col, {}).get(row, 0)

    def is_safe_column(self, col):
        return self.safe_depth is None or self.basis.depth(col) <= self.safe_depth

    def safe_columns(self):
        return [col for col in range(self.size) if self.is_safe_column(col)]

    @property
    def exact(self):
        return self.safe_depth is None

    def __matmul__(self, other):
        """(self ∘ other)(e_c) = Σ_r other[r, c] · self(e_r)."""
        result = {}
        for col, entries in other.columns.items():
            image = {}
            for row, coeff in entries.items():
                for target, value in self.columns.get(row, {}).items():
                    image[target] = image.get(target, 0) + coeff * value
            result[col] = image
        safe = _min_safe(
            other.safe_depth,
            None if self.safe_depth is None else self.safe_depth - other.reach,
        )
        return SparseEndo(self.basis, result, safe_depth=safe, reach=self.reach + other.reach)

    def __add__(self, other):
        result = {col: dict(entries) for col, entries in self.columns.items()}
        for col, entries in other.columns.items():
            image = result.setdefault(col, {})
            for row, value in entries.items():
                image[row] = image.get(row, 0) + value
        return SparseEndo(
            self.basis, result,
            safe_depth=_min_safe(self.safe_depth, other.safe_depth),
            reach=max(self.reach, other.reach),
        )

    def scale(self, factor):
        return SparseEndo(
            self.basis,
            {col: {row: factor * value for row, value in entries.items()}
             for col, entries in self.columns.items()},
            safe_depth=self.safe_depth,
            reach=self.reach,
        )

    @classmethod
    def rank_one(cls, basis, form, target, safe_depth=None):
        """f ⊠ e_target: v ↦ f(v) e_target, con ``form`` dado por columna."""
        return cls(
            basis,
            {col: {target: value} for col, value in form.items()},
            safe_depth=safe_depth,
        )

    def differences(self, other, columns=None):
        """Entradas (fila, columna) distintas sobre las columnas seguras de ambos."""
        if columns is None:
            columns = [col for col in self.safe_columns() if other.is_safe_column(col)]
        found = []
        for col in columns:
            mine = self.columns.get(col, {})
            theirs = other.columns.get(col, {})
            for row in sorted(set(mine) | set(theirs)):
                if mine.get(row, 0) != theirs.get(row, 0):
                    found.append((row, col))
        return found

    def equal_on_safe(self, other, columns=None):
        return not self.differences(other, columns)

    def __eq__(self, other):
        if not isinstance(other, SparseEndo):
            return NotImplemented
        return self.size == other.size and self.equal_on_safe(other)

    __hash__ = None

    def dense(self):
        """Matriz densa (filas de escalares, ceros enteros)."""
        matrix = [[0] * self.size for _row in range(self.size)]
        for col, entries in self.columns.items():
            for row, value in entries.items():
                matrix[row][col] = value
        return matrix

    def export(self):
        return {
            'basis': [self.basis.label(idx) for idx in range(self.size)],
            'safe_depth': self.safe_depth,
            'columns': {
                str(col): [[row, str(value)] for row, value in sorted(entries.items())]
                for col, entries in sorted(self.columns.items())
            },
        }

    def to_csv(self):
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        labels = [self.basis.label(idx) for idx in range(self.size)]
        writer.writerow([''] + labels)
        for label, row in zip(labels, self.dense()):
            writer.writerow([label] + [str(value) for value in row])
        return buffer.getvalue()

    def __repr__(self):
        return f'SparseEndo(size={self.size}, safe_depth={self.safe_depth})'
