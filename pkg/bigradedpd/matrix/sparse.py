"""
Sparse columns over a prime field.

A column maps row keys (simplex ids, or implicit cell keys) to nonzero field elements. Row
order is not stored in the column: it comes from the filtration position of each key, so a
transposition reorders every column at once by changing two positions.
"""
import typing

from bigradedpd.matrix.field import PrimeField

Key = typing.Hashable


class SparseColumn(object):
    """
    A sparse column with no explicit zeros.
    """
    __slots__ = ("field", "_entries")

    def __init__(self, field: PrimeField, entries: typing.Mapping[Key, int] = None):
        self.field = field
        self._entries = {}
        if entries:
            for key, value in entries.items():
                value = field.element(value)
                if value:
                    self._entries[key] = value

    @classmethod
    def unit(cls, field: PrimeField, key: Key) -> "SparseColumn":
        return cls(field, {key: 1})

    def __repr__(self):
        return "<SparseColumn {}>".format(self._entries)

    def copy(self) -> "SparseColumn":
        col = SparseColumn(self.field)
        col._entries = dict(self._entries)
        return col

    def __getitem__(self, key: Key) -> int:
        return self._entries.get(key, 0)

    def __contains__(self, key: Key) -> bool:
        return key in self._entries

    def __len__(self):
        return len(self._entries)

    def __bool__(self):
        return bool(self._entries)

    def __iter__(self):
        return iter(self._entries)

    def items(self):
        return self._entries.items()

    def as_dict(self) -> typing.Dict[Key, int]:
        return dict(self._entries)

    def __eq__(self, other):
        if not isinstance(other, SparseColumn):
            return NotImplemented
        return self._entries == other._entries

    def add_scaled(self, other: "SparseColumn", coefficient: int) -> int:
        """
        In place ``self += coefficient * other``.

        :return: The number of field operations performed.
        """
        field = self.field
        coefficient = field.element(coefficient)
        if not coefficient:
            return 0
        entries = self._entries
        for key, value in other._entries.items():
            new = (entries.get(key, 0) + coefficient * value) % field.p
            if new:
                entries[key] = new
            else:
                del entries[key]
        return len(other._entries)

    def scale(self, coefficient: int):
        """
        In place ``self *= coefficient``; the coefficient must be nonzero.
        """
        p = self.field.p
        for key in self._entries:
            self._entries[key] = self._entries[key] * coefficient % p

    def scaled(self, coefficient: int) -> "SparseColumn":
        col = self.copy()
        col.scale(self.field.element(coefficient))
        return col

    def low(self, position: typing.Mapping[Key, int]) -> typing.Optional[Key]:
        """
        The key with the largest position, or ``None`` for the zero column.
        """
        if not self._entries:
            return None
        return max(self._entries, key=position.__getitem__)

    def sorted_keys(self, position: typing.Mapping[Key, int]) -> typing.List[Key]:
        return sorted(self._entries, key=position.__getitem__)

    def support_within(self, keys: typing.Container) -> bool:
        return all(key in keys for key in self._entries)
