"""
Integral functions on interval posets, and the Möbius / zeta transforms between them.

Intervals are ordered by ``[a, b] <= [c, d]`` iff ``a <= c`` and ``b <= d``. The Möbius
function of that order is local: ``mu([a, b], [c, d])`` is nonzero only when every
coordinate of ``a`` and ``b`` is at most one below the matching coordinate of ``c`` and
``d``. A shift of the upper endpoint is only admissible while the shifted upper endpoint
stays above the unshifted lower one.
"""
import itertools
import logging
import typing

import numpy as np

from bigradedpd.poset.grades import Chain, Grid, GridInterval, lex_key

logger = logging.getLogger(__name__)

Poset = typing.Union[Chain, Grid]


def _mobius_coordinate(a: int, b: int, c: int, d: int) -> int:
    i, j = c - a, d - b
    if i not in (0, 1) or j not in (0, 1):
        return 0
    if a < 0 or a > b:
        return 0
    if j == 1 and c > d - 1:
        return 0
    return -1 if (i + j) % 2 else 1


def mobius_1d(ab: GridInterval, cd: GridInterval) -> int:
    """
    The Möbius function of Int P_n.

    :param ab: The smaller interval ``[a, b]``.
    :param cd: The larger interval ``[c, d]``.
    :return: ``(-1)^i (-1)^j`` when ``[a, b] = [c - i, d - j]`` with admissible shifts, else 0.
    """
    (a, b), (c, d) = ab, cd
    return _mobius_coordinate(a, b, c, d)


def mobius_2d(ab: GridInterval, cd: GridInterval) -> int:
    """
    The Möbius function of Int L_n, the product of the two coordinate projections.
    """
    (a, b), (c, d) = ab, cd
    return (_mobius_coordinate(a[0], b[0], c[0], d[0]) *
            _mobius_coordinate(a[1], b[1], c[1], d[1]))


def mobius_terms(poset: Poset, interval: GridInterval) \
        -> typing.Iterator[typing.Tuple[int, GridInterval]]:
    """
    Yields ``(mu, [a, b])`` for every interval ``[a, b]`` below ``interval`` with nonzero
    Möbius value.
    """
    c, d = (poset.coordinates(x) for x in interval)
    per_axis = []
    for ck, dk in zip(c, d):
        options = []
        for i, j in itertools.product((0, 1), repeat=2):
            mu = _mobius_coordinate(ck - i, dk - j, ck, dk)
            if mu:
                options.append((mu, ck - i, dk - j))
        per_axis.append(options)

    for combo in itertools.product(*per_axis):
        sign = 1
        for mu, _, _ in combo:
            sign *= mu
        lower = poset.from_coordinates([a for _, a, _ in combo])
        upper = poset.from_coordinates([b for _, _, b in combo])
        yield sign, GridInterval(lower, upper)


class IntervalFunction(object):
    """
    An integer valued function on Int P, stored sparsely with implicit zeros.
    """

    def __init__(self, poset: Poset, values: typing.Mapping = None):
        self.poset = poset
        self._values = {}
        if values:
            for interval, value in values.items():
                self[interval] = value

    @classmethod
    def from_callable(cls, poset: Poset, fn: typing.Callable[[GridInterval], int]) \
            -> "IntervalFunction":
        """
        Tabulates ``fn`` over every interval of the poset.
        """
        return cls(poset, {iv: fn(iv) for iv in poset.intervals()})

    def __getitem__(self, interval) -> int:
        return self._values.get(GridInterval(*interval), 0)

    def __setitem__(self, interval, value: int):
        interval = GridInterval(*interval)
        if value:
            self._values[interval] = int(value)
        else:
            self._values.pop(interval, None)

    def add(self, interval, value: int):
        self[interval] = self[interval] + value

    def __len__(self):
        return len(self._values)

    def __iter__(self):
        return iter(sorted(self._values, key=lex_key))

    def items(self) -> typing.List[typing.Tuple[GridInterval, int]]:
        return [(iv, self._values[iv]) for iv in self]

    def support(self) -> typing.List[GridInterval]:
        return list(self)

    def __eq__(self, other):
        if not isinstance(other, IntervalFunction):
            return NotImplemented
        return self._values == other._values

    def __add__(self, other: "IntervalFunction") -> "IntervalFunction":
        result = IntervalFunction(self.poset, self._values)
        for interval, value in other.items():
            result.add(interval, value)
        return result

    def __neg__(self) -> "IntervalFunction":
        return IntervalFunction(self.poset, {k: -v for k, v in self._values.items()})

    def __sub__(self, other: "IntervalFunction") -> "IntervalFunction":
        return self + (-other)

    def __repr__(self):
        return "<IntervalFunction over {} support={}>".format(self.poset, len(self))


def mobius_invert(f: IntervalFunction, poset: Poset = None) -> IntervalFunction:
    """
    Möbius inversion: ``g[c, d] = sum of f[a, b] * mu([a, b], [c, d])``.

    :param f: A function on Int P (implicit zeros count as values).
    :param poset: The poset; defaults to ``f.poset``.
    """
    poset = poset or f.poset
    g = IntervalFunction(poset)
    for interval in poset.intervals():
        g[interval] = sum(mu * f[ab] for mu, ab in mobius_terms(poset, interval))
    return g


def _dense_shape(poset: Poset) -> typing.Tuple[int, ...]:
    return (poset.n + 1,) * (2 * poset.dimension)


def _dense_index(poset: Poset, interval: GridInterval) -> typing.Tuple[int, ...]:
    lower, upper = interval
    return tuple(poset.coordinates(lower)) + tuple(poset.coordinates(upper))


def zeta_integrate(g: IntervalFunction, poset: Poset = None) -> IntervalFunction:
    """
    Zeta integration: ``f[c, d] = sum of g[a, b]`` over the down-set of ``[c, d]``.

    The down-set of an interval is a product of coordinate prefixes, so the sum is a
    running sum along every coordinate of a dense table.
    """
    poset = poset or g.poset
    table = np.zeros(_dense_shape(poset), dtype=np.int64)
    for interval, value in g.items():
        table[_dense_index(poset, interval)] += value
    for axis in range(table.ndim):
        table = np.cumsum(table, axis=axis)

    f = IntervalFunction(poset)
    for interval in poset.intervals():
        f[interval] = int(table[_dense_index(poset, interval)])
    return f
