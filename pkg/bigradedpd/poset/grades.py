"""
Grades, intervals and the two posets the library works over.

A 1D grade is a plain integer of the chain ``0 < 1 < ... < n``. A 2D grade is a
:class:`Grade` of the grid ``[0, n] x [0, n]`` under the componentwise order.
"""
import itertools
import typing

import numpy as np
from cached_property import cached_property

from bigradedpd.exc import ValidationError

#: x step (first coordinate grows)
STEP_X = 0
#: y step (second coordinate grows)
STEP_Y = 1


class Grade(typing.NamedTuple):
    """
    A point ``(i, j)`` of the grid.
    """
    i: int
    j: int

    def leq(self, other: "Grade") -> bool:
        """
        The componentwise order. Tuple comparison stays lexicographic so grades sort.
        """
        return self.i <= other.i and self.j <= other.j

    def shifted(self, di: int, dj: int) -> "Grade":
        return Grade(self.i + di, self.j + dj)

    def __repr__(self):
        return "({}, {})".format(self.i, self.j)


class GridInterval(typing.NamedTuple):
    """
    A closed interval ``[lower, upper]`` of a poset.

    Endpoints are plain integers for the chain and :class:`Grade` for the grid.
    """
    lower: typing.Any
    upper: typing.Any

    def __repr__(self):
        return "[{}, {}]".format(self.lower, self.upper)


def lex_key(interval: GridInterval):
    """
    The lexicographic ``(lower, upper)`` sort key used to enumerate intervals.
    """
    lower, upper = interval
    if isinstance(lower, int):
        return lower, upper
    return tuple(lower), tuple(upper)


class Chain(object):
    """
    The chain ``P_n = {0 < 1 < ... < n}``; ``n`` is the top element.
    """
    dimension = 1

    def __init__(self, n: int):
        if n < 0:
            raise ValidationError("Chain size must be non-negative, got {}".format(n))
        self.n = n

    def __repr__(self):
        return "<Chain n={}>".format(self.n)

    def __eq__(self, other):
        return isinstance(other, Chain) and other.n == self.n

    def __hash__(self):
        return hash(("chain", self.n))

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return self.n

    def contains(self, a) -> bool:
        return isinstance(a, int) and 0 <= a <= self.n

    def leq(self, a: int, b: int) -> bool:
        return a <= b

    def elements(self) -> typing.List[int]:
        return list(range(self.n + 1))

    def intervals(self) -> typing.Iterator[GridInterval]:
        """
        Iterates over Int P in lexicographic order.
        """
        for a in range(self.n + 1):
            for b in range(a, self.n + 1):
                yield GridInterval(a, b)

    def coordinates(self, a: int) -> typing.Tuple[int]:
        return (a,)

    def from_coordinates(self, coords) -> int:
        return coords[0]


class Grid(object):
    """
    The grid ``L_n = P_n x P_n`` with the componentwise order; ``(n, n)`` is the top.
    """
    dimension = 2

    def __init__(self, n: int):
        if n < 0:
            raise ValidationError("Grid size must be non-negative, got {}".format(n))
        self.n = n

    def __repr__(self):
        return "<Grid n={}>".format(self.n)

    def __eq__(self, other):
        return isinstance(other, Grid) and other.n == self.n

    def __hash__(self):
        return hash(("grid", self.n))

    @property
    def bottom(self) -> Grade:
        return Grade(0, 0)

    @property
    def top(self) -> Grade:
        return Grade(self.n, self.n)

    def contains(self, a) -> bool:
        return 0 <= a[0] <= self.n and 0 <= a[1] <= self.n

    def leq(self, a: Grade, b: Grade) -> bool:
        return a[0] <= b[0] and a[1] <= b[1]

    def elements(self) -> typing.List[Grade]:
        return [Grade(i, j) for i in range(self.n + 1) for j in range(self.n + 1)]

    def intervals(self) -> typing.Iterator[GridInterval]:
        """
        Iterates over Int L_n in lexicographic ``(lower, upper)`` order.
        """
        for lower in self.elements():
            for i, j in itertools.product(range(lower.i, self.n + 1),
                                          range(lower.j, self.n + 1)):
                yield GridInterval(lower, Grade(i, j))

    def coordinates(self, a: Grade) -> typing.Tuple[int, int]:
        return a[0], a[1]

    def from_coordinates(self, coords) -> Grade:
        return Grade(coords[0], coords[1])


class Path(object):
    """
    A monotone lattice path from ``(0, 0)`` to ``(n, n)``.

    ``steps`` holds ``2n`` entries, each :data:`STEP_X` or :data:`STEP_Y`. Calling the path
    with an index ``x`` of the chain ``P_{2n}`` returns the grade it passes at that index.
    """

    def __init__(self, steps: typing.Sequence[int], n: int = None):
        steps = tuple(steps)
        if n is None:
            n = len(steps) // 2
        if len(steps) != 2 * n or any(s not in (STEP_X, STEP_Y) for s in steps):
            raise ValidationError("A path on the {0}x{0} grid needs {1} unit steps"
                                  .format(n, 2 * n))
        if steps.count(STEP_X) != n:
            raise ValidationError("Path does not end at ({0}, {0})".format(n))
        self.n = n
        self.steps = steps

    def __repr__(self):
        return "<Path {}>".format("".join("xy"[s] for s in self.steps))

    def __eq__(self, other):
        return isinstance(other, Path) and other.steps == self.steps

    def __hash__(self):
        return hash(self.steps)

    def __len__(self):
        return len(self.steps) + 1

    def __call__(self, x: int) -> Grade:
        return self.points[x]

    @cached_property
    def points(self) -> typing.Tuple[Grade, ...]:
        i = j = 0
        points = [Grade(0, 0)]
        for step in self.steps:
            if step == STEP_X:
                i += 1
            else:
                j += 1
            points.append(Grade(i, j))
        return tuple(points)

    @cached_property
    def reach_indices(self) -> typing.Tuple[typing.List[int], typing.List[int]]:
        """
        For every column and every row, the first index at which the path reaches it.
        """
        reach_x, reach_y = [0] * (self.n + 1), [0] * (self.n + 1)
        for x in range(1, len(self.points)):
            i, j = self.points[x]
            if self.points[x - 1].i != i:
                reach_x[i] = x
            if self.points[x - 1].j != j:
                reach_y[j] = x
        return reach_x, reach_y

    @cached_property
    def chain(self) -> Chain:
        return Chain(2 * self.n)

    @classmethod
    def left_top(cls, n: int) -> "Path":
        """
        Up the left edge, then along the top row.
        """
        return cls([STEP_Y] * n + [STEP_X] * n, n)

    @classmethod
    def bottom_right(cls, n: int) -> "Path":
        """
        Along the bottom row, then up the right edge.
        """
        return cls([STEP_X] * n + [STEP_Y] * n, n)

    @classmethod
    def random(cls, n: int, rng: np.random.Generator = None) -> "Path":
        rng = rng if rng is not None else np.random.default_rng()
        steps = rng.permutation([STEP_X] * n + [STEP_Y] * n)
        return cls([int(s) for s in steps], n)
