"""
Birth curves.

The birth curve of a negative simplex at path step ``u -> v`` is the staircase bounding the
grades ``x <= u`` at which the class it kills is already born. It is stored as a column
profile: ``profile[x]`` is the lowest row of the curve's upset in column ``x`` (``None`` if
the column holds no point of it). Profiles never increase from left to right.
"""
import typing

import numpy as np

from bigradedpd.matrix.sparse import Key, SparseColumn
from bigradedpd.poset.grades import Grade

Profile = typing.List[typing.Optional[int]]


def restrict(profile: Profile, max_column: int, max_row: int) -> Profile:
    """
    The profile cut down to columns ``<= max_column`` and rows ``<= max_row``.
    """
    return [y if y is not None and y <= max_row else None for y in profile[:max_column + 1]]


def lower_corner_columns(profile: Profile) -> typing.List[int]:
    previous, columns = None, []
    for x, y in enumerate(profile):
        if y is not None and (previous is None or y < previous):
            columns.append(x)
        previous = y
    return columns


def corners(profile: Profile) -> typing.Tuple[typing.List[Grade], typing.List[Grade]]:
    """
    The lower and upper corners of a profile.
    """
    lower, upper = [], []
    previous = None
    for x, y in enumerate(profile):
        if y is not None and (previous is None or y < previous):
            lower.append(Grade(x, y))
            if previous is not None:
                upper.append(Grade(x, previous))
        previous = y
    return lower, upper


def mobius(profile: Profile) -> typing.List[typing.Tuple[Grade, int]]:
    """
    The Möbius inversion of the upset's indicator: ``+1`` at lower corners, ``-1`` at upper
    corners.
    """
    lower, upper = corners(profile)
    return [(c, 1) for c in lower] + [(c, -1) for c in upper]


def is_staircase(profile: Profile) -> bool:
    previous = None
    for y in profile:
        if previous is not None and (y is None or y > previous):
            return False
        previous = y
    return True


class BirthCurve(object):
    """
    The birth curve of one negative simplex, with a chain record at every lower corner.

    A chain record is a chain with coefficient 1 on the owner, supported in the complex at the
    end of the owner's step, whose boundary is supported at the corner.
    """

    def __init__(self, owner: Key, n: int):
        self.owner = owner
        self.profile = [None] * (n + 1)  # type: Profile
        #: lower corner column -> chain record
        self.chains = {}  # type: typing.Dict[int, SparseColumn]

    def __repr__(self):
        lower, _ = corners(self.profile)
        return "<BirthCurve of {} corners={}>".format(self.owner, lower)

    def contains(self, a: Grade) -> bool:
        y = self.profile[a[0]]
        return y is not None and y <= a[1]

    def restricted(self, max_column: int, max_row: int) -> Profile:
        return restrict(self.profile, max_column, max_row)

    def corner_column_at(self, x: int, profile: Profile = None) -> int:
        """
        The column of the lower corner below the profile point in column ``x``.
        """
        profile = self.profile if profile is None else profile
        while x > 0 and profile[x - 1] == profile[x]:
            x -= 1
        return x

    def chain_at(self, x: int, profile: Profile = None) -> SparseColumn:
        return self.chains[self.corner_column_at(x, profile)]

    def truncate_row(self, row: int, max_column: int):
        """
        Drops the points of row ``row`` in columns ``<= max_column``.
        """
        for x in range(min(max_column, len(self.profile) - 1) + 1):
            if self.profile[x] == row:
                self.profile[x] = None
        self.prune_chains()

    def replace(self, profile: Profile, chains: typing.Dict[int, SparseColumn]):
        """
        Replaces the leading columns of the profile (and every chain record).
        """
        self.profile[:len(profile)] = profile
        for x in range(len(profile), len(self.profile)):
            self.profile[x] = None
        self.chains = dict(chains)
        self.prune_chains()

    def prune_chains(self):
        keep = set(lower_corner_columns(self.profile))
        for x in [x for x in self.chains if x not in keep]:
            del self.chains[x]


class EssentialCurve(object):
    """
    The grades at which the essential class carried by an implicit cell is alive.

    Grades are recorded one at a time as the sweep visits them, in a dense table.
    """

    def __init__(self, cell: Key, n: int):
        self.cell = cell
        self.membership = np.zeros((n + 1, n + 1), dtype=np.int64)

    def __repr__(self):
        return "<EssentialCurve of {} size={}>".format(self.cell, int(self.membership.sum()))

    def mark(self, a: Grade, present: bool):
        self.membership[a[0], a[1]] = 1 if present else 0

    def mobius(self) -> typing.List[typing.Tuple[Grade, int]]:
        """
        Nonzero values of the four-point Möbius inversion of the table.
        """
        table = self.membership
        padded = np.zeros((table.shape[0] + 1, table.shape[1] + 1), dtype=np.int64)
        padded[1:, 1:] = table
        inverted = padded[1:, 1:] - padded[:-1, 1:] - padded[1:, :-1] + padded[:-1, :-1]
        return [(Grade(int(i), int(j)), int(inverted[i, j])) for i, j in zip(*np.nonzero(inverted))]
