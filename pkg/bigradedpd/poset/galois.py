"""
Galois connections between posets, and the pushforward of diagrams along them.

For a monotone map ``g`` from a poset Q into a poset P, the lower adjoint ``f`` sends a grade
``a`` of P to the least ``x`` of Q with ``a <= g(x)``. Pushing a diagram on Int P along
``f`` sums its values over the fibres of ``[a, b] -> [f(a), f(b)]``.
"""
import bisect
import logging
import typing

from cached_property import cached_property

from bigradedpd.exc import ValidationError
from bigradedpd.poset.grades import Grade, GridInterval, Path
from bigradedpd.poset.mobius import IntervalFunction, Poset

logger = logging.getLogger(__name__)


def path_galois(p: Path, a: Grade) -> int:
    """
    The lower adjoint of a path ``p``: the least index ``x`` with ``a <= p(x)``.

    Both coordinates of the path grow monotonically, so ``x`` is the later of the indices
    where the path reaches column ``a.i`` and row ``a.j``.
    """
    reach_x, reach_y = p.reach_indices
    return max(reach_x[a[0]], reach_y[a[1]])


class RefinementMap(object):
    """
    The ceiling map from a refined grid onto a coarse grid, and its inclusion adjoint.

    ``parents[k][u]`` is the coarse coordinate that refined coordinate ``u`` of axis ``k``
    rounds up to. Both axes share the refined size ``fine_n`` and the coarse size
    ``coarse_n``; the refined top must round up to the coarse top.
    """

    def __init__(self, parents_x: typing.Sequence[int], parents_y: typing.Sequence[int],
                 coarse_n: int):
        parents = (tuple(parents_x), tuple(parents_y))
        if len(parents[0]) != len(parents[1]):
            raise ValidationError("Refined axes differ in size")
        for axis in parents:
            if axis[0] != 0 or axis[-1] != coarse_n:
                raise ValidationError("Refinement must fix bottom and top")
            if any(b < a for a, b in zip(axis, axis[1:])):
                raise ValidationError("Refinement parents must be non-decreasing")
        self.parents = parents
        self.coarse_n = coarse_n
        self.fine_n = len(parents[0]) - 1

    def __repr__(self):
        return "<RefinementMap {} -> {}>".format(self.fine_n, self.coarse_n)

    @classmethod
    def identity(cls, n: int) -> "RefinementMap":
        return cls(range(n + 1), range(n + 1), n)

    @cached_property
    def is_identity(self) -> bool:
        return self.fine_n == self.coarse_n and \
            all(axis == tuple(range(self.fine_n + 1)) for axis in self.parents)

    def ceiling(self, a: Grade) -> Grade:
        """
        The lower adjoint ``f``: refined grade to coarse grade.
        """
        return Grade(self.parents[0][a[0]], self.parents[1][a[1]])

    __call__ = ceiling

    def inclusion(self, x: Grade) -> Grade:
        """
        The upper adjoint ``g``: the largest refined grade rounding up to at most ``x``.
        """
        return Grade(bisect.bisect_right(self.parents[0], x[0]) - 1,
                     bisect.bisect_right(self.parents[1], x[1]) - 1)


def refinement_galois(parents_x: typing.Sequence[int], parents_y: typing.Sequence[int],
                      coarse_n: int) -> RefinementMap:
    """
    Builds the ceiling map of a refinement from the parent coordinate of every refined
    coordinate.
    """
    return RefinementMap(parents_x, parents_y, coarse_n)


def is_galois_connection(f: typing.Callable, g: typing.Callable, source: Poset,
                         target: Poset) -> bool:
    """
    Checks ``f(a) <= x  <=>  a <= g(x)`` for every ``a`` of ``source`` and ``x`` of ``target``.
    """
    for a in source.elements():
        fa = f(a)
        for x in target.elements():
            if target.leq(fa, x) != source.leq(a, g(x)):
                return False
    return True


def pushforward(diagram, f: typing.Callable, target: Poset):
    """
    Pushes a diagram along the lower adjoint ``f``.

    :param diagram: An :class:`IntervalFunction`, or anything with a ``pushforward`` method
        (a signed diagram, pushed dimension by dimension).
    :param f: The grade map, monotone and the lower half of a Galois connection.
    :param target: The poset the result lives on.
    """
    if not isinstance(diagram, IntervalFunction):
        return diagram.pushforward(f, target)

    result = IntervalFunction(target)
    for (a, b), value in diagram.items():
        result.add(GridInterval(f(a), f(b)), value)
    return result
