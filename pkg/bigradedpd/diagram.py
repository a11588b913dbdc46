"""
Signed generalized persistence diagrams.
"""
import json
import typing

from bigradedpd.poset.grades import GridInterval, lex_key
from bigradedpd.poset.mobius import IntervalFunction, Poset


class SignedDiagram(object):
    """
    A generalized persistence diagram: for every homology dimension, an integer valued
    function on the intervals of a poset.

    Values are summed on insertion and zero entries are dropped, so two diagrams compare
    equal exactly when they agree on every interval.
    """

    def __init__(self, poset: Poset):
        self.poset = poset
        self._by_dimension = {}  # type: typing.Dict[int, IntervalFunction]

    def __repr__(self):
        return "<SignedDiagram over {} C={}>".format(self.poset, self.support_size)

    def add(self, dim: int, lower, upper, value: int = 1):
        """
        Adds ``value`` to the entry of ``[lower, upper]`` in dimension ``dim``.
        """
        if not value:
            return
        fn = self._by_dimension.get(dim)
        if fn is None:
            fn = self._by_dimension[dim] = IntervalFunction(self.poset)
        fn.add(GridInterval(lower, upper), value)
        if not len(fn):
            del self._by_dimension[dim]

    def __getitem__(self, key) -> int:
        dim, interval = key
        fn = self._by_dimension.get(dim)
        return fn[interval] if fn is not None else 0

    def for_dimension(self, dim: int) -> IntervalFunction:
        """
        The interval function of one homology dimension (a copy).
        """
        fn = self._by_dimension.get(dim)
        return IntervalFunction(self.poset, dict(fn.items()) if fn is not None else None)

    @property
    def dimensions(self) -> typing.List[int]:
        return sorted(self._by_dimension)

    @property
    def support_size(self) -> int:
        """
        The number of intervals with a nonzero value, over all dimensions.
        """
        return sum(len(fn) for fn in self._by_dimension.values())

    def __len__(self):
        return self.support_size

    def items(self) -> typing.Iterator[typing.Tuple[int, GridInterval, int]]:
        """
        Iterates ``(dim, interval, value)`` by dimension, then lexicographic interval.
        """
        for dim in self.dimensions:
            for interval, value in self._by_dimension[dim].items():
                yield dim, interval, value

    def __eq__(self, other):
        if not isinstance(other, SignedDiagram):
            return NotImplemented
        return list(self.items()) == list(other.items())

    def restricted(self, dims: typing.Iterable[int]) -> "SignedDiagram":
        dims = set(dims)
        result = SignedDiagram(self.poset)
        for dim, (lower, upper), value in self.items():
            if dim in dims:
                result.add(dim, lower, upper, value)
        return result

    def pushforward(self, f: typing.Callable, target: Poset) -> "SignedDiagram":
        """
        Pushes every dimension along the grade map ``f`` onto ``target``.
        """
        result = SignedDiagram(target)
        for dim, (lower, upper), value in self.items():
            result.add(dim, f(lower), f(upper), value)
        return result

    def first_difference(self, other: "SignedDiagram") \
            -> typing.Optional[typing.Tuple[int, GridInterval, int, int]]:
        """
        The first ``(dim, interval, mine, theirs)`` on which the two diagrams disagree.
        """
        keys = {(dim, iv) for dim, iv, _ in self.items()}
        keys.update((dim, iv) for dim, iv, _ in other.items())
        for dim, interval in sorted(keys, key=lambda k: (k[0], lex_key(k[1]))):
            mine, theirs = self[dim, interval], other[dim, interval]
            if mine != theirs:
                return dim, interval, mine, theirs
        return None

    def records(self, labels=None) -> typing.Iterator[dict]:
        """
        Yields one record per entry, with grades relabelled through ``labels`` if given.

        :param labels: A pair of per-axis sequences mapping grid coordinates to labels.
        """
        for dim, (lower, upper), value in self.items():
            coords = list(_flatten(lower)) + list(_flatten(upper))
            if labels is not None:
                axes = (0, 1) * (len(coords) // 2) if len(coords) == 4 else (0,) * len(coords)
                coords = [labels[axis][c] for axis, c in zip(axes, coords)]
            yield {"dim": dim, "mult": value, "lower": coords[:len(coords) // 2],
                   "upper": coords[len(coords) // 2:]}

    def to_lines(self, labels=None) -> typing.List[str]:
        """
        Formats the diagram as ``d <dim> <mult> <a1> <a2> <b1> <b2>`` lines.
        """
        return ["d {} {} {}".format(r["dim"], r["mult"],
                                    " ".join(_format_coordinate(c)
                                             for c in r["lower"] + r["upper"]))
                for r in self.records(labels)]

    def to_json_lines(self, labels=None) -> typing.List[str]:
        return [json.dumps(r, sort_keys=True) for r in self.records(labels)]


def _flatten(grade) -> typing.Tuple[int, ...]:
    if isinstance(grade, int):
        return (grade,)
    return tuple(grade)


def _format_coordinate(value) -> str:
    if isinstance(value, float) and value.is_integer():
        return str(int(value))
    return str(value)
