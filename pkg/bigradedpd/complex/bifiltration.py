"""
Bifiltrations: simplicial complexes whose simplices appear along staircase upsets of the grid.
"""
import logging
import typing

import numpy as np
from cached_property import cached_property

from bigradedpd.complex.simplicial import SimplicialComplex
from bigradedpd.exc import DegenerateFiltrationError, ValidationError
from bigradedpd.poset.galois import RefinementMap, path_galois
from bigradedpd.poset.grades import Chain, Grade, Grid, Path

logger = logging.getLogger(__name__)


class Violation(typing.NamedTuple):
    """
    One broken invariant of a bifiltration, as reported by :meth:`Bifiltration.validate`.
    """
    kind: str
    simplex: int
    message: str

    def __str__(self):
        return "{} (simplex {}): {}".format(self.kind, self.simplex, self.message)


class AppearanceCurve(object):
    """
    The staircase bounding the upset of grades at which a simplex is present.

    :param lower_corners: The minimal grades of the upset. They are stored sorted by their
        first coordinate; an antichain then has strictly decreasing second coordinates.
    """

    def __init__(self, lower_corners: typing.Iterable[typing.Tuple[int, int]]):
        self.lower_corners = tuple(sorted(Grade(*c) for c in lower_corners))

    def __repr__(self):
        return "<AppearanceCurve {}>".format(list(self.lower_corners))

    def __eq__(self, other):
        return isinstance(other, AppearanceCurve) and other.lower_corners == self.lower_corners

    def __hash__(self):
        return hash(self.lower_corners)

    def __len__(self):
        return len(self.lower_corners)

    @cached_property
    def is_antichain(self) -> bool:
        return all(a.i < b.i and a.j > b.j
                   for a, b in zip(self.lower_corners, self.lower_corners[1:]))

    @cached_property
    def upper_corners(self) -> typing.Tuple[Grade, ...]:
        """
        Grades whose left and lower neighbours are in the upset but whose diagonal
        neighbour is not.
        """
        return tuple(Grade(b.i, a.j) for a, b in zip(self.lower_corners, self.lower_corners[1:]))

    def contains(self, a: Grade) -> bool:
        return any(c.i <= a[0] and c.j <= a[1] for c in self.lower_corners)

    def is_subset_of(self, other: "AppearanceCurve") -> bool:
        """
        Whether this upset lies inside the upset of ``other``.
        """
        return all(other.contains(c) for c in self.lower_corners)

    def membership(self, n: int) -> np.ndarray:
        """
        The upset as a boolean ``(n + 1) x (n + 1)`` table indexed ``[i, j]``.
        """
        xs, ys = np.meshgrid(np.arange(n + 1), np.arange(n + 1), indexing="ij")
        table = np.zeros((n + 1, n + 1), dtype=bool)
        for c in self.lower_corners:
            table |= (xs >= c.i) & (ys >= c.j)
        return table


class OneFiltration(object):
    """
    A filtration indexed by the chain ``0 < 1 < ... < n``.

    :param complex_: The underlying complex.
    :param order: ``(simplex id, step)`` pairs; the simplex is present from index ``step``
        on. Steps lie in ``[1, n]`` so the filtration is empty at 0 and full at ``n``.
    :param n: The top index; defaults to the largest step.
    """

    def __init__(self, complex_: SimplicialComplex,
                 order: typing.Iterable[typing.Tuple[int, int]], n: int = None):
        self.complex = complex_
        self.order = tuple(sorted(order, key=lambda e: (e[1], complex_[e[0]].dim, e[0])))
        if n is None:
            n = max((step for _, step in self.order), default=0)
        self.n = n
        self._validate()

    @classmethod
    def from_ids(cls, complex_: SimplicialComplex, ids: typing.Sequence[int]) -> "OneFiltration":
        """
        One simplex per step, in the given order.
        """
        return cls(complex_, [(sid, x + 1) for x, sid in enumerate(ids)], len(ids))

    def _validate(self):
        seen = {sid for sid, _ in self.order}
        if len(seen) != len(self.order) or seen != set(self.complex.ids):
            raise ValidationError("A filtration must list every simplex exactly once")
        steps = dict(self.order)
        for sid, step in self.order:
            if not 1 <= step <= self.n:
                raise ValidationError("Step {} of simplex {} outside [1, {}]"
                                      .format(step, sid, self.n))
            for face, _ in self.complex.facets(sid):
                if self.position[face] > self.position[sid] or steps[face] > step:
                    raise ValidationError("Face {} enters after simplex {}".format(face, sid))

    def __repr__(self):
        return "<OneFiltration m={} n={}>".format(len(self.order), self.n)

    def __len__(self):
        return len(self.order)

    @cached_property
    def ids(self) -> typing.List[int]:
        return [sid for sid, _ in self.order]

    @cached_property
    def position(self) -> typing.Dict[int, int]:
        return {sid: k for k, (sid, _) in enumerate(self.order)}

    @cached_property
    def steps(self) -> typing.Dict[int, int]:
        return dict(self.order)

    @cached_property
    def chain(self) -> Chain:
        return Chain(self.n)

    @cached_property
    def is_one_per_step(self) -> bool:
        return len({step for _, step in self.order}) == len(self.order)

    def complex_at(self, x: int) -> typing.Set[int]:
        return {sid for sid, step in self.order if step <= x}


class Bifiltration(object):
    """
    A simplicial complex with an appearance curve per simplex, on the grid ``[0, n]^2``.

    :param complex_: The complex.
    :param curves: Appearance curve (or list of lower corners) of every simplex id.
    :param n: The grid size; defaults to the largest corner coordinate.
    :param labels: Optional per-axis sequences naming the coordinates ``0..n`` for output.
    """

    def __init__(self, complex_: SimplicialComplex, curves: typing.Mapping[int, typing.Any],
                 n: int = None, labels=None):
        self.complex = complex_
        self.curves = {sid: c if isinstance(c, AppearanceCurve) else AppearanceCurve(c)
                       for sid, c in curves.items()}
        if n is None:
            n = max((max(c) for curve in self.curves.values() for c in curve.lower_corners),
                    default=0)
        self.n = n
        self.labels = labels

    def __repr__(self):
        return "<Bifiltration m={} n={}>".format(len(self.complex), self.n)

    @property
    def m(self) -> int:
        return len(self.complex)

    @cached_property
    def grid(self) -> Grid:
        return Grid(self.n)

    @cached_property
    def corner_count(self) -> int:
        return sum(len(c) for c in self.curves.values())

    def validate(self) -> typing.List[Violation]:
        """
        Reports every broken invariant; an empty list means the bifiltration is valid.
        """
        violations = []
        for simplex in self.complex:
            curve = self.curves.get(simplex.id)
            if curve is None or not len(curve):
                violations.append(Violation("empty curve", simplex.id,
                                            "simplex has no appearance curve"))
                continue
            for c in curve.lower_corners:
                if not (1 <= c.i <= self.n and 1 <= c.j <= self.n):
                    violations.append(Violation("out of range", simplex.id,
                                                "corner {} outside [1, {}]^2".format(c, self.n)))
            if not curve.is_antichain:
                violations.append(Violation("not an antichain", simplex.id,
                                            "corners {} are comparable or share a coordinate"
                                            .format(list(curve.lower_corners))))
        for sid in self.curves:
            if sid not in self.complex:
                violations.append(Violation("unknown simplex", sid, "curve for a missing simplex"))

        for simplex in self.complex:
            curve = self.curves.get(simplex.id)
            if curve is None or not len(curve):
                continue
            for face, _ in self.complex.facets(simplex.id):
                face_curve = self.curves.get(face)
                if face_curve is not None and len(face_curve) \
                        and not curve.is_subset_of(face_curve):
                    violations.append(Violation("face monotonicity", simplex.id,
                                                "appears before its face {}".format(face)))
        return violations

    def ensure_valid(self):
        violations = self.validate()
        if violations:
            raise ValidationError("Invalid bifiltration: {}".format(violations[0]), violations)

    def is_nondegenerate(self) -> bool:
        """
        True iff no two lower corners, over all curves, share a first or a second coordinate.
        """
        corners = [c for curve in self.curves.values() for c in curve.lower_corners]
        return len({c.i for c in corners}) == len(corners) == len({c.j for c in corners})

    @cached_property
    def is_staircase_normal(self) -> bool:
        """
        True iff each coordinate ``1..n`` carries exactly one lower corner on each axis.
        """
        corners = [c for curve in self.curves.values() for c in curve.lower_corners]
        return self.is_nondegenerate() and len(corners) == self.n

    def contains(self, sid: int, a: Grade) -> bool:
        return self.curves[sid].contains(a)

    def complex_at(self, a: Grade) -> typing.Set[int]:
        """
        The ids of the subcomplex present at grade ``a``.
        """
        return {sid for sid, curve in self.curves.items() if curve.contains(a)}

    @cached_property
    def counts(self) -> np.ndarray:
        """
        ``counts[i, j]`` is the number of simplices present at ``(i, j)``.
        """
        table = np.zeros((self.n + 1, self.n + 1), dtype=np.int64)
        for curve in self.curves.values():
            table += curve.membership(self.n)
        return table

    def restrict_to_path(self, p: Path) -> OneFiltration:
        """
        The 1-filtration seen along ``p``: each simplex enters at the first path index
        inside its upset.

        :raises DegenerateFiltrationError: if the bifiltration is degenerate.
        """
        if not self.is_nondegenerate():
            raise DegenerateFiltrationError("Path restriction needs a non-degenerate input")
        if p.n != self.n:
            raise ValidationError("Path of size {} on a grid of size {}".format(p.n, self.n))
        order = [(sid, min(path_galois(p, c) for c in curve.lower_corners))
                 for sid, curve in self.curves.items()]
        return OneFiltration(self.complex, order, 2 * self.n)

    def refine_to_nondegenerate(self) -> typing.Tuple["Bifiltration", RefinementMap]:
        """
        Splits shared coordinates so that every lower corner gets its own coordinate on
        each axis.

        Corners sharing a coordinate are ordered by (dimension, simplex id). Refined
        coordinate ``u`` rounds up to the coarse coordinate of the corner placed there. If a
        coarse top coordinate carries no corner, both axes get one extra corner-free top
        coordinate so that only the refined top rounds up to the coarse top.

        :return: The refined bifiltration and its ceiling map onto this grid.
        """
        self.ensure_valid()
        entries = [(sid, k, c) for sid, curve in self.curves.items()
                   for k, c in enumerate(curve.lower_corners)]
        refined_coords = {}
        parents = []
        for axis in (0, 1):
            ordered = sorted(entries, key=lambda e: (e[2][axis], self.complex[e[0]].dim, e[0]))
            axis_parents = [0]
            for u, (sid, k, c) in enumerate(ordered, start=1):
                refined_coords.setdefault((sid, k), [0, 0])[axis] = u
                axis_parents.append(c[axis])
            parents.append(axis_parents)

        if any(axis[-1] != self.n for axis in parents):
            for axis in parents:
                axis.append(self.n)

        fine_n = len(parents[0]) - 1
        curves = {sid: [] for sid in self.curves}
        for (sid, k), (u, v) in refined_coords.items():
            curves[sid].append((u, v))
        refined = Bifiltration(self.complex, curves, fine_n)
        refinement = RefinementMap(parents[0], parents[1], self.n)
        logger.debug("Refined grid {} -> {} ({} corners)".format(
            self.n, fine_n, len(entries)))
        return refined, refinement
