"""
Brute-force birth-death functions and diagrams, used as ground truth.

Everything here works from dense boundary matrices over ``galois.GF(p)`` and never touches
the sparse reduction code, so agreement between the two is meaningful.
"""
import functools
import itertools
import logging
import typing

import galois
import numpy as np

from bigradedpd.complex.bifiltration import Bifiltration, OneFiltration
from bigradedpd.diagram import SignedDiagram
from bigradedpd.exc import CapExceededError
from bigradedpd.poset.grades import Grade, GridInterval
from bigradedpd.poset.mobius import IntervalFunction

logger = logging.getLogger(__name__)

Filtration = typing.Union[Bifiltration, OneFiltration]


@functools.lru_cache()
def _gf(p: int):
    return galois.GF(p)


def _rank(GF, matrix: np.ndarray) -> int:
    if matrix.size == 0:
        return 0
    return int(np.linalg.matrix_rank(GF(matrix)))


def _coordinates(x) -> typing.Tuple[int, ...]:
    return (x,) if isinstance(x, int) else tuple(x)


class BirthDeathOracle(object):
    """
    Evaluates ``ZB[a, g] = dim(Z_d F(a) ∩ B_d F(g))`` for one homology dimension by dense
    elimination, with ``ZB[a, top] = dim Z_d F(a)``.

    :param filtration: A :class:`Bifiltration` or a :class:`OneFiltration`.
    :param dim: The homology dimension ``d``.
    :param field: The field characteristic.
    """

    def __init__(self, filtration: Filtration, dim: int, field: int = 2):
        self.filtration = filtration
        self.dim = dim
        self.p = int(getattr(field, "p", field))
        self.GF = _gf(self.p)
        self.poset = filtration.grid if isinstance(filtration, Bifiltration) else filtration.chain
        complex_ = filtration.complex
        self._cells = {k: [s.id for s in complex_ if s.dim == k] for k in (dim - 1, dim, dim + 1)}
        self._boundary = {k: self._dense_boundary(k) for k in (dim, dim + 1)}
        self._zb_cache = {}
        self._present_cache = {}

    def _dense_boundary(self, k: int) -> np.ndarray:
        rows = {sid: r for r, sid in enumerate(self._cells[k - 1])}
        matrix = np.zeros((len(self._cells[k - 1]), len(self._cells[k])), dtype=np.int64)
        for c, sid in enumerate(self._cells[k]):
            for face, sign in self.filtration.complex.facets(sid):
                matrix[rows[face], c] = sign % self.p
        return matrix

    def present(self, a) -> typing.FrozenSet[int]:
        present = self._present_cache.get(a)
        if present is None:
            present = self._present_cache[a] = frozenset(self.filtration.complex_at(a))
        return present

    def _columns(self, k: int, present: typing.FrozenSet[int]) -> typing.List[int]:
        return [c for c, sid in enumerate(self._cells[k]) if sid in present]

    def cycle_dimension(self, present: typing.FrozenSet[int]) -> int:
        cols = self._columns(self.dim, present)
        if self.dim == 0:
            return len(cols)
        return len(cols) - _rank(self.GF, self._boundary[self.dim][:, cols])

    def intersection_dimension(self, at: typing.FrozenSet[int],
                               by: typing.FrozenSet[int]) -> int:
        """
        ``dim Z(at) ∩ B(by)``. Boundaries are cycles, so this is the dimension of the
        boundaries supported on ``at``: ``dim B(by)`` minus the rank of their part outside
        ``at``. It equals ``dim Z + dim B - dim(Z + B)``.
        """
        boundary = self._boundary[self.dim + 1][:, self._columns(self.dim + 1, by)]
        outside = [r for r, sid in enumerate(self._cells[self.dim]) if sid not in at]
        return _rank(self.GF, boundary) - _rank(self.GF, boundary[outside, :])

    def zb(self, a, g) -> int:
        """
        The birth-death function at ``[a, g]``.
        """
        at = self.present(a)
        if tuple(_coordinates(g)) == tuple(_coordinates(self.poset.top)):
            key = (at, None)
        else:
            key = (at, self.present(g))
        value = self._zb_cache.get(key)
        if value is None:
            if key[1] is None:
                value = self.cycle_dimension(at)
            else:
                value = self.intersection_dimension(at, key[1])
            self._zb_cache[key] = value
        return value

    def _zb_or_zero(self, a: typing.Tuple[int, ...], g: typing.Tuple[int, ...]) -> int:
        if any(x < 0 for x in a):
            return 0
        from_coords = self.poset.from_coordinates
        return self.zb(from_coords(a), from_coords(g))

    def table(self) -> IntervalFunction:
        """
        ``ZB`` on every interval of the poset.
        """
        return IntervalFunction.from_callable(self.poset, lambda iv: self.zb(*iv))

    def inversion(self, interval: GridInterval) -> int:
        """
        The alternating sum of ``ZB`` over the admissible shifts of ``interval``: a lower
        coordinate may drop while it stays non-negative, an upper coordinate while it stays
        at or above the lower one.
        """
        c, d = _coordinates(interval.lower), _coordinates(interval.upper)
        options = []
        for ck, dk in zip(c, d):
            axis = [(1, 0, 0)]
            if ck >= 1:
                axis.append((-1, 1, 0))
            if dk - 1 >= ck:
                axis.append((-1, 0, 1))
                if ck >= 1:
                    axis.append((1, 1, 1))
            options.append(axis)
        total = 0
        for combo in itertools.product(*options):
            sign = 1
            for s, _, _ in combo:
                sign *= s
            lower = tuple(ck - i for ck, (_, i, _) in zip(c, combo))
            upper = tuple(dk - j for dk, (_, _, j) in zip(d, combo))
            total += sign * self._zb_or_zero(lower, upper)
        return total

    def diagram(self) -> IntervalFunction:
        """
        The Möbius inversion of ``ZB`` over every interval.
        """
        return IntervalFunction.from_callable(self.poset, self.inversion)

    # path formulas
    def wxyz(self, w, x, y, z) -> int:
        """
        The 1D inversion ``xz - xy - wz + wy`` for ``F(w) ⊆ F(x) ⊆ F(y) ⊆ F(z)``.
        """
        return self.zb(x, z) - self.zb(x, y) - self.zb(w, z) + self.zb(w, y)

    def square_grades(self, d: Grade, h: Grade) -> typing.Dict[str, Grade]:
        """
        The eight grades around ``d`` and ``h``: ``a = d - (1, 1)``, ``b`` left of ``d``,
        ``c`` below ``d``, and likewise ``e, f, g`` for ``h``.
        """
        return {"a": d.shifted(-1, -1), "b": d.shifted(-1, 0), "c": d.shifted(0, -1), "d": d,
                "e": h.shifted(-1, -1), "f": h.shifted(-1, 0), "g": h.shifted(0, -1), "h": h}

    def path_expressions(self, d: Grade, h: Grade) -> typing.List[int]:
        """
        The four two-path differences and the nine-term sum, each equal to the diagram
        value at ``[d, h]`` when ``(1, 1) <= d <= h - (1, 1)``.
        """
        s = self.square_grades(d, h)

        def q(word: str) -> int:
            return self.wxyz(*(s[ch] for ch in word))

        return [
            (q("cdfh") - q("abfh")) - (q("cdeg") - q("abeg")),
            (q("cdgh") - q("abgh")) - (q("cdef") - q("abef")),
            (q("bdfh") - q("acfh")) - (q("bdeg") - q("aceg")),
            (q("bdgh") - q("acgh")) - (q("bdef") - q("acef")),
            q("adeh") - q("adef") - q("adeg") - q("abeh") - q("aceh")
            + q("abef") + q("abeg") + q("acef") + q("aceg"),
        ]

    def product_formula(self, d: Grade, h: Grade) -> typing.Tuple[int, int, int]:
        """
        ``(adeh, B, D)`` with ``B = 1 - abeh - aceh`` and ``D = 1 - adef - adeg``.
        """
        s = self.square_grades(d, h)

        def q(word: str) -> int:
            return self.wxyz(*(s[ch] for ch in word))

        return q("adeh"), 1 - q("abeh") - q("aceh"), 1 - q("adef") - q("adeg")

    def path_products_hold(self, d: Grade, h: Grade) -> bool:
        """
        When ``adeh = 1``: ``abeh adef = abef``, ``abeh adeg = abeg``, ``aceh adef = acef``,
        ``aceh adeg = aceg``.
        """
        s = self.square_grades(d, h)

        def q(word: str) -> int:
            return self.wxyz(*(s[ch] for ch in word))

        if q("adeh") != 1:
            return True
        return (q("abeh") * q("adef") == q("abef") and q("abeh") * q("adeg") == q("abeg") and
                q("aceh") * q("adef") == q("acef") and q("aceh") * q("adeg") == q("aceg"))


def _check_cap(b: Filtration, cap: typing.Optional[int]):
    if cap is not None and b.n > cap:
        raise CapExceededError("Grid size {} exceeds the oracle cap {}".format(b.n, cap))


def zb(b: Filtration, d: int, interval: GridInterval, field: int = 2) -> int:
    """
    ``dim(Z_d F(a) ∩ B_d F(g))`` for ``interval = [a, g]``; ``dim Z_d F(a)`` when ``g`` is top.
    """
    return BirthDeathOracle(b, d, field).zb(*interval)


def birth_death_table(b: Filtration, d: int, field: int = 2) -> IntervalFunction:
    return BirthDeathOracle(b, d, field).table()


def brute_diagram(b: Bifiltration, dims: typing.Iterable[int] = None, field: int = 2,
                  cap: int = None) -> SignedDiagram:
    """
    The generalized persistence diagram by inverting ``ZB`` on every grid interval.

    :param dims: Homology dimensions; defaults to all dimensions of the complex.
    :param cap: Refuse grids larger than this.
    """
    _check_cap(b, cap)
    if dims is None:
        dims = range(b.complex.dimension + 1)
    diagram = SignedDiagram(b.grid)
    for d in dims:
        oracle = BirthDeathOracle(b, d, field)
        for interval, value in oracle.diagram().items():
            diagram.add(d, interval.lower, interval.upper, value)
        logger.debug("Oracle dimension {}: {} birth-death evaluations".format(
            d, len(oracle._zb_cache)))
    return diagram


def diagram_1d(f: OneFiltration, d: int, field: int = 2) -> IntervalFunction:
    """
    The persistence diagram of a 1-filtration by the four-term inversion of ``ZB``.
    """
    return BirthDeathOracle(f, d, field).diagram()


def wxyz(b: Filtration, d: int, w, x, y, z, field: int = 2) -> int:
    return BirthDeathOracle(b, d, field).wxyz(w, x, y, z)
