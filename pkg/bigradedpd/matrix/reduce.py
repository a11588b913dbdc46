"""
Boundary matrices and the ``R = DV`` persistence reduction.
"""
import collections
import logging
import typing

from bigradedpd.complex.bifiltration import OneFiltration
from bigradedpd.diagram import SignedDiagram
from bigradedpd.exc import InvariantViolation
from bigradedpd.matrix.field import PrimeField, coerce_field
from bigradedpd.matrix.sparse import Key, SparseColumn

logger = logging.getLogger(__name__)


class ImplicitCell(typing.NamedTuple):
    """
    The column that kills an essential simplex after all real simplices.
    """
    of: int

    def __repr__(self):
        return "{}^".format(self.of)


class BoundaryMatrix(typing.NamedTuple):
    """
    The boundary matrix of a filtration: columns keyed by simplex, in filtration order.
    """
    field: PrimeField
    order: typing.List[Key]
    columns: typing.Dict[Key, SparseColumn]
    dims: typing.Dict[Key, int]


def boundary_matrix(f: OneFiltration, field=2) -> BoundaryMatrix:
    """
    Builds ``D`` for a filtration: column ``sigma`` holds the signed boundary of ``sigma``.
    """
    field = coerce_field(field)
    columns = {}
    for sid in f.ids:
        columns[sid] = SparseColumn(field, {face: sign for face, sign in f.complex.facets(sid)})
    return BoundaryMatrix(field, list(f.ids), columns,
                          {sid: f.complex[sid].dim for sid in f.ids})


class RVDecomposition(object):
    """
    A decomposition ``R = DV`` with ``R`` reduced and ``V`` upper-triangular and invertible.

    Columns and rows share one key space (simplex ids and :class:`ImplicitCell` keys); the
    current filtration order lives in ``order`` and ``position``.
    """

    def __init__(self, d: BoundaryMatrix):
        self.field = d.field
        self.order = list(d.order)  # type: typing.List[Key]
        self.position = {key: k for k, key in enumerate(self.order)}
        self.dims = dict(d.dims)
        self.D = {key: col.copy() for key, col in d.columns.items()}
        self.R = {key: col.copy() for key, col in d.columns.items()}
        self.V = {key: SparseColumn.unit(self.field, key) for key in self.order}
        #: low row of a nonzero column -> that column
        self.pivots = {}  # type: typing.Dict[Key, Key]
        self.counters = collections.Counter()

    def __repr__(self):
        return "<RVDecomposition m={} pairs={}>".format(len(self.order), len(self.pivots))

    def __len__(self):
        return len(self.order)

    def low(self, key: Key) -> typing.Optional[Key]:
        return self.R[key].low(self.position)

    def is_positive(self, key: Key) -> bool:
        return not self.R[key]

    def partner(self, key: Key) -> typing.Optional[Key]:
        """
        The simplex ``key`` is paired with, or ``None`` if it is unpaired.
        """
        if self.R[key]:
            return self.low(key)
        return self.pivots.get(key)

    def pairs(self) -> typing.List[typing.Tuple[Key, Key]]:
        """
        ``(positive, negative)`` pairs sorted by the position of the positive simplex.
        """
        return sorted(((row, col) for row, col in self.pivots.items()),
                      key=lambda pair: self.position[pair[0]])

    def unpaired(self) -> typing.List[Key]:
        return [key for key in self.order if not self.R[key] and key not in self.pivots]

    def add_column(self, target: Key, source: Key, coefficient: int):
        """
        ``R[target] += c R[source]`` and ``V[target] += c V[source]``.
        """
        ops = self.R[target].add_scaled(self.R[source], coefficient)
        ops += self.V[target].add_scaled(self.V[source], coefficient)
        self.counters["column_additions"] += 1
        self.counters["field_ops"] += ops

    def normalized_v(self, key: Key) -> SparseColumn:
        """
        ``V[key]`` scaled to coefficient 1 on its diagonal.
        """
        col = self.V[key]
        return col.scaled(self.field.inv(col[key]))

    def _reduce_column(self, key: Key):
        field = self.field
        column = self.R[key]
        low = column.low(self.position)
        while low is not None and low in self.pivots:
            other = self.pivots[low]
            coefficient = field.neg(field.div(column[low], self.R[other][low]))
            self.add_column(key, other, coefficient)
            low = column.low(self.position)
        if low is not None:
            self.pivots[low] = key

    def reset_pivots(self):
        self.pivots = {}
        for key in self.order:
            low = self.low(key)
            if low is not None:
                if low in self.pivots:
                    raise InvariantViolation("Rows {} share low {}".format(
                        (self.pivots[low], key), low))
                self.pivots[low] = key

    def verify(self):
        """
        Re-checks every invariant of the decomposition.

        :raises InvariantViolation: on the first broken one.
        """
        field = self.field
        for key in self.order:
            v = self.V[key]
            if not v[key]:
                raise InvariantViolation("V has a zero diagonal at {}".format(key))
            for row in v:
                if self.position[row] > self.position[key]:
                    raise InvariantViolation("V is not upper-triangular at ({}, {})"
                                             .format(row, key))
            product = SparseColumn(field)
            for row, value in v.items():
                product.add_scaled(self.D[row], value)
            if product != self.R[key]:
                raise InvariantViolation("R != DV in column {}".format(key))
        lows = {}
        for key in self.order:
            low = self.low(key)
            if low is None:
                continue
            if low in lows:
                raise InvariantViolation("Columns {} and {} share low {}"
                                         .format(lows[low], key, low))
            lows[low] = key
        if lows != self.pivots:
            raise InvariantViolation("Stale pivot table")
        for row, key in lows.items():
            if self.R[row]:
                raise InvariantViolation("Column {} has its low on the negative {}"
                                         .format(key, row))


def reduce(d: BoundaryMatrix) -> RVDecomposition:
    """
    The standard persistence reduction, adding columns only from left to right.
    """
    rv = RVDecomposition(d)
    for key in rv.order:
        rv._reduce_column(key)
    logger.debug("Reduced {} columns with {} column additions".format(
        len(rv.order), rv.counters["column_additions"]))
    return rv


def add_implicit_cells(rv: RVDecomposition, unpaired: typing.Iterable[Key] = None) \
        -> RVDecomposition:
    """
    Appends a cell ``sigma^`` for every unpaired simplex ``sigma``, after all real cells.

    ``sigma^`` fills the essential cycle ``V[sigma]``: ``R[sigma^] = D[sigma^] = V[sigma]``
    and ``V[sigma^] = sigma^``. Its boundary is a cycle with low ``sigma``, so transpositions
    hand it over to whichever simplex creates the class later on.
    """
    if unpaired is None:
        unpaired = rv.unpaired()
    for sid in sorted(unpaired, key=rv.position.__getitem__):
        cell = ImplicitCell(sid)
        rv.position[cell] = len(rv.order)
        rv.order.append(cell)
        rv.dims[cell] = rv.dims[sid] + 1
        rv.D[cell] = rv.V[sid].copy()
        rv.R[cell] = rv.V[sid].copy()
        rv.V[cell] = SparseColumn.unit(rv.field, cell)
        rv.pivots[sid] = cell
    return rv


def persistence_diagram_1d(f: OneFiltration, field=2) -> SignedDiagram:
    """
    The persistence diagram of a 1-filtration read off its pairing: ``[birth, death]`` per
    pair and ``[birth, n]`` per essential simplex.
    """
    rv = reduce(boundary_matrix(f, field))
    steps = f.steps
    diagram = SignedDiagram(f.chain)
    for positive, negative in rv.pairs():
        diagram.add(rv.dims[positive], steps[positive], steps[negative])
    for key in rv.unpaired():
        diagram.add(rv.dims[key], steps[key], f.n)
    return diagram
