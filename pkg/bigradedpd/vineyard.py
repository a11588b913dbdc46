"""
Vineyard updates: exchanging two adjacent simplices of a reduced ``R = DV`` decomposition.

After :func:`transpose` the decomposition describes the filtration with the two simplices
swapped, is reduced again, and keeps ``V[alpha, beta] = 0`` for every crossing quadruple
``sigma < tau < alpha < beta`` with ``sigma`` paired to ``alpha`` and ``tau`` to ``beta``.
"""
import logging
import typing

from bigradedpd.exc import InvariantViolation, TranspositionError
from bigradedpd.matrix.reduce import ImplicitCell, RVDecomposition
from bigradedpd.matrix.sparse import Key

logger = logging.getLogger(__name__)

POSITIVE_POSITIVE = "positive/positive"
NEGATIVE_NEGATIVE = "negative/negative"
NEGATIVE_POSITIVE = "negative/positive"
POSITIVE_NEGATIVE = "positive/negative"

_case_numbers = {POSITIVE_POSITIVE: 1, NEGATIVE_NEGATIVE: 2, NEGATIVE_POSITIVE: 3,
                 POSITIVE_NEGATIVE: 3}


class TranspositionOutcome(typing.NamedTuple):
    """
    What happened when ``first`` (formerly at ``k``) and ``second`` (formerly at ``k + 1``)
    were exchanged.
    """
    case: str
    switched: bool
    first: Key
    second: Key
    #: partners of ``first`` and ``second`` before the exchange
    partners_before: typing.Tuple[typing.Optional[Key], typing.Optional[Key]]
    #: partners of ``first`` and ``second`` after the exchange
    partners_after: typing.Tuple[typing.Optional[Key], typing.Optional[Key]]

    @property
    def case_number(self) -> int:
        return _case_numbers[self.case]


def _span(rv: RVDecomposition, key: Key, partner: typing.Optional[Key]) -> typing.Tuple[int, int]:
    if partner is None:
        return rv.position[key], len(rv.order)
    return tuple(sorted((rv.position[key], rv.position[partner])))


def nested_or_disjoint(a: typing.Tuple[int, int], b: typing.Tuple[int, int]) -> bool:
    """
    Whether two index spans are nested or disjoint.
    """
    (a0, a1), (b0, b1) = a, b
    return a1 < b0 or b1 < a0 or (a0 <= b0 and b1 <= a1) or (b0 <= a0 and a1 <= b1)


def crosses(rv: RVDecomposition, earlier: Key, later: Key) -> bool:
    """
    Whether the pairs of two negative columns cross: ``partner(earlier) < partner(later) <
    earlier < later`` in the current order.
    """
    pos = rv.position
    low_e, low_l = rv.low(earlier), rv.low(later)
    if low_e is None or low_l is None:
        return False
    return pos[low_e] < pos[low_l] < pos[earlier] < pos[later]


def enforce_crossing_zero(rv: RVDecomposition, target: Key, source: Key):
    """
    Clears ``V[source, target]`` by subtracting a multiple of column ``source`` from column
    ``target``; ``R`` is updated in lockstep and stays reduced.

    :raises InvariantViolation: if ``source`` is not an earlier column with a lower low.
    """
    coefficient = rv.V[target][source]
    if not coefficient:
        return
    pos = rv.position
    low_t, low_s = rv.low(target), rv.low(source)
    if pos[source] >= pos[target] or low_s is None or low_t is None or pos[low_s] >= pos[low_t]:
        raise InvariantViolation("Cannot clear V[{}, {}]: columns are not a crossing pair"
                                 .format(source, target))
    field = rv.field
    rv.add_column(target, source, field.neg(field.div(coefficient, rv.V[source][source])))


def scrub_crossings(rv: RVDecomposition, column: Key) -> int:
    """
    Clears every entry of ``V[column]`` that sits on a column crossing ``column``, latest
    entry first. Clearing an entry only introduces entries at earlier rows, so this ends.

    :return: The number of entries cleared.
    """
    if rv.is_positive(column):
        return 0
    pos = rv.position
    cleared = 0
    while True:
        offending = [row for row in rv.V[column]
                     if row != column and not rv.is_positive(row) and crosses(rv, row, column)]
        if not offending:
            break
        enforce_crossing_zero(rv, column, max(offending, key=pos.__getitem__))
        cleared += 1
    if cleared > 1:
        logger.debug("Crossing scrub of {} cascaded through {} entries".format(column, cleared))
    rv.counters["crossing_fixes"] += cleared
    return cleared


def crossing_violations(rv: RVDecomposition) -> typing.List[typing.Tuple[Key, Key]]:
    """
    Every ``(row, column)`` with ``V[row, column] != 0`` on a crossing pair of negatives.
    """
    return [(row, column) for column in rv.order if not rv.is_positive(column)
            for row in rv.V[column]
            if row != column and not rv.is_positive(row) and crosses(rv, row, column)]


def transpose(rv: RVDecomposition, k: int) -> TranspositionOutcome:
    """
    Exchanges the simplices at positions ``k`` and ``k + 1``.

    :raises TranspositionError: if the first is a face of the second, if either is an
        implicit cell, or if ``k`` is out of range.
    """
    if not 0 <= k < len(rv.order) - 1:
        raise TranspositionError("No adjacent pair at position {}".format(k))
    tau, sigma = rv.order[k], rv.order[k + 1]
    if isinstance(tau, ImplicitCell) or isinstance(sigma, ImplicitCell):
        raise TranspositionError("Implicit cells never move")
    if rv.D[sigma][tau]:
        raise TranspositionError("{} is a face of {}".format(tau, sigma))

    field = rv.field
    case = "{}/{}".format("positive" if rv.is_positive(tau) else "negative",
                          "positive" if rv.is_positive(sigma) else "negative")
    before = (rv.partner(tau), rv.partner(sigma))
    spans_before = (_span(rv, tau, before[0]), _span(rv, sigma, before[1]))
    touched = {tau, sigma} | {p for p in before if p is not None}

    # keep V upper-triangular once the two columns trade places
    if rv.V[sigma][tau]:
        rv.add_column(sigma, tau, field.neg(field.div(rv.V[sigma][tau], rv.V[tau][tau])))

    rv.order[k], rv.order[k + 1] = sigma, tau
    rv.position[sigma], rv.position[tau] = k, k + 1

    touched |= _restore_reduced(rv, {tau, sigma} | {p for p in before if p is not None})

    after = (rv.partner(tau), rv.partner(sigma))
    touched |= {p for p in after if p is not None}
    for column in touched:
        low = rv.low(column)
        if low is not None and not rv.is_positive(low):
            raise InvariantViolation("Column {} has its low on the negative {} after "
                                     "exchanging {} and {}".format(column, low, tau, sigma))
    for column in sorted(touched, key=rv.position.__getitem__):
        scrub_crossings(rv, column)
    # a crossing can also open up between an untouched column and one in its V that moved
    # or changed its low
    for column in rv.order[k:]:
        if column not in touched and any(key in rv.V[column] for key in touched):
            scrub_crossings(rv, column)

    switched = after != before
    if switched:
        spans_after = (_span(rv, tau, after[0]), _span(rv, sigma, after[1]))
        if not (nested_or_disjoint(*spans_before) and nested_or_disjoint(*spans_after)):
            raise InvariantViolation("Pairing of {} and {} switched without being nested or "
                                     "disjoint".format(tau, sigma))
        logger.debug("Transposition at {} ({}) switched {} -> {}".format(k, case, before, after))
    rv.counters["transpositions"] += 1
    return TranspositionOutcome(case, switched, tau, sigma, before, after)


def _restore_reduced(rv: RVDecomposition, columns: typing.Set[Key]) -> typing.Set[Key]:
    """
    Re-establishes unique lows after an exchange, adding earlier columns to later ones.

    :return: Every column that was modified.
    """
    field = rv.field
    stale = [row for row, col in rv.pivots.items() if col in columns]
    for row in stale:
        del rv.pivots[row]

    modified = set()
    queue = sorted(columns, key=rv.position.__getitem__)
    while queue:
        column = queue.pop(0)
        low = rv.low(column)
        if low is None:
            continue
        other = rv.pivots.get(low)
        if other is None or other == column:
            rv.pivots[low] = column
            continue
        earlier, later = sorted((column, other), key=rv.position.__getitem__)
        coefficient = field.neg(field.div(rv.R[later][low], rv.R[earlier][low]))
        rv.add_column(later, earlier, coefficient)
        modified.add(later)
        rv.pivots[low] = earlier
        queue.append(later)
    return modified
