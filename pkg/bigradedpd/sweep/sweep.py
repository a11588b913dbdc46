"""
The square-by-square sweep that computes the generalized persistence diagram.

The sweep keeps a path through the grid, starting up the left edge and along the top row, and
pushes it across one square at a time: columns left to right, each column top to bottom.
Crossing square ``(i, j)`` replaces the corner ``(i - 1, j)`` of the path by ``(i, j - 1)``. The
``R = DV`` decomposition of the filtration along the path is kept current with vineyard
transpositions, and every negative simplex carries the birth curve of the class it kills.

All diagram entries with upper grade ``(i, j)`` come out of the square ``(i, j)``: lower grades
below ``(i - 1, j - 1)`` from the difference of the birth curves of the simplex leaving the old
path's last step and of the simplex entering the new path's first step, lower grades on row
``j`` from the old birth curve alone, and lower grades in column ``i`` once that column is done.
Essential classes are tracked through the implicit cells and emitted at the end.
"""
import collections
import logging
import typing

from bigradedpd.complex.bifiltration import Bifiltration
from bigradedpd.diagram import SignedDiagram
from bigradedpd.exc import DegenerateFiltrationError, InvariantViolation
from bigradedpd.matrix.field import coerce_field
from bigradedpd.matrix.reduce import ImplicitCell, add_implicit_cells, boundary_matrix, reduce
from bigradedpd.matrix.sparse import Key, SparseColumn
from bigradedpd.poset.grades import Grade, Path
from bigradedpd.sweep.curves import BirthCurve, EssentialCurve, Profile, is_staircase, \
    lower_corner_columns, mobius
from bigradedpd.vineyard import transpose

logger = logging.getLogger(__name__)


class Sweep(object):
    """
    The state of one sweep over a non-degenerate bifiltration.

    :param b: The bifiltration.
    :param field: The coefficient field (a prime or a :class:`PrimeField`).
    :param check_invariants: Re-verify the decomposition and every birth curve after each
        square. Slow; meant for tests.
    """

    def __init__(self, b: Bifiltration, field=2, check_invariants: bool = False):
        b.ensure_valid()
        if not b.is_nondegenerate():
            raise DegenerateFiltrationError("The sweep needs a non-degenerate bifiltration; "
                                            "refine it first")
        self.b = b
        self.n = b.n
        self.field = coerce_field(field)
        self.check_invariants = check_invariants
        self.counts = b.counts
        self.diagram = SignedDiagram(b.grid)
        self.counters = collections.Counter()
        self.curves = {}  # type: typing.Dict[Key, BirthCurve]
        self.essential = {}  # type: typing.Dict[Key, EssentialCurve]
        self._first_column = {sid: curve.lower_corners[0].i for sid, curve in b.curves.items()}
        self._initialize()

    def __repr__(self):
        return "<Sweep n={} m={} curves={}>".format(self.n, self.b.m, len(self.curves))

    def _initialize(self):
        n = self.n
        initial = self.b.restrict_to_path(Path.left_top(n))
        self.rv = add_implicit_cells(reduce(boundary_matrix(initial, self.field)))
        first = self._first_column

        for key in self.rv.order:
            partner = self.rv.partner(key)
            if self.rv.is_positive(key):
                continue
            if isinstance(key, ImplicitCell):
                curve = self.essential[key] = EssentialCurve(key, n)
                for x in range(n + 1):
                    curve.mark(Grade(x, n), x >= first[partner])
            else:
                curve = self.curves[key] = BirthCurve(key, n)
                for x in range(first[partner], first[key]):
                    curve.profile[x] = n
        logger.info("Sweep of {} simplices on a {}x{} grid: {} pairs, {} essential classes"
                    .format(self.b.m, n, n, len(self.curves), len(self.essential)))

    # helpers
    def _homology_dim(self, negative: Key) -> int:
        return self.rv.dims[negative] - 1

    def _emit(self, negative: Key, profile: Profile, upper: Grade, sign: int):
        dim = self._homology_dim(negative)
        for grade, value in mobius(profile):
            self.diagram.add(dim, grade, upper, sign * value)
            self.counters["emissions"] += 1

    def _emit_row(self, negative: Key, curve: BirthCurve, i: int, j: int):
        """
        Entries ``[(x, j), (i, j)]``: the inversion of the old birth curve along row ``j``.
        """
        dim = self._homology_dim(negative)
        upper = Grade(i, j)
        profile = curve.restricted(i - 1, j)
        for x in range(1, i):
            value = int(profile[x] == j) - int(profile[x - 1] == j)
            if value:
                self.diagram.add(dim, Grade(x, j), upper, value)
                self.counters["emissions"] += 1

    def _is_negative(self, key: Key) -> bool:
        return not self.rv.is_positive(key)

    # the loop
    def run(self) -> SignedDiagram:
        """
        Sweeps every square and returns the diagram.
        """
        for i in range(1, self.n + 1):
            for j in range(self.n, 0, -1):
                self.square_step(i, j)
            self.end_column(i)
        self.finalize_infinite()
        logger.info("Sweep done: {} squares, {} transpositions, support size {}".format(
            self.counters["squares"], self.rv.counters["transpositions"],
            self.diagram.support_size))
        return self.diagram

    def square_step(self, i: int, j: int):
        """
        Moves the path across square ``(i, j)`` and emits the entries it settles.
        """
        counts = self.counts
        e, f = int(counts[i - 1, j - 1]), int(counts[i - 1, j])
        g, h = int(counts[i, j - 1]), int(counts[i, j])
        inside = h - e
        if inside == 1:
            kappa = self.rv.order[e]
            in_f, in_g = f > e, g > e
            if not in_f and not in_g:
                self._lower_corner(i, j, kappa)
            elif in_f and in_g:
                self._upper_corner(i, j, kappa)
            elif in_g:
                self._horizontal(i, j, kappa)
        elif inside == 2:
            tau, sigma = self.rv.order[e], self.rv.order[e + 1]
            if self.b.contains(tau, Grade(i, j - 1)):
                # already in order along the new path
                self._upper_corner(i, j, tau)
                self._lower_corner(i, j, sigma)
            else:
                self._exchange(i, j, e)
        elif inside > 2:
            raise InvariantViolation("{} simplices enter square ({}, {})".format(inside, i, j))

        self._visit(i, j - 1, g)
        self.counters["squares"] += 1
        if self.check_invariants:
            self.verify(i, j)

    def _lower_corner(self, i: int, j: int, kappa: Key):
        # kappa moves from the top step to the right step
        if not self._is_negative(kappa):
            return
        curve = self.curves[kappa]
        self._emit(kappa, curve.restricted(i - 1, j - 1), Grade(i, j), 1)
        self._emit_row(kappa, curve, i, j)
        curve.truncate_row(j, i - 1)

    def _upper_corner(self, i: int, j: int, kappa: Key):
        # kappa moves from the left step to the bottom step
        if self._is_negative(kappa):
            self._emit(kappa, self.curves[kappa].restricted(i - 1, j - 1), Grade(i, j), -1)

    def _horizontal(self, i: int, j: int, kappa: Key):
        # kappa moves from the top step to the bottom step
        if self._is_negative(kappa):
            curve = self.curves[kappa]
            self._emit_row(kappa, curve, i, j)
            curve.truncate_row(j, i - 1)

    def _exchange(self, i: int, j: int, k: int):
        rv = self.rv
        tau, sigma = rv.order[k], rv.order[k + 1]
        tau_negative, sigma_negative = self._is_negative(tau), self._is_negative(sigma)
        v_sigma, v_tau = rv.normalized_v(sigma), rv.normalized_v(tau)
        upper = Grade(i, j)

        if sigma_negative:
            curve = self.curves[sigma]
            self._emit(sigma, curve.restricted(i - 1, j - 1), upper, 1)
            self._emit_row(sigma, curve, i, j)

        outcome = transpose(rv, k)
        logger.debug("Square ({}, {}): exchanged {} and {} ({}{})".format(
            i, j, tau, sigma, outcome.case, ", switched" if outcome.switched else ""))

        if not tau_negative and not sigma_negative:
            self.case_pos_pos(i, j, tau, sigma)
        elif tau_negative and not sigma_negative:
            self.case_pos_neg(i, j, sigma, tau, v_sigma)
        elif not tau_negative and sigma_negative:
            self.case_neg_pos(i, j, sigma, tau, v_tau)
        else:
            self.case_neg_neg(i, j, sigma, tau)

        if self._is_negative(sigma):
            self._emit(sigma, self.curves[sigma].restricted(i - 1, j - 1), upper, -1)

    def _expect_signs(self, sigma: Key, tau: Key, sigma_negative: bool, tau_negative: bool):
        if self._is_negative(sigma) != sigma_negative or self._is_negative(tau) != tau_negative:
            raise InvariantViolation("Unexpected signs after exchanging {} and {}"
                                     .format(tau, sigma))

    def case_pos_pos(self, i: int, j: int, tau: Key, sigma: Key):
        """
        Both positive. Nothing is emitted at ``(i, j)`` and no chain record changes here.

        The negatives paired with ``tau`` and ``sigma`` (implicit cells included) may trade
        partners. Their curves are already settled on every grade the path has passed, and
        from here on they follow the new pairing: :meth:`_visit` adds a grade to the curve
        of a negative exactly when its current partner is present there, and
        :meth:`end_column` stores a chain at every lower corner that creates.
        """
        self._expect_signs(sigma, tau, False, False)
        if self.check_invariants:
            for key in (tau, sigma):
                partner = self.rv.partner(key)
                if partner is not None and self.rv.position[partner] < self.rv.position[key]:
                    raise InvariantViolation("Positive {} paired with the earlier {}"
                                             .format(key, partner))

    def case_pos_neg(self, i: int, j: int, sigma: Key, tau: Key, v_sigma: SparseColumn):
        """
        ``tau`` negative on the left step, ``sigma`` positive on the top step.

        If ``V[tau, sigma] != 0`` the two trade signs: ``sigma`` now kills the class ``tau``
        killed and takes over its birth curve. Each chain record becomes the old cycle of
        ``sigma`` minus the multiple of ``tau``'s record that clears ``tau``.
        """
        lam = v_sigma[tau]
        if not lam:
            self._expect_signs(sigma, tau, False, True)
            return
        self._expect_signs(sigma, tau, True, False)
        old = self.curves.pop(tau)
        profile = old.restricted(i - 1, j - 1)
        chains = {}
        for x in lower_corner_columns(profile):
            chain = v_sigma.copy()
            self.counters["field_ops"] += chain.add_scaled(old.chain_at(x, profile), -lam)
            chains[x] = chain
            self.counters["chain_updates"] += 1
        curve = self.curves[sigma] = BirthCurve(sigma, self.n)
        curve.replace(profile, chains)

    def case_neg_pos(self, i: int, j: int, sigma: Key, tau: Key, v_tau: SparseColumn):
        """
        ``tau`` positive on the left step, ``sigma`` negative on the top step. The pairs
        cross, so nothing switches; ``sigma`` keeps its curve below row ``j`` and its chain
        records drop ``tau`` by subtracting ``tau``'s cycle.
        """
        self._expect_signs(sigma, tau, True, False)
        curve = self.curves[sigma]
        profile = curve.restricted(i - 1, j - 1)
        chains = {}
        for x in lower_corner_columns(profile):
            chain = curve.chain_at(x, profile).copy()
            mu = chain[tau]
            if mu:
                self.counters["field_ops"] += chain.add_scaled(v_tau, -mu)
                self.counters["chain_updates"] += 1
            chains[x] = chain
        curve.replace(profile, chains)

    def case_neg_neg(self, i: int, j: int, sigma: Key, tau: Key):
        """
        Both negative. Column by column, with ``a`` the row of ``tau``'s curve, ``b`` the row
        of ``sigma``'s curve below row ``j`` and ``mu`` the ``tau`` coefficient of ``sigma``'s
        chain record there: if ``mu = 0`` both curves stay, otherwise ``sigma`` takes the
        higher of the two rows and ``tau`` the lower.
        """
        self._expect_signs(sigma, tau, True, True)
        field = self.field
        curve_a, curve_b = self.curves[tau], self.curves[sigma]
        a = curve_a.restricted(i - 1, j - 1)
        b = curve_b.restricted(i - 1, j - 1)
        mus = [curve_b.chain_at(x, b)[tau] if b[x] is not None else 0 for x in range(i)]

        new_sigma, new_tau = [], []
        for x in range(i):
            pa, pb, mu = a[x], b[x], mus[x]
            if pb is None or not mu:
                new_sigma.append(pb)
                new_tau.append(pa)
            else:
                new_sigma.append(None if pa is None else max(pa, pb))
                new_tau.append(pb if pa is None else min(pa, pb))
        if not (is_staircase(new_sigma) and is_staircase(new_tau)):
            raise InvariantViolation("Exchanging {} and {} at ({}, {}) broke a birth curve"
                                     .format(tau, sigma, i, j))

        sigma_chains = {}
        for x in lower_corner_columns(new_sigma):
            chain = curve_b.chain_at(x, b).copy()
            if mus[x]:
                self.counters["field_ops"] += chain.add_scaled(curve_a.chain_at(x, a), -mus[x])
                self.counters["chain_updates"] += 1
            sigma_chains[x] = chain
        tau_chains = {}
        for x in lower_corner_columns(new_tau):
            if a[x] is not None and new_tau[x] == a[x]:
                tau_chains[x] = curve_a.chain_at(x, a).copy()
            else:
                tau_chains[x] = curve_b.chain_at(x, b).scaled(field.inv(mus[x]))
                self.counters["chain_updates"] += 1

        if new_sigma != b or new_tau != a:
            logger.debug("Square ({}, {}): curves of {} and {} exchanged segments".format(
                i, j, sigma, tau))
        curve_b.replace(new_sigma, sigma_chains)
        curve_a.replace(new_tau, tau_chains)

    def _visit(self, i: int, y: int, present_count: int):
        """
        Records the grade ``(i, y)`` the path has just reached in every curve whose step lies
        beyond it: it belongs to the curve iff the partner is already present there.
        """
        rv = self.rv
        grade = Grade(i, y)
        lows = {col: row for row, col in rv.pivots.items()}
        for key in rv.order[present_count:]:
            partner = lows.get(key)
            if partner is None:
                continue
            present = rv.position[partner] < present_count
            if isinstance(key, ImplicitCell):
                self.essential[key].mark(grade, present)
            elif present:
                curve = self.curves[key]
                if curve.profile[i] not in (None, y + 1):
                    raise InvariantViolation("Birth curve of {} is not an upset at {}"
                                             .format(key, grade))
                curve.profile[i] = y

    def end_column(self, i: int):
        """
        Emits the entries whose lower grade lies in column ``i`` and records a chain at every
        lower corner the column created.
        """
        rv = self.rv
        counts = self.counts
        for j in range(1, self.n + 1):
            lo, hi = int(counts[i, j - 1]), int(counts[i, j])
            if hi - lo != 1 or not self._is_negative(rv.order[lo]):
                continue
            key = rv.order[lo]
            profile = self.curves[key].profile
            here, left = profile[i], profile[i - 1]
            if left is not None and left > j - 1:
                left = None
            dim = self._homology_dim(key)
            if here is not None and here != left:
                self.diagram.add(dim, Grade(i, here), Grade(i, j), 1)
                self.counters["emissions"] += 1
            if left is not None and left != here:
                self.diagram.add(dim, Grade(i, left), Grade(i, j), -1)
                self.counters["emissions"] += 1

        for key, curve in self.curves.items():
            here, left = curve.profile[i], curve.profile[i - 1]
            if here is not None and (left is None or here < left):
                curve.chains[i] = rv.normalized_v(key)
                self.counters["chain_updates"] += 1

    def finalize_infinite(self):
        """
        Emits the essential classes, all with upper grade the top of the grid.
        """
        top = self.b.grid.top
        for cell, curve in self.essential.items():
            dim = self._homology_dim(cell)
            for grade, value in curve.mobius():
                self.diagram.add(dim, grade, top, value)
                self.counters["emissions"] += 1

    def verify(self, i: int, j: int):
        """
        Checks the decomposition and every birth curve on the finished columns.
        """
        rv = self.rv
        rv.verify()
        for key, curve in self.curves.items():
            if not self._is_negative(key):
                raise InvariantViolation("Positive simplex {} has a birth curve".format(key))
            done = curve.profile[:i]
            if not is_staircase(done):
                raise InvariantViolation("Birth curve of {} is not a staircase".format(key))
            for x in lower_corner_columns(done):
                chain = curve.chains.get(x)
                if chain is None:
                    raise InvariantViolation("Corner ({}, {}) of {} has no chain".format(
                        x, done[x], key))
                self._verify_chain(key, chain, Grade(x, done[x]))
        for key in rv.order:
            if self._is_negative(key) and not isinstance(key, ImplicitCell) \
                    and key not in self.curves:
                raise InvariantViolation("Negative simplex {} has no birth curve".format(key))

    def _verify_chain(self, owner: Key, chain: SparseColumn, corner: Grade):
        rv = self.rv
        if chain[owner] != 1:
            raise InvariantViolation("Chain of {} is not normalized".format(owner))
        if any(rv.position[k] > rv.position[owner] for k in chain):
            raise InvariantViolation("Chain of {} reaches past its step".format(owner))
        boundary = SparseColumn(self.field)
        for k, value in chain.items():
            boundary.add_scaled(rv.D[k], value)
        present = self.b.complex_at(corner)
        if any(k not in present for k in boundary):
            raise InvariantViolation("Chain boundary of {} leaves the complex at {}"
                                     .format(owner, corner))


def sweep(b: Bifiltration, field=2, check_invariants: bool = False) -> SignedDiagram:
    """
    The generalized persistence diagram of a non-degenerate bifiltration, in every dimension.
    """
    return Sweep(b, field, check_invariants).run()


def compute_diagram(b: Bifiltration, field=2, strict: bool = False,
                    check_invariants: bool = False) -> SignedDiagram:
    """
    The generalized persistence diagram of any valid bifiltration, on its own grid.

    Degenerate input is refined, swept, and pushed forward along the ceiling map.

    :param strict: Refuse degenerate input instead of refining it.
    """
    b.ensure_valid()
    if b.is_staircase_normal:
        return sweep(b, field, check_invariants)
    if strict and not b.is_nondegenerate():
        raise DegenerateFiltrationError("Degenerate bifiltration (strict mode)")
    refined, refinement = b.refine_to_nondegenerate()
    logger.info("Refined a {0}x{0} grid to {1}x{1}".format(b.n, refined.n))
    diagram = sweep(refined, field, check_invariants)
    return diagram.pushforward(refinement.ceiling, b.grid)
