"""
Instance generators, for tests and benchmarks.

Random instances are built with real-valued corners and then rank compressed, which makes
them non-degenerate and staircase-normal (each coordinate ``1..n`` carries exactly one lower
corner per axis) as long as no two sampled coordinates coincide.
"""
import itertools
import logging
import typing

import numpy as np

from bigradedpd.complex.bifiltration import Bifiltration, OneFiltration
from bigradedpd.complex.simplicial import SimplicialComplex, clique_complex

logger = logging.getLogger(__name__)

Point = typing.Tuple[float, float]


def random_complex(rng: np.random.Generator, vertices: int = 4, edge_probability: float = 0.6,
                   max_dim: int = 2) -> SimplicialComplex:
    """
    The clique complex of an Erdős–Rényi graph.
    """
    edges = [(u, v) for u, v in itertools.combinations(range(vertices), 2)
             if rng.random() < edge_probability]
    return clique_complex(range(vertices), edges, max_dim)


def _minimal(points: typing.Iterable[Point]) -> typing.List[Point]:
    points = sorted(set(points))
    return [p for p in points
            if not any(q != p and q[0] <= p[0] and q[1] <= p[1] for q in points)]


def _face_joins(complex_: SimplicialComplex, sid: int,
                corners: typing.Dict[int, typing.List[Point]]) -> typing.List[Point]:
    """
    Lower corners of the intersection of the upsets of the facets of ``sid``.
    """
    facets = [face for face, _ in complex_.facets(sid)]
    if not facets:
        return [(0.0, 0.0)]
    joins = [(max(p[0] for p in choice), max(p[1] for p in choice))
             for choice in itertools.product(*(corners[face] for face in facets))]
    return _minimal(joins)


def _random_corners(rng: np.random.Generator, complex_: SimplicialComplex, max_corners: int,
                    spread: float) -> typing.Dict[int, typing.List[Point]]:
    corners = {}
    for simplex in sorted(complex_, key=lambda s: (s.dim, s.id)):
        bases = _face_joins(complex_, simplex.id, corners)
        count = int(rng.integers(1, max_corners + 1))
        points = []
        for _ in range(count):
            base = bases[int(rng.integers(len(bases)))]
            offset = rng.random(2) * spread
            points.append((base[0] + offset[0], base[1] + offset[1]))
        corners[simplex.id] = _minimal(points)
    return corners


def _rank_compress(complex_: SimplicialComplex,
                   corners: typing.Dict[int, typing.List[Point]]) -> Bifiltration:
    ranks = []
    for axis in (0, 1):
        values = sorted({p[axis] for points in corners.values() for p in points})
        ranks.append({v: k + 1 for k, v in enumerate(values)})
    n = max(len(ranks[0]), len(ranks[1]))
    curves = {sid: [(ranks[0][p[0]] + n - len(ranks[0]), ranks[1][p[1]] + n - len(ranks[1]))
                    for p in points]
              for sid, points in corners.items()}
    return Bifiltration(complex_, curves, n)


def random_bifiltration(rng: np.random.Generator, vertices: int = 4,
                        edge_probability: float = 0.6, max_dim: int = 2,
                        multi_critical: bool = False, max_corners: int = 3,
                        spread: float = 1.0) -> Bifiltration:
    """
    A random non-degenerate, staircase-normal bifiltration of a random clique complex.

    Simplices are visited faces first; each samples its corners above corners of the
    intersection of its facets' upsets, so face monotonicity holds by construction.

    :param multi_critical: Allow up to ``max_corners`` lower corners per simplex.
    """
    complex_ = random_complex(rng, vertices, edge_probability, max_dim)
    corners = _random_corners(rng, complex_, max_corners if multi_critical else 1, spread)
    b = _rank_compress(complex_, corners)
    logger.debug("Generated {!r} ({} corners)".format(b, b.corner_count))
    return b


def random_degenerate_bifiltration(rng: np.random.Generator, vertices: int = 4,
                                   edge_probability: float = 0.6, max_dim: int = 2,
                                   n: int = 3, max_corners: int = 2) -> Bifiltration:
    """
    A random bifiltration on the integer grid ``[1, n]^2``, where simplices usually share
    coordinates.
    """
    complex_ = random_complex(rng, vertices, edge_probability, max_dim)
    corners = _random_corners(rng, complex_, max_corners, 1.0)
    top = max(max(p) for points in corners.values() for p in points)

    def snap(value: float) -> int:
        return min(n, 1 + int(value / top * n))

    curves = {sid: _minimal((snap(p[0]), snap(p[1])) for p in points)
              for sid, points in corners.items()}
    return Bifiltration(complex_, curves, n)


def diagonal_bifiltration(f: OneFiltration) -> Bifiltration:
    """
    The 1-critical diagonal embedding: the ``k``-th simplex of ``f`` enters at ``(k, k)``.
    """
    curves = {sid: [(k, k)] for k, sid in enumerate(f.ids, start=1)}
    return Bifiltration(f.complex, curves, len(f.ids))


def random_order(rng: np.random.Generator, complex_: SimplicialComplex) -> OneFiltration:
    """
    A uniformly shuffled filtration order that still adds faces before cofaces.
    """
    keys = {s.id: rng.random() for s in complex_}
    # a simplex follows all its faces if its key is the max over its closure
    for simplex in sorted(complex_, key=lambda s: (s.dim, s.id)):
        faces = [keys[face] for face, _ in complex_.facets(simplex.id)]
        if faces:
            keys[simplex.id] = max(faces) + keys[simplex.id]
    ids = sorted(complex_.ids, key=lambda sid: (keys[sid], complex_[sid].dim, sid))
    return OneFiltration.from_ids(complex_, ids)


def nested_bifiltration(rng: np.random.Generator, vertices: int = 4,
                        edge_probability: float = 0.6, max_dim: int = 2) -> Bifiltration:
    """
    A random totally nested bifiltration: any two simplices have comparable grades.

    In rank space that is the diagonal embedding of a random filtration, so its diagram has
    one interval per persistence pair plus one per essential class.
    """
    complex_ = random_complex(rng, vertices, edge_probability, max_dim)
    return diagonal_bifiltration(random_order(rng, complex_))
