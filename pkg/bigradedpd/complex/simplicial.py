"""
Finite abstract simplicial complexes.
"""
import itertools
import logging
import typing

from cached_property import cached_property

from bigradedpd.exc import ValidationError

logger = logging.getLogger(__name__)


class Simplex(typing.NamedTuple):
    """
    A simplex with a stable integer id. Vertices are kept sorted, which fixes the
    orientation used for boundary signs.
    """
    id: int
    dim: int
    vertices: typing.Tuple[int, ...]


class SimplicialComplex(object):
    """
    A simplicial complex, closed under taking faces.

    :param simplices: The simplices, in any order.
    """

    def __init__(self, simplices: typing.Iterable[Simplex]):
        self.simplices = []  # type: typing.List[Simplex]
        self._by_id = {}
        self._by_vertices = {}
        for simplex in simplices:
            vertices = tuple(sorted(simplex.vertices))
            if len(set(vertices)) != simplex.dim + 1:
                raise ValidationError("Simplex {} of dimension {} needs {} distinct vertices"
                                      .format(simplex.id, simplex.dim, simplex.dim + 1))
            if simplex.id in self._by_id:
                raise ValidationError("Duplicate simplex id {}".format(simplex.id))
            if vertices in self._by_vertices:
                raise ValidationError("Simplex {} repeats the vertices of simplex {}"
                                      .format(simplex.id, self._by_vertices[vertices]))
            simplex = Simplex(simplex.id, simplex.dim, vertices)
            self.simplices.append(simplex)
            self._by_id[simplex.id] = simplex
            self._by_vertices[vertices] = simplex.id

        for simplex in self.simplices:
            for face in self._face_vertices(simplex):
                if face not in self._by_vertices:
                    raise ValidationError("Face {} of simplex {} is missing"
                                          .format(face, simplex.id))

    def __repr__(self):
        return "<SimplicialComplex m={} dim={}>".format(len(self), self.dimension)

    def __len__(self):
        return len(self.simplices)

    def __iter__(self):
        return iter(self.simplices)

    def __contains__(self, sid: int) -> bool:
        return sid in self._by_id

    def __getitem__(self, sid: int) -> Simplex:
        return self._by_id[sid]

    @property
    def ids(self) -> typing.List[int]:
        return [s.id for s in self.simplices]

    @cached_property
    def dimension(self) -> int:
        return max((s.dim for s in self.simplices), default=-1)

    def find(self, vertices: typing.Iterable[int]) -> typing.Optional[int]:
        """
        The id of the simplex spanned by ``vertices``, if present.
        """
        return self._by_vertices.get(tuple(sorted(vertices)))

    @staticmethod
    def _face_vertices(simplex: Simplex) -> typing.Iterator[typing.Tuple[int, ...]]:
        if simplex.dim == 0:
            return
        for k in range(simplex.dim + 1):
            yield simplex.vertices[:k] + simplex.vertices[k + 1:]

    def facets(self, sid: int) -> typing.List[typing.Tuple[int, int]]:
        """
        The codimension-one faces of a simplex with their boundary signs.

        :return: ``(face id, +1 or -1)`` pairs; empty for vertices.
        """
        simplex = self._by_id[sid]
        return [(self._by_vertices[face], -1 if k % 2 else 1)
                for k, face in enumerate(self._face_vertices(simplex))]

    @cached_property
    def cofacets(self) -> typing.Dict[int, typing.List[int]]:
        result = {s.id: [] for s in self.simplices}
        for simplex in self.simplices:
            for face, _ in self.facets(simplex.id):
                result[face].append(simplex.id)
        return result

    def is_face(self, rho: int, sigma: int) -> bool:
        """
        Whether ``rho`` is a codimension-one face of ``sigma``.
        """
        return any(face == rho for face, _ in self.facets(sigma))

    def count(self, dim: int) -> int:
        return sum(1 for s in self.simplices if s.dim == dim)


def clique_complex(vertices: typing.Iterable[int], edges: typing.Iterable[typing.Tuple[int, int]],
                   max_dim: int = 2) -> SimplicialComplex:
    """
    The clique complex of a graph, truncated at ``max_dim``; ids follow (dim, vertices).
    """
    vertices = sorted(set(vertices))
    adjacency = {v: set() for v in vertices}
    for u, v in edges:
        adjacency[u].add(v)
        adjacency[v].add(u)

    cells = [(v,) for v in vertices]
    layer = cells
    for _ in range(max_dim):
        layer = [c + (w,) for c in layer for w in vertices
                 if w > c[-1] and all(w in adjacency[u] for u in c)]
        cells.extend(layer)

    return SimplicialComplex(Simplex(sid, len(c) - 1, c) for sid, c in enumerate(cells))


def full_simplex(dim: int) -> SimplicialComplex:
    """
    The closure of a single ``dim``-simplex.
    """
    cells = [c for k in range(1, dim + 2) for c in itertools.combinations(range(dim + 1), k)]
    return SimplicialComplex(Simplex(sid, len(c) - 1, c) for sid, c in enumerate(cells))
