"""
Reading and writing the bifiltration text format.

One simplex per line::

    <id> dim <d> vertices <v1 ... v_{d+1}> corners (<x1>,<y1>) [(<x2>,<y2>) ...]

Lines starting with ``#`` and blank lines are skipped. Coordinates are decimal numbers; each
axis is rank compressed onto ``1..n`` with both axes ending at ``n``, and the original
spellings are kept as output labels.
"""
import io
import logging
import re
import typing
from pathlib import Path

from bigradedpd.complex.bifiltration import Bifiltration
from bigradedpd.complex.simplicial import Simplex, SimplicialComplex
from bigradedpd.exc import ParseError

logger = logging.getLogger(__name__)

_line = re.compile(r"^(?P<id>-?\d+)\s+dim\s+(?P<dim>\d+)\s+vertices\s+(?P<vertices>(?:-?\d+\s+)+)"
                   r"corners\s+(?P<corners>.*)$")
_corner = re.compile(r"\(\s*(?P<x>[^,()\s]+)\s*,\s*(?P<y>[^,()\s]+)\s*\)")
_corners = re.compile(r"^(?:\s*\([^()]*\))+\s*$")


def _number(token: str, line_number: int) -> float:
    try:
        return float(token)
    except ValueError:
        raise ParseError("{!r} is not a number".format(token), line_number)


def parse_bifiltration(text: str) -> Bifiltration:
    """
    Parses the text format into a rank-space :class:`Bifiltration`.

    :raises ParseError: with the offending line number.
    """
    simplices = []
    raw_curves = {}
    tokens = ({}, {})
    for line_number, line in enumerate(io.StringIO(text), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        match = _line.match(line)
        if match is None:
            raise ParseError("expected '<id> dim <d> vertices ... corners ...'", line_number)
        sid, dim = int(match.group("id")), int(match.group("dim"))
        vertices = tuple(int(v) for v in match.group("vertices").split())
        if len(vertices) != dim + 1:
            raise ParseError("a {}-simplex needs {} vertices, got {}"
                             .format(dim, dim + 1, len(vertices)), line_number)
        if sid in raw_curves:
            raise ParseError("duplicate simplex id {}".format(sid), line_number)
        corner_text = match.group("corners")
        if not _corners.match(corner_text):
            raise ParseError("malformed corner list {!r}".format(corner_text), line_number)

        corners = []
        for corner in _corner.finditer(corner_text):
            point = []
            for axis, token in enumerate((corner.group("x"), corner.group("y"))):
                value = _number(token, line_number)
                tokens[axis].setdefault(value, token)
                point.append(value)
            corners.append(tuple(point))
        if not corners:
            raise ParseError("simplex {} has no corners".format(sid), line_number)
        simplices.append(Simplex(sid, dim, vertices))
        raw_curves[sid] = corners

    complex_ = SimplicialComplex(simplices)
    values = [sorted(axis) for axis in tokens]
    n = max(len(values[0]), len(values[1]))
    ranks, labels = [], []
    for axis in (0, 1):
        offset = n - len(values[axis])
        ranks.append({v: offset + k + 1 for k, v in enumerate(values[axis])})
        labels.append([None] * (offset + 1) + [tokens[axis][v] for v in values[axis]])

    curves = {sid: [(ranks[0][x], ranks[1][y]) for x, y in corners]
              for sid, corners in raw_curves.items()}
    logger.debug("Parsed {} simplices on a {}x{} rank grid".format(len(simplices), n, n))
    return Bifiltration(complex_, curves, n, labels=labels)


def load_bifiltration(path: typing.Union[str, Path]) -> Bifiltration:
    return parse_bifiltration(Path(path).read_text(encoding="utf-8"))


def write_bifiltration(b: Bifiltration) -> str:
    """
    Formats a bifiltration in the text format, using its labels when it has them.
    """
    lines = []
    for simplex in b.complex:
        corners = []
        for c in b.curves[simplex.id].lower_corners:
            x, y = c
            if b.labels is not None:
                x, y = b.labels[0][x], b.labels[1][y]
            corners.append("({},{})".format(x, y))
        lines.append("{} dim {} vertices {} corners {}".format(
            simplex.id, simplex.dim, " ".join(str(v) for v in simplex.vertices), " ".join(corners)))
    return "\n".join(lines) + ("\n" if lines else "")
