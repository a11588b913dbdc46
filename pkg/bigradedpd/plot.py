"""
Standalone SVG rendering of a diagram on its grid.
"""
import typing

from bigradedpd.complex.bifiltration import Bifiltration
from bigradedpd.diagram import SignedDiagram

NS_SVG = "http://www.w3.org/2000/svg"

POSITIVE_COLOR = "#1f5fbf"
NEGATIVE_COLOR = "#c0392b"
CURVE_COLOR = "#7f7f7f"
GRID_COLOR = "#dddddd"


def _demangle(key: str) -> str:
    return key.rstrip("_").replace("_", "-")


def _number(value) -> str:
    if isinstance(value, float):
        value = round(value, 3)
        if value.is_integer():
            return str(int(value))
    return str(value)


def element(tag: str, **props) -> str:
    """
    A self-closing SVG element; underscores in property names become dashes.
    """
    attributes = " ".join('{}="{}"'.format(_demangle(k), _number(v)) for k, v in props.items())
    return "<{} {}/>".format(tag, attributes)


class _Canvas(object):
    def __init__(self, n: int, size: int, margin: int):
        self.n = max(n, 1)
        self.size = size
        self.margin = margin
        self.step = (size - 2 * margin) / self.n

    def x(self, i) -> float:
        return self.margin + i * self.step

    def y(self, j) -> float:
        # rows grow upwards
        return self.size - self.margin - j * self.step


def _staircase(canvas: _Canvas, corners, n: int) -> str:
    points = []
    previous = None
    for c in corners:
        if previous is None:
            points.append((c.i, n))
        else:
            points.append((c.i, previous.j))
        points.append((c.i, c.j))
        previous = c
    points.append((n, previous.j))
    return element("polyline", points=" ".join("{},{}".format(
        _number(canvas.x(i)), _number(canvas.y(j))) for i, j in points),
        fill="none", stroke=CURVE_COLOR, stroke_width=1, stroke_dasharray="4 2")


def plot_diagram(diagram: SignedDiagram, dim: int, b: Bifiltration = None, size: int = 400,
                 margin: int = 20) -> str:
    """
    Draws the intervals of one dimension: each ``[a, b]`` is a segment from ``a`` to ``b``
    with a dot at ``a``, coloured by sign, with opacity growing with ``|value|``.

    :param b: If given, its appearance curves are overlaid as dashed staircases.
    """
    n = diagram.poset.n
    canvas = _Canvas(n, size, margin)
    body = []
    for k in range(n + 1):
        body.append(element("line", x1=canvas.x(k), y1=canvas.y(0), x2=canvas.x(k),
                            y2=canvas.y(n), stroke=GRID_COLOR, stroke_width=1))
        body.append(element("line", x1=canvas.x(0), y1=canvas.y(k), x2=canvas.x(n),
                            y2=canvas.y(k), stroke=GRID_COLOR, stroke_width=1))

    if b is not None:
        for sid in sorted(b.curves):
            body.append(_staircase(canvas, b.curves[sid].lower_corners, n))

    entries = [(interval, value) for d, interval, value in diagram.items() if d == dim]
    heaviest = max((abs(value) for _, value in entries), default=1)
    for (lower, upper), value in entries:
        color = POSITIVE_COLOR if value > 0 else NEGATIVE_COLOR
        opacity = 0.3 + 0.7 * abs(value) / heaviest
        body.append(element("line", x1=canvas.x(lower[0]), y1=canvas.y(lower[1]),
                            x2=canvas.x(upper[0]), y2=canvas.y(upper[1]), stroke=color,
                            stroke_width=2, stroke_opacity=opacity))
        body.append(element("circle", cx=canvas.x(lower[0]), cy=canvas.y(lower[1]), r=3,
                            fill=color, fill_opacity=opacity))

    header = '<svg xmlns="{}" width="{}" height="{}" viewBox="0 0 {} {}">'.format(
        NS_SVG, size, size, size, size)
    return "\n".join([header] + ["  " + line for line in body] + ["</svg>"]) + "\n"
