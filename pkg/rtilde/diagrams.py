"""
S-graph geometry for light leaves, with text and SVG renderings.

Letters of the bottom word sit at x = 0, 1, 2, ... on the line y = 0.  Steps
are replayed bottom to top, each one using its own horizontal band:

* Dot ends the letter's strand with a dot;
* Through adds the strand to the list of active top strands (slots);
* Merge routes the slots through one vertex per braid move, then caps the
  last slot against the new strand with an arc.

Active slots always lie to the left of the strands of later letters, so the
picture is planar.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

import drawsvg as draw

from rtilde.config import settings
from rtilde.coxeter import Word, format_word
from rtilde.lightleaves import LightLeaf, StepKind

logger = logging.getLogger(__name__)

Point = Tuple[float, float]

PALETTE = (
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
    "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f",
)

ARC_HEIGHT = 0.4


def color_of(letter: int) -> str:
    return PALETTE[letter % len(PALETTE)]


@dataclass(frozen=True)
class Strand:
    letter: int
    points: Tuple[Point, ...]

    @property
    def start(self) -> Point:
        return self.points[0]

    @property
    def end(self) -> Point:
        return self.points[-1]


@dataclass(frozen=True)
class DotMark:
    letter: int
    x: float
    y: float


@dataclass(frozen=True)
class Vertex:
    """A 2m-valent vertex where the factor s t s ... becomes t s t ..."""
    s: int
    t: int
    m: int
    x: float
    y: float


@dataclass(frozen=True)
class Arc:
    letter: int
    left: float
    right: float
    y: float


@dataclass
class SGraph:
    bottom: Word
    top: Word
    height: float
    strands: List[Strand] = field(default_factory=list)
    dots: List[DotMark] = field(default_factory=list)
    vertices: List[Vertex] = field(default_factory=list)
    arcs: List[Arc] = field(default_factory=list)

    @property
    def width(self) -> int:
        return max(len(self.bottom), 1)

    def bottom_sequence(self) -> Word:
        """Colours of the strands leaving the bottom boundary, left to right."""
        ends = sorted((s.start[0], s.letter) for s in self.strands if s.start[1] == 0)
        return tuple(letter for _, letter in ends)

    def top_sequence(self) -> Word:
        """Colours of the strands reaching the top boundary, left to right."""
        ends = sorted((s.end[0], s.letter) for s in self.strands if s.end[1] == self.height)
        return tuple(letter for _, letter in ends)

    def valence(self, vertex: Vertex) -> int:
        here = (vertex.x, vertex.y)
        return sum((s.start == here) + (s.end == here) for s in self.strands)


@dataclass
class _Slot:
    letter: int
    points: List[Point]

    @property
    def x(self) -> float:
        return self.points[-1][0]

    def extend_to(self, *points: Point) -> None:
        for point in points:
            if point != self.points[-1]:
                self.points.append(point)


def leaf_to_sgraph(leaf: LightLeaf) -> SGraph:
    """Replay the steps of a leaf as planar geometry."""
    strands: List[Strand] = []
    dots: List[DotMark] = []
    vertices: List[Vertex] = []
    arcs: List[Arc] = []
    slots: List[_Slot] = []
    level = 0

    for k, step in enumerate(leaf.steps):
        letter = step.letter
        if step.kind is StepKind.DOT:
            top = level + 0.5
            strands.append(Strand(letter, ((k, 0), (k, top))))
            dots.append(DotMark(letter, k, top))
            level += 1
        elif step.kind is StepKind.THROUGH:
            slots.append(_Slot(letter, [(k, 0)]))
            level += 1
        else:
            for move in step.plan:
                group_slots = slots[move.position:move.position + move.m]
                xs = [slot.x for slot in group_slots]
                cx = sum(xs) / len(xs)
                vy = level + 0.5
                for slot in group_slots:
                    slot.extend_to((slot.x, level), (cx, vy))
                    strands.append(Strand(slot.letter, tuple(slot.points)))
                replacement = [
                    _Slot(move.t if j % 2 == 0 else move.s, [(cx, vy), (x, level + 1)])
                    for j, x in enumerate(xs)
                ]
                slots[move.position:move.position + move.m] = replacement
                vertices.append(Vertex(move.s, move.t, move.m, cx, vy))
                level += 1
            last = slots.pop()
            cap = level + 0.5
            last.extend_to((last.x, cap))
            strands.append(Strand(last.letter, tuple(last.points)))
            strands.append(Strand(letter, ((k, 0), (k, cap))))
            arcs.append(Arc(letter, last.x, k, cap))
            level += 1

    height = level + 1
    for slot in slots:
        slot.extend_to((slot.x, height))
        strands.append(Strand(slot.letter, tuple(slot.points)))

    graph = SGraph(
        bottom=leaf.word,
        top=tuple(slot.letter for slot in slots),
        height=height,
        strands=strands,
        dots=dots,
        vertices=vertices,
        arcs=arcs,
    )
    logger.debug(f"S-graph for {leaf.code}: {len(strands)} strands, {len(vertices)} vertices")
    return graph


def sgraph_to_text(graph: SGraph) -> str:
    """ASCII sketch, one row per half band, top row first."""
    cols = 2 * graph.width + 1
    rows = int(2 * graph.height) + 1
    grid = [[" "] * cols for _ in range(rows)]

    def put(x: float, y: float, ch: str) -> None:
        col, row = int(round(2 * x)), int(round(2 * y))
        if 0 <= col < cols and 0 <= row < rows:
            grid[row][col] = ch

    for strand in graph.strands:
        for (x1, y1), (x2, y2) in zip(strand.points, strand.points[1:]):
            if x1 != x2:
                continue
            for row in range(int(round(2 * y1)), int(round(2 * y2)) + 1):
                put(x1, row / 2, "|")
    for arc in graph.arcs:
        for col in range(int(round(2 * arc.left)) + 1, int(round(2 * arc.right))):
            put(col / 2, arc.y, "-")
        put(arc.left, arc.y, "(")
        put(arc.right, arc.y, ")")
    for dot in graph.dots:
        put(dot.x, dot.y, ".")
    for vertex in graph.vertices:
        put(vertex.x, vertex.y, "X" if vertex.m >= 3 else "+")

    lines = [f"top: {format_word(graph.top)}"]
    lines.extend("".join(row).rstrip() for row in reversed(grid))
    lines.append(f"bottom: {format_word(graph.bottom)}")
    return "\n".join(lines) + "\n"


def sgraph_to_svg(graph: SGraph) -> bytes:
    """Render as an SVG document; y grows upwards in graph coordinates."""
    unit = settings.render.unit
    margin = settings.render.margin
    stroke_width = settings.render.stroke_width
    width = 2 * margin + graph.width * unit
    height = 2 * margin + graph.height * unit

    def px(x: float) -> float:
        return margin + (x + 0.5) * unit

    def py(y: float) -> float:
        return margin + (graph.height - y) * unit

    d = draw.Drawing(width, height)
    d.append(draw.Rectangle(0, 0, width, height, fill="#ffffff"))

    for strand in graph.strands:
        coords: List[float] = []
        for x, y in strand.points:
            coords.extend([px(x), py(y)])
        d.append(
            draw.Lines(
                *coords,
                close=False,
                fill="none",
                stroke=color_of(strand.letter),
                stroke_width=stroke_width,
            )
        )

    for arc in graph.arcs:
        rx = (arc.right - arc.left) / 2 * unit
        ry = ARC_HEIGHT * unit
        mid = (arc.left + arc.right) / 2
        path = draw.Path(stroke=color_of(arc.letter), stroke_width=stroke_width, fill="none")
        path.M(px(arc.left), py(arc.y))
        path.A(rx, ry, 0, 0, 1, px(mid), py(arc.y + ARC_HEIGHT))
        path.A(rx, ry, 0, 0, 1, px(arc.right), py(arc.y))
        d.append(path)

    for dot in graph.dots:
        d.append(draw.Circle(px(dot.x), py(dot.y), settings.render.dot_radius, fill=color_of(dot.letter)))

    for vertex in graph.vertices:
        if vertex.m >= 3:
            d.append(draw.Circle(px(vertex.x), py(vertex.y), settings.render.dot_radius / 2, fill="#000000"))

    for k, letter in enumerate(graph.bottom):
        d.append(draw.Text(f"s{letter + 1}", 12, px(k), height - margin / 4, text_anchor="middle"))

    return d.as_svg().encode("utf-8")


def leaf_file_name(leaf: LightLeaf) -> str:
    name = leaf.code or "empty"
    return f"leaf_{name}_deg{leaf.degree}.svg"


def render_leaves(leaves_: List[LightLeaf]) -> Dict[str, bytes]:
    """SVG documents keyed by file name, one per leaf."""
    return {leaf_file_name(leaf): sgraph_to_svg(leaf_to_sgraph(leaf)) for leaf in leaves_}
