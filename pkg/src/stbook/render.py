"""DOT and SVG output."""

from __future__ import annotations

from typing import Iterable, Sequence

from .book import PAGE_LEFT, BookEmbedding
from .completion import CompletionEdge
from .graph import EmbeddedDigraph

STEP = 40
MARGIN = 30
RADIUS = 5


def render_dot(g: EmbeddedDigraph, S: Iterable[CompletionEdge] = (), P: Sequence[int] | None = None) -> str:
    out = ["digraph G {", "  rankdir=BT;", "  node [shape=circle];"]
    out += [f"  {v};" for v in range(g.n)]
    out += [f"  {u} -> {v};" for u, v in g.edges]
    for e in S:
        e = CompletionEdge(*e)
        out.append(f'  {e.tail} -> {e.head} [style=dashed, label="f{e.face}"];')
    if P is not None and len(P) > 1:
        spine = " -> ".join(map(str, P))
        out.append(f"  /* spine: {spine} */")
    out.append("}")
    return "\n".join(out) + "\n"


def render_svg(book: BookEmbedding) -> str:
    """Spine drawn bottom to top; page 1 arcs bulge left, page 2 arcs right."""
    n = len(book.spine)
    pos = book.position()
    height = 2 * MARGIN + max(n - 1, 0) * STEP
    max_span = max((abs(pos[e.head] - pos[e.tail]) for e in book.edges), default=1)
    half = MARGIN + max_span * STEP // 2
    width = 2 * half
    cx = half

    def y(v: int) -> int:
        return height - MARGIN - pos[v] * STEP

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<line class="spine" x1="{cx}" y1="{MARGIN}" x2="{cx}" y2="{height - MARGIN}" stroke="#bbb"/>',
    ]
    for e in book.edges:
        y1, y2 = y(e.tail), y(e.head)  # y2 < y1: edges climb
        r = (y1 - y2) // 2
        page = "page1" if e.page == PAGE_LEFT else "page2"
        sweep = 1 if e.page == PAGE_LEFT else 0
        dash = ' stroke-dasharray="4 3"' if e.completion else ""
        out.append(
            f'<path class="arc {page}" d="M {cx} {y1} A {r} {r} 0 0 {sweep} {cx} {y2}" '
            f'fill="none" stroke="black"{dash}/>'
        )
    for v in book.spine:
        out.append(f'<circle class="vertex" cx="{cx}" cy="{y(v)}" r="{RADIUS}" fill="white" stroke="black"/>')
        out.append(f'<text x="{cx + 2 * RADIUS}" y="{y(v) + 4}" font-size="10">{v}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
