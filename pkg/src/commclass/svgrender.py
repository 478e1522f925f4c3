"""Deterministic SVG output for heaps, wiring diagrams, and tilings.

Same object in, byte-identical markup out: coordinates are formatted
with a fixed precision, element order follows the object's own order,
and nothing depends on hashing or clocks.
"""

from .representations import (
    Heap,
    Tiling,
    WiringDiagram,
    polygon_vertices,
    rhombus_corners,
    unit_vector,
    wire_arrangements,
)

__all__ = ["geometry_json", "render_svg"]

_PALETTE = (
    "#a6cee3", "#b2df8a", "#fdbf6f", "#cab2d6",
    "#fb9a99", "#ffff99", "#80b1d3", "#fccde5",
)


def _fmt(value: float) -> str:
    out = f"{value:.4f}"
    return "0.0000" if out == "-0.0000" else out


def _svg(width: float, height: float, body: list[str]) -> str:
    head = (
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">'
    )
    return "\n".join([head, *body, "</svg>"]) + "\n"


def _heap_svg(heap: Heap) -> str:
    cell = 44.0
    margin = 30.0
    side = 36.0
    max_col = max((col for _, col in heap.coords), default=1)
    max_row = max((row for row, _ in heap.coords), default=1)
    width = 2 * margin + (2 * max_col - 2) * cell / 2 + side
    height = 2 * margin + (max_row - 1) * cell + side

    def center(row: int, col: int) -> tuple[float, float]:
        x = margin + (col - 1) * cell + side / 2
        y = margin + (max_row - row) * cell + side / 2
        return x, y

    body = []
    for a, b in heap.covers:
        xa, ya = center(*heap.coords[a])
        xb, yb = center(*heap.coords[b])
        body.append(
            f'<line x1="{_fmt(xa)}" y1="{_fmt(ya)}" x2="{_fmt(xb)}" y2="{_fmt(yb)}" '
            'stroke="#bbbbbb" stroke-width="1.5"/>'
        )
    for k, (row, col) in enumerate(heap.coords):
        x, y = center(row, col)
        label = heap.elements[k][1]
        body.append(
            f'<rect x="{_fmt(x - side / 2)}" y="{_fmt(y - side / 2)}" '
            f'width="{_fmt(side)}" height="{_fmt(side)}" '
            f'fill="{_PALETTE[(label - 1) % len(_PALETTE)]}" stroke="#333333" stroke-width="1.5"/>'
        )
        body.append(
            f'<text x="{_fmt(x)}" y="{_fmt(y + 5)}" font-family="sans-serif" '
            f'font-size="16" text-anchor="middle">{label}</text>'
        )
    return _svg(width, height, body)


def _network_svg(diagram: WiringDiagram) -> str:
    gap = 40.0
    colw = 48.0
    dx = 14.0
    margin = 34.0
    n = diagram.n
    max_col = max(diagram.columns, default=0)
    width = 2 * margin + (max_col + 1) * colw
    height = 2 * margin + (n - 1) * gap

    def rail_y(rail: int) -> float:
        return margin + (n - rail) * gap

    def col_x(col: int) -> float:
        return margin + col * colw

    # Trace each wire through its swaps; consecutive swaps on a shared
    # rail have increasing columns, so per-wire x advances monotonically.
    rail_of = list(range(n + 1))  # wire sitting on each rail
    points: list[list[tuple[float, float]]] = [
        [(26.0, rail_y(r))] for r in range(n + 1)
    ]
    for i, col in zip(diagram.swaps, diagram.columns):
        a, b = rail_of[i], rail_of[i + 1]
        x0, x1 = col_x(col) - dx, col_x(col) + dx
        points[a].append((x0, rail_y(i)))
        points[a].append((x1, rail_y(i + 1)))
        points[b].append((x0, rail_y(i + 1)))
        points[b].append((x1, rail_y(i)))
        rail_of[i], rail_of[i + 1] = b, a
    for wire in range(1, n + 1):
        points[wire].append((width - 26.0, rail_y(rail_of.index(wire))))

    body = []
    for wire in range(1, n + 1):
        path = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in points[wire])
        color = _PALETTE[(wire - 1) % len(_PALETTE)]
        body.append(
            f'<polyline points="{path}" fill="none" stroke="{color}" stroke-width="3"/>'
        )
    final = wire_arrangements(diagram)[-1]
    for rail in range(1, n + 1):
        body.append(
            f'<text x="12" y="{_fmt(rail_y(rail) + 5)}" font-family="sans-serif" '
            f'font-size="14" text-anchor="middle">{rail}</text>'
        )
        body.append(
            f'<text x="{_fmt(width - 12)}" y="{_fmt(rail_y(rail) + 5)}" '
            f'font-family="sans-serif" font-size="14" text-anchor="middle">{final[rail - 1]}</text>'
        )
    return _svg(width, height, body)


def _tiling_svg(tiling: Tiling) -> str:
    scale = 70.0
    margin = 24.0
    outline = polygon_vertices(tiling.n, tiling.offset)
    xs = [x for x, _ in outline]
    ys = [y for _, y in outline]
    width = 2 * margin + (max(xs) - min(xs)) * scale
    height = 2 * margin + (max(ys) - min(ys)) * scale

    def to_px(point: tuple[float, float]) -> tuple[float, float]:
        x, y = point
        return (margin + (x - min(xs)) * scale, height - margin - (y - min(ys)) * scale)

    body = []
    for rhombus in tiling.rhombi:
        corners = [to_px(p) for p in rhombus_corners(rhombus, tiling.n, tiling.offset)]
        path = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in corners)
        a, b = rhombus.wires
        color = _PALETTE[(a + b) % len(_PALETTE)]
        body.append(
            f'<polygon points="{path}" fill="{color}" stroke="#333333" stroke-width="1.5"/>'
        )
    path = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in (to_px(p) for p in outline))
    body.append(
        f'<polygon points="{path}" fill="none" stroke="#000000" stroke-width="2"/>'
    )
    return _svg(width, height, body)


def render_svg(obj: Heap | WiringDiagram | Tiling) -> str:
    """Render a heap, wiring diagram, or tiling to SVG markup.

    Output is deterministic: rendering the same object twice yields
    identical bytes.
    """
    if isinstance(obj, Heap):
        return _heap_svg(obj)
    if isinstance(obj, WiringDiagram):
        return _network_svg(obj)
    if isinstance(obj, Tiling):
        return _tiling_svg(obj)
    raise TypeError(f"cannot render {type(obj).__name__}")


def geometry_json(obj: Heap | WiringDiagram | Tiling) -> dict:
    """Exact geometry as plain data, for machine consumption.

    Field order is fixed so canonical JSON dumps are reproducible.
    """
    if isinstance(obj, Heap):
        return {
            "kind": "heap",
            "rank": obj.rank,
            "elements": [list(e) for e in obj.elements],
            "covers": [list(c) for c in obj.covers],
            "coords": [list(c) for c in obj.coords],
        }
    if isinstance(obj, WiringDiagram):
        return {
            "kind": "network",
            "n": obj.n,
            "swaps": list(obj.swaps),
            "columns": list(obj.columns),
            "arrangements": [list(a) for a in wire_arrangements(obj)],
        }
    if isinstance(obj, Tiling):
        return {
            "kind": "tiling",
            "n": obj.n,
            "offset": obj.offset,
            "directions": [list(unit_vector(obj.n, k, obj.offset))
                           for k in range(1, obj.n + 1)],
            "rhombi": [{"wires": list(r.wires), "anchor": list(r.anchor)}
                       for r in obj.rhombi],
            "polygon": [list(p) for p in polygon_vertices(obj.n, obj.offset)],
        }
    raise TypeError(f"no geometry for {type(obj).__name__}")
