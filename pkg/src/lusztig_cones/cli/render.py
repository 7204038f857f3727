"""Self-contained SVG and plain-text renderings of chamber and rectangle diagrams."""

from __future__ import annotations

from xml.sax.saxutils import escape

from ..rectangle import RectangleDiagram
from ..wiring import ChamberDiagram

UNIT = 40
PAD = 30


def _svg(width, height, body):
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" height="{height:.0f}" '
        f'viewBox="0 0 {width:.0f} {height:.0f}">\n'
        f'<rect width="100%" height="100%" fill="white"/>\n'
        + "\n".join(body)
        + "\n</svg>\n"
    )


def _fmt(x):
    return f"{x:.1f}".rstrip("0").rstrip(".")


def chamber_svg(cd: ChamberDiagram) -> str:
    g = cd.geometry()
    sx = lambda x: PAD + x * UNIT  # noqa: E731
    sy = lambda y: PAD + y * UNIT  # noqa: E731
    body = []
    for strand, pts in sorted(g["strands"].items()):
        path = " ".join(f"{_fmt(sx(x))},{_fmt(sy(y))}" for x, y in pts)
        body.append(f'<polyline points="{path}" fill="none" stroke="black" stroke-width="1.5"/>')
        x0, y0 = pts[0]
        body.append(
            f'<text x="{_fmt(sx(x0) - 12)}" y="{_fmt(sy(y0) + 4)}" font-family="sans-serif" '
            f'font-size="12" text-anchor="end">{strand}</text>'
        )
    for ch in g["chambers"]:
        body.append(
            f'<text x="{_fmt(sx(ch["x"]))}" y="{_fmt(sy(ch["y"]) + 4)}" font-family="sans-serif" '
            f'font-size="11" fill="#1f4e9c" text-anchor="middle">{escape(ch["label"])}</text>'
        )
    width = 2 * PAD + g["width"] * UNIT
    height = 2 * PAD + g["height"] * UNIT
    return _svg(width, height, body)


def rectangle_svg(D: RectangleDiagram) -> str:
    g = D.geometry()
    xs = [c["x"] for c in g["cells"]] + [p[0] for r in g["rectangles"] for p in r["outline"]]
    ys = [c["y"] for c in g["cells"]] + [p[1] for r in g["rectangles"] for p in r["outline"]]
    x0, y0 = min(xs) - 1, min(ys) - 1
    half = UNIT / 2
    sx = lambda x: PAD + (x - x0) * half  # noqa: E731
    sy = lambda y: PAD + (y - y0) * half  # noqa: E731
    body = []
    for r in g["rectangles"]:
        pts = " ".join(f"{_fmt(sx(x))},{_fmt(sy(y))}" for x, y in r["outline"])
        body.append(f'<polygon points="{pts}" fill="none" stroke="black" stroke-width="1.2"/>')
    for c in g["cells"]:
        label = str(c["label"])
        body.append(
            f'<text x="{_fmt(sx(c["x"]))}" y="{_fmt(sy(c["y"]) + 5)}" font-family="sans-serif" '
            f'font-size="14" text-anchor="middle">{label}</text>'
        )
        if c["multiplicity"] > 1:
            body.append(
                f'<text x="{_fmt(sx(c["x"]) + 8)}" y="{_fmt(sy(c["y"]) - 4)}" font-family="sans-serif" '
                f'font-size="9" fill="#b03030">({c["multiplicity"]})</text>'
            )
    (ax, ay), (bx, by) = g["central_line"]
    body.append(
        f'<line x1="{_fmt(sx(ax))}" y1="{_fmt(sy(ay))}" x2="{_fmt(sx(bx))}" y2="{_fmt(sy(by))}" '
        f'stroke="#1f4e9c" stroke-dasharray="6,4" stroke-width="1.2"/>'
    )
    width = 2 * PAD + (max(xs) + 1 - x0) * half
    height = 2 * PAD + (max(ys) + 1 - y0) * half
    return _svg(width, height, body)


def rectangle_ascii(D: RectangleDiagram) -> str:
    """Cells on a diamond grid; a trailing ' marks multiplicity 2, '' multiplicity 3, and so on."""
    cells = D.geometry()["cells"]
    xs = [int(c["x"]) for c in cells]
    ys = [int(c["y"]) for c in cells]
    xmin, ymin = min(xs), min(ys)
    width = 3 * (max(xs) - xmin) + 6
    grid = [[" "] * width for _ in range(max(ys) - ymin + 1)]
    for c, x, y in zip(cells, xs, ys):
        text = str(c["label"]) + "'" * (c["multiplicity"] - 1)
        col = 3 * (x - xmin)
        for t, ch in enumerate(text):
            grid[y - ymin][col + t] = ch
    return "\n".join("".join(row).rstrip() for row in grid)


def chamber_ascii(cd: ChamberDiagram) -> str:
    """One line per strand position; '><' marks a crossing, chamber labels are listed below."""
    n1 = cd.word.n + 1
    lines = []
    for pos in range(1, n1 + 1):
        row = [f"{cd.snapshots[0][pos - 1]:>2} "]
        for x in cd.word.letters:
            if x == pos:
                row.append("-\\")
            elif x == pos - 1:
                row.append("-/")
            else:
                row.append("--")
        row.append(f" {cd.snapshots[-1][pos - 1]}")
        lines.append("".join(row))
    return "\n".join(lines)
