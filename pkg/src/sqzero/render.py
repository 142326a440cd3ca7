"""ASCII and SVG pictures of link patterns and two-column domino tableaux.

Output depends only on the input, so pictures can be compared byte for byte.
"""

from __future__ import annotations

from .orbital import H, V1, V2, TwoColumnSDT, render_sdt
from .slp import LinkPattern, fixed_points

CELL = 4  # characters per point in ASCII pictures


def _points(n: int) -> list[int]:
    return list(range(-n, 0)) + list(range(1, n + 1))


def arc_levels(L: LinkPattern) -> dict:
    """Row of each arc: above every shorter arc whose span overlaps it, so no two rows collide."""
    arcs = sorted(L.arcs, key=lambda a: (a.right - a.left, a.left))
    level: dict = {}
    for a in arcs:
        below = [level[b] for b in level if b.left <= a.right and a.left <= b.right]
        level[a] = 1 + max(below, default=0)
    return level


def ascii_pattern(L: LinkPattern) -> str:
    pts = _points(L.n)
    col = {p: i * CELL + CELL // 2 for i, p in enumerate(pts)}
    width = len(pts) * CELL
    level = arc_levels(L)
    top = max(level.values(), default=0)
    grid = [[" "] * width for _ in range(top)]
    for a, h in level.items():
        r = top - h
        for rr in range(r + 1, top):
            grid[rr][col[a.left]] = "|"
            grid[rr][col[a.right]] = "|"
    for a, h in level.items():
        r = top - h
        for x in range(col[a.left] + 1, col[a.right]):
            grid[r][x] = "-"
        grid[r][col[a.left]] = "+"
        grid[r][col[a.right]] = "+"
    fixed = fixed_points(L)
    marks = [" "] * width
    labels = [" "] * width
    for p in pts:
        marks[col[p]] = "o" if p in fixed else "*"
        s = str(p)
        start = col[p] - len(s) + 1
        for i, ch in enumerate(s):
            labels[start + i] = ch
    lines = ["".join(r).rstrip() for r in grid] + ["".join(marks).rstrip(), "".join(labels).rstrip()]
    return "\n".join(lines)


def svg_pattern(L: LinkPattern, step: int = 40, label: bool = True) -> str:
    pts = _points(L.n)
    x = {p: step // 2 + i * step for i, p in enumerate(pts)}
    spans = [x[a.right] - x[a.left] for a in L.arcs]
    top = max(spans, default=0) // 2 + 10
    base = top + 10
    width = len(pts) * step
    height = base + (30 if label else 10)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    ]
    for a in sorted(L.arcs):
        x1, x2 = x[a.left], x[a.right]
        mid = (x1 + x2) // 2
        apex = base - (x2 - x1)  # control point; the curve peaks halfway up
        out.append(f'<path d="M {x1} {base} Q {mid} {apex} {x2} {base}" fill="none" stroke="black"/>')
    fixed = fixed_points(L)
    for p in pts:
        fill = "white" if p in fixed else "black"
        out.append(f'<circle cx="{x[p]}" cy="{base}" r="3" fill="{fill}" stroke="black"/>')
        if label:
            out.append(f'<text x="{x[p]}" y="{base + 20}" font-size="12" text-anchor="middle">{p}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def ascii_tableau(T: TwoColumnSDT) -> str:
    return render_sdt(T)


def svg_tableau(T: TwoColumnSDT, cell: int = 30) -> str:
    c1, _ = T.shape
    width, height = 2 * cell + 2, c1 * cell + 2
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    ]
    h1 = h2 = 0
    for i, p in enumerate(T.placements, 1):
        if p == V1:
            x, y, w, h = 0, h1, 1, 2
            h1 += 2
        elif p == V2:
            x, y, w, h = 1, h2, 1, 2
            h2 += 2
        else:
            assert p == H
            x, y, w, h = 0, h1, 2, 1
            h1 += 1
            h2 += 1
        px, py = 1 + x * cell, 1 + y * cell
        out.append(
            f'<rect x="{px}" y="{py}" width="{w * cell}" height="{h * cell}" fill="white" stroke="black"/>'
        )
        out.append(
            f'<text x="{px + w * cell // 2}" y="{py + h * cell // 2 + 5}" font-size="14" '
            f'text-anchor="middle">{i}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
