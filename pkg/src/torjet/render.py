"""Figure output for plane tropical curves.

``render_svg`` writes a deterministic, dependency-free SVG (grid, bounded
edges, rays clipped to the view box, multiplicity labels); repeated runs on
the same curve produce identical bytes.  ``render_figure`` is the optional
matplotlib path for raster/vector output alongside the JSON report.
"""

from __future__ import annotations

from fractions import Fraction

from .tropical import PlaneTropicalCurve

PAD = 2  # view-box padding around the vertex bounding box, in ray units


def _fmt(x) -> str:
    return f"{float(x):.4f}"


def _bbox(curve: PlaneTropicalCurve):
    if not curve.vertices:
        return (Fraction(-1), Fraction(-1), Fraction(1), Fraction(1))
    xs = [Fraction(v[0]) for v in curve.vertices]
    ys = [Fraction(v[1]) for v in curve.vertices]
    return (min(xs) - PAD, min(ys) - PAD, max(xs) + PAD, max(ys) + PAD)


def _ray_exit(base, direction, box):
    """Exit point of base + t*direction from the bounding box (t >= 0)."""
    x0, y0, x1, y1 = box
    t_exit = None
    for coord, d, lo, hi in ((base[0], direction[0], x0, x1), (base[1], direction[1], y0, y1)):
        if d == 0:
            continue
        bound = (hi - Fraction(coord)) / d if d > 0 else (lo - Fraction(coord)) / d
        if t_exit is None or bound < t_exit:
            t_exit = bound
    if t_exit is None or t_exit < 0:
        t_exit = Fraction(0)
    return (Fraction(base[0]) + t_exit * direction[0], Fraction(base[1]) + t_exit * direction[1])


def svg_document(curve: PlaneTropicalCurve) -> str:
    x0, y0, x1, y1 = _bbox(curve)
    width, height = x1 - x0, y1 - y0
    # math coordinates with the y axis flipped for display
    view = f"{_fmt(x0)} {_fmt(-y1)} {_fmt(width)} {_fmt(height)}"
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{view}" '
        f'width="{_fmt(width * 60)}" height="{_fmt(height * 60)}">',
    ]
    grid = []
    gx = -((-x0).__floor__())
    while gx <= x1.__floor__():
        grid.append(
            f'<line class="grid" x1="{_fmt(gx)}" y1="{_fmt(-y1)}" '
            f'x2="{_fmt(gx)}" y2="{_fmt(-y0)}" stroke="#dddddd" stroke-width="0.02"/>'
        )
        gx += 1
    gy = -((-y0).__floor__())
    while gy <= y1.__floor__():
        grid.append(
            f'<line class="grid" x1="{_fmt(x0)}" y1="{_fmt(-gy)}" '
            f'x2="{_fmt(x1)}" y2="{_fmt(-gy)}" stroke="#dddddd" stroke-width="0.02"/>'
        )
        gy += 1
    lines.extend(grid)
    box = (x0, y0, x1, y1)

    def emit_segment(a, b, mult, kind):
        lines.append(
            f'<line class="{kind}" x1="{_fmt(a[0])}" y1="{_fmt(-a[1])}" '
            f'x2="{_fmt(b[0])}" y2="{_fmt(-b[1])}" stroke="#1f3b73" '
            f'stroke-width="{_fmt(Fraction(6 * mult, 100))}" stroke-linecap="round"/>'
        )
        mx, my = (Fraction(a[0]) + Fraction(b[0])) / 2, (Fraction(a[1]) + Fraction(b[1])) / 2
        lines.append(
            f'<text class="label" x="{_fmt(mx + Fraction(1, 10))}" y="{_fmt(-my)}" '
            f'font-size="0.3" fill="#7a2020">{mult}</text>'
        )

    for edge in curve.edges:
        a = curve.vertices[edge.ends[0]]
        b = curve.vertices[edge.ends[1]]
        emit_segment(a, b, edge.multiplicity, "edge")
    for ray in curve.rays:
        base = curve.vertices[ray.vertex]
        tip = _ray_exit(base, ray.direction, box)
        emit_segment(base, tip, ray.multiplicity, "ray")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_svg(curve: PlaneTropicalCurve, out_path: str) -> str:
    text = svg_document(curve)
    with open(out_path, "w", encoding="utf-8") as fh:
        fh.write(text)
    return text


def render_figure(curve: PlaneTropicalCurve, out_path: str) -> None:
    """Matplotlib rendering of the curve (PNG/PDF/SVG chosen by extension)."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    x0, y0, x1, y1 = (float(v) for v in _bbox(curve))
    fig, ax = plt.subplots(figsize=(5, 5))
    ax.set_xlim(x0, x1)
    ax.set_ylim(y0, y1)
    ax.set_aspect("equal")
    ax.grid(True, color="#dddddd", linewidth=0.5)
    box = _bbox(curve)
    for edge in curve.edges:
        a = curve.vertices[edge.ends[0]]
        b = curve.vertices[edge.ends[1]]
        _plot_segment(ax, a, b, edge.multiplicity)
    for ray in curve.rays:
        base = curve.vertices[ray.vertex]
        tip = _ray_exit(base, ray.direction, box)
        _plot_segment(ax, base, tip, ray.multiplicity)
    if curve.vertices:
        ax.plot(
            [float(v[0]) for v in curve.vertices],
            [float(v[1]) for v in curve.vertices],
            "o",
            color="#1f3b73",
            markersize=4,
        )
    fig.savefig(out_path, bbox_inches="tight")
    plt.close(fig)


def _plot_segment(ax, a, b, mult):
    ax.plot(
        [float(a[0]), float(b[0])],
        [float(a[1]), float(b[1])],
        color="#1f3b73",
        linewidth=0.8 + 0.8 * mult,
        solid_capstyle="round",
    )
    mx, my = (float(a[0]) + float(b[0])) / 2, (float(a[1]) + float(b[1])) / 2
    ax.annotate(str(mult), (mx, my), textcoords="offset points", xytext=(4, 2), color="#7a2020", fontsize=8)
