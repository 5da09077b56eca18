from jinja2 import Environment, PackageLoader, select_autoescape

env = Environment(
    loader=PackageLoader("lattice_pick"),
    autoescape=select_autoescape(["svg", "xml", "html"]),
    keep_trailing_newline=True,
)

CELL = 40
MARGIN = 40
CAPTION_HEIGHT = 40


def _to_canvas(point, x_lo, y_hi):
    x, y = point
    return MARGIN + (x - x_lo) * CELL, MARGIN + (y_hi - y) * CELL


def render_polygon_svg(coords, boundary_points, interior_points, caption):
    """SVG 1.1 drawing of a chart-coordinate polygon and its lattice points."""
    xs = [c[0] for c in coords]
    ys = [c[1] for c in coords]
    x_lo, x_hi, y_lo, y_hi = min(xs), max(xs), min(ys), max(ys)
    width = 2 * MARGIN + (x_hi - x_lo) * CELL
    height = 2 * MARGIN + (y_hi - y_lo) * CELL + CAPTION_HEIGHT

    template = env.get_template("polygon.svg")
    return template.render(
        width=width,
        height=height,
        outline=" ".join("{},{}".format(*_to_canvas(c, x_lo, y_hi)) for c in coords),
        grid=[_to_canvas((x, y), x_lo, y_hi)
              for y in range(y_lo, y_hi + 1) for x in range(x_lo, x_hi + 1)],
        boundary=[_to_canvas(p, x_lo, y_hi) for p in boundary_points],
        interior=[_to_canvas(p, x_lo, y_hi) for p in interior_points],
        caption=caption,
        caption_y=height - CAPTION_HEIGHT // 2,
    )
