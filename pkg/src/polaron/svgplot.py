"""Static SVG line plots of scan rows, with no plotting library.

Three series are supported:

``energy``    OM and Feynman energies, linear axes
``mass``      OM and Feynman effective masses, log-log axes
``rel_diff``  relative energy difference, log alpha axis, with a dashed
              reference line at 15 %

Coordinates are printed with two decimals, so identical rows give
byte-identical documents.
"""
import math
from xml.sax.saxutils import escape

from .errors import DomainError
from .report import write_text

__all__ = ["PLOTS", "svg_text", "emit_svg_plot"]

WIDTH, HEIGHT = 640, 420
LEFT, RIGHT, TOP, BOTTOM = 72, 24, 36, 56
COLORS = ("#1f77b4", "#d62728", "#2ca02c")

# series -> (title, y label, log x, log y, [(legend, field), ...])
PLOTS = {
    "energy": ("Ground-state energy", "E", False, False,
               [("operator method", "e_om"), ("Feynman", "e_feynman")]),
    "mass": ("Effective mass", "m_p", True, True,
             [("operator method", "m_om"), ("Feynman", "m_feynman")]),
    "rel_diff": ("Relative energy difference", "|E_OM - E_F| / |E_F|", True, False,
                 [("relative difference", "rel_diff_e")]),
}
REFERENCE_LINES = {"rel_diff": 0.15}
# curves fall from the top-left corner in the energy plot
LEGEND_BOTTOM = {"energy"}


def _nice_step(span, target=6):
    raw = span / target
    mag = 10.0 ** math.floor(math.log10(raw))
    for m in (1.0, 2.0, 2.5, 5.0, 10.0):
        if raw <= m * mag:
            return m * mag
    return 10.0 * mag


def _linear_ticks(lo, hi):
    step = _nice_step(hi - lo)
    first = math.ceil(lo / step - 1e-9)
    last = math.floor(hi / step + 1e-9)
    return [k * step for k in range(first, last + 1)]


def _log_ticks(lo, hi):
    first = math.floor(math.log10(lo))
    last = math.ceil(math.log10(hi))
    mantissas = (1.0,) if last - first > 3 else (1.0, 2.0, 5.0)
    ticks = [m * 10.0 ** k for k in range(first, last + 1) for m in mantissas]
    return [t for t in ticks if lo * (1 - 1e-9) <= t <= hi * (1 + 1e-9)]


def _range(values, log):
    lo, hi = min(values), max(values)
    if log:
        if lo == hi:
            return lo / 2.0, hi * 2.0
        # 3 % margin on each side in log space
        pad = 0.03 * math.log10(hi / lo)
        return lo / 10.0 ** pad, hi * 10.0 ** pad
    if lo == hi:
        lo, hi = lo - 1.0, hi + 1.0
    # widen to the enclosing tick multiples
    step = _nice_step(hi - lo)
    return math.floor(lo / step) * step, math.ceil(hi / step) * step


class _Axis:
    def __init__(self, lo, hi, log, start, end):
        self.lo, self.hi, self.log = lo, hi, log
        self.start, self.end = start, end

    def __call__(self, value):
        if self.log:
            f = (math.log10(value) - math.log10(self.lo)) / (math.log10(self.hi) - math.log10(self.lo))
        else:
            f = (value - self.lo) / (self.hi - self.lo)
        return self.start + f * (self.end - self.start)

    def ticks(self):
        return _log_ticks(self.lo, self.hi) if self.log else _linear_ticks(self.lo, self.hi)


def _label(value):
    if value == 0:
        return "0"
    return f"{value:g}"


def svg_text(rows, series):
    if series not in PLOTS:
        raise DomainError(f"unknown series {series!r}; expected one of {sorted(PLOTS)}")
    rows = list(rows)
    if len(rows) < 2:
        raise DomainError("an SVG plot needs at least 2 rows")
    title, ylabel, log_x, log_y, curves = PLOTS[series]

    def usable(x, y):
        return math.isfinite(x) and math.isfinite(y) and (not log_x or x > 0) and (not log_y or y > 0)

    data = []
    for legend, name in curves:
        pts = [(r.alpha, getattr(r, name)) for r in rows]
        data.append((legend, [p for p in pts if usable(*p)]))
    xs = [x for _, pts in data for x, _ in pts]
    ys = [y for _, pts in data for _, y in pts]
    if series in REFERENCE_LINES:
        ys.append(REFERENCE_LINES[series])
    if not xs:
        raise DomainError("no finite points to plot")

    xa = _Axis(*_range(xs, log_x), log_x, LEFT, WIDTH - RIGHT)
    ya = _Axis(*_range(ys, log_y), log_y, HEIGHT - BOTTOM, TOP)
    x0, x1, y0, y1 = LEFT, WIDTH - RIGHT, HEIGHT - BOTTOM, TOP

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" '
        f'height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<text x="{WIDTH / 2:.2f}" y="22" text-anchor="middle" font-family="sans-serif" '
        f'font-size="15">{escape(title)}</text>',
        '<g id="axes" stroke="black" stroke-width="1" fill="none">',
        f'<rect x="{x0}" y="{y1}" width="{x1 - x0}" height="{y0 - y1}"/>',
        "</g>",
        '<g id="ticks" font-family="sans-serif" font-size="11">',
    ]
    for t in xa.ticks():
        px = xa(t)
        out.append(f'<line x1="{px:.2f}" y1="{y0}" x2="{px:.2f}" y2="{y0 + 5}" stroke="black"/>')
        out.append(f'<line x1="{px:.2f}" y1="{y0}" x2="{px:.2f}" y2="{y1}" stroke="#dddddd"/>')
        out.append(f'<text x="{px:.2f}" y="{y0 + 18}" text-anchor="middle">{_label(t)}</text>')
    for t in ya.ticks():
        py = ya(t)
        out.append(f'<line x1="{x0 - 5}" y1="{py:.2f}" x2="{x0}" y2="{py:.2f}" stroke="black"/>')
        out.append(f'<line x1="{x0}" y1="{py:.2f}" x2="{x1}" y2="{py:.2f}" stroke="#dddddd"/>')
        out.append(f'<text x="{x0 - 8}" y="{py + 4:.2f}" text-anchor="end">{_label(t)}</text>')
    out.append("</g>")
    out.append(
        f'<text x="{(x0 + x1) / 2:.2f}" y="{HEIGHT - 14}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="13">alpha{" (log)" if log_x else ""}</text>'
    )
    out.append(
        f'<text x="16" y="{(y0 + y1) / 2:.2f}" text-anchor="middle" font-family="sans-serif" '
        f'font-size="13" transform="rotate(-90 16 {(y0 + y1) / 2:.2f})">'
        f'{escape(ylabel)}{" (log)" if log_y else ""}</text>'
    )
    if series in REFERENCE_LINES:
        py = ya(REFERENCE_LINES[series])
        out.append(
            f'<line x1="{x0}" y1="{py:.2f}" x2="{x1}" y2="{py:.2f}" stroke="gray" '
            f'stroke-dasharray="6 4"/>'
        )
    out.append('<g id="curves" fill="none" stroke-width="2">')
    for k, (legend, pts) in enumerate(data):
        coords = " ".join(f"{xa(x):.2f},{ya(y):.2f}" for x, y in pts)
        out.append(
            f'<polyline data-series="{escape(legend)}" stroke="{COLORS[k]}" points="{coords}"/>'
        )
    out.append("</g>")
    out.append('<g id="legend" font-family="sans-serif" font-size="12">')
    for k, (legend, _) in enumerate(data):
        if series in LEGEND_BOTTOM:
            ly = y0 - 16 - 18 * (len(data) - 1 - k)
        else:
            ly = y1 + 16 + 18 * k
        out.append(f'<line x1="{x0 + 12}" y1="{ly}" x2="{x0 + 36}" y2="{ly}" stroke="{COLORS[k]}" stroke-width="2"/>')
        out.append(f'<text x="{x0 + 42}" y="{ly + 4}">{escape(legend)}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def emit_svg_plot(rows, series, destination):
    """Render ``rows`` as an SVG document and write it to a path or stream."""
    write_text(svg_text(rows, series), destination)
