"""Hand-rolled SVG emission: line plots and a grayscale raster.

No plotting library: the output must be byte-identical across runs, so every
coordinate goes through one fixed format and the document carries no
timestamps, random ids, or library version strings.  Dimensions are fixed by
the caller and default to 640x400.
"""

import numpy as np

WIDTH = 640
HEIGHT = 400
MARGIN = 56
PALETTE = ("#000000", "#777777", "#bbbbbb")

def _fmt(value: float) -> str:
    """Fixed two-decimal coordinate format; avoids '-0.00'."""
    text = f"{float(value):.2f}"
    return "0.00" if text == "-0.00" else text


class SvgCanvas:
    """Accumulates SVG elements in insertion order and renders one document."""

    def __init__(self, width: int = WIDTH, height: int = HEIGHT):
        self.width = int(width)
        self.height = int(height)
        self._parts: list[str] = []

    def rect(self, x, y, w, h, fill: str, stroke: str = "none"):
        self._parts.append(
            f'<rect x="{_fmt(x)}" y="{_fmt(y)}" width="{_fmt(w)}" height="{_fmt(h)}" '
            f'fill="{fill}" stroke="{stroke}"/>'
        )

    def line(self, x1, y1, x2, y2, stroke: str = "#000000", width: float = 1.0):
        self._parts.append(
            f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
            f'stroke="{stroke}" stroke-width="{_fmt(width)}"/>'
        )

    def polyline(self, xs, ys, stroke: str = "#000000", width: float = 1.0):
        points = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in zip(xs, ys))
        self._parts.append(
            f'<polyline points="{points}" fill="none" stroke="{stroke}" stroke-width="{_fmt(width)}"/>'
        )

    def text(self, x, y, content: str, size: int = 12, anchor: str = "start"):
        self._parts.append(
            f'<text x="{_fmt(x)}" y="{_fmt(y)}" font-family="monospace" font-size="{size}" '
            f'text-anchor="{anchor}">{content}</text>'
        )

    def render(self) -> str:
        head = (
            '<?xml version="1.0" encoding="UTF-8"?>\n'
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{self.width}" height="{self.height}" '
            f'viewBox="0 0 {self.width} {self.height}">\n'
        )
        return head + "\n".join(self._parts) + "\n</svg>\n"


def _axis_frame(canvas: SvgCanvas, x_label: str, y_label: str, x_range, y_range):
    x0, y0 = MARGIN, canvas.height - MARGIN
    x1, y1 = canvas.width - MARGIN, MARGIN
    canvas.rect(x0, y1, x1 - x0, y0 - y1, fill="none", stroke="#000000")
    canvas.text((x0 + x1) / 2, canvas.height - MARGIN / 3, x_label, anchor="middle")
    canvas.text(MARGIN / 3, (y0 + y1) / 2, y_label, anchor="middle")
    canvas.text(x0, y0 + 16, f"{x_range[0]:.6g}", anchor="middle")
    canvas.text(x1, y0 + 16, f"{x_range[1]:.6g}", anchor="middle")
    canvas.text(x0 - 6, y0 + 4, f"{y_range[0]:.6g}", anchor="end")
    canvas.text(x0 - 6, y1 + 4, f"{y_range[1]:.6g}", anchor="end")


def _scale(values, lo, hi, pix_lo, pix_hi):
    values = np.asarray(values, dtype=float)
    if hi == lo:
        return np.full(values.shape, (pix_lo + pix_hi) / 2.0)
    return pix_lo + (values - lo) * (pix_hi - pix_lo) / (hi - lo)


def line_plot(x, series, labels, x_label: str, y_label: str, title: str) -> str:
    """Render one or more series against a shared abscissa.

    Parameters
    ----------
    x : array_like
        Shared abscissa, ascending.
    series : sequence of array_like
        One ordinate array per curve, each the length of x.
    labels : sequence of str
        Legend entries, one per curve.
    """
    x = np.asarray(x, dtype=float)
    series = [np.asarray(s, dtype=float) for s in series]
    canvas = SvgCanvas()
    x_lo, x_hi = float(x.min()), float(x.max())
    y_lo = min(float(s.min()) for s in series)
    y_hi = max(float(s.max()) for s in series)
    if y_hi == y_lo:
        y_hi = y_lo + 1.0

    canvas.text(canvas.width / 2, MARGIN / 2, title, size=14, anchor="middle")
    _axis_frame(canvas, x_label, y_label, (x_lo, x_hi), (y_lo, y_hi))
    px = _scale(x, x_lo, x_hi, MARGIN, canvas.width - MARGIN)
    for k, curve in enumerate(series):
        color = PALETTE[k % len(PALETTE)]
        py = _scale(curve, y_lo, y_hi, canvas.height - MARGIN, MARGIN)
        canvas.polyline(px, py, stroke=color)
        canvas.text(canvas.width - MARGIN - 4, MARGIN + 16 * (k + 1), labels[k], anchor="end")
        canvas.line(
            canvas.width - MARGIN - 60,
            MARGIN + 16 * (k + 1) - 4,
            canvas.width - MARGIN - 48,
            MARGIN + 16 * (k + 1) - 4,
            stroke=color,
        )
    return canvas.render()


def raster_plot(matrix, x_range, y_range, x_label: str, y_label: str, title: str) -> str:
    """Render a matrix as a grayscale cell grid, dark = large value.

    Row index maps to the y axis (first row at the bottom), column index to
    the x axis, mirroring a mesh of values over (x, y) product grids.
    """
    matrix = np.asarray(matrix, dtype=float)
    if matrix.ndim != 2 or matrix.size == 0:
        raise ValueError("raster_plot expects a non-empty 2-d matrix")
    canvas = SvgCanvas()
    canvas.text(canvas.width / 2, MARGIN / 2, title, size=14, anchor="middle")
    _axis_frame(canvas, x_label, y_label, x_range, y_range)

    n_rows, n_cols = matrix.shape
    top = float(matrix.max())
    frame_w = canvas.width - 2 * MARGIN
    frame_h = canvas.height - 2 * MARGIN
    cell_w = frame_w / n_cols
    cell_h = frame_h / n_rows
    for i in range(n_rows):
        y = canvas.height - MARGIN - (i + 1) * cell_h
        for k in range(n_cols):
            level = 0.0 if top == 0.0 else matrix[i, k] / top
            shade = int(round(255.0 * (1.0 - level)))
            canvas.rect(MARGIN + k * cell_w, y, cell_w, cell_h, fill=f"rgb({shade},{shade},{shade})")
    canvas.text(
        canvas.width - MARGIN,
        MARGIN / 2,
        f"max {top:.6g}",
        anchor="end",
    )
    return canvas.render()
