"""Render timed tableaux as stacked colour bands.

One horizontal band per row, bottom row drawn topmost (English
convention); bar widths are durations times pixels_per_unit and the fill
colour is keyed by letter.  Output is byte-deterministic SVG: the id hash
salt is pinned and no date metadata is written.
"""

from __future__ import annotations

import colorsys
from dataclasses import dataclass
from typing import Dict, Mapping, Optional

import matplotlib

matplotlib.use("Agg")
matplotlib.rcParams["svg.hashsalt"] = "timedtab"

from matplotlib import pyplot as plt  # noqa: E402
from matplotlib.patches import Rectangle  # noqa: E402

from .tableaux import TimedTableau  # noqa: E402

_DPI = 100


def default_palette(alphabet_size: int) -> Dict[int, str]:
    """Evenly spaced hues, one per letter."""
    palette = {}
    for letter in range(1, alphabet_size + 1):
        hue = (letter - 1) / max(alphabet_size, 1)
        r, g, b = colorsys.hsv_to_rgb(hue, 0.65, 0.92)
        palette[letter] = f"#{int(r * 255):02x}{int(g * 255):02x}{int(b * 255):02x}"
    return palette


@dataclass(frozen=True)
class RenderSpec:
    pixels_per_unit: float = 120.0
    row_height: float = 28.0
    palette: Optional[Mapping[int, str]] = None

    def color(self, letter: int, alphabet_size: int) -> str:
        if self.palette is not None and letter in self.palette:
            return self.palette[letter]
        return default_palette(alphabet_size)[letter]


def render_tableau(tab: TimedTableau, path: str, spec: RenderSpec = RenderSpec()) -> None:
    """Write the tableau as an SVG file at ``path``."""
    rows = tab.rows
    total_width = float(rows[0].length) if rows else 1.0
    width_px = max(total_width * spec.pixels_per_unit, 1.0)
    height_px = max(len(rows) * spec.row_height, 1.0)
    fig = plt.figure(figsize=(width_px / _DPI, height_px / _DPI), dpi=_DPI)
    ax = fig.add_axes([0, 0, 1, 1])
    ax.set_xlim(0, max(total_width, 1.0))
    ax.set_ylim(0, max(len(rows), 1))
    ax.axis("off")
    depth = len(rows)
    for index, row in enumerate(rows):
        y = depth - 1 - index
        x = 0.0
        for letter, duration in row.segments:
            width = float(duration)
            ax.add_patch(
                Rectangle(
                    (x, y),
                    width,
                    1.0,
                    facecolor=spec.color(letter, tab.alphabet_size),
                    edgecolor="white",
                    linewidth=0.8,
                )
            )
            x += width
    fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)
