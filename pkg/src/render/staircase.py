"""
Staircase Plots
===============

Draws normalized step functions phi(t)/q as monotone staircases from (0, 0) to
(1, 1), either as SVG text or as a PNG rendered with pygame surfaces.
"""

import logging
import os
import tempfile
from pathlib import Path

from utils.constants import (
    GRAY, PLOT_AXIS, PLOT_HEIGHT, PLOT_MARGIN, PLOT_STROKE, PLOT_WIDTH, RED, WHITE
)
from utils.errors import UsageError
from utils.serialization import discard_temp, write_atomic

logger = logging.getLogger(__name__)


def staircase_points(step):
    """Corner points of phi(t)/q on [0, 1]

    Args:
        step (StepFunction): Function to draw

    Returns:
        list: (t, y) corners starting at (0, 0) and ending at (1, 1)
    """
    q = step.q
    points = [(0.0, 0.0)]
    for j, t in enumerate(step.breakpoints, start=1):
        points.append((t, (j - 1) / q))
        points.append((t, j / q))
    points.append((1.0, 1.0))
    return points


class StaircasePlot:
    """Plot frame mapping the unit square onto pixels"""

    def __init__(self, width=PLOT_WIDTH, height=PLOT_HEIGHT, margin=PLOT_MARGIN):
        """Initialize the plot frame

        Args:
            width (int): Image width in pixels
            height (int): Image height in pixels
            margin (int): Blank border around the unit square
        """
        self.width = width
        self.height = height
        self.margin = margin

    def to_pixels(self, t, y):
        """Map a point of the unit square to pixel coordinates (y grows downwards)"""
        inner_w = self.width - 2 * self.margin
        inner_h = self.height - 2 * self.margin
        return (self.margin + t * inner_w, self.height - self.margin - y * inner_h)

    def svg(self, step, title=""):
        """SVG document with the axes box and one staircase path element"""
        corners = [self.to_pixels(t, y) for t, y in staircase_points(step)]
        d = "M " + " L ".join(f"{x:.3f},{y:.3f}" for x, y in corners)
        x0, y0 = self.to_pixels(0.0, 0.0)
        x1, y1 = self.to_pixels(1.0, 1.0)
        lines = [
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{self.width}" height="{self.height}" '
            f'viewBox="0 0 {self.width} {self.height}">',
            f'  <rect x="{x0:.3f}" y="{y1:.3f}" width="{x1 - x0:.3f}" height="{y0 - y1:.3f}" '
            f'fill="none" stroke="{PLOT_AXIS}" stroke-width="1"/>',
            f'  <path class="staircase" d="{d}" fill="none" stroke="{PLOT_STROKE}" stroke-width="2"/>',
        ]
        if title:
            lines.append(f'  <text x="{self.width / 2:.1f}" y="{self.margin / 2:.1f}" '
                         f'text-anchor="middle" font-size="14">{_escape(title)}</text>')
        lines.append("</svg>")
        return "\n".join(lines) + "\n"

    def render_surface(self, step, title=""):
        """Draw the staircase onto a new pygame surface

        Returns:
            pygame.Surface: Rendered plot
        """
        import pygame

        surface = pygame.Surface((self.width, self.height))
        surface.fill(WHITE)
        x0, y0 = self.to_pixels(0.0, 0.0)
        x1, y1 = self.to_pixels(1.0, 1.0)
        pygame.draw.rect(surface, GRAY, (round(x0), round(y1), round(x1 - x0), round(y0 - y1)), 1)
        corners = [tuple(round(c) for c in self.to_pixels(t, y)) for t, y in staircase_points(step)]
        pygame.draw.lines(surface, RED, False, corners, 2)
        if title:
            if not pygame.font.get_init():
                pygame.font.init()
            font = pygame.font.Font(None, 22)
            text = font.render(title, True, GRAY)
            surface.blit(text, text.get_rect(center=(self.width // 2, self.margin // 2)))
        return surface


def _escape(text):
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def save_svg(step, path, title=""):
    write_atomic(path, StaircasePlot().svg(step, title))


def save_png(step, path, title=""):
    """Render the staircase to a PNG file through pygame

    The image goes to a temp file in the destination directory first, then is
    renamed into place.
    """
    os.environ.setdefault("SDL_VIDEODRIVER", "dummy")
    import pygame

    surface = StaircasePlot().render_surface(step, title)
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp_name = tempfile.mkstemp(prefix=f".{path.stem}.", suffix=".png", dir=path.parent)
    except OSError as e:
        raise UsageError(f"Cannot write {path}: {e}") from e
    os.close(fd)
    try:
        pygame.image.save(surface, tmp_name)
        os.replace(tmp_name, path)
    except (OSError, pygame.error) as e:
        discard_temp(tmp_name)
        raise UsageError(f"Cannot write {path}: {e}") from e
    except BaseException:
        discard_temp(tmp_name)
        raise
    logger.debug("Wrote %s", path)
