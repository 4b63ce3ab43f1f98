"""
Render Package - Step Function Plots
====================================

SVG and PNG staircase plots of normalized step functions.
"""

from .staircase import StaircasePlot, save_png, save_svg, staircase_points

__all__ = [
    'StaircasePlot',
    'staircase_points',
    'save_svg',
    'save_png',
]
