# Copyright 2026 The anomalab Authors.

"""
Optional SVG figures.  matplotlib is imported on first use; without it
``--plot`` is a validation error.
"""

import io
import logging
import os

import numpy as np

from anomalab.errors import ValidationError
from anomalab.messages import get_message
from anomalab.output import write_atomic

logger = logging.getLogger(__name__)


def _matplotlib():
    try:
        import matplotlib
        from matplotlib.figure import Figure
    except ImportError:
        raise ValidationError(get_message('PlotUnavailable'))
    return matplotlib, Figure


def render_svg(figure):
    """
    Draw one experiment Figure and return the SVG text.  The SVG carries no
    date and a fixed id salt so identical data gives identical bytes.
    """
    matplotlib, Figure = _matplotlib()
    with matplotlib.rc_context({"svg.hashsalt": "anomalab", "svg.fonttype": "none"}):
        fig = Figure(figsize=(6.4, 4.8))
        ax = fig.add_subplot(1, 1, 1)
        for label, xs, ys in figure.series:
            xs = np.asarray(xs, dtype=float)
            ys = np.asarray(ys, dtype=float)
            keep = np.isfinite(xs) & np.isfinite(ys)
            if figure.logx:
                keep &= xs > 0
            if figure.logy:
                keep &= ys > 0
            ax.plot(xs[keep], ys[keep], marker="o", ms=3, lw=1.0, label=label)
        if figure.logx:
            ax.set_xscale("log")
        if figure.logy:
            ax.set_yscale("log")
        ax.set_title(figure.title)
        ax.set_xlabel(figure.xlabel)
        ax.set_ylabel(figure.ylabel)
        if len(figure.series) > 1:
            ax.legend()
        buffer = io.StringIO()
        fig.savefig(buffer, format="svg", metadata={"Date": None})
    return buffer.getvalue()


def write_figures(result, out_dir):
    paths = []
    for figure in result.figures:
        path = os.path.join(out_dir, figure.name + ".svg")
        write_atomic(path, render_svg(figure))
        paths.append(path)
    if not result.figures:
        logger.info("%s has no figures", result.name)
    return paths
