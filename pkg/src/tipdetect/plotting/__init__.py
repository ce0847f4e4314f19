"""Diagnostic figures for single frames.

A FrameTrace from ``trace_frame`` carries every intermediate raster; the
plotters here turn it into figures for tuning thresholds by eye.

Public API
----------
plot_diagnostics : function
    Main entry point, picks the plotter by kind name
PlotConfig : dataclass
    Styling and output options
PlotterFactory : class
    Registry of plotters ("histogram", "stages")
PlotterNotFoundError : exception
    Raised for an unknown kind
DiagnosticPlotter : ABC
    Base class for custom plotters

Examples
--------
>>> from src.tipdetect.config import PipelineConfig
>>> from src.tipdetect.frames import read_frame
>>> from src.tipdetect.pipeline import trace_frame
>>> from src.tipdetect.plotting import plot_diagnostics
>>>
>>> trace = trace_frame(read_frame("frame_00000.ppm"), PipelineConfig())
>>> fig = plot_diagnostics("histogram", trace, save_path="histogram.png")
"""

import matplotlib.pyplot as plt

from src.tipdetect.pipeline import FrameTrace
from src.tipdetect.plotting.base import DiagnosticPlotter
from src.tipdetect.plotting.config import PlotConfig
from src.tipdetect.plotting.factory import PlotterFactory, PlotterNotFoundError


def plot_diagnostics(
    kind: str,
    trace: FrameTrace,
    title: str | None = None,
    config: PlotConfig | None = None,
    save_path: str | None = None,
) -> plt.Figure:
    """Render one diagnostic view of a frame trace.

    Parameters
    ----------
    kind : str
        Registered plotter name, "histogram" or "stages" by default.
    trace : FrameTrace
        Output of trace_frame.
    title : str | None
        Figure title, if provided
    config : PlotConfig | None
        Styling; defaults apply when None
    save_path : str | None
        If provided, save figure to this path

    Returns
    -------
    plt.Figure
        Matplotlib figure object

    Raises
    ------
    PlotterNotFoundError
        If ``kind`` is not registered.
    NoForegroundError
        If the view needs a hand and the frame had none.
    """
    plotter = PlotterFactory.create(kind)
    return plotter.plot(trace, title=title, save_path=save_path, config=config)


__all__ = [
    "plot_diagnostics",
    "PlotConfig",
    "PlotterFactory",
    "DiagnosticPlotter",
    "PlotterNotFoundError",
]
