"""Abstract base class for diagnostic plotters."""

from abc import ABC, abstractmethod

import matplotlib.pyplot as plt

from src.tipdetect.pipeline import FrameTrace
from src.tipdetect.plotting.config import PlotConfig


class DiagnosticPlotter(ABC):
    """Renders one view of a pipeline trace.

    Every plotter takes the same arguments so PlotterFactory can hand out any
    of them by name.
    """

    @abstractmethod
    def plot(
        self,
        trace: FrameTrace,
        title: str | None = None,
        save_path: str | None = None,
        config: PlotConfig | None = None,
    ) -> plt.Figure:
        """Draw the trace.

        Parameters
        ----------
        trace : FrameTrace
            Intermediates of one frame from trace_frame.
        title : str | None
            Figure title, if provided
        save_path : str | None
            If provided, save figure to this path
        config : PlotConfig | None
            Styling; defaults apply when None

        Returns
        -------
        plt.Figure
            Matplotlib figure object
        """
