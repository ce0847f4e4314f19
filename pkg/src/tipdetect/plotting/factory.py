"""Factory for creating diagnostic plotters by kind name."""

from src.tipdetect.exceptions import TipDetectError
from src.tipdetect.plotting.base import DiagnosticPlotter
from src.tipdetect.plotting.plotters import HistogramPlotter, StagePlotter


class PlotterNotFoundError(TipDetectError):
    """Raised when no plotter is registered for a kind."""


class PlotterFactory:
    """Registry mapping kind names to plotter classes.

    Examples
    --------
    >>> plotter = PlotterFactory.create("histogram")
    >>> fig = plotter.plot(trace)

    >>> class ContourPlotter(DiagnosticPlotter):
    ...     def plot(self, trace, **kwargs): ...
    >>> PlotterFactory.register("contour", ContourPlotter)
    """

    _registry: dict[str, type[DiagnosticPlotter]] = {
        "histogram": HistogramPlotter,
        "stages": StagePlotter,
    }

    @classmethod
    def create(cls, kind: str) -> DiagnosticPlotter:
        """Create the plotter registered under ``kind``.

        Raises
        ------
        PlotterNotFoundError
            If nothing is registered under that name.
        """
        if kind not in cls._registry:
            raise PlotterNotFoundError(
                f"No plotter registered for {kind!r}. "
                f"Available kinds: {sorted(cls._registry)}"
            )
        return cls._registry[kind]()

    @classmethod
    def register(cls, kind: str, plotter_class: type[DiagnosticPlotter]) -> None:
        cls._registry[kind] = plotter_class

    @classmethod
    def kinds(cls) -> list[str]:
        return sorted(cls._registry)
