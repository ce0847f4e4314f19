"""Unit tests for plot_diagnostics API function."""

import matplotlib.pyplot as plt
import pytest

from src.tipdetect.exceptions import NoForegroundError
from src.tipdetect.plotting import PlotConfig, PlotterNotFoundError, plot_diagnostics


class TestPlotDiagnostics:
    """Test public API function for diagnostic figures."""

    @pytest.mark.parametrize("kind", ["histogram", "stages"])
    def test_dispatch(self, hand_trace, kind):
        """plot_diagnostics handles every registered kind."""
        fig = plot_diagnostics(kind, hand_trace, title="hand")

        assert isinstance(fig, plt.Figure)
        plt.close(fig)

    def test_unknown_kind_raises_error(self, hand_trace):
        """plot_diagnostics raises error for an unregistered kind."""
        with pytest.raises(PlotterNotFoundError):
            plot_diagnostics("contour", hand_trace)

    def test_saves_with_config(self, hand_trace, tmp_path):
        """Config format and save path are honoured."""
        save_path = tmp_path / "stages.pdf"
        config = PlotConfig(figsize=(6, 4), dpi=50, save_format="pdf")

        fig = plot_diagnostics(
            "stages", hand_trace, config=config, save_path=str(save_path)
        )

        assert save_path.exists()
        plt.close(fig)

    def test_histogram_needs_a_hand(self, no_hand_trace):
        """The histogram view has nothing to show without a hand."""
        with pytest.raises(NoForegroundError):
            plot_diagnostics("histogram", no_hand_trace)
