"""Unit tests for concrete plotter implementations."""

import matplotlib.pyplot as plt

from src.tipdetect.plotting.config import PlotConfig
from src.tipdetect.plotting.plotters import HistogramPlotter, StagePlotter


class TestHistogramPlotter:
    """Test the hand-axis histogram view."""

    def test_marks_wrist_cut(self, hand_trace):
        """The cut is drawn as a labelled vertical line."""
        fig = HistogramPlotter().plot(hand_trace)

        ax = fig.axes[0]
        assert any("wrist cut" in line.get_label() for line in ax.get_lines())
        assert ax.get_xlabel() == "scanline from down edge"
        plt.close(fig)

    def test_without_crop_stage(self, three_finger_hand, default_config):
        """With cropping off the histogram is computed from the blob."""
        from src.tipdetect.pipeline import trace_frame

        no_crop = default_config.with_overrides(crop_enabled=False)
        trace = trace_frame(three_finger_hand.image, no_crop)
        fig = HistogramPlotter().plot(trace, config=PlotConfig(color="tab:blue"))

        labels = [line.get_label() for line in fig.axes[0].get_lines()]
        assert not any("wrist cut" in label for label in labels)
        plt.close(fig)

    def test_saves_file(self, hand_trace, tmp_path):
        """Histogram plotter saves figure to file when save_path provided."""
        save_path = tmp_path / "histogram.png"

        fig = HistogramPlotter().plot(hand_trace, save_path=str(save_path))

        assert save_path.exists()
        plt.close(fig)


class TestStagePlotter:
    """Test the stage montage."""

    def test_six_panels(self, hand_trace):
        """One panel per intermediate raster."""
        fig = StagePlotter().plot(hand_trace, title="hand")

        assert len(fig.axes) == 6
        assert [ax.get_title() for ax in fig.axes][:2] == ["frame", "skin mask"]
        plt.close(fig)

    def test_no_hand_frame(self, no_hand_trace):
        """Stages that did not run render as empty panels."""
        fig = StagePlotter().plot(no_hand_trace)

        assert len(fig.axes) == 6
        plt.close(fig)

    def test_saves_file(self, hand_trace, tmp_path):
        """Stage plotter saves figure to file when save_path provided."""
        save_path = tmp_path / "stages.png"

        fig = StagePlotter().plot(hand_trace, save_path=str(save_path))

        assert save_path.exists()
        plt.close(fig)
