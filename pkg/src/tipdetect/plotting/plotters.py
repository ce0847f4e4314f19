"""Concrete diagnostic plotters."""

from typing import Any

import matplotlib.pyplot as plt
import numpy as np
from matplotlib.axes import Axes
from matplotlib.patches import Rectangle

from src.tipdetect.crop import CropBox, hand_axis_histogram
from src.tipdetect.exceptions import NoForegroundError
from src.tipdetect.orientation import Side
from src.tipdetect.pipeline import FrameTrace
from src.tipdetect.plotting.base import DiagnosticPlotter
from src.tipdetect.plotting.config import PlotConfig


def _require_hand(trace: FrameTrace) -> None:
    if trace.blob is None or trace.orientation is None:
        raise NoForegroundError("Trace has no hand to plot")


class HistogramPlotter(DiagnosticPlotter):
    """Hand-axis projection histogram, read from the wrist edge inward.

    The steep climb where forearm meets palm is what find_wrist_cut looks
    for; the cut it picked is drawn as a vertical line.
    """

    def plot(
        self,
        trace: FrameTrace,
        title: str | None = None,
        save_path: str | None = None,
        config: PlotConfig | None = None,
    ) -> plt.Figure:
        """Plot the projection histogram with the wrist cut marked.

        Raises
        ------
        NoForegroundError
            If the frame had no hand.
        """
        if config is None:
            config = PlotConfig()
        _require_hand(trace)
        assert trace.blob is not None and trace.orientation is not None

        histogram = trace.axis_histogram
        if histogram is None:
            histogram = hand_axis_histogram(trace.blob, trace.orientation)
        wrist = trace.orientation.wrist_side
        reverse = wrist in (Side.DOWN, Side.RIGHT)
        counts = histogram.counts[::-1] if reverse else histogram.counts
        positions = np.arange(len(counts))

        with plt.style.context(config.style):
            fig, ax = plt.subplots(figsize=config.figsize, dpi=config.dpi)

            color = None if config.color == "auto" else config.color
            ax.fill_between(
                positions, counts, step="mid", color=color, alpha=config.alpha
            )
            ax.step(
                positions, counts, where="mid", color=color, linewidth=config.line_width
            )

            if trace.wrist_cut is not None:
                cut = len(counts) - 1 - trace.wrist_cut if reverse else trace.wrist_cut
                ax.axvline(
                    cut,
                    color=config.cut_color,
                    linewidth=config.line_width,
                    linestyle="--",
                    label=f"wrist cut ({trace.wrist_cut})",
                )
                ax.legend()

            ax.set_xlabel(f"scanline from {wrist.value} edge", fontsize=12)
            ax.set_ylabel("on-pixels", fontsize=12)
            if title:
                ax.set_title(title, fontsize=14)
            if config.show_grid:
                ax.grid(True, alpha=0.3)

            plt.tight_layout()

            if save_path:
                fig.savefig(save_path, dpi=config.dpi, format=config.save_format)

        return fig


def _bits(raster: Any) -> np.ndarray | None:
    return None if raster is None else raster.bits


def _show(
    ax: Axes, data: np.ndarray | None, label: str, cmap: str | None = "gray"
) -> None:
    ax.set_title(label, fontsize=10)
    ax.set_xticks([])
    ax.set_yticks([])
    if data is None:
        ax.text(0.5, 0.5, "not run", ha="center", va="center", transform=ax.transAxes)
        return
    ax.imshow(data, cmap=cmap, interpolation="nearest")


def _outline(ax: Axes, box: CropBox, config: PlotConfig) -> None:
    ax.add_patch(
        Rectangle(
            (box.y_min - 0.5, box.x_min - 0.5),
            box.width,
            box.height,
            fill=False,
            edgecolor=config.cut_color,
            linewidth=config.line_width,
        )
    )


class StagePlotter(DiagnosticPlotter):
    """Montage of the intermediate rasters of one frame.

    Panels: input frame, raw skin mask, smoothed silhouette, largest blob
    with its crop box, intensity ramp, and the finger-edge map with the
    detected fingertips. Stages that did not run show an empty panel.
    """

    def plot(
        self,
        trace: FrameTrace,
        title: str | None = None,
        save_path: str | None = None,
        config: PlotConfig | None = None,
    ) -> plt.Figure:
        if config is None:
            config = PlotConfig()

        with plt.style.context(config.style):
            fig, axes = plt.subplots(2, 3, figsize=config.figsize, dpi=config.dpi)
            frame_ax, skin_ax, smooth_ax, blob_ax, ramp_ax, edge_ax = axes.ravel()

            _show(frame_ax, trace.image.data, "frame", cmap=None)
            _show(skin_ax, _bits(trace.skin_raw), "skin mask")
            _show(smooth_ax, _bits(trace.silhouette), "smoothed")
            _show(blob_ax, _bits(trace.blob), "largest blob")
            if trace.crop is not None:
                _outline(blob_ax, trace.crop, config)
            ramp = None if trace.ramp is None else trace.ramp.data
            _show(ramp_ax, ramp, "intensity ramp")
            _show(edge_ax, _bits(trace.edges), "finger edges")

            if trace.edges is not None and trace.fingertips:
                x0, y0 = (trace.crop.x_min, trace.crop.y_min) if trace.crop else (0, 0)
                edge_ax.scatter(
                    [tip.y - y0 for tip in trace.fingertips],
                    [tip.x - x0 for tip in trace.fingertips],
                    marker="x",
                    color=config.cut_color,
                    linewidths=config.line_width,
                )

            if title:
                fig.suptitle(title, fontsize=14)

            plt.tight_layout()

            if save_path:
                fig.savefig(save_path, dpi=config.dpi, format=config.save_format)

        return fig
