"""Per-frame stage orchestration.

Stages run in a fixed order, each timed with a monotonic clock:

    skin  -> filter_frame (classification + smoothing)
    blob  -> largest_blob
    orient-> four_way_scan
    crop  -> find_wrist_cut + crop_hand      (skipped when cropping is off)
    tips  -> intensity_ramp + finger_edges + detect_fingertips

A frame without foreground becomes a ``no_hand`` record carrying the timings
of the stages that ran.
"""

import time
from collections.abc import Iterator
from contextlib import contextmanager
from dataclasses import dataclass, field
from enum import StrEnum
from typing import Any

from src.tipdetect.blob import largest_blob
from src.tipdetect.config import PipelineConfig
from src.tipdetect.crop import (
    CropBox,
    crop_hand,
    find_wrist_cut,
    hand_axis_histogram,
    scaled_slope_threshold,
)
from src.tipdetect.exceptions import NoForegroundError, NoInclinationError
from src.tipdetect.fingertip import (
    FingerEdgeMap,
    Fingertip,
    detect_fingertips,
    finger_edges,
    intensity_ramp,
)
from src.tipdetect.imaging import BinarySilhouette, GrayImage, RgbImage, box_smooth
from src.tipdetect.logger import get_logger
from src.tipdetect.orientation import (
    Axis,
    HandAxis,
    Orientation,
    ProjectionHistogram,
    ScanProfile,
    four_way_scan,
    occupied_span,
    projection_histogram,
)
from src.tipdetect.skin import skin_mask

STAGES = ("skin", "blob", "orient", "crop", "tips")

logger = get_logger(__name__)


class FrameStatus(StrEnum):
    OK = "ok"
    NO_HAND = "no_hand"


@dataclass(frozen=True)
class DetectionRecord:
    """Per-frame output of the pipeline.

    Attributes
    ----------
    frame_id : str
        Frame name, normally the file name.
    width, height : int
        Frame dimensions.
    status : FrameStatus
        ``no_hand`` when no foreground survived; fingertips are then empty.
    orientation : Orientation | None
        Wrist and finger sides; None on ``no_hand``.
    crop : CropBox | None
        Crop region; None when cropping is off, fell back to the bounding
        box, or the frame has no hand.
    fingertips : tuple[Fingertip, ...]
        Fingertips in frame coordinates, ordered by scanline.
    timings_us : dict[str, int]
        Microseconds per executed stage plus ``total``.
    tip_pixels : int
        On-pixels handed to the fingertip stage (0 if it did not run).
    """

    frame_id: str
    width: int
    height: int
    status: FrameStatus
    orientation: Orientation | None = None
    crop: CropBox | None = None
    fingertips: tuple[Fingertip, ...] = ()
    timings_us: dict[str, int] = field(default_factory=dict)
    tip_pixels: int = 0

    def to_dict(self, include_timings: bool = True) -> dict[str, Any]:
        """JSON-ready mapping with the fixed annotation schema."""
        orient = self.orientation
        return {
            "frame": self.frame_id,
            "width": self.width,
            "height": self.height,
            "status": self.status.value,
            "wrist_side": orient.wrist_side.value if orient else None,
            "finger_side": orient.finger_side.value if orient else None,
            "crop": self.crop.to_dict() if self.crop else None,
            "fingertips": [tip.to_dict() for tip in self.fingertips],
            "timings_us": dict(self.timings_us) if include_timings else {},
        }


@dataclass
class FrameTrace:
    """Every intermediate product of one pipeline pass.

    Fields stay None for stages that did not run.
    """

    image: RgbImage
    record: DetectionRecord | None = None
    skin_raw: BinarySilhouette | None = None
    silhouette: BinarySilhouette | None = None
    blob: BinarySilhouette | None = None
    scan: ScanProfile | None = None
    orientation: Orientation | None = None
    axis_histogram: ProjectionHistogram | None = None
    wrist_cut: int | None = None
    crop: CropBox | None = None
    hand: BinarySilhouette | None = None
    ramp: GrayImage | None = None
    edges: FingerEdgeMap | None = None
    fingertips: list[Fingertip] = field(default_factory=list)


class _StageClock:
    """Accumulates monotonic per-stage durations in microseconds."""

    def __init__(self) -> None:
        self.timings: dict[str, int] = {}
        self._start = time.perf_counter_ns()

    @contextmanager
    def stage(self, name: str) -> Iterator[None]:
        start = time.perf_counter_ns()
        try:
            yield
        finally:
            self.timings[name] = (time.perf_counter_ns() - start) // 1000

    def finish(self) -> dict[str, int]:
        self.timings["total"] = (time.perf_counter_ns() - self._start) // 1000
        return self.timings


def _hand_extent(sil: BinarySilhouette, orient: Orientation) -> int:
    axis = Axis.ROW if orient.hand_axis is HandAxis.VERTICAL else Axis.COLUMN
    first, last = occupied_span(projection_histogram(sil, axis).counts)
    return last - first + 1


def trace_frame(img: RgbImage, cfg: PipelineConfig, frame_id: str = "") -> FrameTrace:
    """Run every stage on one frame and keep all intermediates.

    Parameters
    ----------
    img : RgbImage
        Input frame.
    cfg : PipelineConfig
        Validated configuration.
    frame_id : str
        Name stored in the record.

    Returns
    -------
    FrameTrace
        Intermediates plus the DetectionRecord in ``trace.record``.
    """
    trace = FrameTrace(image=img)
    clock = _StageClock()

    def record(status: FrameStatus, tip_pixels: int = 0) -> DetectionRecord:
        return DetectionRecord(
            frame_id=frame_id,
            width=img.width,
            height=img.height,
            status=status,
            orientation=trace.orientation,
            crop=trace.crop if trace.wrist_cut is not None else None,
            fingertips=tuple(trace.fingertips),
            timings_us=clock.finish(),
            tip_pixels=tip_pixels,
        )

    with clock.stage("skin"):
        trace.skin_raw = BinarySilhouette.from_mask(skin_mask(img, cfg.thresholds))
        trace.silhouette = box_smooth(trace.skin_raw, cfg.smooth_kernel)

    try:
        with clock.stage("blob"):
            trace.blob = largest_blob(trace.silhouette, cfg.connectivity)
    except NoForegroundError:
        logger.debug("Frame %s: no skin blob", frame_id)
        trace.record = record(FrameStatus.NO_HAND)
        return trace

    with clock.stage("orient"):
        trace.scan, trace.orientation = four_way_scan(trace.blob)
    orient = trace.orientation

    hand = trace.blob
    if cfg.crop_enabled:
        with clock.stage("crop"):
            trace.axis_histogram = hand_axis_histogram(trace.blob, orient)
            threshold = scaled_slope_threshold(
                cfg.slope_threshold, img.height, img.width
            )
            try:
                trace.wrist_cut = find_wrist_cut(
                    trace.axis_histogram, orient.wrist_side, threshold, cfg.slope_window
                )
            except NoInclinationError:
                logger.debug(
                    "Frame %s: no wrist inclination, cropping to bounds", frame_id
                )
            trace.crop, hand = crop_hand(trace.blob, orient, trace.wrist_cut)
        trace.hand = hand

    with clock.stage("tips"):
        extent = _hand_extent(hand, orient)
        params = cfg.tip_params.scaled(extent)
        trace.ramp = intensity_ramp(hand, orient)
        trace.edges = finger_edges(trace.ramp)
        trace.fingertips = detect_fingertips(trace.edges, orient, params, trace.crop)

    logger.debug(
        "Frame %s: wrist %s, cut %s, %d tips",
        frame_id,
        orient.wrist_side.value,
        trace.wrist_cut,
        len(trace.fingertips),
    )
    trace.record = record(FrameStatus.OK, tip_pixels=hand.on_pixels)
    return trace


def process_frame(
    img: RgbImage, cfg: PipelineConfig, frame_id: str = ""
) -> DetectionRecord:
    """Run the five-stage pipeline on one frame.

    Never raises for frame content: a frame without a hand comes back with
    status ``no_hand``.
    """
    record = trace_frame(img, cfg, frame_id).record
    assert record is not None
    return record

