"""Latency and pixel-count statistics over a run.

The report answers one question: how much does cropping save? Each frame is
processed with the configured pipeline and again with cropping toggled, and
the tip-stage on-pixel counts and total latencies of both passes are
summarised side by side.
"""

from dataclasses import dataclass

import numpy as np

from src.tipdetect.pipeline import STAGES, DetectionRecord, FrameStatus

# Frame budget of a 30 fps stream, in microseconds.
REALTIME_BUDGET_US = 33_000


@dataclass(frozen=True)
class StageStats:
    """Summary of one series of measurements."""

    count: int
    min: float
    median: float
    p95: float
    max: float

    @classmethod
    def from_values(cls, values: list[int] | list[float]) -> "StageStats":
        if not values:
            return cls(0, 0.0, 0.0, 0.0, 0.0)
        data = np.asarray(values, dtype=np.float64)
        return cls(
            count=int(data.size),
            min=float(data.min()),
            median=float(np.median(data)),
            p95=float(np.percentile(data, 95)),
            max=float(data.max()),
        )


@dataclass(frozen=True)
class BenchReport:
    """Per-stage latency plus the cropping A/B comparison.

    Attributes
    ----------
    stages : dict[str, StageStats]
        Microsecond statistics per stage and for ``total``. A stage's count
        covers only the frames where it ran: ``crop`` and ``tips`` skip
        ``no_hand`` frames and ``crop`` is absent when cropping is off, so
        only ``total`` always counts every frame.
    total_cropped, total_uncropped : StageStats
        Per-frame latency with and without the crop stage.
    tip_pixels_cropped, tip_pixels_uncropped : StageStats
        On-pixels handed to the fingertip stage with and without cropping.
    median_pixel_reduction : float
        Median over frames of 1 - cropped / uncropped tip-stage pixels.
    frames : int
        Frames processed.
    """

    stages: dict[str, StageStats]
    total_cropped: StageStats
    total_uncropped: StageStats
    tip_pixels_cropped: StageStats
    tip_pixels_uncropped: StageStats
    median_pixel_reduction: float
    frames: int

    @property
    def meets_realtime(self) -> bool:
        total = self.stages.get("total")
        return total is not None and total.median <= REALTIME_BUDGET_US

    def format(self) -> str:
        """Plain-text table for the terminal."""
        lines = [
            f"frames: {self.frames}",
            f"{'stage':<18}{'count':>7}{'min':>10}{'median':>10}{'p95':>10}{'max':>10}",
        ]

        def row(name: str, stats: StageStats) -> str:
            return (
                f"{name:<18}{stats.count:>7}{stats.min:>10.0f}{stats.median:>10.0f}"
                f"{stats.p95:>10.0f}{stats.max:>10.0f}"
            )

        for name, stats in self.stages.items():
            lines.append(row(f"{name} (us)", stats))
        lines.append(row("total crop (us)", self.total_cropped))
        lines.append(row("total no-crop (us)", self.total_uncropped))
        lines.append(row("tip px crop", self.tip_pixels_cropped))
        lines.append(row("tip px no-crop", self.tip_pixels_uncropped))
        reduction = self.median_pixel_reduction
        lines.append(f"median tip-stage pixel reduction: {reduction:.1%}")
        verdict = "met" if self.meets_realtime else "missed"
        lines.append(
            f"real-time target ({REALTIME_BUDGET_US} us median per frame): {verdict}"
        )
        return "\n".join(lines)


def summarize(
    primary: list[DetectionRecord],
    toggled: list[DetectionRecord],
    crop_enabled: bool = True,
) -> BenchReport:
    """Build a BenchReport from paired runs of the same frames.

    Parameters
    ----------
    primary : list[DetectionRecord]
        Records from the configured pipeline; stage statistics come from here.
    toggled : list[DetectionRecord]
        The same frames, in the same order, with cropping flipped.
    crop_enabled : bool
        Whether the primary run had cropping on.
    """
    stages: dict[str, StageStats] = {}
    for name in (*STAGES, "total"):
        values = [rec.timings_us[name] for rec in primary if name in rec.timings_us]
        if values:
            stages[name] = StageStats.from_values(values)

    if len(primary) != len(toggled):
        raise ValueError("Paired runs must cover the same frames")
    cropped, uncropped = (primary, toggled) if crop_enabled else (toggled, primary)

    hands = [
        (c.tip_pixels, u.tip_pixels)
        for c, u in zip(cropped, uncropped, strict=True)
        if c.status is FrameStatus.OK and u.tip_pixels > 0
    ]
    reductions = [1.0 - c / u for c, u in hands]

    return BenchReport(
        stages=stages,
        total_cropped=StageStats.from_values(
            [r.timings_us["total"] for r in cropped]
        ),
        total_uncropped=StageStats.from_values(
            [r.timings_us["total"] for r in uncropped]
        ),
        tip_pixels_cropped=StageStats.from_values([c for c, _ in hands]),
        tip_pixels_uncropped=StageStats.from_values([u for _, u in hands]),
        median_pixel_reduction=float(np.median(reductions)) if reductions else 0.0,
        frames=len(primary),
    )
