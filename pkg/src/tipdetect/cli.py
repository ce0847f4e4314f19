"""Command-line entry point.

Two forms:

    tipdetect --input FRAMES --output OUT.jsonl [options]
    tipdetect gen --out DIR --fingers N --orientation SIDE [options]

Exit status is 0 on success, 2 on a usage or configuration error and 1 when
any frame could not be read or an output could not be written.
"""

import argparse
import json
import sys
from collections.abc import Iterator, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import matplotlib.pyplot as plt

from src.tipdetect.bench import summarize
from src.tipdetect.config import PipelineConfig, RunOptions, resolve_config
from src.tipdetect.exceptions import (
    ConfigError,
    FrameReadError,
    NoForegroundError,
)
from src.tipdetect.frames import list_frames, read_frame, write_frame
from src.tipdetect.logger import get_logger, set_log_level
from src.tipdetect.orientation import Side
from src.tipdetect.overlay import render_overlay
from src.tipdetect.pipeline import (
    DetectionRecord,
    FrameStatus,
    FrameTrace,
    trace_frame,
)
from src.tipdetect.plotting import PlotterFactory, plot_diagnostics
from src.tipdetect.skin import ColorSpace
from src.tipdetect.synthetic import write_corpus

logger = get_logger(__name__)

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")

# Flag destinations that map one-to-one onto config keys.
_CONFIG_FLAGS = (
    "color_space",
    "hue_min",
    "hue_max",
    "sat_min",
    "sat_max",
    "cb_min",
    "cb_max",
    "cr_min",
    "cr_max",
    "smooth_kernel",
    "connectivity",
    "slope_threshold",
    "slope_window",
    "tip_diff",
    "tip_min_run",
    "tip_max",
    "crop",
    "jobs",
    "png",
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tipdetect",
        description="Detect fingertips in hand frames. "
        "Run 'tipdetect gen --help' for the synthetic frame generator.",
    )
    parser.add_argument(
        "--input", required=True, help="frame directory or single frame"
    )
    parser.add_argument("--output", required=True, help="JSON Lines annotation file")
    parser.add_argument("--config", help="flat key = value config file")

    skin = parser.add_argument_group("skin filter")
    skin.add_argument("--color-space", choices=[c.value for c in ColorSpace])
    for name in ("hue-min", "hue-max", "sat-min", "sat-max"):
        skin.add_argument(f"--{name}", type=float)
    for name in ("cb-min", "cb-max", "cr-min", "cr-max"):
        skin.add_argument(f"--{name}", type=float)
    skin.add_argument("--smooth-kernel", type=int)
    skin.add_argument("--connectivity", type=int, choices=[4, 8])

    crop = parser.add_argument_group("crop and fingertips")
    crop.add_argument("--slope-threshold", type=float)
    crop.add_argument("--slope-window", type=int)
    crop.add_argument("--tip-diff", type=int)
    crop.add_argument("--tip-min-run", type=int)
    crop.add_argument("--tip-max", type=int)
    crop.add_argument(
        "--no-crop", dest="crop", action="store_const", const=False, default=None
    )

    run = parser.add_argument_group("run")
    run.add_argument("--overlay", help="directory for annotated frames")
    run.add_argument("--plots", help="directory for diagnostic figures")
    run.add_argument("--bench", action="store_true", help="print a latency report")
    run.add_argument("--jobs", type=int, help="frames processed concurrently")
    run.add_argument("--no-timings", action="store_true", help="write empty timings")
    run.add_argument(
        "--png",
        action="store_const",
        const=True,
        default=None,
        help="also read .png frames",
    )
    run.add_argument("--log-level", choices=LOG_LEVELS, default="INFO")
    return parser


def build_gen_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tipdetect gen",
        description="Write synthetic hand frames plus ground_truth.jsonl.",
    )
    parser.add_argument("--out", required=True, help="output directory")
    parser.add_argument("--fingers", type=int, required=True, choices=range(1, 6))
    parser.add_argument(
        "--orientation",
        required=True,
        choices=[side.value for side in Side],
        help="direction the fingers point",
    )
    parser.add_argument("--frames", type=int, default=20)
    parser.add_argument(
        "--noise", type=float, default=0.0, help="per-pixel noise probability"
    )
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--width", type=int, default=640)
    parser.add_argument("--height", type=int, default=480)
    parser.add_argument("--log-level", choices=LOG_LEVELS, default="INFO")
    return parser


@dataclass
class _FrameResult:
    path: Path
    record: DetectionRecord | None = None
    toggled: DetectionRecord | None = None
    trace: FrameTrace | None = None
    error: str | None = None


class _FrameWorker:
    """Reads one frame and runs the pipeline on it (once more when benching)."""

    def __init__(self, cfg: PipelineConfig, bench: bool, keep_trace: bool) -> None:
        self.cfg = cfg
        self.toggled_cfg = (
            cfg.with_overrides(crop_enabled=not cfg.crop_enabled) if bench else None
        )
        self.keep_trace = keep_trace

    def __call__(self, path: Path) -> _FrameResult:
        try:
            img = read_frame(path)
        except FrameReadError as exc:
            return _FrameResult(path, error=str(exc))

        trace = trace_frame(img, self.cfg, path.name)
        result = _FrameResult(path, record=trace.record)
        if self.keep_trace:
            result.trace = trace
        if self.toggled_cfg is not None:
            result.toggled = trace_frame(img, self.toggled_cfg, path.name).record
        return result


def _process(
    frames: list[Path], worker: _FrameWorker, jobs: int
) -> Iterator[_FrameResult]:
    """Yield results in input order, keeping at most a few batches in flight."""
    if jobs == 1:
        yield from map(worker, frames)
        return
    batch = jobs * 4
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        for start in range(0, len(frames), batch):
            yield from pool.map(worker, frames[start : start + batch])


def _write_plots(trace: FrameTrace, plots_dir: Path, stem: str) -> None:
    for kind in PlotterFactory.kinds():
        try:
            save_path = str(plots_dir / f"{stem}_{kind}.png")
            fig = plot_diagnostics(kind, trace, title=stem, save_path=save_path)
        except NoForegroundError:
            continue
        plt.close(fig)


def _detect(args: argparse.Namespace, cfg: PipelineConfig, options: RunOptions) -> int:
    frames = list_frames(args.input, png=options.png)
    logger.info(
        "Processing %d frames from %s with %d job(s)",
        len(frames),
        args.input,
        options.jobs,
    )

    overlay_dir = Path(args.overlay) if args.overlay else None
    plots_dir = Path(args.plots) if args.plots else None
    if plots_dir is not None:
        plt.switch_backend("Agg")
    for directory in (overlay_dir, plots_dir):
        if directory is not None:
            directory.mkdir(parents=True, exist_ok=True)

    keep_trace = plots_dir is not None or overlay_dir is not None
    worker = _FrameWorker(cfg, args.bench, keep_trace=keep_trace)
    failed = 0
    primary: list[DetectionRecord] = []
    toggled: list[DetectionRecord] = []

    try:
        with Path(args.output).open("w", encoding="utf-8") as out:
            for result in _process(frames, worker, options.jobs):
                if result.record is None:
                    logger.error("Skipping frame: %s", result.error)
                    failed += 1
                    continue

                record = result.record
                line = record.to_dict(include_timings=not args.no_timings)
                out.write(json.dumps(line) + "\n")

                if record.status is FrameStatus.NO_HAND:
                    logger.warning("Frame %s: no hand found", record.frame_id)
                elif args.bench and cfg.crop_enabled and record.crop is None:
                    logger.warning(
                        "Frame %s: no wrist inclination, used bounding box",
                        record.frame_id,
                    )

                if result.trace is not None:
                    if overlay_dir is not None:
                        annotated = render_overlay(result.trace.image, record)
                        write_frame(annotated, overlay_dir / result.path.name)
                    if plots_dir is not None:
                        _write_plots(result.trace, plots_dir, result.path.stem)

                if result.toggled is not None:
                    primary.append(record)
                    toggled.append(result.toggled)
    except (OSError, FrameReadError) as exc:
        logger.error("Cannot write output: %s", exc)
        return 1

    logger.info("Wrote %d records to %s", len(frames) - failed, args.output)

    if args.bench:
        print(summarize(primary, toggled, crop_enabled=cfg.crop_enabled).format())

    if failed:
        logger.error("%d frame(s) could not be read", failed)
        return 1
    return 0


def _generate(argv: Sequence[str]) -> int:
    parser = build_gen_parser()
    args = parser.parse_args(argv)
    set_log_level(args.log_level)
    if args.frames < 1:
        parser.error("--frames must be >= 1")
    if not 0.0 <= args.noise <= 1.0:
        parser.error("--noise must be in [0, 1]")

    try:
        write_corpus(
            args.out,
            fingers=args.fingers,
            finger_side=Side(args.orientation),
            frames=args.frames,
            noise=args.noise,
            seed=args.seed,
            width=args.width,
            height=args.height,
        )
    except (OSError, FrameReadError) as exc:
        logger.error("Cannot write corpus: %s", exc)
        return 1
    return 0


def _run(argv: Sequence[str]) -> int:
    if argv and argv[0] == "gen":
        return _generate(argv[1:])

    parser = build_parser()
    args = parser.parse_args(argv)
    set_log_level(args.log_level)

    if not Path(args.input).exists():
        parser.error(f"input path does not exist: {args.input}")

    cli_values = {key: getattr(args, key) for key in _CONFIG_FLAGS}
    try:
        cfg, options = resolve_config(args.config, cli_values)
    except ConfigError as exc:
        parser.error(str(exc))

    return _detect(args, cfg, options)


def run(argv: Sequence[str] | None = None) -> int:
    """Run the CLI and return its exit status instead of exiting."""
    if argv is None:
        argv = sys.argv[1:]
    try:
        return _run(list(argv))
    except SystemExit as exc:
        if exc.code is None:
            return 0
        return exc.code if isinstance(exc.code, int) else 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
