"""
tipdetect: real-time fingertip detection on hand frames.

Skin filtering, largest-blob selection, wrist-side scan, histogram-slope
cropping and intensity-ramp fingertip localisation, plus the CLI, a
synthetic frame generator and diagnostic figures.
"""

__version__ = "0.1.0"


from src.tipdetect.config import PipelineConfig
from src.tipdetect.pipeline import DetectionRecord, process_frame, trace_frame

__all__ = ["process_frame", "trace_frame", "PipelineConfig", "DetectionRecord"]
