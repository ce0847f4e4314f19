"""Custom exceptions for tipdetect.

Every error raised by the library derives from TipDetectError so callers can
catch the whole family at the frame loop.
"""


class TipDetectError(Exception):
    """Base exception for all tipdetect errors."""


class InvalidImageError(TipDetectError):
    """Raster data violates its shape, dtype or value invariants."""


class EvenKernelError(TipDetectError):
    """Smoothing kernel width is even or smaller than one."""


class NoForegroundError(TipDetectError):
    """Silhouette has no on-pixel.

    Raised by every stage that needs a hand to work on. The pipeline turns it
    into a ``no_hand`` record instead of failing the frame.
    """


class DegenerateIntervalError(TipDetectError):
    """Slope requested between a scanline and itself."""


class NoInclinationError(TipDetectError):
    """No window of the projection histogram reaches the slope threshold.

    This typically occurs when:
    - The hand enters the frame without a visible forearm
    - The slope threshold is set too high for the frame resolution
    """


class ConfigError(TipDetectError):
    """Invalid pipeline configuration or config file."""


class FrameReadError(TipDetectError):
    """A frame file could not be read, decoded or written."""
