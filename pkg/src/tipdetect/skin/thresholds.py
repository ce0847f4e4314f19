"""Skin chroma thresholds."""

from dataclasses import dataclass
from enum import StrEnum

from src.tipdetect.exceptions import ConfigError


class ColorSpace(StrEnum):
    """Colour space the skin filter classifies in."""

    HSV = "hsv"
    YCBCR = "ycbcr"


@dataclass(frozen=True)
class SkinThresholds:
    """Closed chroma intervals that count as skin.

    Only chromaticity is used: value (HSV) and luma (YCbCr) are ignored. The
    hue interval does not wrap; red hues above 350 degrees are not skin unless
    the interval is widened to cover them.

    Attributes
    ----------
    color_space : ColorSpace
        Which pair of intervals the filter applies.
    hue_min, hue_max : float
        Hue interval in degrees, within [0, 360].
    sat_min, sat_max : float
        Saturation interval within [0, 1].
    cb_min, cb_max, cr_min, cr_max : float
        Chroma intervals within [0, 255].
    """

    color_space: ColorSpace = ColorSpace.HSV
    hue_min: float = 0.0
    hue_max: float = 50.0
    sat_min: float = 0.23
    sat_max: float = 0.68
    cb_min: float = 77.0
    cb_max: float = 127.0
    cr_min: float = 133.0
    cr_max: float = 173.0

    def validate(self) -> None:
        """Check every interval is ordered and inside its channel range.

        Raises
        ------
        ConfigError
            On the first offending interval.
        """
        intervals = (
            ("hue", self.hue_min, self.hue_max, 0.0, 360.0),
            ("sat", self.sat_min, self.sat_max, 0.0, 1.0),
            ("cb", self.cb_min, self.cb_max, 0.0, 255.0),
            ("cr", self.cr_min, self.cr_max, 0.0, 255.0),
        )
        for name, low, high, floor, ceiling in intervals:
            if low > high:
                raise ConfigError(f"{name}_min {low} exceeds {name}_max {high}")
            if low < floor or high > ceiling:
                raise ConfigError(
                    f"{name} interval [{low}, {high}] outside [{floor}, {ceiling}]"
                )
