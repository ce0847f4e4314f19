"""Skin classification on hue and saturation."""

import numpy as np
from numpy.typing import NDArray

from src.tipdetect.imaging import HsvPixel, rgb_array_to_hsv
from src.tipdetect.skin.thresholds import SkinThresholds


def classify_skin_hsv(p: HsvPixel, t: SkinThresholds) -> int:
    """Return 1 iff hue and saturation both lie in their closed intervals."""
    inside = t.hue_min <= p.h <= t.hue_max and t.sat_min <= p.s <= t.sat_max
    return int(inside)


class HsvSkinClassifier:
    """Vectorised HSV skin classifier for whole frames.

    Attributes
    ----------
    thresholds : SkinThresholds
        Hue and saturation bands; the value channel is ignored.
    """

    def __init__(self, thresholds: SkinThresholds) -> None:
        self.thresholds = thresholds

    def mask(self, data: NDArray[np.uint8]) -> NDArray[np.bool_]:
        """
        Classify every pixel of an (h, w, 3) RGB array.

        Parameters
        ----------
        data : NDArray[np.uint8]
                RGB frame data.

        Returns
        -------
        NDArray[np.bool_]
                True where the pixel is skin, shape (h, w).
        """
        t = self.thresholds
        hsv = rgb_array_to_hsv(data)
        hue, sat = hsv[..., 0], hsv[..., 1]
        in_hue = (hue >= t.hue_min) & (hue <= t.hue_max)
        return in_hue & (sat >= t.sat_min) & (sat <= t.sat_max)
