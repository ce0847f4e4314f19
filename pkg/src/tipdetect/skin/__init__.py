"""Skin filtering: chroma classification into a binary silhouette.

Public API
----------
filter_frame : function
    Classify a frame and smooth the result into the raw hand silhouette
classify_skin_hsv, classify_skin_ycbcr : function
    Single-pixel classification rules
SkinThresholds, ColorSpace
    Threshold configuration
ClassifierFactory, ClassifierNotFoundError
    Registry of per-frame classifiers
"""

import numpy as np
from numpy.typing import NDArray

from src.tipdetect.imaging import (
    DEFAULT_SMOOTH_KERNEL,
    BinarySilhouette,
    RgbImage,
    box_smooth,
)
from src.tipdetect.skin.factory import ClassifierFactory, ClassifierNotFoundError
from src.tipdetect.skin.hsv import HsvSkinClassifier, classify_skin_hsv
from src.tipdetect.skin.thresholds import ColorSpace, SkinThresholds
from src.tipdetect.skin.ycbcr import YCbCrSkinClassifier, classify_skin_ycbcr


def skin_mask(img: RgbImage, t: SkinThresholds) -> NDArray[np.bool_]:
    """Per-pixel skin classification before smoothing."""
    return ClassifierFactory.create(t).mask(img.data)


def filter_frame(
    img: RgbImage,
    t: SkinThresholds,
    k: int = DEFAULT_SMOOTH_KERNEL,
) -> BinarySilhouette:
    """Turn a frame into the smoothed binary hand silhouette.

    Parameters
    ----------
    img : RgbImage
        Input frame.
    t : SkinThresholds
        Chroma bands; ``t.color_space`` selects the classifier.
    k : int, default 5
        Width of the majority-vote smoothing kernel.

    Returns
    -------
    BinarySilhouette
        Silhouette with the frame's dimensions, skin = 1.

    Raises
    ------
    EvenKernelError
        If k is even.
    """
    raw = BinarySilhouette.from_mask(skin_mask(img, t))
    return box_smooth(raw, k)


__all__ = [
    "filter_frame",
    "skin_mask",
    "classify_skin_hsv",
    "classify_skin_ycbcr",
    "HsvSkinClassifier",
    "YCbCrSkinClassifier",
    "SkinThresholds",
    "ColorSpace",
    "ClassifierFactory",
    "ClassifierNotFoundError",
]
