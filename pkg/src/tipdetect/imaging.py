"""Raster types, colour conversion and the majority-vote box filter.

Every raster is an immutable numpy array indexed ``[x, y]`` where x is the row
and y the column, so ``bits[x, y]`` reads the silhouette at row x, column y.
"""

from dataclasses import dataclass

import numpy as np
from matplotlib.colors import rgb_to_hsv as _mpl_rgb_to_hsv
from numpy.typing import NDArray
from scipy import ndimage

from src.tipdetect.exceptions import EvenKernelError, InvalidImageError

DEFAULT_SMOOTH_KERNEL = 5

# Full-range BT.601, rows give (Y, Cb, Cr) from (R, G, B).
_YCBCR_MATRIX = np.array(
    [
        [0.299, 0.587, 0.114],
        [-0.168736, -0.331264, 0.5],
        [0.5, -0.418688, -0.081312],
    ]
)
_YCBCR_OFFSET = np.array([0.0, 128.0, 128.0])


def _frozen(array: NDArray) -> NDArray:
    array = np.ascontiguousarray(array)
    array.flags.writeable = False
    return array


@dataclass(frozen=True, eq=False)
class RgbImage:
    """A raw 8-bit RGB frame.

    Attributes
    ----------
    data : NDArray[np.uint8]
        Row-major pixels, shape (height, width, 3).
    """

    data: NDArray[np.uint8]

    def __post_init__(self) -> None:
        data = np.asarray(self.data)
        if data.ndim != 3 or data.shape[2] != 3:
            raise InvalidImageError(f"RGB data must be (h, w, 3), got {data.shape}")
        if data.shape[0] < 1 or data.shape[1] < 1:
            raise InvalidImageError("RGB image must be at least 1x1")
        if data.dtype != np.uint8:
            if data.dtype.kind not in "iuf":
                raise InvalidImageError(f"RGB data must be numeric, got {data.dtype}")
            if data.size and (data.min() < 0 or data.max() > 255):
                raise InvalidImageError("RGB channel values must lie in [0, 255]")
            data = np.rint(data).astype(np.uint8)
        object.__setattr__(self, "data", _frozen(data))

    @property
    def height(self) -> int:
        return int(self.data.shape[0])

    @property
    def width(self) -> int:
        return int(self.data.shape[1])


@dataclass(frozen=True, eq=False)
class BinarySilhouette:
    """A {0, 1} raster marking skin (hand) pixels.

    Attributes
    ----------
    bits : NDArray[np.uint8]
        Row-major bits, shape (height, width); ``bits[x, y]`` is row x,
        column y.
    """

    bits: NDArray[np.uint8]

    def __post_init__(self) -> None:
        bits = np.asarray(self.bits)
        if bits.ndim != 2:
            raise InvalidImageError(f"Silhouette must be 2-D, got {bits.shape}")
        if bits.dtype == np.bool_:
            bits = bits.astype(np.uint8)
        elif bits.size and not np.isin(bits, (0, 1)).all():
            raise InvalidImageError("Silhouette bits must be 0 or 1")
        object.__setattr__(self, "bits", _frozen(bits.astype(np.uint8)))

    @property
    def height(self) -> int:
        return int(self.bits.shape[0])

    @property
    def width(self) -> int:
        return int(self.bits.shape[1])

    @property
    def on_pixels(self) -> int:
        return int(np.count_nonzero(self.bits))

    @classmethod
    def from_mask(cls, mask: NDArray[np.bool_]) -> "BinarySilhouette":
        return cls(np.asarray(mask, dtype=np.uint8))


@dataclass(frozen=True, eq=False)
class GrayImage:
    """An 8-bit single-channel raster (the intensity ramp lives here)."""

    data: NDArray[np.uint8]

    def __post_init__(self) -> None:
        data = np.asarray(self.data)
        if data.ndim != 2:
            raise InvalidImageError(f"Gray data must be 2-D, got {data.shape}")
        if data.dtype != np.uint8:
            if data.size and (data.min() < 0 or data.max() > 255):
                raise InvalidImageError("Gray values must lie in [0, 255]")
            data = data.astype(np.uint8)
        object.__setattr__(self, "data", _frozen(data))

    @property
    def height(self) -> int:
        return int(self.data.shape[0])

    @property
    def width(self) -> int:
        return int(self.data.shape[1])


@dataclass(frozen=True)
class HsvPixel:
    """Hue in degrees [0, 360), saturation and value in [0, 1]."""

    h: float
    s: float
    v: float


@dataclass(frozen=True)
class YCbCrPixel:
    """Full-range BT.601 luma and chroma, each in [0, 255]."""

    y: float
    cb: float
    cr: float


def rgb_array_to_hsv(data: NDArray[np.uint8]) -> NDArray[np.float64]:
    """Convert an (..., 3) RGB array to HSV with hue in degrees.

    Uses the hexcone conversion from matplotlib; achromatic pixels get hue 0.

    Parameters
    ----------
    data : NDArray[np.uint8]
        RGB values in [0, 255], last axis (R, G, B).

    Returns
    -------
    NDArray[np.float64]
        Same shape, last axis (h in [0, 360), s in [0, 1], v in [0, 1]).
    """
    hsv = _mpl_rgb_to_hsv(np.asarray(data, dtype=np.float64) / 255.0)
    hsv[..., 0] = np.mod(hsv[..., 0] * 360.0, 360.0)
    return hsv


def rgb_array_to_ycbcr(data: NDArray[np.uint8]) -> NDArray[np.float64]:
    """Convert an (..., 3) RGB array to full-range BT.601 YCbCr.

    Values are clipped to [0, 255]; no rounding is applied.
    """
    rgb = np.asarray(data, dtype=np.float64)
    ycc = rgb @ _YCBCR_MATRIX.T + _YCBCR_OFFSET
    return np.clip(ycc, 0.0, 255.0)


def rgb_to_hsv(r: int, g: int, b: int) -> HsvPixel:
    """Convert one 8-bit RGB triple to HSV (hue in degrees)."""
    h, s, v = rgb_array_to_hsv(np.array([r, g, b]))
    return HsvPixel(float(h), float(s), float(v))


def rgb_to_ycbcr(r: int, g: int, b: int) -> YCbCrPixel:
    """Convert one 8-bit RGB triple to full-range BT.601 YCbCr."""
    y, cb, cr = rgb_array_to_ycbcr(np.array([r, g, b]))
    return YCbCrPixel(float(y), float(cb), float(cr))


def box_smooth(
    sil: BinarySilhouette, k: int = DEFAULT_SMOOTH_KERNEL
) -> BinarySilhouette:
    """Majority-vote k x k averaging filter on a binary silhouette.

    A pixel is on iff at least half of its k x k neighbourhood is on. The
    frame is zero padded, so noise at the borders erodes rather than grows.

    Parameters
    ----------
    sil : BinarySilhouette
        Input silhouette.
    k : int, default 5
        Odd kernel width, k >= 1. k = 1 is the identity.

    Returns
    -------
    BinarySilhouette
        Smoothed silhouette of the same dimensions.

    Raises
    ------
    EvenKernelError
        If k is even or smaller than one.
    """
    if k < 1 or k % 2 == 0:
        raise EvenKernelError(f"Kernel width must be odd and >= 1, got {k}")
    if k == 1:
        return sil

    counts = ndimage.convolve(
        sil.bits.astype(np.int32),
        np.ones((k, k), dtype=np.int32),
        mode="constant",
        cval=0,
    )
    # mean >= 0.5  <=>  2 * count >= k * k, kept in integers
    return BinarySilhouette.from_mask(2 * counts >= k * k)
