"""Frame file input and output.

Binary PPM (P6) is the baseline format. PNG goes through matplotlib.image and
is only picked up from directories when enabled.
"""

from pathlib import Path

import numpy as np
from matplotlib import image as mpimg

from src.tipdetect.exceptions import FrameReadError, InvalidImageError
from src.tipdetect.imaging import RgbImage

PPM_SUFFIXES = (".ppm",)
PNG_SUFFIXES = (".png",)


def _header_tokens(data: bytes, count: int) -> tuple[list[bytes], int]:
    """Read ``count`` whitespace-separated header tokens, skipping # comments.

    Returns the tokens and the offset of the single whitespace byte that
    ends the last one.
    """
    tokens: list[bytes] = []
    pos = 0
    while len(tokens) < count:
        while pos < len(data) and data[pos : pos + 1].isspace():
            pos += 1
        if pos >= len(data):
            raise FrameReadError("Truncated PPM header")
        if data[pos : pos + 1] == b"#":
            end = data.find(b"\n", pos)
            pos = len(data) if end < 0 else end + 1
            continue
        start = pos
        while pos < len(data) and not data[pos : pos + 1].isspace():
            pos += 1
        tokens.append(data[start:pos])
    return tokens, pos


def decode_ppm(data: bytes) -> RgbImage:
    """Decode a binary P6 image with maxval up to 255.

    Raises
    ------
    FrameReadError
        On a wrong magic number, bad header or short pixel data.
    """
    (magic, width_s, height_s, maxval_s), pos = _header_tokens(data, 4)
    if magic != b"P6":
        raise FrameReadError(f"Not a binary PPM (magic {magic!r})")
    try:
        width, height, maxval = int(width_s), int(height_s), int(maxval_s)
    except ValueError as exc:
        raise FrameReadError("Non-numeric PPM header field") from exc
    if width < 1 or height < 1:
        raise FrameReadError(f"Bad PPM dimensions {width}x{height}")
    if not 0 < maxval < 256:
        raise FrameReadError(f"Only 8-bit PPM supported, maxval {maxval}")

    expected = width * height * 3
    pixels = data[pos + 1 : pos + 1 + expected]
    if len(pixels) != expected:
        raise FrameReadError(f"PPM pixel data short: {len(pixels)} of {expected} bytes")

    rgb = np.frombuffer(pixels, dtype=np.uint8).reshape(height, width, 3)
    if maxval != 255:
        rgb = np.round(rgb.astype(np.float64) * 255.0 / maxval).astype(np.uint8)
    return RgbImage(rgb)


def encode_ppm(img: RgbImage) -> bytes:
    header = f"P6\n{img.width} {img.height}\n255\n".encode("ascii")
    return header + img.data.tobytes()


def read_frame(path: str | Path) -> RgbImage:
    """Load a PPM or PNG frame.

    Raises
    ------
    FrameReadError
        If the file cannot be read or decoded.
    """
    path = Path(path)
    try:
        if path.suffix.lower() in PNG_SUFFIXES:
            return _read_png(path)
        return decode_ppm(path.read_bytes())
    except OSError as exc:
        raise FrameReadError(f"Cannot read frame {path}: {exc}") from exc
    except (InvalidImageError, ValueError) as exc:
        raise FrameReadError(f"Cannot decode frame {path}: {exc}") from exc


def _read_png(path: Path) -> RgbImage:
    pixels = mpimg.imread(path)
    if pixels.ndim == 2:
        pixels = np.stack([pixels] * 3, axis=-1)
    pixels = pixels[..., :3]
    if pixels.dtype != np.uint8:
        pixels = np.round(np.clip(pixels, 0.0, 1.0) * 255.0).astype(np.uint8)
    return RgbImage(pixels)


def write_frame(img: RgbImage, path: str | Path) -> None:
    """Write a frame as PPM, or PNG when the suffix says so.

    Raises
    ------
    FrameReadError
        If the file cannot be written.
    """
    path = Path(path)
    try:
        if path.suffix.lower() in PNG_SUFFIXES:
            mpimg.imsave(path, np.asarray(img.data))
        else:
            path.write_bytes(encode_ppm(img))
    except OSError as exc:
        raise FrameReadError(f"Cannot write frame {path}: {exc}") from exc


def list_frames(source: str | Path, png: bool = False) -> list[Path]:
    """Frame files of a directory in lexicographic order, or a single file.

    Parameters
    ----------
    source : str | Path
        Directory of frames or one frame file.
    png : bool
        Also accept ``.png`` files from a directory.
    """
    source = Path(source)
    if source.is_file():
        return [source]
    suffixes = PPM_SUFFIXES + (PNG_SUFFIXES if png else ())
    return sorted(
        (p for p in source.iterdir() if p.is_file() and p.suffix.lower() in suffixes),
        key=lambda p: p.name,
    )
