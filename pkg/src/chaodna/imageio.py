"""Binary PGM/PPM I/O plus the grayscale and resize preprocessing.

A grayscale image throughout the package is a 2-D ``uint8`` numpy array
indexed ``[row, column]``.
"""
from __future__ import annotations

import os

import numpy as np

from .errors import DomainError, FileError, FormatError, ShapeError

_WS = b" \t\r\n"


def as_gray(img) -> np.ndarray:
    arr = np.asarray(img)
    if arr.ndim != 2 or arr.size == 0:
        raise ShapeError(f"expected a non-empty 2-D grayscale image, got shape {arr.shape}")
    if arr.dtype != np.uint8:
        if arr.min() < 0 or arr.max() > 255:
            raise DomainError("pixel values must lie in 0..255")
        arr = arr.astype(np.uint8)
    return arr


def _header(data: bytes, magic: bytes):
    if data[:2] != magic:
        raise FormatError(f"bad magic {data[:2]!r}, expected {magic!r}")
    pos = 2
    fields = []
    while len(fields) < 3:
        if pos >= len(data):
            raise FormatError("truncated header")
        c = data[pos:pos + 1]
        if c in (b" ", b"\t", b"\r", b"\n"):
            pos += 1
        elif c == b"#":
            end = data.find(b"\n", pos)
            if end < 0:
                raise FormatError("unterminated comment in header")
            pos = end + 1
        else:
            start = pos
            while pos < len(data) and data[pos] not in _WS:
                pos += 1
            token = data[start:pos]
            if not token.isdigit():
                raise FormatError(f"bad header field {token!r}")
            fields.append(int(token))
    if pos >= len(data) or data[pos] not in _WS:
        raise FormatError("missing whitespace after maxval")
    width, height, maxval = fields
    if maxval != 255:
        raise FormatError(f"maxval must be 255, got {maxval}")
    if width <= 0 or height <= 0:
        raise FormatError("image dimensions must be positive")
    return width, height, pos + 1


def read_pgm(data: bytes) -> np.ndarray:
    width, height, start = _header(data, b"P5")
    n = width * height
    payload = data[start:start + n]
    if len(payload) < n:
        raise FormatError(f"truncated payload: {len(payload)} of {n} bytes")
    return np.frombuffer(payload, dtype=np.uint8).reshape(height, width).copy()


def write_pgm(img) -> bytes:
    img = as_gray(img)
    h, w = img.shape
    return b"P5\n%d %d\n255\n" % (w, h) + np.ascontiguousarray(img).tobytes()


def read_ppm(data: bytes) -> np.ndarray:
    """Read a binary P6 file into an ``(h, w, 3)`` array."""
    width, height, start = _header(data, b"P6")
    n = width * height * 3
    payload = data[start:start + n]
    if len(payload) < n:
        raise FormatError(f"truncated payload: {len(payload)} of {n} bytes")
    return np.frombuffer(payload, dtype=np.uint8).reshape(height, width, 3).copy()


def to_gray(r, g, b) -> np.ndarray:
    # integer luma with round-half-up, exact for equal channels
    r, g, b = (np.asarray(c, dtype=np.int64) for c in (r, g, b))
    return np.clip((299 * r + 587 * g + 114 * b + 500) // 1000, 0, 255).astype(np.uint8)


def resize_nn(img, width: int, height: int) -> np.ndarray:
    img = as_gray(img)
    if width <= 0 or height <= 0:
        raise DomainError(f"target dims must be positive, got {width}x{height}")
    src_h, src_w = img.shape
    rows = np.arange(height) * src_h // height
    cols = np.arange(width) * src_w // width
    return img[rows[:, None], cols[None, :]]


def load_image(path) -> np.ndarray:
    """Load a PGM, PPM or (with Pillow installed) any common format.

    Color inputs come back as ``(h, w, 3)`` arrays; grayscale as 2-D.
    """
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise FileError(f"cannot read {path}: {exc.strerror}") from exc
    if data[:2] == b"P5":
        return read_pgm(data)
    if data[:2] == b"P6":
        return read_ppm(data)
    try:
        from PIL import Image
    except ImportError:
        raise FormatError(f"{path}: not a binary PGM/PPM and Pillow is not installed") from None
    import io

    try:
        with Image.open(io.BytesIO(data)) as im:
            if im.mode != "L":
                im = im.convert("RGB")
            return np.array(im, dtype=np.uint8)
    except Exception as exc:
        raise FormatError(f"{path}: unreadable image ({exc})") from exc


def save_pgm(path, img) -> None:
    with open(os.fspath(path), "wb") as fh:
        fh.write(write_pgm(img))


def histogram_render(counts, height=128) -> np.ndarray:
    """Bar chart of a 256-bin histogram, black bars on white, 256 px wide."""
    counts = np.asarray(counts, dtype=np.float64)
    out = np.full((height, counts.size), 255, dtype=np.uint8)
    peak = counts.max()
    if peak <= 0:
        return out
    bars = np.round(counts / peak * height).astype(int)
    rows = np.arange(height)[:, None]
    out[rows >= height - bars[None, :]] = 0
    return out
