"""Encryption and decryption pipelines plus the binary envelope format.

Encryption (``Mode.CHAOS_DNA``):

1. XOR the plaintext with the main keystream bytes (confusion stage).
2. Encode the result as DNA quads under a per-pixel rule stream.
3. Encode the key image under the same rules and XOR the two planes.
4. Decode the XORed plane back to bytes.

``Mode.CHAOS_ONLY`` stops after step 1 and exists for comparison runs.
"""
from __future__ import annotations

import enum
import struct
import warnings
from dataclasses import dataclass

import numpy as np

from . import chaos, dna
from .errors import DomainError, FileError, FormatError, ShapeError
from .imageio import as_gray, load_image, resize_nn, to_gray
from .keys import Key128, Role, initial_value

MAGIC = b"CDN1"
VERSION = 1
_HEADER = struct.Struct(">4sBBII")


class Mode(enum.IntEnum):
    CHAOS_ONLY = 0
    CHAOS_DNA = 1


@dataclass(frozen=True)
class CipherConfig:
    u: float = chaos.DEFAULT_U
    burn_in: int = chaos.DEFAULT_BURN_IN
    key_image: str | None = None  # None means generated from the key
    target_dims: tuple[int, int] | None = None  # (width, height)

    def __post_init__(self):
        chaos.check_regime(self.u)
        if self.burn_in < 0:
            raise DomainError("burn_in must be non-negative")


@dataclass(frozen=True)
class CipherEnvelope:
    mode: Mode
    width: int
    height: int
    payload: bytes

    def __post_init__(self):
        if len(self.payload) != self.width * self.height:
            raise FormatError(
                f"payload holds {len(self.payload)} bytes, header says {self.width}x{self.height}"
            )

    def to_bytes(self) -> bytes:
        return _HEADER.pack(MAGIC, VERSION, int(self.mode), self.width, self.height) + self.payload

    @classmethod
    def from_bytes(cls, data: bytes) -> "CipherEnvelope":
        if len(data) < _HEADER.size:
            raise FormatError("envelope shorter than its header")
        magic, version, mode, width, height = _HEADER.unpack_from(data)
        if magic != MAGIC:
            raise FormatError(f"bad magic {magic!r}")
        if version != VERSION:
            raise FormatError(f"unsupported envelope version {version}")
        try:
            mode = Mode(mode)
        except ValueError:
            raise FormatError(f"unknown cipher mode {mode}") from None
        payload = data[_HEADER.size:]
        if len(payload) != width * height:
            raise FormatError(f"payload is {len(payload)} bytes, expected {width * height}")
        return cls(mode, width, height, payload)

    def pixels(self) -> np.ndarray:
        return np.frombuffer(self.payload, dtype=np.uint8).reshape(self.height, self.width).copy()


def _stream(key, role, count, cfg):
    params = chaos.ChaosParams(cfg.u, initial_value(key, role), cfg.burn_in)
    return chaos.generate(params, count, require_chaotic=True)


def main_stream(key: Key128, width: int, height: int, cfg: CipherConfig) -> np.ndarray:
    """Confusion keystream bytes shaped ``(height, width)``."""
    return chaos.quantize_bytes(_stream(key, Role.MAIN, width * height, cfg)).reshape(height, width)


def rule_stream(key: Key128, width: int, height: int, cfg: CipherConfig) -> np.ndarray:
    return chaos.quantize_rules(_stream(key, Role.RULE, width * height, cfg)).reshape(height, width)


def generate_key_image(key: Key128, width: int, height: int, cfg: CipherConfig) -> np.ndarray:
    if width <= 0 or height <= 0:
        raise ShapeError(f"key image dims must be positive, got {width}x{height}")
    if cfg.key_image is None:
        ks = _stream(key, Role.KEY_IMAGE, width * height, cfg)
        return chaos.quantize_bytes(ks).reshape(height, width)
    img = load_image(cfg.key_image)
    if img.ndim == 3:
        img = to_gray(img[..., 0], img[..., 1], img[..., 2])
    try:
        return resize_nn(img, width, height)
    except ShapeError as exc:
        raise FileError(f"key image {cfg.key_image}: {exc}") from exc


def preprocess(img, cfg: CipherConfig | None = None) -> np.ndarray:
    arr = np.asarray(img)
    if arr.ndim == 3 and arr.shape[2] in (3, 4):
        arr = to_gray(arr[..., 0], arr[..., 1], arr[..., 2])
    arr = as_gray(arr)
    if cfg is not None and cfg.target_dims is not None:
        w, h = cfg.target_dims
        if arr.shape != (h, w):
            arr = resize_nn(arr, w, h)
    return arr


def _dna_stage(confused, key, cfg):
    h, w = confused.shape
    rules = rule_stream(key, w, h, cfg)
    key_img = generate_key_image(key, w, h, cfg)
    return rules, key_img


def encrypt(plain, key: Key128, cfg: CipherConfig | None = None, mode: Mode = Mode.CHAOS_DNA) -> CipherEnvelope:
    cfg = cfg or CipherConfig()
    plain = as_gray(plain)
    h, w = plain.shape
    stream = main_stream(key, w, h, cfg)
    confused = plain ^ stream
    if mode == Mode.CHAOS_ONLY:
        return CipherEnvelope(mode, w, h, confused.tobytes())

    rules, key_img = _dna_stage(confused, key, cfg)
    if np.array_equal(key_img, stream):
        warnings.warn(
            "key image equals the main keystream for this key; the ciphertext equals the plaintext",
            stacklevel=2,
        )
    encoded = dna.encode_plane(confused, rules)
    mixed = dna.xor_planes(encoded, dna.encode_plane(key_img, rules))
    return CipherEnvelope(mode, w, h, dna.decode_plane(mixed).tobytes())


def decrypt(env: CipherEnvelope, key: Key128, cfg: CipherConfig | None = None) -> np.ndarray:
    cfg = cfg or CipherConfig()
    cipher = env.pixels()
    h, w = cipher.shape
    if env.mode == Mode.CHAOS_DNA:
        rules, key_img = _dna_stage(cipher, key, cfg)
        encoded = dna.encode_plane(cipher, rules)
        unmixed = dna.xor_planes(encoded, dna.encode_plane(key_img, rules))
        cipher = dna.decode_plane(unmixed)
    return cipher ^ main_stream(key, w, h, cfg)
