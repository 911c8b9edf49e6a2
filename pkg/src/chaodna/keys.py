"""128-bit key parsing and seed derivation for the chaotic streams.

A key is 32 hex characters. Each stream takes its own 32-bit window of the
key, XOR-folds the four bytes of that window into one byte, and maps the
byte into the open unit interval to obtain the logistic map's start value.
"""
from __future__ import annotations

import enum
import string
from dataclasses import dataclass

from .errors import CharError, LengthError, OffsetError

KEY_BITS = 128
WINDOW_BITS = 32
_HEX = frozenset(string.hexdigits)


@dataclass(frozen=True)
class Key128:
    bits: int

    def __post_init__(self):
        if not 0 <= self.bits < (1 << KEY_BITS):
            raise ValueError("key must fit in 128 bits")

    def hex(self) -> str:
        return f"{self.bits:032x}"

    def __xor__(self, other: "Key128") -> "Key128":
        return Key128(self.bits ^ other.bits)

    def flip(self, bit: int) -> "Key128":
        """Return a copy with one bit toggled; bit 0 is the most significant."""
        if not 0 <= bit < KEY_BITS:
            raise OffsetError(f"bit {bit} outside 0..127")
        return Key128(self.bits ^ (1 << (KEY_BITS - 1 - bit)))

    def __repr__(self):
        # keep key material out of tracebacks and logs
        return "Key128(<redacted>)"


class Role(enum.Enum):
    MAIN = 0
    KEY_IMAGE = 32
    RULE = 64


@dataclass(frozen=True)
class SeedSpec:
    bit_offset: int
    role: Role | None = None

    @classmethod
    def for_role(cls, role: Role) -> "SeedSpec":
        return cls(role.value, role)


def parse_key(hex_text: str) -> Key128:
    text = hex_text.strip()
    if len(text) != 32:
        raise LengthError(f"key must be 32 hex characters, got {len(text)}")
    for i, ch in enumerate(text):
        if ch not in _HEX:
            raise CharError(i, ch)
    return Key128(int(text, 16))


def fold_window(key: Key128, spec: SeedSpec) -> int:
    """XOR the four bytes of the 32-bit window starting at ``spec.bit_offset``.

    Bits are numbered MSB-first, so offset 0 selects the first 8 hex digits.
    """
    off = spec.bit_offset
    if off < 0 or off + WINDOW_BITS > KEY_BITS:
        raise OffsetError(f"window at bit {off} exceeds the 128-bit key")
    word = (key.bits >> (KEY_BITS - WINDOW_BITS - off)) & 0xFFFFFFFF
    return (word >> 24) ^ (word >> 16 & 0xFF) ^ (word >> 8 & 0xFF) ^ (word & 0xFF)


def seed_to_initial(folded: int) -> float:
    # (b + 0.5) / 256 is exact in binary64 and never hits 0, 0.5 or 1
    return (folded + 0.5) / 256


def initial_value(key: Key128, role: Role) -> float:
    return seed_to_initial(fold_window(key, SeedSpec.for_role(role)))
