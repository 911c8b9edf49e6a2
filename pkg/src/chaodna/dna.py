"""DNA rule encoding of bytes and XOR carried out on nucleotides.

Nucleotides are stored as small integers indexing ``NUCLEOTIDES``; a rule
maps each 2-bit value to one of them. Every pixel becomes a quad, most
significant bit pair first.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, RuleMismatchError, ShapeError

NUCLEOTIDES = "ACGT"
COMPLEMENT = {"A": "T", "T": "A", "C": "G", "G": "C"}

# row r-1 lists the nucleotides assigned to 00, 01, 10, 11 under rule r
RULE_TABLE = (
    "ACGT",
    "AGCT",
    "CATG",
    "CTAG",
    "GATC",
    "GTAC",
    "TCGA",
    "TGCA",
)

_ENC = np.array([[NUCLEOTIDES.index(c) for c in row] for row in RULE_TABLE], dtype=np.uint8)
_DEC = np.argsort(_ENC, axis=1).astype(np.uint8)
_SHIFTS = np.array([6, 4, 2, 0], dtype=np.uint8)


def _rule_index(rule: int) -> int:
    if not 1 <= int(rule) <= 8:
        raise DomainError(f"rule id {rule!r} outside 1..8")
    return int(rule) - 1


def rule_mapping(rule: int) -> dict[int, str]:
    return dict(enumerate(RULE_TABLE[_rule_index(rule)]))


def encode_byte(b: int, rule: int) -> str:
    row = RULE_TABLE[_rule_index(rule)]
    return "".join(row[(b >> s) & 3] for s in (6, 4, 2, 0))


def decode_quad(quad: str, rule: int) -> int:
    row = RULE_TABLE[_rule_index(rule)]
    value = 0
    for ch in quad:
        value = (value << 2) | row.index(ch)
    return value


def dna_xor(a: str, b: str, rule: int) -> str:
    row = RULE_TABLE[_rule_index(rule)]
    return row[row.index(a) ^ row.index(b)]


@dataclass(frozen=True)
class DnaPlane:
    """Per-pixel nucleotide quads plus the rule that produced each one.

    ``quads`` has shape ``(height, width, 4)`` with nucleotide indices;
    ``rules`` has shape ``(height, width)`` with ids 1..8.
    """

    quads: np.ndarray
    rules: np.ndarray

    def __post_init__(self):
        if self.quads.ndim != 3 or self.quads.shape[2] != 4:
            raise ShapeError(f"quads must be (h, w, 4), got {self.quads.shape}")
        if self.rules.shape != self.quads.shape[:2]:
            raise ShapeError("rules must have one id per pixel")

    @property
    def height(self):
        return self.quads.shape[0]

    @property
    def width(self):
        return self.quads.shape[1]

    def __len__(self):
        """Number of nucleotides, i.e. four per pixel."""
        return self.quads.size

    def nucleotide(self, i: int) -> str:
        return NUCLEOTIDES[self.quads.reshape(-1)[i]]

    def to_text(self) -> str:
        letters = np.array(list(NUCLEOTIDES))[self.quads]
        return "\n".join("".join(row.ravel()) for row in letters) + "\n"


def _as_rules(rules, shape):
    rules = np.asarray(rules)
    if rules.size != int(np.prod(shape)):
        raise ShapeError(f"{rules.size} rule ids for {int(np.prod(shape))} pixels")
    rules = rules.reshape(shape).astype(np.uint8)
    if rules.size and (rules.min() < 1 or rules.max() > 8):
        raise DomainError("rule ids must lie in 1..8")
    return rules


def encode_plane(pixels, rules) -> DnaPlane:
    pixels = np.asarray(pixels, dtype=np.uint8)
    if pixels.ndim != 2:
        raise ShapeError("pixels must be a 2-D array")
    rules = _as_rules(rules, pixels.shape)
    pairs = (pixels[..., None] >> _SHIFTS) & 3
    quads = _ENC[rules[..., None] - 1, pairs]
    return DnaPlane(quads, rules)


def decode_plane(plane: DnaPlane) -> np.ndarray:
    pairs = _DEC[plane.rules[..., None] - 1, plane.quads]
    return ((pairs[..., 0] << 6) | (pairs[..., 1] << 4) | (pairs[..., 2] << 2) | pairs[..., 3]).astype(
        np.uint8
    )


def xor_planes(p1: DnaPlane, p2: DnaPlane) -> DnaPlane:
    if p1.quads.shape != p2.quads.shape:
        raise ShapeError(f"plane shapes differ: {p1.quads.shape} vs {p2.quads.shape}")
    if not np.array_equal(p1.rules, p2.rules):
        raise RuleMismatchError("planes were encoded under different rule streams")
    r = p1.rules[..., None] - 1
    bits = _DEC[r, p1.quads] ^ _DEC[r, p2.quads]
    return DnaPlane(_ENC[r, bits], p1.rules.copy())
