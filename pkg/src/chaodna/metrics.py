"""Image quality and ciphertext uniformity measures."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from .errors import ShapeError, TooSmallError
from .imageio import as_gray

PEAK = 255.0
SSIM_WINDOW = 8
SSIM_C1 = (0.01 * PEAK) ** 2
SSIM_C2 = (0.03 * PEAK) ** 2


def _pair(a, b):
    a, b = as_gray(a), as_gray(b)
    if a.shape != b.shape:
        raise ShapeError(f"image shapes differ: {a.shape} vs {b.shape}")
    return a, b


def mse(a, b) -> float:
    a, b = _pair(a, b)
    d = a.astype(np.float64) - b.astype(np.float64)
    return float(np.mean(d * d))


def psnr(a, b) -> float:
    """Peak signal-to-noise ratio in dB; ``math.inf`` for identical images."""
    err = mse(a, b)
    if err == 0.0:
        return math.inf
    return 10.0 * math.log10(PEAK * PEAK / err)


def ssim(a, b) -> float:
    """Mean SSIM over all 8x8 windows at stride 1, population statistics."""
    a, b = _pair(a, b)
    if min(a.shape) < SSIM_WINDOW:
        raise TooSmallError(f"SSIM needs at least {SSIM_WINDOW}x{SSIM_WINDOW}, got {a.shape}")
    wa = sliding_window_view(a.astype(np.float64), (SSIM_WINDOW, SSIM_WINDOW))
    wb = sliding_window_view(b.astype(np.float64), (SSIM_WINDOW, SSIM_WINDOW))
    axes = (-2, -1)
    mu_a = wa.mean(axis=axes)
    mu_b = wb.mean(axis=axes)
    var_a = wa.var(axis=axes)
    var_b = wb.var(axis=axes)
    cov = (wa * wb).mean(axis=axes) - mu_a * mu_b
    num = (2 * mu_a * mu_b + SSIM_C1) * (2 * cov + SSIM_C2)
    den = (mu_a**2 + mu_b**2 + SSIM_C1) * (var_a + var_b + SSIM_C2)
    return float(np.mean(num / den))


@dataclass(frozen=True)
class HistogramReport:
    counts: np.ndarray = field(repr=False)
    chi_square: float
    entropy_bits: float

    @property
    def pixels(self) -> int:
        return int(self.counts.sum())


def histogram(img) -> HistogramReport:
    img = as_gray(img)
    counts = np.bincount(img.ravel(), minlength=256).astype(np.int64)
    n = counts.sum()
    expected = n / 256.0
    chi = float(np.sum((counts - expected) ** 2) / expected)
    p = counts[counts > 0] / n
    entropy = float(-np.sum(p * np.log2(p)))
    return HistogramReport(counts, chi, max(entropy, 0.0))


def _fmt(value):
    if math.isinf(value):
        return "inf"
    return f"{value:.6f}"


@dataclass
class CompareReport:
    rows: list[tuple[str, str, float]]
    histograms: dict[str, HistogramReport]

    def value(self, metric, pair):
        for m, p, v in self.rows:
            if m == metric and p == pair:
                return v
        raise KeyError((metric, pair))

    def to_csv(self) -> str:
        lines = ["metric,pair,value"]
        lines.extend(f"{m},{p},{_fmt(v)}" for m, p, v in self.rows)
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        width = max(len(f"{m} ({p})") for m, p, _ in self.rows)
        return "\n".join(f"{f'{m} ({p})':<{width}}  {_fmt(v)}" for m, p, v in self.rows) + "\n"


def compare_report(original, encrypted, decrypted) -> CompareReport:
    original, encrypted = _pair(original, encrypted)
    original, decrypted = _pair(original, decrypted)
    rows = []
    for name, other in (("original-decrypted", decrypted), ("original-encrypted", encrypted)):
        rows.append(("psnr", name, psnr(original, other)))
        rows.append(("ssim", name, ssim(original, other)))
    hists = {}
    for name, img in (("original", original), ("encrypted", encrypted), ("decrypted", decrypted)):
        rep = histogram(img)
        hists[name] = rep
        rows.append(("chi_square", name, rep.chi_square))
        rows.append(("entropy", name, rep.entropy_bits))
    return CompareReport(rows, hists)
