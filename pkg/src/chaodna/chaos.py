"""Logistic map streams, quantizers and bifurcation scans.

All arithmetic is binary64 with the update evaluated as ``(u * p) * (1 - p)``;
any other association changes the low bits and, after a few dozen steps in
the chaotic regime, the whole stream.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, RegimeError

CHAOS_THRESHOLD = 3.56994
DEFAULT_U = 3.99999
DEFAULT_BURN_IN = 1000


def is_chaotic(u: float) -> bool:
    return CHAOS_THRESHOLD < u <= 4.0


def check_regime(u: float) -> None:
    if not is_chaotic(u):
        raise RegimeError(f"u={u!r} is outside the chaotic window ({CHAOS_THRESHOLD}, 4]")


def _check_u(u):
    if not 0.0 < u <= 4.0:
        raise DomainError(f"bifurcation parameter u={u!r} outside (0, 4]")


@dataclass(frozen=True)
class ChaosParams:
    u: float = DEFAULT_U
    p0: float = 0.5
    burn_in: int = DEFAULT_BURN_IN

    def __post_init__(self):
        _check_u(self.u)
        if not 0.0 < self.p0 < 1.0:
            raise DomainError(f"initial value p0={self.p0!r} must lie in (0, 1)")
        if self.burn_in < 0:
            raise DomainError("burn_in must be non-negative")


@dataclass(frozen=True)
class Keystream:
    values: np.ndarray = field(repr=False)
    params: ChaosParams

    def __len__(self):
        return len(self.values)


def logistic_step(p: float, u: float) -> float:
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"p={p!r} outside [0, 1]")
    _check_u(u)
    return u * p * (1.0 - p)


def generate(params: ChaosParams, count: int, *, require_chaotic: bool = False) -> Keystream:
    """Iterate the map ``burn_in`` times, then return the next ``count`` values.

    With ``require_chaotic`` the parameter must sit in the chaotic window,
    which is what the cipher asks for; scans and tests leave it off.
    """
    if count < 1:
        raise DomainError("count must be at least 1")
    if require_chaotic:
        check_regime(params.u)
    u = float(params.u)
    p = float(params.p0)
    for _ in range(params.burn_in):
        p = u * p * (1.0 - p)
    out = [0.0] * count
    for i in range(count):
        p = u * p * (1.0 - p)
        out[i] = p
    values = np.array(out, dtype=np.float64)
    values.flags.writeable = False
    return Keystream(values, params)


def _values(ks):
    return ks.values if isinstance(ks, Keystream) else np.asarray(ks, dtype=np.float64)


def quantize_bytes(ks) -> np.ndarray:
    x = _values(ks)
    return np.minimum(np.floor(x * 256.0), 255).astype(np.uint8)


def quantize_rules(ks) -> np.ndarray:
    x = _values(ks)
    return (np.minimum(np.floor(x * 8.0), 7) + 1).astype(np.uint8)


def bifurcation_scan(u_min, u_max, u_steps, transient=1000, samples_per_u=256, p0=0.5):
    """Sample the attractor of the logistic map over a range of ``u``.

    Returns an array of shape ``(u_steps * samples_per_u, 2)`` holding
    ``(u, p)`` rows, grouped by ``u`` in ascending order. Every ``u`` is
    iterated independently with the same elementwise arithmetic as
    :func:`generate`, so a single slice matches a scalar run bit for bit.
    """
    if not 0.0 < u_min < u_max <= 4.0:
        raise DomainError(f"need 0 < u_min < u_max <= 4, got {u_min}, {u_max}")
    if u_steps < 1 or samples_per_u < 1 or transient < 0:
        raise DomainError("u_steps and samples_per_u must be positive, transient >= 0")
    if not 0.0 < p0 < 1.0:
        raise DomainError("p0 must lie in (0, 1)")
    u = np.linspace(u_min, u_max, u_steps) if u_steps > 1 else np.array([float(u_min)])
    p = np.full(u.shape, float(p0))
    for _ in range(transient):
        p = u * p * (1.0 - p)
    samples = np.empty((u_steps, samples_per_u))
    for j in range(samples_per_u):
        p = u * p * (1.0 - p)
        samples[:, j] = p
    return np.column_stack([np.repeat(u, samples_per_u), samples.ravel()])


def scan_to_csv(points) -> str:
    lines = ["u,p"]
    lines.extend(f"{u:.9g},{p:.9g}" for u, p in points)
    return "\n".join(lines) + "\n"


def scan_density(points, height=256) -> np.ndarray:
    """Render scan points as a grayscale density image (dark = frequent).

    One column per distinct ``u``; row 0 is ``p = 1``.
    """
    points = np.asarray(points)
    us, col = np.unique(points[:, 0], return_inverse=True)
    row = np.minimum(np.floor((1.0 - points[:, 1]) * height), height - 1).astype(int)
    counts = np.zeros((height, len(us)), dtype=np.int64)
    np.add.at(counts, (row, col.ravel()), 1)
    if counts.max() == 0:
        return np.full((height, len(us)), 255, dtype=np.uint8)
    # log scaling keeps sparse chaotic bands visible next to dense cycles
    level = np.log1p(counts) / np.log1p(counts.max())
    return np.round(255 * (1.0 - level)).astype(np.uint8)
