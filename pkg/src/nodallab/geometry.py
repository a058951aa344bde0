"""Grids, balls, annuli and circle sampling shared by every other module.

All geometry is 2D. Points are pairs of 64-bit floats; values are immutable
after construction and safe to share between workers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

Point = tuple[float, float]


@dataclass(frozen=True)
class Grid:
    """Uniform n x n grid covering the closed square [center - hw, center + hw]^2."""

    center: Point
    half_width: float
    n: int

    def __post_init__(self):
        if self.n < 16:
            raise ValueError(f"grid needs n >= 16, got n={self.n}")
        if not self.half_width > 0:
            raise ValueError(f"half_width must be positive, got {self.half_width}")

    @property
    def spacing(self) -> float:
        return 2.0 * self.half_width / (self.n - 1)

    @property
    def xs(self) -> np.ndarray:
        return self.center[0] - self.half_width + self.spacing * np.arange(self.n)

    @property
    def ys(self) -> np.ndarray:
        return self.center[1] - self.half_width + self.spacing * np.arange(self.n)

    def node_coords(self) -> tuple[np.ndarray, np.ndarray]:
        """Meshgrid of node coordinates, shape (n, n), indexed [ix, iy]."""
        return np.meshgrid(self.xs, self.ys, indexing="ij")

    def contains_ball(self, ball: "Ball", margin: float = 0.0) -> bool:
        cx, cy = ball.center
        r = ball.radius + margin
        return (
            cx - r >= self.center[0] - self.half_width - 1e-12
            and cx + r <= self.center[0] + self.half_width + 1e-12
            and cy - r >= self.center[1] - self.half_width - 1e-12
            and cy + r <= self.center[1] + self.half_width + 1e-12
        )


@dataclass(frozen=True)
class Ball:
    """Closed disk B(center, radius)."""

    center: Point
    radius: float

    def __post_init__(self):
        if not self.radius > 0:
            raise ValueError(f"ball radius must be positive, got {self.radius}")

    def scaled(self, factor: float) -> "Ball":
        return Ball(self.center, self.radius * factor)


@dataclass(frozen=True)
class Annulus:
    """Closed annulus {inner <= |x - center| <= outer}."""

    center: Point
    inner: float
    outer: float

    def __post_init__(self):
        if not (0 <= self.inner < self.outer):
            raise ValueError(
                f"annulus needs 0 <= inner < outer, got inner={self.inner} outer={self.outer}"
            )


def sample_circle(center: Point, radius: float, m: int) -> list[tuple[float, np.ndarray]]:
    """m points equally spaced in angle on the circle, angles ascending in [0, 2*pi).

    Returns a list of (angle, point) pairs.
    """
    if not radius > 0:
        raise ValueError(f"radius must be positive, got {radius}")
    if m < 8:
        raise ValueError(f"need at least 8 samples, got m={m}")
    angles = 2.0 * np.pi * np.arange(m) / m
    pts = np.stack(
        [center[0] + radius * np.cos(angles), center[1] + radius * np.sin(angles)], axis=1
    )
    return [(float(a), p) for a, p in zip(angles, pts)]


def circle_points(center: Point, radius: float, angles: np.ndarray) -> np.ndarray:
    """Points on the circle at the given angles, shape (len(angles), 2)."""
    return np.stack(
        [center[0] + radius * np.cos(angles), center[1] + radius * np.sin(angles)], axis=1
    )


def annulus_radii(inner: float, outer: float, k: int) -> np.ndarray:
    """k+1 equally spaced radii r_0 = inner < r_1 < ... < r_k = outer."""
    if k < 1:
        raise ValueError(f"need k >= 1 subdivisions, got k={k}")
    if not (0 <= inner < outer):
        raise ValueError(f"need 0 <= inner < outer, got {inner}, {outer}")
    return np.linspace(inner, outer, k + 1)
