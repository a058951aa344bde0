"""Coefficient matrices: uniformly elliptic, symmetric, optionally 1-periodic.

A field evaluates A(x / epsilon) with periodic wrapping of the fast variable
into [0, 1)^2. Ellipticity and periodicity are certified by dense sampling,
not symbolically; the built-in library provides closed-form C^1 entries.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import NotPeriodicError
from .geometry import Grid

# entries(points) -> array of shape (..., 2, 2) for points of shape (..., 2)
MatrixFn = Callable[[np.ndarray], np.ndarray]

EDGE_MATCH_TOL = 1e-9


@dataclass(frozen=True)
class CoefficientField:
    """Symmetric 2x2 coefficient map with declared ellipticity lambda >= 1.

    Rayleigh quotients of A are asserted to lie in [1/lam, lam]; lipschitz is
    a bound on the unit-cell entries (math.inf when unknown). When periodic,
    evaluation wraps x/epsilon into the unit cell.
    """

    entries: MatrixFn
    lam: float
    lipschitz: float
    periodic: bool
    epsilon: float = 1.0
    name: str = "anonymous"

    def __post_init__(self):
        if self.lam < 1:
            raise ValueError(f"ellipticity constant must be >= 1, got {self.lam}")
        if not (0 < self.epsilon <= 1):
            raise ValueError(f"epsilon must be in (0, 1], got {self.epsilon}")

    def evaluate(self, points: np.ndarray) -> np.ndarray:
        """A at physical points, shape (..., 2) -> (..., 2, 2)."""
        pts = np.asarray(points, dtype=float)
        if self.periodic:
            y = np.mod(pts / self.epsilon, 1.0)
            return self.entries(y)
        return self.entries(pts)

    def rescaled(self, epsilon: float) -> "CoefficientField":
        """The same unit-cell entries at a different oscillation scale."""
        if not self.periodic:
            raise ValueError("only periodic fields can be rescaled")
        return CoefficientField(
            self.entries, self.lam, self.lipschitz, True, epsilon, name=self.name
        )


@dataclass(frozen=True)
class CoefficientLibraryEntry:
    name: str
    field: CoefficientField
    provenance: str


def _edge_mismatch(entries: MatrixFn, samples: int = 64) -> float:
    t = np.linspace(0.0, 1.0, samples)
    left = entries(np.stack([np.zeros_like(t), t], axis=1))
    right = entries(np.stack([np.ones_like(t), t], axis=1))
    bottom = entries(np.stack([t, np.zeros_like(t)], axis=1))
    top = entries(np.stack([t, np.ones_like(t)], axis=1))
    return max(
        float(np.max(np.abs(left - right))),
        float(np.max(np.abs(bottom - top))),
    )


def make_periodic(
    entries_on_unit_cell: MatrixFn,
    epsilon: float,
    lam: float = 1.0,
    lipschitz: float = math.inf,
    name: str = "periodic",
) -> CoefficientField:
    """Periodize unit-cell entries and rescale them to oscillation scale epsilon.

    The entries must match on opposite edges of the closed unit cell (checked
    at sampled edge points); the returned field evaluates A(x/epsilon).
    """
    if not (0 < epsilon <= 1):
        raise ValueError(f"epsilon must be in (0, 1], got {epsilon}")
    mismatch = _edge_mismatch(entries_on_unit_cell)
    if mismatch > EDGE_MATCH_TOL:
        raise NotPeriodicError(
            f"unit-cell entries differ by {mismatch:.3e} on opposite edges "
            f"(tolerance {EDGE_MATCH_TOL:.1e})"
        )
    return CoefficientField(entries_on_unit_cell, lam, lipschitz, True, epsilon, name=name)


def check_ellipticity(
    field: CoefficientField, sample_points: int = 400, sample_directions: int = 16
) -> tuple[float, float]:
    """Min and max Rayleigh quotient over a dense point/direction sample.

    Periodic fields are sampled over the unit cell in the fast variable,
    others over [-1, 1]^2. The caller compares against the declared lambda.
    """
    if sample_points < 100:
        raise ValueError(f"need sample_points >= 100, got {sample_points}")
    if sample_directions < 8:
        raise ValueError(f"need sample_directions >= 8, got {sample_directions}")
    side = int(math.ceil(math.sqrt(sample_points)))
    if field.periodic:
        t = (np.arange(side) + 0.5) / side
        mats = field.entries(_cartesian(t, t))
    else:
        t = np.linspace(-1.0, 1.0, side)
        mats = field.evaluate(_cartesian(t, t))
    theta = np.pi * np.arange(sample_directions) / sample_directions
    xi = np.stack([np.cos(theta), np.sin(theta)], axis=1)
    # quotients[p, d] = xi_d . A_p xi_d  (unit directions)
    quotients = np.einsum("di,pij,dj->pd", xi, mats, xi)
    return float(quotients.min()), float(quotients.max())


def estimate_lipschitz(field: CoefficientField, grid: Grid) -> float:
    """Max over grid edges of |A(p) - A(q)|_inf / |p - q|; a lower estimate."""
    x, y = grid.node_coords()
    mats = field.evaluate(np.stack([x, y], axis=-1))
    h = grid.spacing
    dx = np.max(np.abs(mats[1:, :] - mats[:-1, :]), axis=(-1, -2))
    dy = np.max(np.abs(mats[:, 1:] - mats[:, :-1]), axis=(-1, -2))
    return float(max(dx.max(initial=0.0), dy.max(initial=0.0)) / h)


def _cartesian(xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    gx, gy = np.meshgrid(xs, ys, indexing="ij")
    return np.stack([gx.ravel(), gy.ravel()], axis=1)


def _const_entries(mat: np.ndarray) -> MatrixFn:
    mat = np.asarray(mat, dtype=float)

    def entries(points: np.ndarray) -> np.ndarray:
        pts = np.asarray(points, dtype=float)
        out = np.empty(pts.shape[:-1] + (2, 2))
        out[...] = mat
        return out

    return entries


def _sinsin_entries(points: np.ndarray) -> np.ndarray:
    pts = np.asarray(points, dtype=float)
    a = 2.0 + np.sin(2 * np.pi * pts[..., 0]) * np.sin(2 * np.pi * pts[..., 1])
    out = np.zeros(pts.shape[:-1] + (2, 2))
    out[..., 0, 0] = a
    out[..., 1, 1] = a
    return out


def _checkerboard_entries(points: np.ndarray) -> np.ndarray:
    # smoothed checkerboard: tanh sharpens the sin*sin sign pattern while
    # staying C^1 with a finite Lipschitz constant
    pts = np.asarray(points, dtype=float)
    s = np.sin(2 * np.pi * pts[..., 0]) * np.sin(2 * np.pi * pts[..., 1])
    a = 2.0 + 0.9 * np.tanh(4.0 * s)
    out = np.zeros(pts.shape[:-1] + (2, 2))
    out[..., 0, 0] = a
    out[..., 1, 1] = a
    return out


def library() -> dict[str, CoefficientLibraryEntry]:
    """Built-in coefficient fields addressable by name."""
    entries = [
        CoefficientLibraryEntry(
            "identity",
            CoefficientField(_const_entries(np.eye(2)), 1.0, 0.0, True, 1.0, name="identity"),
            "constant identity matrix",
        ),
        CoefficientLibraryEntry(
            "diag-1-4",
            CoefficientField(
                _const_entries(np.diag([1.0, 4.0])), 4.0, 0.0, True, 1.0, name="diag-1-4"
            ),
            "constant diagonal matrix diag(1, 4)",
        ),
        CoefficientLibraryEntry(
            "sinsin",
            CoefficientField(
                _sinsin_entries, 3.0, 2 * np.pi, True, 1.0, name="sinsin"
            ),
            "isotropic (2 + sin(2 pi y1) sin(2 pi y2)) I on the unit cell",
        ),
        CoefficientLibraryEntry(
            "checkerboard",
            CoefficientField(
                _checkerboard_entries, 3.0, 0.9 * 4.0 * 2 * np.pi, True, 1.0, name="checkerboard"
            ),
            "smoothed checkerboard, isotropic, values in [1.1, 2.9]",
        ),
    ]
    return {e.name: e for e in entries}


def get_field(name: str, epsilon: float = 1.0) -> CoefficientField:
    """Library lookup with optional oscillation-scale rescaling."""
    lib = library()
    if name not in lib:
        raise KeyError(f"unknown coefficient field {name!r}; have {sorted(lib)}")
    f = lib[name].field
    return f.rescaled(epsilon) if epsilon != f.epsilon else f
