"""Lattice instances, Gram matrices, and a brute-force SVP oracle.

A lattice is the set of integer combinations v = sum_i x_i b_i of basis
vectors b_1..b_n in R^m.  All norms here are squared Euclidean norms,
computed through the Gram matrix G = B^T B:

    ||v||^2 = x^T G x

The shortest-vector oracle enumerates all coefficient vectors in the box
[-k, k]^n and is the ground truth every encoded Hamiltonian and solver in
this package is checked against.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

import numpy as np

# Smallest admissible eigenvalue of G; below this the basis is treated as
# linearly dependent.
_RANK_TOL = 1e-12

# Tolerance for collecting degenerate minimizers in the oracle.
_MIN_TOL = 1e-9

# Guard on the enumeration box size (2k+1)^n.
_MAX_BOX = 10**8


class DegenerateBasis(ValueError):
    """Basis vectors are linearly dependent (Gram matrix is singular)."""


@dataclass(frozen=True)
class LatticeBasis:
    """Row-per-vector basis matrix for an n-dimensional lattice in R^m."""

    vectors: np.ndarray

    def __post_init__(self):
        arr = np.atleast_2d(np.asarray(self.vectors, dtype=float))
        if arr.ndim != 2 or arr.shape[0] < 1:
            raise ValueError("basis must be a non-empty 2d array")
        if arr.shape[1] < arr.shape[0]:
            raise ValueError(
                f"need ambient dimension m >= n, got {arr.shape[1]} < {arr.shape[0]}"
            )
        object.__setattr__(self, "vectors", arr)
        # Raises DegenerateBasis if the vectors are dependent.
        gram_matrix(self)

    @property
    def dimension(self) -> int:
        return self.vectors.shape[0]


def basis_2d(theta: float) -> LatticeBasis:
    """Normalized two-vector family {(1,0), (cos theta, sin theta)}."""
    if not 0.0 < theta <= np.pi:
        raise ValueError(f"theta must be in (0, pi], got {theta}")
    return LatticeBasis(np.array([[1.0, 0.0], [np.cos(theta), np.sin(theta)]]))


def gram_matrix(basis: LatticeBasis | np.ndarray) -> np.ndarray:
    """G = B B^T for row vectors, i.e. G_ij = <b_i, b_j>, symmetrized."""
    B = basis.vectors if isinstance(basis, LatticeBasis) else np.atleast_2d(np.asarray(basis, dtype=float))
    G = B @ B.T
    G = 0.5 * (G + G.T)
    if np.linalg.eigvalsh(G).min() <= _RANK_TOL:
        raise DegenerateBasis("basis vectors are linearly dependent")
    return G


def norm_squared(x, G: np.ndarray) -> float:
    """Squared lattice-vector norm x^T G x for integer coefficients x."""
    x = np.asarray(x, dtype=float)
    G = np.asarray(G, dtype=float)
    if x.shape != (G.shape[0],):
        raise ValueError(f"coefficient vector length {x.shape} does not match G {G.shape}")
    return float(x @ G @ x)


@dataclass(frozen=True)
class SvpSolution:
    """Minimal nonzero squared norm and every coefficient vector attaining it."""

    e1: float
    minimizers: tuple[tuple[int, ...], ...] = field(default=())

    def __post_init__(self):
        if not self.minimizers:
            raise ValueError("solution must carry at least one minimizer")


def brute_force_svp(basis: LatticeBasis | np.ndarray, k: int) -> SvpSolution:
    """Exhaustive minimum of x^T G x over x in [-k, k]^n \\ {0}.

    Accepts either a basis or a precomputed Gram matrix.  Returns all
    minimizers within an absolute tolerance of 1e-9, so degenerate shortest
    vectors (e.g. the 6-fold set at theta = pi/3) are reported together.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if isinstance(basis, LatticeBasis):
        G = gram_matrix(basis)
    else:
        G = np.asarray(basis, dtype=float)
        if G.ndim != 2 or G.shape[0] != G.shape[1]:
            raise ValueError("expected a LatticeBasis or square Gram matrix")
    n = G.shape[0]
    if (2 * k + 1) ** n > _MAX_BOX:
        raise ValueError(f"search box (2k+1)^n = {(2*k+1)**n} exceeds guard {_MAX_BOX}")

    best = np.inf
    mins: list[tuple[int, ...]] = []
    for x in itertools.product(range(-k, k + 1), repeat=n):
        if not any(x):
            continue
        xa = np.asarray(x, dtype=float)
        e = float(xa @ G @ xa)
        if e < best - _MIN_TOL:
            best = e
            mins = [x]
        elif e <= best + _MIN_TOL:
            mins.append(x)
    return SvpSolution(e1=best, minimizers=tuple(sorted(mins)))


def analytic_e1_2d(theta: float) -> float:
    """First-excited (shortest-vector) energy for the normalized 2d family.

    Piecewise in the angle between the unit basis vectors:
        2 - 2 cos(theta)   for 0 < theta <= pi/3      (+-(b1 - b2))
        1                  for pi/3 < theta <= 2pi/3  (+-b1, +-b2)
        2 + 2 cos(theta)   for 2pi/3 < theta <= pi    (+-(b1 + b2))
    """
    if not 0.0 < theta <= np.pi:
        raise ValueError(f"theta must be in (0, pi], got {theta}")
    if theta <= np.pi / 3:
        return 2.0 - 2.0 * np.cos(theta)
    if theta <= 2 * np.pi / 3:
        return 1.0
    return 2.0 + 2.0 * np.cos(theta)


def load_instance(path) -> tuple[LatticeBasis, int]:
    """Read a JSON instance file: {"basis": [[...], ...], "k": int} or
    {"theta": float, "k": int} for the normalized 2d family."""
    with open(path) as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise ValueError("instance file must hold a JSON object")
    unknown = set(data) - {"basis", "theta", "k"}
    if unknown:
        raise ValueError(f"unknown instance keys: {sorted(unknown)}")
    if "k" not in data:
        raise ValueError("instance file missing 'k'")
    k = data["k"]
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"'k' must be a positive integer, got {k!r}")
    if ("basis" in data) == ("theta" in data):
        raise ValueError("instance file needs exactly one of 'basis' or 'theta'")
    if "basis" in data:
        return LatticeBasis(np.asarray(data["basis"], dtype=float)), k
    return basis_2d(float(data["theta"])), k
