"""Lorentz-invariant constraint-space coordinates.

The constraint space of a bound system is the 3-plane Minkowski-orthogonal
to its total momentum P. The maps below express a 4-vector in rectangular
coordinates referred to axes inside that plane; they reduce to the plain
spatial components in the system's rest frame and their lengths and mutual
angles are the same for all observers (components rotate between observers
by a Wigner rotation, so the frame-independent API is dot products).

Index bookkeeping: the stored tuples are contravariant, and every
contraction written here is the proper pairing P^mu d_mu = sum of spatial
products plus P4 times the time partial. With that reading the chain rule
reproduces the Kronecker-delta Jacobian exactly; reading the contraction
as a signed Minkowski dot of raw partial tuples does not.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .minkowski import BoundSystem, ComplexFourVector, FourVector, minkowski_dot


@dataclass(frozen=True)
class ConstraintVector:
    """Real 3-vector of constraint-space coordinates (position or momentum)."""

    k1: float
    k2: float
    k3: float

    def __post_init__(self):
        for name in ("k1", "k2", "k3"):
            object.__setattr__(self, name, float(getattr(self, name)))

    @property
    def components(self) -> np.ndarray:
        return np.array([self.k1, self.k2, self.k3])

    def squared_norm(self) -> float:
        return self.k1 * self.k1 + self.k2 * self.k2 + self.k3 * self.k3

    def dot(self, other: "ConstraintVector") -> float:
        return self.k1 * other.k1 + self.k2 * other.k2 + self.k3 * other.k3


@dataclass(frozen=True)
class ComplexConstraintVector:
    """Complex constraint-space 3-vector (Bargmann coordinates)."""

    k1: complex
    k2: complex
    k3: complex

    def __post_init__(self):
        for name in ("k1", "k2", "k3"):
            object.__setattr__(self, name, complex(getattr(self, name)))

    @property
    def components(self) -> np.ndarray:
        return np.array([self.k1, self.k2, self.k3])

    def square(self) -> complex:
        """Analytic square sum(k_i^2), without conjugation."""
        return self.k1 * self.k1 + self.k2 * self.k2 + self.k3 * self.k3


def _pull_to_plane(w, sys: BoundSystem):
    """Shared kernel of the three coordinate maps: w_i + P_i (P.w - M0 w4) / (M0 (M0 + P4))."""
    P = sys.P
    num = minkowski_dot(P, w) - sys.M0 * w.c4
    den = sys.M0 * (sys.M0 + P.c4)
    return w.spatial + P.spatial * (num / den)


def xi_from_x(x: FourVector, sys: BoundSystem) -> ConstraintVector:
    """Constraint-space position coordinates of a relative 4-position.

    Equals the spatial part of x boosted to the system's rest frame; in the
    rest frame itself xi_i = x_i exactly.
    """
    k = _pull_to_plane(x, sys)
    return ConstraintVector(k[0], k[1], k[2])


def pi_from_p(p: FourVector, sys: BoundSystem) -> ConstraintVector:
    """Constraint-space momentum coordinates; same map as xi_from_x applied to p."""
    k = _pull_to_plane(p, sys)
    return ConstraintVector(k[0], k[1], k[2])


def alpha_from_a(a: ComplexFourVector, sys: BoundSystem) -> ComplexConstraintVector:
    """Constraint-space coordinates of a Bargmann 4-space point (complex arithmetic, P real)."""
    k = _pull_to_plane(a, sys)
    return ComplexConstraintVector(k[0], k[1], k[2])


def xi_jacobian(sys: BoundSystem) -> np.ndarray:
    """Partial derivatives d xi_i / d x_mu of the coordinate map, shape (3, 4).

    The map is linear, so the Jacobian depends only on the system.
    """
    P = sys.P
    M0 = sys.M0
    c = 1.0 / (M0 * (M0 + P.c4))
    sp = P.spatial
    jac = np.empty((3, 4))
    jac[:, :3] = np.eye(3) + c * np.outer(sp, sp)
    jac[:, 3] = -sp / M0
    return jac


def _grad_components(grad4) -> np.ndarray:
    if isinstance(grad4, (FourVector, ComplexFourVector)):
        return grad4.components
    g = np.asarray(grad4)
    if g.shape != (4,):
        raise ValueError("grad4 must supply four partial derivatives")
    return g


def xi_directional_derivative(grad4, axis: int, sys: BoundSystem):
    """df/dxi_i from the 4-space partials of f at a point.

    grad4 holds the plain partials (df/dc1, ..., df/dc4) with respect to
    the stored contravariant components; axis is 1-based. Applied to the
    coordinate field xi_j this returns the Kronecker delta, and on fields
    obeying the transversality condition P^mu d_mu f = 0 it agrees with
    the reduced two-term form used by the explicit ladder operators.
    """
    if axis not in (1, 2, 3):
        raise ValueError("axis must be 1, 2 or 3")
    g = _grad_components(grad4)
    P = sys.P
    sp = P.spatial
    i = axis - 1
    radial = sp[0] * g[0] + sp[1] * g[1] + sp[2] * g[2]
    return g[i] + (sp[i] / sys.M0) * (radial / (sys.M0 + P.c4) + g[3])


def invariant_norm(w: FourVector, sys: BoundSystem) -> float:
    """Manifestly scalar squared length w.w + (P.w / M0)^2.

    Equals the squared norm of the corresponding constraint vector; the
    same expression serves 4-positions and 4-momenta.
    """
    pw = minkowski_dot(sys.P, w) / sys.M0
    return minkowski_dot(w, w) + pw * pw
