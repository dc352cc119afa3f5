"""Six-vertex R-matrix, Yang-Baxter checks and the braid-limit sigma matrix.

Pair indices run over (m1, m2) with m = +1/2 or -1/2, ordered
(+,+), (+,-), (-,+), (-,-). Matrix rows are the lower (m) pair and
columns the upper (n) pair. All entries with m1+m2 != n1+n2 are exactly
zero (charge conservation).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .qnum import QPoint, RealQPoint

UP = 0.5
DOWN = -0.5
PAIRS = ((UP, UP), (UP, DOWN), (DOWN, UP), (DOWN, DOWN))
_PAIR_INDEX = {p: i for i, p in enumerate(PAIRS)}


def _pair_index(pair) -> int:
    return _PAIR_INDEX[(float(pair[0]), float(pair[1]))]


@dataclass(frozen=True)
class RMatrix:
    u: float
    mu: float
    entries: np.ndarray = field(repr=False)

    def entry(self, m_pair, n_pair) -> float:
        return float(self.entries[_pair_index(m_pair), _pair_index(n_pair)])


@dataclass(frozen=True)
class SigmaMatrix:
    point: object
    entries: np.ndarray = field(repr=False)

    def entry(self, m_pair, n_pair) -> complex:
        return complex(self.entries[_pair_index(m_pair), _pair_index(n_pair)])


def r_matrix(u: float, mu: float) -> RMatrix:
    """Six-vertex R-matrix at spectral parameter u and anisotropy mu."""
    e = np.zeros((4, 4))
    e[0, 0] = e[3, 3] = math.sinh(mu - u)
    e[1, 1] = e[2, 2] = -math.sinh(u)
    e[1, 2] = math.exp(-u) * math.sinh(mu)
    e[2, 1] = math.exp(u) * math.sinh(mu)
    e.setflags(write=False)
    return RMatrix(u=u, mu=mu, entries=e)


def _sigma_entries(q, q_half) -> np.ndarray:
    e = np.zeros((4, 4), dtype=complex)
    e[0, 0] = e[3, 3] = 1.0
    e[1, 2] = e[2, 1] = -q_half
    e[2, 2] = 1.0 - q
    return e


def sigma_matrix(point) -> SigmaMatrix:
    """Braid-limit matrix: corners 1, middle [[0, -q^{1/2}], [-q^{1/2}, 1-q]]."""
    e = _sigma_entries(point.q, point.q_half)
    e.setflags(write=False)
    return SigmaMatrix(point=point, entries=e)


def x_operator(u: float, mu: float, i: int, strands: int) -> np.ndarray:
    """Yang-Baxter operator X_i(u) on the 2^strands spin space.

    Site i carries |n2><m1| and site i+1 carries |n1><m2|, weighted by
    the R entry for (m1 m2) -> (n1 n2). Strands are 1-based.
    """
    if not 1 <= i < strands:
        raise ValueError(f"site {i} out of range for {strands} strands")
    R = r_matrix(u, mu).entries
    dim = 2 ** strands
    out = np.zeros((dim, dim))
    eye_l = np.eye(2 ** (i - 1))
    eye_r = np.eye(2 ** (strands - i - 1))
    for mi, (m1, m2) in enumerate(PAIRS):
        for ni, (n1, n2) in enumerate(PAIRS):
            w = R[mi, ni]
            if w == 0.0:
                continue
            local = np.zeros((4, 4))
            # row = ket (n2, n1) on sites (i, i+1), column = bra (m1, m2)
            r = 2 * (n2 < 0) + (n1 < 0)
            c = 2 * (m1 < 0) + (m2 < 0)
            local[r, c] = w
            out += np.kron(eye_l, np.kron(local, eye_r))
    return out


def yang_baxter_residual(u: float, v: float, mu: float) -> float:
    """Max-norm defect of X1(u) X2(u+v) X1(v) = X2(v) X1(u+v) X2(u)."""
    x1u = x_operator(u, mu, 1, 3)
    x1v = x_operator(v, mu, 1, 3)
    x2u = x_operator(u, mu, 2, 3)
    x2v = x_operator(v, mu, 2, 3)
    x1m = x_operator(u + v, mu, 1, 3)
    x2m = x_operator(u + v, mu, 2, 3)
    lhs = x1u @ x2m @ x1v
    rhs = x2v @ x1m @ x2u
    return float(np.max(np.abs(lhs - rhs)))


def far_commutation_residual(u: float, v: float, mu: float) -> float:
    """Max-norm of [X1(u), X3(v)] on four strands; disjoint supports."""
    x1 = x_operator(u, mu, 1, 4)
    x3 = x_operator(v, mu, 3, 4)
    return float(np.max(np.abs(x1 @ x3 - x3 @ x1)))


def braid_limit_check(u_large: float, mu: float) -> float:
    """Deviation of the rescaled R(u) from the sigma matrix.

    R is divided by -e^{u-mu}/2, the dominant growth of sinh(mu-u) with
    the sign fixed so corner entries tend to +1. The limit definition
    transposes one index pair; with the printed tables the match is
    column-wise, sigma[m, (n1,n2)] = lim Rscaled[m, (n2,n1)], and forces
    the branch q^{1/2} = -e^{mu} for q = e^{2mu}.
    """
    scale = -math.exp(u_large - mu) / 2.0
    scaled = r_matrix(u_large, mu).entries / scale
    target = _sigma_entries(math.exp(2 * mu), -math.exp(mu)).real
    swap = [0, 2, 1, 3]  # (n1,n2) -> (n2,n1) in pair order
    dev = 0.0
    for mi in range(4):
        for ni in range(4):
            dev = max(dev, abs(scaled[mi, swap[ni]] - target[mi, ni]))
    return dev


def sigma_spectrum(point) -> list[complex]:
    """Eigenvalues of sigma, deterministically ordered; {1, 1, 1, -q}."""
    vals = np.linalg.eigvals(sigma_matrix(point).entries)
    return sorted((complex(v) for v in vals), key=lambda z: (z.real, z.imag))


def coupled_eigenvectors(point: RealQPoint) -> np.ndarray:
    """Orthonormal eigenbasis of sigma at real q, columns ordered (1, 1, -q, 1).

    Column 2 is the q-deformed singlet (0, 1, q^{1/2}, 0)/sqrt(1+q) with
    eigenvalue -q; column 1 is the orthogonal middle-block vector with
    eigenvalue 1; the corner states are untouched by sigma.
    """
    q = point.q
    rh = point.q_half
    norm = math.sqrt(1.0 + q)
    v = np.zeros((4, 4))
    v[0, 0] = 1.0
    v[1, 1] = rh / norm
    v[2, 1] = -1.0 / norm
    v[1, 2] = 1.0 / norm
    v[2, 2] = rh / norm
    v[3, 3] = 1.0
    return v
