"""Shared fixtures and independent reference oracles for the test suite.

The reference implementations here deliberately take different routes from
the library (bisection-based projections, exhaustive enumeration, direct
arithmetic) so the tests certify values rather than echo them.
"""

from __future__ import annotations

import itertools

import numpy as np
import pytest

from spo_bounds.geometry import VertexPolytope


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


def square_region() -> VertexPolytope:
    return VertexPolytope([[1.0, 1.0], [1.0, -1.0], [-1.0, 1.0], [-1.0, -1.0]])


# ---------------------------------------------------------------------------
# lq-ball reference oracle: projected gradient with bisection projections
# ---------------------------------------------------------------------------

def project_lq_ball(y: np.ndarray, q: float, r: float) -> np.ndarray:
    """Euclidean projection of y onto {z : ||z||_q <= r} via nested bisection
    on the KKT system z + lam * q * z**(q-1) = |y| (coordinates >= 0)."""
    y = np.asarray(y, dtype=float)
    if np.linalg.norm(y, ord=q) <= r:
        return y.copy()
    ay = np.abs(y)

    def z_of(lam: float) -> np.ndarray:
        lo = np.zeros_like(ay)
        hi = ay.copy()
        for _ in range(60):
            mid = 0.5 * (lo + hi)
            too_big = mid + lam * q * mid ** (q - 1.0) > ay
            hi = np.where(too_big, mid, hi)
            lo = np.where(too_big, lo, mid)
        return 0.5 * (lo + hi)

    lam_lo, lam_hi = 0.0, 1.0
    while np.linalg.norm(z_of(lam_hi), ord=q) > r:
        lam_hi *= 2.0
    for _ in range(60):
        lam = 0.5 * (lam_lo + lam_hi)
        if np.linalg.norm(z_of(lam), ord=q) > r:
            lam_lo = lam
        else:
            lam_hi = lam
    return np.sign(y) * z_of(0.5 * (lam_lo + lam_hi))


def pgd_lq_minimize(c: np.ndarray, q: float, r: float, center: np.ndarray,
                    iters: int = 60) -> np.ndarray:
    """Minimize c @ w over the lq ball by projected gradient with Polyak
    steps (the optimal value c @ center - r * ||c||_{q'} is known).  Any
    iterate upper-bounds the optimum, so it is a one-sided reference."""
    c = np.asarray(c, dtype=float)
    qp = q / (q - 1.0)
    f_star = -r * float(np.linalg.norm(c, ord=qp))
    u = np.zeros_like(c)
    grad_sq = float(c @ c)
    for _ in range(iters):
        gap = float(c @ u) - f_star
        if gap <= 0:
            break
        u = project_lq_ball(u - (gap / grad_sq) * c, q, r)
    return center + u


# ---------------------------------------------------------------------------
# exhaustive enumeration oracles
# ---------------------------------------------------------------------------

def enumerate_paths_brute(nodes: int, arcs, source: int, sink: int) -> list[list[int]]:
    """All source->sink arc-index paths by plain DFS (independent of the
    library's enumerator)."""
    out: list[list[int]] = []

    def walk(v, prefix, visited):
        if v == sink:
            out.append(list(prefix))
            return
        for idx, (t, h) in enumerate(arcs):
            if t == v and h not in visited:
                walk(h, prefix + [idx], visited | {h})

    walk(source, [], {source})
    return out


def rademacher_exact(losses: np.ndarray) -> float:
    """Exact E_sigma[max_h (1/n) sum_i sigma_i * losses[h, i]] by enumerating
    all sign vectors (n <= 16)."""
    H, n = losses.shape
    total = 0.0
    for signs in itertools.product((-1.0, 1.0), repeat=n):
        total += max(float(np.dot(signs, losses[h])) for h in range(H)) / n
    return total / 2 ** n
