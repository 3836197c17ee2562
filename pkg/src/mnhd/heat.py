"""Heat kernels H_t = exp(-tL), the normalized ratio r_t(u,v) =
H_t(u,v)/H_t(u,u), the derivative-sign function

    h_{u,v}(t) = H_t'(u,v) H_t(u,u) - H_t(u,v) H_t'(u,u),

and its expansion into exponential terms with Delta coefficients

    Delta_i(u,v)  = P_i(u,u) - P_i(u,v)
    Delta_ij(u,v) = P_i(u,v) P_j(u,u) - P_j(u,v) P_i(u,u).

r_t is nondecreasing in t for every pair u != v exactly when h_{u,v} >= 0 on
[0, inf); the certificate machinery in `certify` reasons about the exact
exponential coefficients produced here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import NegativeTimeError, SameVertexError
from .quadratic import QuadMatrix, QuadValue
from .spectral import Eigensystem, FourSpectrum


def heat_at(es: Eigensystem, t: float) -> np.ndarray:
    """H_t = sum_lambda exp(-t*lambda) P_lambda as a float matrix.

    At t = 0 this is the identity exactly (sum of all projectors)."""
    if t < 0:
        raise NegativeTimeError(f"t={t} < 0")
    if t == 0:
        return np.eye(es.n)
    H = np.zeros((es.n, es.n))
    for value, proj in es.float_groups():
        H += np.exp(-t * value) * proj
    return H


def heat_stack(es: Eigensystem, grid: Sequence[float]) -> np.ndarray:
    """H_t for every t in grid, stacked along axis 0."""
    grid = np.asarray(grid, dtype=float)
    if (grid < 0).any():
        raise NegativeTimeError("grid contains negative times")
    values = np.array([v for v, _ in es.float_groups()])
    projs = np.stack([p for _, p in es.float_groups()])
    weights = np.exp(-np.outer(grid, values))  # (T, k)
    H = np.einsum("tk,kij->tij", weights, projs)
    H[grid == 0] = np.eye(es.n)
    return H


def ratio(es: Eigensystem, u: int, v: int, t: float) -> float:
    """r_t(u,v) = H_t(u,v) / H_t(u,u); zero at t = 0, tends to 1."""
    if u == v:
        raise SameVertexError(f"u = v = {u}")
    H = heat_at(es, t)
    huu = H[u, u]
    assert huu >= 1.0 / es.n - 1e-9  # P0 diagonal plus nonnegative decay terms
    return H[u, v] / huu


def ratio_curve(es: Eigensystem, u: int, v: int,
                grid: Sequence[float]) -> list[tuple[float, float]]:
    if u == v:
        raise SameVertexError(f"u = v = {u}")
    H = heat_stack(es, grid)
    return [(float(t), float(H[i, u, v] / H[i, u, u]))
            for i, t in enumerate(grid)]


def default_time_grid(es: Eigensystem, points: int = 60) -> np.ndarray:
    """t = 0 followed by `points` log-spaced times from 1e-3 up to
    max(50, 30/lambda_min), far enough that exp(-lambda_min*t_max) < 1e-12."""
    t_max = max(50.0, 30.0 / es.smallest_positive())
    return np.concatenate([[0.0], np.geomspace(1e-3, t_max, points)])


def write_curve_csv(fp, curve: Sequence[tuple[float, float]]) -> None:
    fp.write("t,r\n")
    for t, r in curve:
        fp.write(f"{t:.17g},{r:.17g}\n")


# ---------------------------------------------------------------------------
# Delta quantities


@dataclass(frozen=True)
class DeltaSet:
    """The six Delta quantities of one ordered pair (u, v), exact or float."""

    d1: QuadValue | float
    d2: QuadValue | float
    d3: QuadValue | float
    d12: QuadValue | float
    d13: QuadValue | float
    d23: QuadValue | float

    def as_tuple(self):
        return (self.d1, self.d2, self.d3, self.d12, self.d13, self.d23)

    def as_floats(self) -> tuple[float, ...]:
        return tuple(float(x) for x in self.as_tuple())


def delta_set(projectors: Sequence[QuadMatrix] | Sequence[np.ndarray],
              u: int, v: int) -> DeltaSet:
    """Deltas for the pair (u, v) from the three nonzero-eigenvalue
    projectors, exact when the projectors are exact."""
    if isinstance(projectors[0], QuadMatrix):
        uu = [P.entry(u, u) for P in projectors]
        uv = [P.entry(u, v) for P in projectors]
    else:
        uu = [P[u, u] for P in projectors]
        uv = [P[u, v] for P in projectors]
    d = [puu - puv for puu, puv in zip(uu, uv)]
    cross = [uv[i] * uu[j] - uv[j] * uu[i]
             for i, j in ((0, 1), (0, 2), (1, 2))]
    return DeltaSet(d[0], d[1], d[2], cross[0], cross[1], cross[2])


def h_terms_exact(fs: FourSpectrum, ds: DeltaSet, n: int
                  ) -> dict[QuadValue, QuadValue]:
    """h_{u,v}(t) = sum coeff * exp(-rate * t) as a map rate -> coefficient,
    with coinciding rates merged (lam1 + lam2 = lam3 in the bipartite case).
    Zero coefficients are dropped.
    """
    inv_n = QuadValue(Fraction(1, n))
    lams = fs.nonzero()
    raw = [
        (lams[0], lams[0] * inv_n * ds.d1),
        (lams[1], lams[1] * inv_n * ds.d2),
        (lams[2], lams[2] * inv_n * ds.d3),
        (lams[0] + lams[1], (lams[1] - lams[0]) * ds.d12),
        (lams[0] + lams[2], (lams[2] - lams[0]) * ds.d13),
        (lams[1] + lams[2], (lams[2] - lams[1]) * ds.d23),
    ]
    terms: dict[QuadValue, QuadValue] = {}
    for rate, coeff in raw:
        terms[rate] = terms.get(rate, QuadValue(0)) + coeff
    return {rate: c for rate, c in terms.items() if c != 0}


def h_terms_from_eigensystem(es: Eigensystem, u: int, v: int
                             ) -> dict[QuadValue, QuadValue]:
    """The same exponential-coefficient map computed from the derivative
    product H'(u,v)H(u,u) - H(u,v)H'(u,u) with H' = -sum lam exp(-t*lam) P.
    Independent of the Delta-based expansion; used as its cross-check."""
    assert es.mode == "exact"
    entries = []
    for g in es.groups:
        entries.append((g.value, g.projector.entry(u, u), g.projector.entry(u, v)))
    terms: dict[QuadValue, QuadValue] = {}
    for lam_i, uu_i, uv_i in entries:
        for lam_j, uu_j, uv_j in entries:
            coeff = lam_i * (uu_i * uv_j - uv_i * uu_j)
            if coeff != 0:
                rate = lam_i + lam_j
                terms[rate] = terms.get(rate, QuadValue(0)) + coeff
    return {rate: c for rate, c in terms.items() if c != 0}


def h_function(fs: FourSpectrum, ds: DeltaSet, n: int, t: float) -> float:
    """Float evaluation of the exponential expansion of h_{u,v} at time t."""
    if isinstance(ds.d1, QuadValue):
        terms = h_terms_exact(fs, ds, n)
        return sum(float(c) * np.exp(-float(rate) * t) for rate, c in terms.items())
    lams = [float(x) for x in fs.nonzero()]
    deltas = ds.as_floats()
    total = sum(lams[i] / n * deltas[i] * np.exp(-t * lams[i]) for i in range(3))
    for (i, j), dij in zip(((0, 1), (0, 2), (1, 2)), deltas[3:]):
        total += (lams[j] - lams[i]) * dij * np.exp(-t * (lams[i] + lams[j]))
    return total


def h_rate(es: Eigensystem, L: np.ndarray, u: int, v: int, t: float) -> float:
    """h_{u,v}(t) directly from the derivative product, using H' = -L H."""
    H = heat_at(es, t)
    Hp = -(np.asarray(L, dtype=float) @ H)
    return Hp[u, v] * H[u, u] - H[u, v] * Hp[u, u]
