"""Eigendecomposition of symmetric integer matrices, numerically (cyclic
Jacobi) and exactly (minimal polynomial plus Lagrange projectors over a
quadratic field), spectrum grouping, projector closed forms, and the
three-case classification of regular four-eigenvalue spectra.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import (AmbiguousGapError, DegenerateParamsError,
                     NoCaseMatchesError, NoConvergenceError,
                     NonQuadraticEigenvaluesError, NonSymmetricError,
                     NotFourEigenvaluesError, RepeatedEigenvalueError)
from .quadratic import QuadMatrix, QuadValue

DEFAULT_TOL = 1e-9
JACOBI_SWEEP_CAP = 100


# ---------------------------------------------------------------------------
# numeric path


def group_spectrum(raw: Sequence[float], tol: float = DEFAULT_TOL) -> list[tuple[float, int]]:
    """Greedily cluster a sorted eigenvalue list into distinct values with
    multiplicities.  Consecutive values within tol*max(1, |value|) merge; the
    representative is the cluster mean.  A gap falling strictly between that
    threshold and 10x of it raises AmbiguousGapError.
    """
    values = list(raw)
    if values != sorted(values):
        raise ValueError("eigenvalue list must be sorted")
    groups: list[tuple[float, int]] = []
    cluster: list[float] = []
    for x in values:
        if not cluster:
            cluster = [x]
            continue
        gap = x - cluster[-1]
        scale = tol * max(1.0, abs(x))
        if gap <= scale:
            cluster.append(x)
        elif gap < 10.0 * scale:
            raise AmbiguousGapError(
                f"gap {gap:.3e} near threshold {scale:.3e}; tighten tolerance")
        else:
            groups.append((sum(cluster) / len(cluster), len(cluster)))
            cluster = [x]
    if cluster:
        groups.append((sum(cluster) / len(cluster), len(cluster)))
    return groups


@dataclass(frozen=True)
class EigenGroup:
    value: float | QuadValue
    multiplicity: int
    projector: np.ndarray | QuadMatrix


@dataclass(frozen=True)
class Eigensystem:
    n: int
    groups: tuple[EigenGroup, ...]
    mode: str  # "numeric" or "exact"

    def values(self) -> list[float | QuadValue]:
        return [g.value for g in self.groups]

    def float_groups(self) -> list[tuple[float, np.ndarray]]:
        out = []
        for g in self.groups:
            value = float(g.value)
            proj = g.projector.to_float() if isinstance(g.projector, QuadMatrix) \
                else g.projector
            out.append((value, proj))
        return out

    def smallest_positive(self) -> float:
        return min(float(g.value) for g in self.groups if float(g.value) > 1e-12)


def jacobi_eigendecompose(M: np.ndarray, tol: float = DEFAULT_TOL,
                          group_tol: float = DEFAULT_TOL,
                          max_sweeps: int = JACOBI_SWEEP_CAP) -> Eigensystem:
    """Cyclic Jacobi diagonalization of a symmetric matrix.

    Sweeps run until every off-diagonal magnitude is below machine level
    (which in particular satisfies the contract off < tol*||M||_F); if the cap
    is hit first and the contract is unmet, NoConvergenceError is raised.
    Eigenvalues are grouped with group_spectrum and each group's projector is
    assembled from eigenvector outer products.
    """
    M = np.asarray(M, dtype=np.float64)
    n = M.shape[0]
    if M.shape != (n, n):
        raise NonSymmetricError("matrix is not square")
    norm = float(np.linalg.norm(M, "fro")) or 1.0
    if np.max(np.abs(M - M.T)) > tol * norm:
        raise NonSymmetricError("matrix is not symmetric within tolerance")
    A = M.copy()
    V = np.eye(n)
    target = max(1e-15 * norm, 1e-300)
    skip = target / max(n * n, 1)
    converged = False
    for _ in range(max_sweeps):
        if np.max(np.abs(np.triu(A, 1))) < target:
            converged = True
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if abs(apq) < skip:
                    continue
                theta = (A[q, q] - A[p, p]) / (2.0 * apq)
                if theta == 0.0:
                    t = 1.0
                else:
                    t = np.sign(theta) / (abs(theta) + np.hypot(theta, 1.0))
                c = 1.0 / np.hypot(t, 1.0)
                s = t * c
                rp, rq = A[p, :].copy(), A[q, :].copy()
                A[p, :] = c * rp - s * rq
                A[q, :] = s * rp + c * rq
                cp, cq = A[:, p].copy(), A[:, q].copy()
                A[:, p] = c * cp - s * cq
                A[:, q] = s * cp + c * cq
                vp, vq = V[:, p].copy(), V[:, q].copy()
                V[:, p] = c * vp - s * vq
                V[:, q] = s * vp + c * vq
    if not converged and np.max(np.abs(np.triu(A, 1))) >= tol * norm:
        raise NoConvergenceError(f"off-diagonal still >= {tol:g}*||M|| after "
                                 f"{max_sweeps} sweeps")
    eigenvalues = np.diag(A).copy()
    order = np.argsort(eigenvalues)
    eigenvalues = eigenvalues[order]
    V = V[:, order]
    groups = []
    start = 0
    for value, mult in group_spectrum(list(eigenvalues), group_tol):
        block = V[:, start:start + mult]
        groups.append(EigenGroup(value, mult, block @ block.T))
        start += mult
    return Eigensystem(n, tuple(groups), "numeric")


# ---------------------------------------------------------------------------
# exact path


def minimal_polynomial(L: np.ndarray, max_degree: int | None = None) -> list[int]:
    """Monic integer minimal polynomial of an integer matrix, as ascending
    coefficients [c0, ..., c_{k-1}, 1].  The degree equals the number of
    distinct eigenvalues when L is symmetric.

    Raises NotFourEigenvaluesError once the degree provably exceeds
    max_degree (the powers I, L, ..., L^max_degree are independent).
    """
    n = L.shape[0]
    cap = n if max_degree is None else min(max_degree, n)
    power = np.eye(n, dtype=object)
    Lobj = np.asarray(L, dtype=object)
    # row-reduced basis of vectorized powers, with coordinate bookkeeping
    basis: list[tuple[np.ndarray, list[Fraction], int]] = []
    for k in range(cap + 1):
        frac = np.array([Fraction(int(x)) for x in power.reshape(-1)],
                        dtype=object)
        coords = [Fraction(0)] * (cap + 1)
        coords[k] = Fraction(1)
        for bvec, bcoords, piv in basis:
            if frac[piv]:
                factor = frac[piv] / bvec[piv]
                frac = frac - factor * bvec
                for i in range(k):
                    if bcoords[i]:
                        coords[i] -= factor * bcoords[i]
        pivot = next((i for i, x in enumerate(frac) if x), None)
        if pivot is None:
            # dependency found; monic since earlier reductions leave coords[k]
            coeffs = coords[:k + 1]
            assert coeffs[k] == 1 and all(c.denominator == 1 for c in coeffs)
            return [int(c) for c in coeffs]
        basis.append((frac, coords, pivot))
        if k < cap:
            power = power @ Lobj
    raise NotFourEigenvaluesError(f"minimal polynomial degree exceeds {cap}")


def _integer_roots(coeffs: list[int]) -> list[int]:
    """Integer roots of a monic integer polynomial (ascending coefficients)."""
    c0 = coeffs[0]
    if c0 == 0:
        return [0] + _integer_roots(coeffs[1:]) if len(coeffs) > 1 else [0]
    roots = []
    limit = abs(c0)
    for cand in range(-limit, limit + 1):
        if cand == 0 or c0 % cand:
            continue
        acc = 0
        for c in reversed(coeffs):
            acc = acc * cand + c
        if acc == 0:
            roots.append(cand)
    return roots


def _deflate(coeffs: list[int], root: int) -> list[int]:
    """Divide a monic polynomial by (x - root); exact synthetic division."""
    out = []
    acc = 0
    for c in reversed(coeffs):
        acc = acc * root + c if out else c
        out.append(acc)
    out.pop()  # remainder, zero by assumption
    return list(reversed(out))


def exact_eigenvalues(L: np.ndarray) -> list[QuadValue]:
    """Distinct eigenvalues of an integer Laplacian with exactly four of them,
    as exact QuadValues over a single radicand.

    Raises NotFourEigenvaluesError when the count differs from four and
    NonQuadraticEigenvaluesError when the nonzero eigenvalues are cubic
    irrationalities (classification case III).
    """
    mu = minimal_polynomial(L, max_degree=4)
    if len(mu) != 5:
        raise NotFourEigenvaluesError(
            f"{len(mu) - 1} distinct eigenvalues, need 4")
    if mu[0] != 0:
        raise NotFourEigenvaluesError("0 is not an eigenvalue (graph input?)")
    cubic = mu[1:]  # monic cubic with the three nonzero eigenvalues
    roots = _integer_roots(cubic)
    if len(roots) == 3:
        values = [QuadValue(0)] + [QuadValue(r) for r in sorted(roots)]
        return sorted(values)
    if len(roots) == 1:
        quad = _deflate(cubic, roots[0])  # monic x^2 + s x + p
        p, s = quad[0], quad[1]
        disc = s * s - 4 * p
        if disc <= 0:
            raise NonQuadraticEigenvaluesError("conjugate pair is not real")
        half = QuadValue(Fraction(-s, 2))
        root = QuadValue(0, Fraction(1, 2), disc)
        values = [QuadValue(0), QuadValue(roots[0]), half - root, half + root]
        return sorted(values)
    raise NonQuadraticEigenvaluesError(
        "nonzero eigenvalues are roots of an irreducible cubic")


def lagrange_projector(L: np.ndarray, sigma: Sequence[QuadValue], i: int) -> QuadMatrix:
    """Spectral projector onto the sigma[i]-eigenspace as the Lagrange
    polynomial prod_{j != i} (L - sigma[j] I) / (sigma[i] - sigma[j]),
    evaluated in exact arithmetic.  sigma must be the exact distinct spectrum.
    """
    if len(set(sigma)) != len(sigma):
        raise RepeatedEigenvalueError("sigma contains repeated eigenvalues")
    m = 0
    for lam in sigma:
        if lam.b != 0:
            m = lam.m
    P = QuadMatrix.identity(L.shape[0], m)
    base = QuadMatrix.from_int(L, m)
    denominator = QuadValue(1)
    for j, lam in enumerate(sigma):
        if j == i:
            continue
        P = P @ (base - QuadMatrix.identity(L.shape[0], m).scale(lam))
        denominator = denominator * (sigma[i] - lam)
        P = P.reduce()
    return P.scale(denominator.inverse()).reduce()


def exact_eigensystem(L: np.ndarray) -> Eigensystem:
    """Exact eigensystem of a four-eigenvalue integer Laplacian: QuadValue
    eigenvalues, Lagrange projectors, multiplicities from projector traces."""
    sigma = exact_eigenvalues(L)
    groups = []
    for i, lam in enumerate(sigma):
        P = lagrange_projector(L, sigma, i)
        mult = P.trace()
        assert mult.is_integer
        groups.append(EigenGroup(lam, int(mult.as_fraction()), P))
    assert sum(g.multiplicity for g in groups) == L.shape[0]
    return Eigensystem(L.shape[0], tuple(groups), "exact")


# ---------------------------------------------------------------------------
# the four-eigenvalue closed form


@dataclass(frozen=True)
class FourSpectrum:
    """Nonzero eigenvalues lam1 < lam2 < lam3 plus the projector constants
    c_i = 1 / prod_{j != i} (lam_i - lam_j) of the quadratic closed form."""

    lam0: QuadValue
    lam1: QuadValue
    lam2: QuadValue
    lam3: QuadValue
    c1: QuadValue
    c2: QuadValue
    c3: QuadValue

    @classmethod
    def from_eigenvalues(cls, lam1: QuadValue, lam2: QuadValue,
                         lam3: QuadValue) -> "FourSpectrum":
        c1 = ((lam1 - lam2) * (lam1 - lam3)).inverse()
        c2 = ((lam2 - lam1) * (lam2 - lam3)).inverse()
        c3 = ((lam3 - lam1) * (lam3 - lam2)).inverse()
        return cls(QuadValue(0), lam1, lam2, lam3, c1, c2, c3)

    @classmethod
    def from_design(cls, n: int, d: int, lam: int) -> "FourSpectrum":
        """Constants in incidence-graph form: c1 = 1/(2*lam2*sqrt(d-lam)),
        c2 = -1/(2*lam1*sqrt(d-lam)), c3 = 1/(lam1*lam2)."""
        if d <= lam:
            raise DegenerateParamsError(f"d={d} <= lambda={lam}")
        s = QuadValue.sqrt_int(d - lam)
        lam1, lam2, lam3 = QuadValue(d) - s, QuadValue(d) + s, QuadValue(2 * d)
        c1 = (2 * lam2 * s).inverse()
        c2 = -((2 * lam1 * s).inverse())
        c3 = (lam1 * lam2).inverse()
        return cls(QuadValue(0), lam1, lam2, lam3, c1, c2, c3)

    def nonzero(self) -> tuple[QuadValue, QuadValue, QuadValue]:
        return (self.lam1, self.lam2, self.lam3)

    def constants(self) -> tuple[QuadValue, QuadValue, QuadValue]:
        return (self.c1, self.c2, self.c3)


def closed_form_projectors(L: np.ndarray, n: int, d: int, lam: int
                           ) -> tuple[FourSpectrum, QuadMatrix, QuadMatrix, QuadMatrix]:
    """Exact projectors of a d-regular bipartite four-eigenvalue Laplacian:

        P_i = c_i * (L^2 - (lam_j + lam_k) L + lam_j lam_k (I - P0))

    with P0 = J/n.  Cross-checked against lagrange_projector by the callers.
    """
    fs = FourSpectrum.from_design(n, d, lam)
    m = fs.lam1.m
    L2 = QuadMatrix.from_int(np.asarray(L, dtype=object) @ np.asarray(L, dtype=object), m)
    Lq = QuadMatrix.from_int(L, m)
    eye = QuadMatrix.identity(n, m)
    complement = eye - QuadMatrix.constant(n, QuadValue(Fraction(1, n)), m)
    lams = fs.nonzero()
    out = []
    for i in range(3):
        j, k = [x for x in range(3) if x != i]
        term = L2 - Lq.scale(lams[j] + lams[k]) + complement.scale(lams[j] * lams[k])
        out.append(term.scale(fs.constants()[i]).reduce())
    return fs, out[0], out[1], out[2]


# ---------------------------------------------------------------------------
# spectrum classification (regular graphs, four distinct eigenvalues)


class VanDamCase(enum.Enum):
    CASE_I = "I"
    CASE_II = "II"
    CASE_III = "III"


def _is_integral(value: float | QuadValue, tol: float) -> bool:
    if isinstance(value, QuadValue):
        return value.is_integer
    return abs(value - round(value)) <= tol


def classify_spectrum(spectrum: Sequence[tuple[float | QuadValue, int]],
                      n: int, d: int, tol: float = DEFAULT_TOL) -> VanDamCase:
    """Classify a regular four-eigenvalue Laplacian spectrum:

    I   all four eigenvalues integral;
    II  exactly two integral plus a conjugate surd pair of equal multiplicity;
    III only 0 integral, the rest sharing multiplicity (n-1)/3 = m with
        d = m or d = 2m.
    """
    if len(spectrum) != 4:
        raise NoCaseMatchesError(f"need 4 distinct eigenvalues, got {len(spectrum)}")
    integral = [(v, mult) for v, mult in spectrum if _is_integral(v, tol)]
    others = [(v, mult) for v, mult in spectrum if not _is_integral(v, tol)]
    if len(integral) == 4:
        return VanDamCase.CASE_I
    if len(integral) == 2 and len(others) == 2:
        (v1, m1), (v2, m2) = others
        if m1 == m2:
            if isinstance(v1, QuadValue) and isinstance(v2, QuadValue):
                conjugate = v1.conjugate() == v2
            else:
                conjugate = abs(float(v1) + float(v2) - round(float(v1) + float(v2))) <= 2 * tol
            if conjugate:
                return VanDamCase.CASE_II
    if len(integral) == 1:
        v0, m0 = integral[0]
        mults = {mult for _, mult in others}
        if abs(float(v0)) <= tol and m0 == 1 and len(mults) == 1:
            mult = mults.pop()
            if 3 * mult == n - 1 and d in (mult, 2 * mult):
                return VanDamCase.CASE_III
    raise NoCaseMatchesError("spectrum fits none of the three cases")
