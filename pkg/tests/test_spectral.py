import math
from fractions import Fraction

import numpy as np
import pytest

from mnhd.errors import (AmbiguousGapError, DegenerateParamsError,
                         NoCaseMatchesError, NonQuadraticEigenvaluesError,
                         NonSymmetricError, NotFourEigenvaluesError,
                         RepeatedEigenvalueError)
from mnhd.graphs import (adjacency, build_graph, cayley_s3, crown, cycle,
                         design_742_incidence, facts, fano_incidence,
                         laplacian, wheel6)
from mnhd.quadratic import QuadValue
from mnhd.spectral import (FourSpectrum, VanDamCase, classify_spectrum,
                           closed_form_projectors, exact_eigensystem,
                           exact_eigenvalues, group_spectrum,
                           jacobi_eigendecompose, lagrange_projector,
                           minimal_polynomial)

F = Fraction


# -- group_spectrum ----------------------------------------------------------


def test_group_all_equal():
    assert group_spectrum([2.0, 2.0, 2.0]) == [(2.0, 3)]


def test_group_below_tolerance():
    assert group_spectrum([0.0, 1e-12], tol=1e-9) == [(5e-13, 2)]


def test_group_ambiguous_gap():
    with pytest.raises(AmbiguousGapError):
        group_spectrum([0.0, 5e-9], tol=1e-9)


def test_group_requires_sorted():
    with pytest.raises(ValueError):
        group_spectrum([1.0, 0.0])


def test_group_heawood_multiplicities():
    w = sorted(np.linalg.eigvalsh(laplacian(fano_incidence()).astype(float)))
    groups = group_spectrum(w)
    assert [mult for _, mult in groups] == [1, 6, 6, 1]
    expected = [0.0, 3 - math.sqrt(2), 3 + math.sqrt(2), 6.0]
    assert np.allclose([v for v, _ in groups], expected)


# -- jacobi ------------------------------------------------------------------


def test_jacobi_crown5_spectrum():
    es = jacobi_eigendecompose(laplacian(crown(5)))
    values = [v for v, _ in ((g.value, g.multiplicity) for g in es.groups)]
    assert np.allclose(values, [0, 3, 5, 8], atol=1e-9)
    assert [g.multiplicity for g in es.groups] == [1, 4, 4, 1]


def test_jacobi_c7_multiplicities_vs_circulant_formula():
    es = jacobi_eigendecompose(laplacian(cycle(7)))
    assert [g.multiplicity for g in es.groups] == [1, 2, 2, 2]
    expected = sorted({round(2 - 2 * math.cos(2 * math.pi * k / 7), 12)
                       for k in range(7)})
    assert np.allclose([float(g.value) for g in es.groups], expected, atol=1e-9)


def test_jacobi_identity_matrix():
    es = jacobi_eigendecompose(np.eye(5))
    assert len(es.groups) == 1
    g = es.groups[0]
    assert g.value == pytest.approx(1.0) and g.multiplicity == 5
    assert np.allclose(g.projector, np.eye(5))


def test_jacobi_rejects_nonsymmetric():
    with pytest.raises(NonSymmetricError):
        jacobi_eigendecompose(np.array([[0.0, 1.0], [0.0, 0.0]]))
    with pytest.raises(NonSymmetricError):
        jacobi_eigendecompose(np.zeros((2, 3)))


def test_jacobi_agrees_with_library_solver(builtins, numeric_systems):
    for name, g in builtins.items():
        es = numeric_systems[name]
        mine = np.concatenate([[float(grp.value)] * grp.multiplicity
                               for grp in es.groups])
        ref = np.linalg.eigvalsh(laplacian(g).astype(float))
        assert np.allclose(np.sort(mine), ref, atol=1e-9), name


def test_numeric_projector_identities(builtins, numeric_systems):
    for name, g in builtins.items():
        L = laplacian(g)
        es = numeric_systems[name]
        total = sum(p for _, p in es.float_groups())
        assert np.max(np.abs(total - np.eye(g.n))) < 1e-9, name
        recon = sum(v * p for v, p in es.float_groups())
        assert np.max(np.abs(recon - L)) < 1e-9, name
        for i, (_, Pi) in enumerate(es.float_groups()):
            assert np.max(np.abs(Pi @ Pi - Pi)) < 1e-9, name
            for j, (_, Pj) in enumerate(es.float_groups()):
                if i != j:
                    assert np.max(np.abs(Pi @ Pj)) < 1e-9, name


def test_laplacian_adjacency_spectra_compatible(builtins, numeric_systems):
    for name, g in builtins.items():
        d = facts(g).regular_degree
        if d is None:
            continue
        sl = sorted(float(grp.value) for grp in numeric_systems[name].groups)
        sa = sorted(float(grp.value)
                    for grp in jacobi_eigendecompose(adjacency(g)).groups)
        assert np.allclose(sl, sorted(d - x for x in sa), atol=1e-8), name


# -- minimal polynomial and exact eigenvalues --------------------------------


def test_minimal_polynomial_k2():
    mu = minimal_polynomial(np.array([[1, -1], [-1, 1]]))
    assert mu == [0, -2, 1]  # x(x - 2)


def test_minimal_polynomial_c7():
    assert minimal_polynomial(laplacian(cycle(7))) == [0, -7, 14, -7, 1]


def test_minimal_polynomial_crown5():
    # x(x-3)(x-5)(x-8) = x^4 - 16x^3 + 79x^2 - 120x
    assert minimal_polynomial(laplacian(crown(5))) == [0, -120, 79, -16, 1]


def test_minimal_polynomial_degree_cap():
    path5 = build_graph(5, [(i, i + 1) for i in range(4)])  # 5 distinct values
    with pytest.raises(NotFourEigenvaluesError):
        minimal_polynomial(laplacian(path5), max_degree=4)


def test_exact_eigenvalues_design_742():
    sigma = exact_eigenvalues(laplacian(design_742_incidence()))
    assert sigma == [QuadValue(0), QuadValue(4, -1, 2), QuadValue(4, 1, 2),
                     QuadValue(8)]


def test_exact_eigenvalues_wheel():
    sigma = exact_eigenvalues(laplacian(wheel6()))
    assert sigma == [QuadValue(0), QuadValue(F(7, 2), F(-1, 2), 5),
                     QuadValue(F(7, 2), F(1, 2), 5), QuadValue(6)]


def test_exact_eigenvalues_cayley():
    sigma = exact_eigenvalues(laplacian(cayley_s3()))
    assert sigma == [QuadValue(0), QuadValue(2), QuadValue(3), QuadValue(5)]


def test_exact_eigenvalues_c7_not_quadratic():
    with pytest.raises(NonQuadraticEigenvaluesError):
        exact_eigenvalues(laplacian(cycle(7)))


def test_exact_eigenvalues_wrong_count():
    with pytest.raises(NotFourEigenvaluesError):
        exact_eigenvalues(np.array([[1, -1], [-1, 1]]))


def test_exact_eigensystem_multiplicities():
    es = exact_eigensystem(laplacian(fano_incidence()))
    assert [g.multiplicity for g in es.groups] == [1, 6, 6, 1]
    assert es.mode == "exact"


# -- projectors --------------------------------------------------------------


def test_lagrange_projector_k2():
    L = np.array([[1, -1], [-1, 1]])
    sigma = [QuadValue(0), QuadValue(2)]
    P = lagrange_projector(L, sigma, 1)
    assert P.to_lists() == [[QuadValue(F(1, 2)), QuadValue(F(-1, 2))],
                            [QuadValue(F(-1, 2)), QuadValue(F(1, 2))]]


def test_lagrange_projector_zero_eigenspace_is_constants():
    g = crown(5)
    sigma = exact_eigenvalues(laplacian(g))
    P0 = lagrange_projector(laplacian(g), sigma, 0)
    assert all(P0.entry(i, j) == QuadValue(F(1, g.n))
               for i in range(g.n) for j in range(g.n))


def test_lagrange_projector_repeated_eigenvalue():
    with pytest.raises(RepeatedEigenvalueError):
        lagrange_projector(np.eye(2, dtype=int), [QuadValue(1), QuadValue(1)], 0)


def test_closed_form_projectors_742():
    g = design_742_incidence()
    fs, P1, P2, P3 = closed_form_projectors(laplacian(g), 14, 4, 2)
    assert (P1.trace(), P2.trace(), P3.trace()) == (QuadValue(6), QuadValue(6),
                                                    QuadValue(1))
    # resolution including P0
    from mnhd.quadratic import QuadMatrix
    P0 = QuadMatrix.constant(14, QuadValue(F(1, 14)), fs.lam1.m)
    total = P0 + P1 + P2 + P3
    assert (total - QuadMatrix.identity(14, fs.lam1.m)).is_zero()


def test_closed_form_constants_742():
    fs = FourSpectrum.from_design(14, 4, 2)
    root2 = QuadValue.sqrt_int(2)
    assert fs.lam1 == QuadValue(4, -1, 2) and fs.lam3 == QuadValue(8)
    assert fs.c1 == (2 * QuadValue(4, 1, 2) * root2).inverse()
    assert fs.c2 == -((2 * QuadValue(4, -1, 2) * root2).inverse())
    assert fs.c3 == QuadValue(F(1, 14))
    assert fs.c2 == -(fs.lam2 * fs.lam2 * fs.c1 * fs.c3)
    # generic Lagrange-denominator form gives the same constants
    generic = FourSpectrum.from_eigenvalues(fs.lam1, fs.lam2, fs.lam3)
    assert (generic.c1, generic.c2, generic.c3) == (fs.c1, fs.c2, fs.c3)


def test_closed_form_rejects_degenerate():
    with pytest.raises(DegenerateParamsError):
        FourSpectrum.from_design(6, 2, 2)


def test_closed_form_equals_lagrange_sample(incidence_builtins):
    for name in ("design-742", "crown-5", "cycle-6"):
        g = incidence_builtins[name]
        L = laplacian(g)
        d = facts(g).regular_degree
        lam = (2 * d * (d - 1)) // (g.n - 2)
        fs, P1, P2, P3 = closed_form_projectors(L, g.n, d, lam)
        sigma = [fs.lam0, fs.lam1, fs.lam2, fs.lam3]
        for i, P in enumerate((P1, P2, P3), start=1):
            assert P == lagrange_projector(L, sigma, i), name


# -- classification ----------------------------------------------------------


def test_classify_case_i_integral():
    spectrum = [(QuadValue(0), 1), (QuadValue(2), 1), (QuadValue(3), 2),
                (QuadValue(5), 2)]
    assert classify_spectrum(spectrum, 6, 3) is VanDamCase.CASE_I


def test_classify_case_ii_surd_pair():
    spectrum = [(QuadValue(0), 1), (QuadValue(4, -1, 2), 6),
                (QuadValue(4, 1, 2), 6), (QuadValue(8), 1)]
    assert classify_spectrum(spectrum, 14, 4) is VanDamCase.CASE_II


def test_classify_case_iii_c7():
    es = jacobi_eigendecompose(laplacian(cycle(7)))
    spectrum = [(g.value, g.multiplicity) for g in es.groups]
    assert classify_spectrum(spectrum, 7, 2) is VanDamCase.CASE_III


def test_classify_float_inputs():
    r2 = math.sqrt(2)
    spectrum = [(0.0, 1), (4 - r2, 6), (4 + r2, 6), (8.0, 1)]
    assert classify_spectrum(spectrum, 14, 4) is VanDamCase.CASE_II


def test_classify_no_case():
    # three integral values plus one surd: matches no case
    with pytest.raises(NoCaseMatchesError):
        classify_spectrum([(QuadValue(0), 1), (QuadValue(1), 2),
                           (QuadValue(2), 2), (QuadValue(2, 1, 2), 2)], 8, 2)
    # surd pair with unequal multiplicities
    with pytest.raises(NoCaseMatchesError):
        classify_spectrum([(QuadValue(0), 1), (QuadValue(4, -1, 2), 5),
                           (QuadValue(4, 1, 2), 7), (QuadValue(8), 1)], 14, 4)
    with pytest.raises(NoCaseMatchesError):
        classify_spectrum([(0.0, 1), (2.0, 2)], 3, 2)


def test_jacobi_no_convergence_with_zero_sweep_cap():
    from mnhd.errors import NoConvergenceError
    with pytest.raises(NoConvergenceError):
        jacobi_eigendecompose(laplacian(crown(5)), max_sweeps=0)


def test_heat_from_exact_eigensystem():
    from mnhd.heat import heat_at
    es = exact_eigensystem(laplacian(cycle(6)))
    H = heat_at(es, 1.0)
    ref = jacobi_eigendecompose(laplacian(cycle(6)))
    assert np.max(np.abs(H - heat_at(ref, 1.0))) < 1e-12
    assert np.array_equal(heat_at(es, 0.0), np.eye(6))
