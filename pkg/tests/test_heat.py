import io
from fractions import Fraction

import numpy as np
import pytest

from mnhd.errors import NegativeTimeError, SameVertexError
from mnhd.graphs import (cayley_s3, crown, cycle, design_742_incidence,
                         laplacian, wheel6)
from mnhd.heat import (DeltaSet, default_time_grid, delta_set, h_function,
                       h_rate, h_terms_exact, h_terms_from_eigensystem,
                       heat_at, heat_stack, ratio, ratio_curve,
                       write_curve_csv)
from mnhd.quadratic import QuadValue
from mnhd.spectral import (FourSpectrum, exact_eigensystem,
                           jacobi_eigendecompose)

F = Fraction


def _es(g):
    return jacobi_eigendecompose(laplacian(g))


def _exact_parts(g):
    """(eigensystem, FourSpectrum, nonzero projectors) for the exact path."""
    es = exact_eigensystem(laplacian(g))
    nonzero = [grp for grp in es.groups if grp.value != QuadValue(0)]
    fs = FourSpectrum.from_eigenvalues(*[grp.value for grp in nonzero])
    return es, fs, [grp.projector for grp in nonzero]


def test_heat_at_zero_is_identity():
    es = _es(crown(5))
    assert np.array_equal(heat_at(es, 0.0), np.eye(10))


def test_heat_long_time_limit():
    H = heat_at(_es(crown(5)), 100.0)
    assert np.max(np.abs(H - 1 / 10)) < 1e-12


def test_heat_rejects_negative_time():
    with pytest.raises(NegativeTimeError):
        heat_at(_es(crown(5)), -0.1)
    with pytest.raises(NegativeTimeError):
        heat_stack(_es(crown(5)), [-1.0, 0.0])


def test_heat_semigroup_742():
    es = _es(design_742_incidence())
    H1, H2, H3 = heat_at(es, 1.0), heat_at(es, 2.0), heat_at(es, 3.0)
    assert np.max(np.abs(H1 @ H2 - H3)) < 1e-9


@pytest.mark.parametrize("t", [0.0, 0.1, 1.0, 10.0])
def test_heat_kernel_properties(builtins, numeric_systems, t):
    for name, g in builtins.items():
        H = heat_at(numeric_systems[name], t)
        assert np.max(np.abs(H - H.T)) < 1e-12, name
        assert np.max(np.abs(H.sum(axis=1) - 1.0)) < 1e-12, name
        assert H.min() > -1e-12, name


def test_ratio_endpoints():
    es = _es(design_742_incidence())
    assert ratio(es, 0, 1, 0.0) == 0.0
    assert abs(ratio(es, 0, 1, 100.0) - 1.0) < 1e-10
    with pytest.raises(SameVertexError):
        ratio(es, 3, 3, 1.0)


def test_ratio_bounded_on_vertex_transitive(builtins, numeric_systems):
    transitive = [k for k in builtins
                  if k.startswith(("cycle-", "crown-")) or k == "cayley-s3"]
    grid = np.concatenate([[0.0], np.geomspace(1e-3, 50.0, 40)])
    for name in transitive:
        es = numeric_systems[name]
        H = heat_stack(es, grid)
        R = H / np.einsum("tii->ti", H)[:, :, None]
        assert R.max() <= 1 + 1e-12, name


def test_ratio_curve_trivial_grid():
    es = _es(crown(5))
    assert ratio_curve(es, 0, 1, [0.0]) == [(0.0, 0.0)]


def test_ratio_curve_monotone_742():
    es = _es(design_742_incidence())
    curve = ratio_curve(es, 0, 7, default_time_grid(es))
    values = [r for _, r in curve]
    assert values[0] == 0.0
    assert all(b >= a - 1e-12 for a, b in zip(values, values[1:]))


def test_ratio_curve_tail_crown5():
    es = _es(crown(5))
    curve = ratio_curve(es, 0, 1, [0.0, 50.0])
    # spectral gap 3: remainder is O(e^-150)
    assert abs(curve[-1][1] - 1.0) < 1e-8


def test_default_time_grid_shape():
    es = _es(crown(5))
    grid = default_time_grid(es)
    assert len(grid) == 61 and grid[0] == 0.0 and grid[1] == 1e-3
    assert grid[-1] == max(50.0, 30.0 / 3.0)
    assert np.exp(-3.0 * grid[-1]) < 1e-12


def test_write_curve_csv_format():
    buf = io.StringIO()
    write_curve_csv(buf, [(0.0, 0.0), (1.0, 1 / 3)])
    lines = buf.getvalue().splitlines()
    assert lines[0] == "t,r"
    assert lines[2] == f"{1.0:.17g},{1 / 3:.17g}"
    assert "0.33333333333333331" in lines[2]


# -- Delta quantities --------------------------------------------------------


def test_delta_set_cayley_non_adjacent_pair():
    _, _, projs = _exact_parts(cayley_s3())
    # (0, 3) is a non-adjacent pair
    ds = delta_set(projs, 0, 3)
    assert ds == DeltaSet(QuadValue(F(1, 3)), QuadValue(F(1, 2)),
                          QuadValue(F(1, 6)), QuadValue(F(-1, 36)),
                          QuadValue(F(-1, 12)), QuadValue(F(-1, 9)))


def test_delta_set_wheel_hub_classes():
    _, _, projs = _exact_parts(wheel6())
    rim_to_hub = delta_set(projs, 0, 5)
    assert rim_to_hub == DeltaSet(QuadValue(F(2, 5)), QuadValue(F(2, 5)),
                                  QuadValue(F(1, 5)), QuadValue(0),
                                  QuadValue(F(1, 15)), QuadValue(F(1, 15)))
    hub_to_rim = delta_set(projs, 5, 0)
    assert hub_to_rim == DeltaSet(QuadValue(0), QuadValue(0), QuadValue(1),
                                  QuadValue(0), QuadValue(0), QuadValue(0))


def test_delta_antisymmetry_by_definition():
    _, _, projs = _exact_parts(design_742_incidence())
    u, v = 0, 1
    ds = delta_set(projs, u, v)
    for (i, j), dij in zip(((0, 1), (0, 2), (1, 2)),
                           (ds.d12, ds.d13, ds.d23)):
        Pi, Pj = projs[i], projs[j]
        swapped = Pj.entry(u, v) * Pi.entry(u, u) - Pi.entry(u, v) * Pj.entry(u, u)
        assert swapped == -dij


@pytest.mark.parametrize("make", [cayley_s3, wheel6, design_742_incidence,
                                  lambda: crown(5), lambda: cycle(6)],
                         ids=["cayley", "wheel", "742", "crown5", "cycle6"])
def test_delta_sum_is_one(make):
    g = make()
    _, _, projs = _exact_parts(g)
    for u in range(g.n):
        for v in range(g.n):
            if u != v:
                ds = delta_set(projs, u, v)
                assert ds.d1 + ds.d2 + ds.d3 == QuadValue(1)


# -- the h function ----------------------------------------------------------


def test_h_at_zero_equals_minus_laplacian_entry():
    g = design_742_incidence()
    L = laplacian(g)
    _, fs, projs = _exact_parts(g)
    adjacent = (0, 7) if L[0, 7] == -1 else (0, 8)
    assert h_function(fs, delta_set(projs, *adjacent), g.n, 0.0) == pytest.approx(1.0)
    same_side = (0, 1)
    assert h_function(fs, delta_set(projs, *same_side), g.n, 0.0) == pytest.approx(0.0)


def test_h_terms_exact_match_derivative_product_route():
    for g in (design_742_incidence(), cayley_s3(), wheel6(), crown(5)):
        es, fs, projs = _exact_parts(g)
        for (u, v) in ((0, 1), (0, g.n - 1), (1, g.n - 2)):
            ds = delta_set(projs, u, v)
            assert h_terms_exact(fs, ds, g.n) == h_terms_from_eigensystem(es, u, v)


def test_h_expansion_agrees_with_rate_formula_numerically():
    for g in (design_742_incidence(), cayley_s3(), wheel6()):
        L = laplacian(g)
        es = _es(g)
        _, fs, projs = _exact_parts(g)
        grid = default_time_grid(es)
        for (u, v) in ((0, 1), (1, g.n - 1)):
            ds = delta_set(projs, u, v)
            for t in grid[::6]:
                expansion = h_function(fs, ds, g.n, float(t))
                direct = h_rate(es, L, u, v, float(t))
                assert abs(expansion - direct) < 1e-10


def test_h_rate_at_zero_all_pairs(builtins, numeric_systems):
    for name, g in builtins.items():
        L = laplacian(g)
        es = numeric_systems[name]
        for u in range(g.n):
            for v in range(g.n):
                if u != v:
                    assert abs(h_rate(es, L, u, v, 0.0) - (-L[u, v])) < 1e-12, name


def test_h_function_float_path():
    g = cayley_s3()
    es, fs, projs = _exact_parts(g)
    ds_exact = delta_set(projs, 0, 3)
    ds_float = DeltaSet(*ds_exact.as_floats())
    for t in (0.0, 0.5, 2.0):
        assert h_function(fs, ds_float, g.n, t) == pytest.approx(
            h_function(fs, ds_exact, g.n, t), abs=1e-12)
