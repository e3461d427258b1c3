import math

import mpmath
import numpy as np
import pytest

from tedual.disk import MediumConfig
from tedual.solver import (RootSource, StepTooCoarse, all_tes, bisect_sign_change, determinant, determinant_row,
                           find_roots, recommended_modes)

mpmath.mp.dps = 30

ZIM = MediumConfig(n=2.0, R=1.0, rho=0.0)


def scaled_zero(order, index, n=2.0, R=1.0):
    return float(mpmath.besseljzero(order, index)) / (math.sqrt(n) * R)


def test_determinant_vanishes_at_bessel_zero():
    assert abs(determinant(ZIM, scaled_zero(1, 1), 0)) < 1e-9
    assert abs(determinant(ZIM, scaled_zero(1, 1) + 0.01, 0)) > 1e-3


def test_determinant_row_is_bounded():
    row = determinant_row(MediumConfig(n=2.0, R=1.0, rho=1.0), 3.0, 300)
    assert np.all(np.isfinite(row))
    assert np.all(np.abs(row) <= 2.0)


def test_bisect_sign_change():
    k, iterations = bisect_sign_change(math.cos, 1.0, 2.0, math.cos(1.0), math.cos(2.0))
    assert k == pytest.approx(math.pi / 2, abs=1e-12)
    assert iterations <= 60


def test_mode_zero_roots():
    roots = find_roots(ZIM, 0, 1.0, 5.5)
    assert [root.m for root in roots] == [0, 0]
    for root, expected in zip(roots, (scaled_zero(1, 1), scaled_zero(1, 2))):
        assert abs(root.k - expected) < 1e-8
        assert root.residual < 1e-9
        assert root.multiplicity_hint == 1
        assert root.source is RootSource.DETERMINANT


def test_mode_one_root():
    roots = find_roots(ZIM, 1, 1.0, 5.5)
    assert len(roots) == 1
    assert abs(roots[0].k - scaled_zero(2, 1)) < 1e-8
    assert roots[0].multiplicity_hint == 2


def test_all_roots_in_window():
    roots = all_tes(ZIM, 1.0, 5.5, 20)
    expected = [(scaled_zero(1, 1), 0), (scaled_zero(2, 1), 1), (scaled_zero(3, 1), 2),
                (scaled_zero(1, 2), 0), (scaled_zero(4, 1), 3)]
    assert [root.m for root in roots] == [m for _, m in expected]
    for root, (k, _) in zip(roots, expected):
        assert abs(root.k - k) < 1e-8


def test_all_roots_with_worker_pool():
    serial = all_tes(ZIM, 2.5, 4.0, 10, workers=1)
    pooled = all_tes(ZIM, 2.5, 4.0, 10, workers=4)
    assert serial == pooled


def test_every_scaled_zero_is_found():
    roots = all_tes(ZIM, 1.0, 7.0, 12)
    for m in range(12):
        index = 1
        while scaled_zero(m + 1, index) < 7.0:
            k = scaled_zero(m + 1, index)
            if k > 1.0:
                assert any(root.m == m and abs(root.k - k) < 1e-8 for root in roots)
            index += 1


def test_roots_scale_with_index():
    coarse = find_roots(MediumConfig(n=4.0, R=1.0), 0, 1.5, 3.6)
    fine = find_roots(ZIM, 0, 1.5 * math.sqrt(2), 3.6 * math.sqrt(2))
    assert len(coarse) == len(fine) == 2
    for a, b in zip(coarse, fine):
        assert a.k * math.sqrt(2) == pytest.approx(b.k, abs=1e-8)


def test_roots_decrease_with_index():
    denser = all_tes(ZIM, 1.0, 7.0, 10)
    lighter = all_tes(MediumConfig(n=1.5, R=1.0), 1.0, 7.0, 10)
    first, second = sorted(root.k for root in denser)[:5], sorted(root.k for root in lighter)[:5]
    assert len(first) == len(second) == 5
    assert all(a < b for a, b in zip(first, second))


def test_no_roots_in_reversed_window():
    assert all_tes(MediumConfig(n=2.0, R=1.0, rho=1.0), 0.2, 0.65, 20) == []


def test_roots_with_positive_rho():
    cfg = MediumConfig(n=2.0, R=1.0, rho=1.0)
    roots = all_tes(cfg, 0.75, 5.5, 12)
    assert roots
    for root in roots:
        assert abs(determinant(cfg, root.k, root.m)) < 1e-9


def test_recommended_modes():
    assert recommended_modes(ZIM, 5.5) == math.ceil(5.5 * math.sqrt(2)) + 20


def test_scan_step_limit():
    with pytest.raises(StepTooCoarse):
        find_roots(ZIM, 0, 1.0, 5.5, scan_step=0.05)
    with pytest.raises(ValueError):
        find_roots(ZIM, 0, 5.5, 1.0)


def test_every_mode_vanishes_where_medium_matches_background():
    crossing = math.sqrt(0.5)
    row = determinant_row(MediumConfig(n=2.0, R=1.0, rho=1.0), crossing, 10)
    assert np.all(np.abs(row) < 1e-10)


@pytest.mark.parametrize('k_lo,k_hi', [(0.6, 0.8), (math.sqrt(0.5), 1.2)])
def test_matched_medium_zero_is_not_a_root(k_lo, k_hi):
    cfg = MediumConfig(n=2.0, R=1.0, rho=1.0)
    crossing = math.sqrt(0.5)
    roots = all_tes(cfg, k_lo, k_hi, 10)
    assert not any(abs(root.k - crossing) < 1e-6 for root in roots)
    for m in (0, 3):
        assert not any(abs(root.k - crossing) < 1e-6 for root in find_roots(cfg, m, k_lo, k_hi))
