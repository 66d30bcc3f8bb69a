from fractions import Fraction

import pytest

from torifan.errors import DimensionMismatch
from torifan.surface import (
    DivClass,
    blow_up_point,
    blow_up_points,
    double_cover_report,
    pairing,
    pullback_class,
    ruled_quadric,
    signature,
)


def test_ruled_quadric():
    Q = ruled_quadric()
    assert Q.gram == ((0, 1), (1, 0))
    assert pairing(Q, Q.K, Q.K) == 8
    F = DivClass((0, 1))
    assert pairing(Q, F, F) == 0
    assert pairing(Q, Q.K, F) == -2


@pytest.mark.parametrize("k, expected", [(0, 8), (1, 7), (16, -8)])
def test_k_squared_ledger(k, expected):
    Z = blow_up_points(ruled_quadric(), k)
    assert pairing(Z, Z.K, Z.K) == expected


def test_k_squared_drops_by_one():
    L = ruled_quadric()
    for _ in range(5):
        M = blow_up_point(L)
        assert pairing(M, M.K, M.K) == pairing(L, L.K, L.K) - 1
        L = M


def test_signature_after_blowups():
    L = ruled_quadric()
    for k in range(6):
        assert signature(L) == (1, 1 + k)
        L = blow_up_point(L)


def test_pullback_isometry():
    Q = ruled_quadric()
    Z = blow_up_points(Q, 4)
    classes = [DivClass((1, 0)), DivClass((2, -3)), DivClass((Fraction(1, 2), 5))]
    for A in classes:
        for B in classes:
            assert pairing(Z, pullback_class(Q, Z, A), pullback_class(Q, Z, B)) == pairing(Q, A, B)
        for E in Z.exceptional():
            assert pairing(Z, pullback_class(Q, Z, A), E) == 0


def test_pairing_dimension_check():
    with pytest.raises(DimensionMismatch):
        pairing(ruled_quadric(), DivClass((1, 0, 0)), DivClass((1, 0)))


def test_report_values():
    r = double_cover_report()
    assert r["K2_before"] == 8 and r["K2_after"] == -8
    assert r["B_even"]
    assert r["B"].coords == (4, 4) + (-2,) * 16
    assert r["K_plus_L"].is_zero()
    assert r["pullback_K_plus_half_B"].is_zero()
    assert r["minus_K_dot_C"] == -2
    assert r["C2"] == -4 and r["K_dot_C"] == 2


@pytest.mark.parametrize("points", [(0, 1, 2, 3), (4, 5, 6, 7), (0, 4, 8, 12)])
def test_witness_independent_of_labelling(points):
    assert double_cover_report(points)["minus_K_dot_C"] == -2
