import random
from fractions import Fraction

import pytest

from folsurf.errors import DomainError, ShapeError
from folsurf.surface import (
    SurfaceModel,
    canonical_class,
    chi_structure,
    chi_top,
    h0_line_bundle,
    intersect,
)


def test_basic_intersections():
    p2 = SurfaceModel.p2()
    line = p2.basis_divisor(0)
    assert intersect(line, line) == 1

    hn = SurfaceModel.hirzebruch(3)
    c0, f = hn.basis_divisor(0), hn.basis_divisor(1)
    assert intersect(c0, c0) == -3
    assert intersect(c0, f) == 1
    assert intersect(f, f) == 0

    blown = SurfaceModel.p2(1)
    e = blown.basis_divisor(1)
    pullback_line = blown.basis_divisor(0)
    assert intersect(e, e) == -1
    assert intersect(e, pullback_line) == 0


def test_intersect_rejects_mismatched_surfaces():
    a = SurfaceModel.p2().basis_divisor(0)
    b = SurfaceModel.hirzebruch(1).basis_divisor(0)
    with pytest.raises(ShapeError):
        intersect(a, b)


def test_canonical_class_by_adjunction():
    # a rational curve C must satisfy C.(C + K) = -2
    p2 = SurfaceModel.p2()
    k = canonical_class(p2)
    line = p2.basis_divisor(0)
    assert intersect(line, line + k) == -2
    assert k.coefficients == (Fraction(-3),)

    h2 = SurfaceModel.hirzebruch(2)
    k2 = canonical_class(h2)
    for curve in (h2.basis_divisor(0), h2.basis_divisor(1)):
        assert intersect(curve, curve + k2) == -2
    assert k2.coefficients == (Fraction(-2), Fraction(-4))

    blown = SurfaceModel.p2(1)
    kb = canonical_class(blown)
    assert kb.coefficients == (Fraction(-3), Fraction(1))
    e = blown.basis_divisor(1)
    assert intersect(e, e + kb) == -2


@pytest.mark.parametrize(
    "surface,expected",
    [
        (SurfaceModel.p2(), 3),
        (SurfaceModel.hirzebruch(0), 4),
        (SurfaceModel.hirzebruch(5), 4),
        (SurfaceModel.hirzebruch(3, 2), 6),
    ],
)
def test_chi_top(surface, expected):
    assert chi_top(surface) == expected


def test_noether_identity_for_surfaces():
    for surface in (
        SurfaceModel.p2(),
        SurfaceModel.p2(4),
        SurfaceModel.hirzebruch(0),
        SurfaceModel.hirzebruch(2, 3),
        SurfaceModel.hirzebruch(7, 11),
    ):
        k = canonical_class(surface)
        assert intersect(k, k) + chi_top(surface) == 12 * chi_structure(surface)


def test_bilinearity_and_symmetry():
    rng = random.Random(7)
    surface = SurfaceModel.hirzebruch(2, 4)
    for _ in range(200):
        a = surface.divisor([Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(surface.rank)])
        b = surface.divisor([Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(surface.rank)])
        c = surface.divisor([Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(surface.rank)])
        lam = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
        assert intersect(a, b) == intersect(b, a)
        assert intersect(a.scale(lam) + b, c) == lam * intersect(a, c) + intersect(b, c)


def test_unimodular_determinant_and_rank_increment():
    # |det Gram| = 1 with sign (-1)^(rank-1), as befits signature (1, rank-1)
    def det(surface):
        n = surface.rank
        m = [[Fraction(surface.gram(i, j)) for j in range(n)] for i in range(n)]
        result = Fraction(1)
        for col in range(n):
            pivot_row = next((r for r in range(col, n) if m[r][col] != 0), None)
            assert pivot_row is not None
            if pivot_row != col:
                m[col], m[pivot_row] = m[pivot_row], m[col]
                result = -result
            result *= m[col][col]
            for r in range(col + 1, n):
                factor = m[r][col] / m[col][col]
                for c in range(col, n):
                    m[r][c] -= factor * m[col][c]
        return result

    for surface in (
        SurfaceModel.p2(),
        SurfaceModel.p2(3),
        SurfaceModel.hirzebruch(0),
        SurfaceModel.hirzebruch(4, 2),
    ):
        assert det(surface) == (-1) ** (surface.rank - 1)

    base = SurfaceModel.hirzebruch(1)
    assert SurfaceModel.hirzebruch(1, 1).rank == base.rank + 1


def _h0_oracle_hirzebruch(e, a, b):
    # enumerate the monomial section basis of O(a C0 + b F) on the toric surface
    if a < 0:
        return 0
    count = 0
    for k in range(a + 1):
        degree = b - k * e
        count += sum(1 for _ in range(degree + 1)) if degree >= 0 else 0
    return count


def test_h0_line_bundle_closed_forms():
    p2 = SurfaceModel.p2()
    assert h0_line_bundle(p2, p2.divisor([0])) == 1
    assert h0_line_bundle(p2, p2.divisor([2])) == 6
    assert h0_line_bundle(p2, p2.divisor([-1])) == 0

    h2 = SurfaceModel.hirzebruch(2)
    assert h0_line_bundle(h2, h2.divisor([1, 1])) == 2
    hn = SurfaceModel.hirzebruch(4)
    assert h0_line_bundle(hn, hn.divisor([1, 4])) == 6  # n + 2 at n = 4
    assert h0_line_bundle(hn, hn.divisor([0, 0])) == 1

    for e in range(0, 5):
        he = SurfaceModel.hirzebruch(e)
        for a in range(-1, 4):
            for b in range(-2, 8):
                assert h0_line_bundle(he, he.divisor([a, b])) == _h0_oracle_hirzebruch(e, a, b)


def test_h0_unavailable_and_errors():
    blown = SurfaceModel.p2(1)
    assert h0_line_bundle(blown, blown.divisor([1, 0])) is None
    p2 = SurfaceModel.p2()
    with pytest.raises(DomainError):
        h0_line_bundle(p2, p2.divisor([Fraction(1, 2)]))
