from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from supergt.exactmath import (
    Direction,
    ExactMathError,
    PoleError,
    Polynomial,
    RationalFunction,
    ZeroDenominatorError,
    evaluate_at,
    is_squarefree,
    limit_at,
    normalize,
    poly_gcd,
    q_monomial,
    q_shift_decompose,
    series_expand,
)

U = Polynomial.x()


def rf(num, den=1):
    return RationalFunction(num, den)


# -- normalization -----------------------------------------------------------


def test_normalize_cancels_common_factor():
    # (u^2 - 1)/(u - 1) -> u + 1
    f = normalize(Polynomial([-1, 0, 1]), Polynomial([-1, 1]))
    assert f.num == Polynomial([1, 1])
    assert f.den == Polynomial([1])


def test_normalize_zero_numerator():
    f = normalize(Polynomial(), Polynomial([3, 1]))
    assert f.is_zero()
    assert f.den == Polynomial([1])


def test_normalize_content_and_monic():
    # (2u + 2)/(2u) -> (u + 1)/u
    f = normalize(Polynomial([2, 2]), Polynomial([0, 2]))
    assert f.num == Polynomial([1, 1])
    assert f.den == Polynomial([0, 1])


def test_zero_denominator_rejected():
    with pytest.raises(ZeroDenominatorError):
        normalize(Polynomial([1]), Polynomial())


# -- series expansion --------------------------------------------------------


def test_series_at_infinity_basic():
    s = series_expand(rf(Polynomial([1, 1]), Polynomial([0, 1])), Direction.AT_INFINITY, 3)
    assert list(s.coeffs) == [1, 1, 0, 0]


def test_series_at_infinity_geometric():
    # 1/(u+2) = u^{-1} - 2u^{-2} + 4u^{-3} - ...
    s = series_expand(rf(Polynomial([1]), Polynomial([2, 1])), Direction.AT_INFINITY, 3)
    assert list(s.coeffs) == [0, 1, -2, 4]


def test_series_at_zero():
    # u/(u+1) = u - u^2 + ...
    s = series_expand(rf(Polynomial([0, 1]), Polynomial([1, 1])), Direction.AT_ZERO, 2)
    assert list(s.coeffs) == [0, 1, -1]


def test_series_pole_errors_name_direction():
    with pytest.raises(PoleError, match="at-infinity"):
        series_expand(rf(Polynomial([0, 0, 1]), Polynomial([1, 1])), Direction.AT_INFINITY, 2)
    with pytest.raises(PoleError, match="at-zero"):
        series_expand(rf(Polynomial([1]), Polynomial([0, 1])), Direction.AT_ZERO, 2)


def test_series_directions_never_mix():
    a = series_expand(rf(1, Polynomial([1, 1])), Direction.AT_ZERO, 2)
    b = series_expand(rf(1, Polynomial([1, 1])), Direction.AT_INFINITY, 2)
    with pytest.raises(ExactMathError):
        a + b


# -- evaluation --------------------------------------------------------------


def test_evaluate_simple():
    f = rf(Polynomial([1, 1]), Polynomial([0, 1]))
    assert evaluate_at(f, Fraction(1)) == 2


def test_evaluate_at_pole_raises_with_point():
    f = rf(Polynomial([1, 1]), Polynomial([0, 1]))
    with pytest.raises(PoleError, match="0"):
        evaluate_at(f, Fraction(0))


def test_removable_singularity_removed_by_canonical_form():
    f = normalize(Polynomial([-1, 0, 1]), Polynomial([-1, 1]))
    assert evaluate_at(f, Fraction(1)) == 2


# -- squarefreeness ----------------------------------------------------------


def test_squarefree_cases():
    assert is_squarefree(Polynomial.from_roots([-3, 1]))  # (u+3)(u-1)
    assert not is_squarefree(Polynomial.from_roots([-2, -2]))
    assert is_squarefree(Polynomial([0, 1]))
    with pytest.raises(ExactMathError):
        is_squarefree(Polynomial())


# -- round-trip against an independent long-division oracle -------------------

small_fracs = st.integers(-4, 4).map(Fraction)


def polys(max_deg=3):
    return st.lists(small_fracs, min_size=0, max_size=max_deg + 1).map(Polynomial)


def nonzero_polys(max_deg=3):
    return polys(max_deg).filter(lambda p: not p.is_zero())


@settings(max_examples=60, deadline=None)
@given(polys(3), nonzero_polys(3), st.integers(0, 12))
def test_series_roundtrip_vs_partial_sum(num, den, order):
    """Re-summing the truncated expansion must approximate f to order N.

    Independent check: the partial sum G = sum c_j u^{-j} is formed with plain
    polynomial arithmetic, and f - G must vanish at infinity to order > N,
    i.e. deg(den) - deg(num) of the reduced difference exceeds N.
    """
    f = RationalFunction(num, den)
    if f.num.degree > f.den.degree:
        return
    s = series_expand(f, Direction.AT_INFINITY, order)
    g_num = Polynomial([s.coeffs[order - j] for j in range(order + 1)])
    g = RationalFunction(g_num, Polynomial.x(order))
    diff = f - g
    if not diff.is_zero():
        assert diff.den.degree - diff.num.degree > order


def rationals():
    return st.builds(RationalFunction, polys(2), nonzero_polys(2))


@settings(max_examples=60, deadline=None)
@given(rationals(), rationals(), rationals())
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a
    if not b.is_zero():
        assert (a / b) * b == a


@settings(max_examples=60, deadline=None)
@given(rationals(), rationals(), st.integers(-6, 6).map(Fraction))
def test_evaluate_is_multiplicative(f, g, p):
    if f.den.evaluate(p) == 0 or g.den.evaluate(p) == 0:
        return
    fg = f * g
    if fg.den.evaluate(p) == 0:
        return
    assert evaluate_at(fg, p) == evaluate_at(f, p) * evaluate_at(g, p)


# -- shifts, rescaling, limits ------------------------------------------------


def test_shift_and_rescale():
    f = rf(Polynomial([1, 1]), Polynomial([0, 1]))  # (u+1)/u
    assert f.shift(1) == rf(Polynomial([2, 1]), Polynomial([1, 1]))
    assert f.rescale_var(2) == rf(Polynomial([1, 2]), Polynomial([0, 2]))


def test_limit_cancels_matching_orders():
    # (q^2 - 1)/(q - 1) -> 2 at q = 1
    f = RationalFunction(Polynomial([-1, 0, 1]), Polynomial([-1, 1]))
    assert limit_at(f, Fraction(1)) == 2
    g = RationalFunction(Polynomial([1]), Polynomial([-1, 1]))
    with pytest.raises(PoleError):
        limit_at(g, Fraction(1))


def test_q_monomial_and_shift_decomposition():
    f = q_monomial(-3) * RationalFunction(Polynomial([1, 1]), Polynomial([2, 0, 1]))
    shift, num, den = q_shift_decompose(f)
    assert shift == -3
    assert num[0] != 0 and den[0] != 0
    rebuilt = q_monomial(shift) * RationalFunction(num, den)
    assert rebuilt == f


def test_poly_gcd_monic():
    a = Polynomial.from_roots([1, 2, 3]).scale(6)
    b = Polynomial.from_roots([2, 3, 5]).scale(4)
    assert poly_gcd(a, b) == Polynomial.from_roots([2, 3])


# -- nested tower: rational functions in u over Q(q) --------------------------


def test_tower_arithmetic_q_then_u():
    q = RationalFunction.x()
    # u-polynomial with Q(q) coefficients: (1 - q^2 u) / (1 - u)
    num = Polynomial([RationalFunction.constant(1), -(q * q)])
    den = Polynomial([RationalFunction.constant(1), RationalFunction.constant(-1)])
    f = RationalFunction(num, den)
    g = f * f / f
    assert g == f
    s = series_expand(f, Direction.AT_ZERO, 2)
    one = RationalFunction.constant(1)
    assert s.coeffs[0] == one
    assert s.coeffs[1] == one - q * q
