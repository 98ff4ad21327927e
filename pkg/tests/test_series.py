from fractions import Fraction

import pytest

from series.products import (
    eta_inverse_shifted,
    eta_shifted,
    euler_power,
    euler_product,
    pentagonal_terms,
)
from series.rings import QQ, ModResidue
from series.truncated import QShiftedSeries, TruncatedSeries, coefficients_equal, derive_q, reduce_mod
from tests.conftest import brute_partitions, naive_euler_product, random_series
from utils.errors import (
    InsufficientPrecision,
    NonIntegralOffset,
    NonUnitLeadingCoefficient,
    NotEllIntegral,
    RingMismatch,
)

S = TruncatedSeries.from_values


def test_product_of_binomials():
    assert (S([1, 1, 0]) * S([1, -1, 0])).coeffs == (1, 0, -1)


def test_multiplicative_identity(rng):
    f = random_series(rng, 20)
    assert f * TruncatedSeries.constant(1, 20) == f


def test_precision_is_minimum():
    f = S([1, 2, 3, 4, 5])
    g = S([1, 1, 1])
    assert (f + g).precision == 3
    assert (f * g).precision == 3


def test_equality_up_to_common_precision():
    assert S([1, 2, 3]) == S([1, 2])
    assert TruncatedSeries.zero(5) == TruncatedSeries.zero(12)
    assert S([1, 0, 0]) == 1
    assert S([1, 2]) != S([1, 3])


def test_reading_past_precision_fails():
    f = S([1, 2, 3])
    with pytest.raises(InsufficientPrecision):
        f[3]
    with pytest.raises(IndexError):
        f[-1]


def test_ring_mismatch():
    with pytest.raises(RingMismatch):
        S([1, 2]) + S([1, 2], ModResidue(5))


def test_inverse_of_geometric():
    assert S([1, -1, 0, 0]).invert().coeffs == (1, 1, 1, 1)


def test_inverse_requires_unit():
    with pytest.raises(NonUnitLeadingCoefficient):
        S([0, 1, 1]).invert()
    with pytest.raises(NonUnitLeadingCoefficient):
        S([5, 1], ModResidue(5)).invert()


def test_inverse_rational_leading_term():
    f = S([Fraction(2, 3), 1, Fraction(-1, 2), 4])
    assert f * f.invert() == 1


def test_inverse_over_residues(rng):
    ring = ModResidue(13)
    f = random_series(rng, 30, ring, unit=True)
    assert (f * f.invert()).first_mismatch(TruncatedSeries.constant(1, 30, ring)) is None


def test_derive():
    assert S([1, 1, 1]).derive().coeffs == (0, 1, 2)
    assert TruncatedSeries.constant(7, 4).derive().is_zero()


@pytest.mark.parametrize("ring", [QQ, ModResidue(11)])
def test_leibniz_rule(rng, ring):
    f = random_series(rng, 64, ring)
    g = random_series(rng, 64, ring)
    assert (f * g).derive() == f.derive() * g + f * g.derive()


def test_truncate_cannot_extend():
    with pytest.raises(InsufficientPrecision):
        S([1, 2]).truncate(3)
    assert S([1, 2, 3]).truncate(2).coeffs == (1, 2)


def test_shift_and_substitute():
    f = S([1, 2, 3])
    assert f.shift(2).coeffs == (0, 0, 1, 2, 3)
    assert f.substitute(3).coeffs == (1, 0, 0, 2, 0, 0, 3, 0, 0)
    assert f.substitute(3, 5).coeffs == (1, 0, 0, 2, 0)
    with pytest.raises(InsufficientPrecision):
        f.substitute(3, 10)


def test_reduce_mod():
    reduced = S([Fraction(1, 6), Fraction(7, 2)]).reduce_mod(5)
    assert reduced.coeffs == (1, 1)
    with pytest.raises(NotEllIntegral) as info:
        S([1, Fraction(1, 5)]).reduce_mod(5)
    assert info.value.index == 1


def test_reduction_is_ring_homomorphism(rng):
    f = random_series(rng, 30)
    g = random_series(rng, 30)
    assert (f * g).reduce_mod(7) == f.reduce_mod(7) * g.reduce_mod(7)
    assert (f + g).reduce_mod(7) == f.reduce_mod(7) + g.reduce_mod(7)


def test_rational_power_squares_back():
    f = S([1, 1, 0, 0, 0, 0, 0, 0])
    root = f.power(Fraction(1, 2))
    assert root * root == f
    assert root[1] == Fraction(1, 2)
    assert root[2] == Fraction(-1, 8)


def test_miller_power_matches_repeated_product():
    f = euler_product(1, 30)
    expected = TruncatedSeries.constant(1, 30)
    for _ in range(24):
        expected = expected * f
    assert f.power(24) == expected
    assert f.power(-1) == f.invert()


def test_binary_power_over_residues():
    ring = ModResidue(7)
    f = euler_product(1, 40, ring)
    assert f.power(7) == euler_product(7, 40, ring)


def test_pentagonal_terms_order():
    assert list(pentagonal_terms(8)) == [(0, 1), (1, -1), (2, -1), (5, 1), (7, 1)]


def test_euler_product_small():
    assert euler_product(1, 8).coeffs == (1, -1, -1, 0, 0, 1, 0, 1)
    assert euler_product(1, 256) == naive_euler_product(256)


def test_stretched_euler_product():
    product = euler_product(13, 14)
    assert product[0] == 1 and product[13] == -1
    assert all(product[i] == 0 for i in range(1, 13))


def test_partition_generating_function():
    gf = euler_product(1, 41).invert()
    assert [int(gf[n]) for n in range(10)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]
    assert all(gf[n] == brute_partitions(n) for n in range(41))


def test_euler_power_negative():
    assert euler_power(1, -1, 20) == euler_product(1, 20).invert()
    assert euler_power(5, 5, 30) == euler_product(1, 6).power(5).substitute(5, 30)


def test_euler_power_reduced():
    ring = ModResidue(5)
    assert euler_power(1, 5, 30, ring) == euler_product(5, 30, ring)


def test_eta_offsets():
    eta = eta_shifted(20)
    inv = eta_inverse_shifted(20)
    product = eta * inv
    assert product.offset == 0
    assert product.body == 1
    assert eta.power(24).offset == 1


def test_eta_derivative_body():
    """Koeficient u q^2 v těle Dη je −(7²)/24."""
    body = eta_shifted(10).derive().body
    assert body[0] == Fraction(1, 24)
    assert body[1] == Fraction(-25, 24)
    assert body[2] == Fraction(-49, 24)


def test_shifted_leibniz(rng):
    f = QShiftedSeries(Fraction(1, 24), random_series(rng, 30))
    g = QShiftedSeries(Fraction(-5, 24), random_series(rng, 30))
    assert (f * g).derive() == f.derive() * g + f * g.derive()


def test_shifted_addition_alignment():
    a = QShiftedSeries(Fraction(1, 24), S([1, 2, 3]))
    b = QShiftedSeries(Fraction(25, 24), S([5, 5, 5]))
    total = a + b
    assert total.offset == Fraction(1, 24)
    assert total.body.coeffs == (1, 7, 8)
    with pytest.raises(NonIntegralOffset):
        a + QShiftedSeries(Fraction(1, 2), S([1]))


def test_shifted_to_integral():
    assert QShiftedSeries(Fraction(2), S([1, 1])).to_integral().coeffs == (0, 0, 1, 1)
    with pytest.raises(NonIntegralOffset):
        eta_shifted(5).to_integral()


def test_module_level_helpers():
    f = S([1, 2, Fraction(1, 3)])
    assert derive_q(f) == f.derive()
    assert reduce_mod(f, 7) == f.reduce_mod(7)
    assert coefficients_equal(f, S([1, 2]))
    assert not coefficients_equal(f, S([1, 3]))
    assert derive_q(eta_shifted(5)) == eta_shifted(5).derive()
