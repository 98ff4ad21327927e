from fractions import Fraction

import pytest

from series.rings import QQ, ModResidue, format_rational, parse_rational
from utils.errors import InvalidPrime, NonUnit, NotEllIntegral


def test_rational_addition_is_reduced():
    assert QQ.add(Fraction(1, 6), Fraction(1, 3)) == Fraction(1, 2)
    assert QQ.coerce(Fraction(2, -4)) == Fraction(-1, 2)


def test_rational_inverse_of_zero_fails():
    with pytest.raises(NonUnit):
        QQ.inv(Fraction(0))


def test_residue_inverse_examples():
    assert ModResidue(13).inv(3) == 9
    with pytest.raises(NonUnit):
        ModResidue(5).inv(0)


def test_residue_fermat_inversion():
    ring = ModResidue(13)
    for a in range(1, 13):
        assert a * ring.inv(a) % 13 == 1
        assert ring.inv(a) == pow(a, 11, 13)


def test_residue_requires_prime():
    with pytest.raises(InvalidPrime):
        ModResidue(9)


def test_residue_coerce_fraction():
    ring = ModResidue(5)
    assert ring.coerce(Fraction(7, 2)) == 1
    assert ring.coerce(Fraction(1, 6)) == 1
    assert ring.coerce(-1) == 4
    with pytest.raises(NotEllIntegral):
        ring.coerce(Fraction(1, 5))


def test_residue_canonical_representatives():
    ring = ModResidue(7)
    assert ring.add(5, 4) == 2
    assert ring.neg(3) == 4
    assert ring.mul(6, 6) == 1


def test_numpy_convolution_matches_schoolbook(rng):
    ring = ModResidue(31)
    a = [rng.randrange(31) for _ in range(60)]
    b = [rng.randrange(31) for _ in range(45)]
    expected = [0] * 60
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            if i + j < 60:
                expected[i + j] = (expected[i + j] + x * y) % 31
    assert ring.convolve(a, b, 60) == expected


def test_large_modulus_falls_back_to_exact_loop():
    ring = ModResidue(2 ** 61 - 1)
    big = 2 ** 61 - 2
    assert ring.convolve([big, big], [big, big], 2) == [1, 2 % (2 ** 61 - 1)]


def test_rational_text_format():
    assert format_rational(Fraction(-691, 2730)) == "-691/2730"
    assert format_rational(Fraction(12)) == "12"
    assert parse_rational("-691/2730") == Fraction(-691, 2730)
