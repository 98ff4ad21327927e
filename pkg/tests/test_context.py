import pytest
from sympy import primerange

from congruences.context import (
    binomial_even_sums,
    falling_half,
    prime_context,
    rho_closed,
    rho_from_binomial_sum,
    rho_intermediate,
    rho_wilson,
    sigma_sign,
)
from utils.errors import InvalidPrime

PRIMES = tuple(primerange(5, 98))


def test_context_thirteen():
    ctx = prime_context(13)
    assert (ctx.delta, ctx.m_ell, ctx.alpha) == (7, 1, 2)
    assert ctx.rho == 2
    assert ctx.c == 6
    assert ctx.half_factorial == 9
    assert ctx.theta_sign == -1
    assert ctx.printed_sign == -1
    assert falling_half(13) == 2


def test_context_five_and_seven():
    five = prime_context(5)
    assert (five.delta, five.m_ell, five.alpha, five.rho) == (1, -1, -1, 1)
    assert five.theta_sign == 1
    seven = prime_context(7)
    assert (seven.delta, seven.m_ell, seven.alpha) == (2, 1, 1)


def test_c_inverts_rho_for_seventeen():
    ctx = prime_context(17)
    assert ctx.theta_sign == 1
    assert ctx.c * ctx.rho % 17 == 1


@pytest.mark.parametrize("value", [1, 2, 3, 4, 9, 15, 91])
def test_invalid_primes(value):
    with pytest.raises(InvalidPrime):
        prime_context(value)


@pytest.mark.parametrize("ell", PRIMES)
def test_all_routes_agree(ell):
    ctx = prime_context(ell)
    values = {rho_from_binomial_sum(ell), rho_intermediate(ell), rho_wilson(ell), rho_closed(ell)}
    assert values == {ctx.rho}
    assert ctx.c * ctx.rho % ell == ctx.theta_sign % ell
    assert ctx.printed_sign == sigma_sign(ell)
    assert 24 * ctx.delta == ell * ell - 1
    assert 6 * ctx.alpha + 1 == ell * ctx.m_ell


def test_binomial_even_sums():
    assert binomial_even_sums(1) == (1, 2)
    assert binomial_even_sums(3) == (48, 32)
    for M in range(1, 65):
        assert binomial_even_sums(M) == (2 ** (2 * M - 2) * M, 2 ** (2 * M - 1))
    with pytest.raises(ValueError):
        binomial_even_sums(0)
