from fractions import Fraction

import pytest

from dyadwalsh.dyadic_core import DyadicRational, psi
from dyadwalsh.scalar import ExactScalar, ZERO
from dyadwalsh.stepfn import (
    CONTRACT, EXPAND, dilate, evaluate, extend_support, inner, integrate,
    linear_combine, make_step, refine_rank, restrict, scale, zero_function
)
from dyadwalsh.tuples import DyadicInterval, UNIT_INTERVAL
from dyadwalsh.wft import (
    moment_integral, verify_duality, walsh_signs, wft, wft_direct,
    wft_pairing
)

from test_stepfn import (
    CHI_01, CHI_02, CHI_0_HALF, CHI_12, CHI_HALF_1, HALF, random_step
)


@pytest.mark.parametrize('f, expected', [
    (CHI_01, CHI_01),
    (CHI_0_HALF, scale(CHI_02, HALF)),
    (CHI_12, CHI_0_HALF - CHI_HALF_1),
    (CHI_HALF_1, make_step(0, 1, [HALF, -HALF])),
])
def test_wft_examples(f, expected):
    assert wft(f) == expected
    assert wft_direct(f) == expected


def test_wft_swaps_rank_and_support(rng):
    for _ in range(20):
        f = random_step(rng)
        fhat = wft(f)
        assert (fhat.rank, fhat.support_exp) == (f.support_exp, f.rank)


def test_wft_of_zero():
    assert wft_direct(zero_function(2, 1)).is_zero()
    assert wft(zero_function(2, 1)).is_zero()


def test_fast_matches_direct(rng):
    for _ in range(100):
        f = random_step(rng, max_rank=3, max_support=2)
        assert wft(f) == wft_direct(f)


@pytest.mark.parametrize('rank, support_exp', [
    (3, 4), (4, 3), (2, 5), (-2, 7),
])
def test_fast_matches_direct_on_wider_grids(rng, rank, support_exp):
    f = make_step(rank, support_exp, [
        Fraction(rng.randrange(-5, 6), rng.randrange(1, 4))
        for _ in range(1 << (rank + support_exp))
    ])
    assert wft(f) == wft_direct(f)


@pytest.mark.parametrize('width', range(5))
def test_fast_matches_direct_on_every_basis_function(width):
    for rank in range(-3, width + 4):
        for q in range(1 << width):
            f = make_step(rank, width - rank, [
                1 if idx == q else 0 for idx in range(1 << width)
            ])
            assert wft(f) == wft_direct(f)
            assert verify_duality(f)
            assert wft(wft(f)) == f


def kernel_value(f, y):
    """
    2**-rank * sum(values[q] psi(q 2**-rank, y)) over the non-zero atoms
    """
    total = ZERO
    for q, value in enumerate(f.values):
        if value:
            total += value * psi(DyadicRational(q, f.rank), y)
    return total * Fraction(1, 2) ** f.rank


def test_fast_matches_kernel_up_to_4096_atoms(rng):
    for _ in range(100):
        width = rng.randrange(0, 13)
        rank = rng.randrange(-2, width + 3)
        values = [0] * (1 << width)
        for _ in range(rng.randrange(1, 9)):
            values[rng.randrange(len(values))] = ExactScalar(
                Fraction(rng.randrange(-8, 9), rng.choice((1, 2, 4))),
                Fraction(rng.randrange(-8, 9), 3)
            )
        f = make_step(rank, width - rank, values)
        fhat = wft(f)
        if width <= 6:
            assert fhat == wft_direct(f)
            continue
        for _ in range(16):
            y = DyadicRational(rng.randrange(1 << width), fhat.rank)
            assert evaluate(fhat, y) == kernel_value(f, y)


def test_linearity(rng):
    for _ in range(30):
        f = random_step(rng)
        g = random_step(rng)
        a = ExactScalar(Fraction(rng.randrange(-5, 6), 3), rng.randrange(3))
        b = ExactScalar(Fraction(rng.randrange(-5, 6), 2))
        assert wft(linear_combine(a, f, b, g)) == \
            linear_combine(a, wft(f), b, wft(g))


def test_dilation_covariance(rng):
    for _ in range(30):
        f = random_step(rng)
        fhat = wft(f)
        # x -> f(2x) transforms to y -> f-hat(y / 2) / 2
        assert wft(dilate(f, CONTRACT)) == scale(dilate(fhat, EXPAND), HALF)
        assert wft(dilate(f, EXPAND)) == scale(dilate(fhat, CONTRACT), 2)


def test_kernel_constancy_needs_no_refinement(rng):
    for _ in range(10):
        f = random_step(rng, max_rank=2, max_support=2)
        assert wft_direct(f, check_kernel=True) == wft(f)


def test_verify_duality(rng):
    for _ in range(20):
        assert verify_duality(random_step(rng, max_rank=2, max_support=2))


def test_involution(rng):
    for _ in range(30):
        f = random_step(rng)
        assert wft(wft(f)) == f


def test_parseval(rng):
    for _ in range(30):
        f = random_step(rng)
        g = random_step(rng)
        assert inner(wft(f), wft(g)) == inner(f, g)


def test_representation_independence(rng):
    for _ in range(20):
        f = random_step(rng)
        finer = extend_support(refine_rank(f, f.rank + 1), f.support_exp + 1)
        assert wft(finer) == wft(f)


def test_transform_is_integral_near_zero(rng):
    for _ in range(20):
        f = random_step(rng)
        near_zero = restrict(wft(f), -f.support_exp)
        assert near_zero.values == (integrate(f),) * len(near_zero)


def test_wft_pairing(rng):
    for _ in range(20):
        f = random_step(rng)
        phi = random_step(rng)
        assert wft_pairing(f, phi) == inner(wft(f), phi)


def test_walsh_signs():
    assert list(walsh_signs(0, 2)) == [1, 1, 1, 1]
    assert list(walsh_signs(1, 1)) == [1, -1]
    assert list(walsh_signs(2, 2)) == [1, -1, 1, -1]
    assert list(walsh_signs(3, 2)) == [1, -1, -1, 1]


@pytest.mark.parametrize('k, interval, expected', [
    (0, UNIT_INTERVAL, HALF),
    (1, UNIT_INTERVAL, Fraction(-1, 4)),
    (2, UNIT_INTERVAL, Fraction(-1, 8)),
    (3, UNIT_INTERVAL, 0),
    (0, DyadicInterval(0, 1), Fraction(3, 2)),
    (1, DyadicInterval(1, 1), Fraction(-3, 8)),
])
def test_moment_integral(k, interval, expected):
    assert moment_integral(k, interval) == ExactScalar(expected)
