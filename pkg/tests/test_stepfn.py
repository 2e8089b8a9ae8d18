from fractions import Fraction

import pytest

from dyadwalsh.dyadic_core import DyadicRational, dyadic_add
from dyadwalsh.scalar import ExactScalar
from dyadwalsh.stepfn import (
    CONTRACT, EXPAND, LengthMismatch, RankError, canonical,
    dilate, dilate_power, dyadic_translate, evaluate, extend_support,
    generate_indicator, indicator, inner, integrate, linear_combination,
    linear_combine, make_step, minimal_rank, pointwise_mul, refine_rank,
    restrict, scale, zero_function
)
from dyadwalsh.tuples import DyadicInterval

HALF = Fraction(1, 2)

CHI_01 = make_step(0, 0, [1])
CHI_0_HALF = make_step(1, 0, [1, 0])
CHI_HALF_1 = make_step(1, 0, [0, 1])
CHI_12 = make_step(0, 1, [0, 1])
CHI_02 = make_step(0, 1, [1, 1])


def random_step(rng, max_rank=3, max_support=3, complex_values=True):
    rank = rng.randrange(-1, max_rank + 1)
    support_exp = rng.randrange(max(0, -rank), max_support + 1)

    def part():
        return Fraction(rng.randrange(-8, 9), rng.choice((1, 2, 3, 4)))

    values = [
        ExactScalar(part(), part() if complex_values else 0)
        for _ in range(1 << (rank + support_exp))
    ]
    return make_step(rank, support_exp, values)


def test_make_step_checks_length():
    with pytest.raises(LengthMismatch):
        make_step(1, 0, [1, 0, 0])
    with pytest.raises(LengthMismatch):
        make_step(-2, 1, [1])


def test_negative_rank_and_support():
    # rank -1 on [0, 2): a single atom of length 2
    assert make_step(-1, 1, [1]) == CHI_02
    # rank 2 on [0, 1/2)
    assert make_step(2, -1, [1, 1]) == CHI_0_HALF


def test_iteration_yields_atoms():
    atoms = list(CHI_HALF_1)
    assert atoms == [
        (DyadicInterval(1, 0), ExactScalar(0)),
        (DyadicInterval(1, 1), ExactScalar(1)),
    ]


def test_refine_rank():
    assert refine_rank(CHI_01, 1).values == (1, 1)
    assert refine_rank(CHI_01, 0) is CHI_01
    assert refine_rank(CHI_0_HALF, 2).values == (1, 1, 0, 0)
    with pytest.raises(RankError):
        refine_rank(CHI_0_HALF, 0)


def test_refinement_preserves_function(rng):
    for _ in range(20):
        f = random_step(rng)
        assert refine_rank(f, f.rank + 2) == f
        assert extend_support(f, f.support_exp + 1) == f


def test_linear_combination_examples():
    assert linear_combine(1, CHI_02, -1, CHI_02).is_zero()
    assert linear_combine(1, CHI_0_HALF, 1, CHI_HALF_1) == CHI_01
    assert linear_combine(HALF, CHI_01, HALF, CHI_12) == scale(CHI_02, HALF)
    assert linear_combination(
        [(1, CHI_0_HALF), (1, CHI_HALF_1), (1, CHI_12)]
    ) == CHI_02
    with pytest.raises(ValueError):
        linear_combination([])


def test_operators():
    assert CHI_0_HALF + CHI_HALF_1 == CHI_01
    assert CHI_02 - CHI_12 == CHI_01
    assert (-CHI_01 + CHI_01).is_zero()
    assert CHI_02 * HALF == scale(CHI_02, HALF)
    assert 2 * CHI_01 == make_step(0, 0, [2])
    assert CHI_01 * CHI_12 == zero_function()


@pytest.mark.parametrize('f, h, expected', [
    (CHI_01, '0', CHI_01),
    (CHI_01, '1', CHI_12),
    (CHI_0_HALF, '1/2', CHI_HALF_1),
    (CHI_12, '3', make_step(0, 2, [0, 0, 1, 0])),
])
def test_dyadic_translate(f, h, expected):
    assert dyadic_translate(f, DyadicRational.parse(h)) == expected


def test_dyadic_translate_pointwise(rng):
    for _ in range(20):
        f = random_step(rng)
        h = DyadicRational(rng.randrange(64), rng.randrange(4))
        g = dyadic_translate(f, h)
        for _ in range(10):
            x = DyadicRational(rng.randrange(256), 5)
            assert evaluate(g, x) == evaluate(f, dyadic_add(x, h))


def test_translation_below_rank_is_identity(rng):
    for _ in range(20):
        f = random_step(rng)
        # Any h < 2**-rank
        h = DyadicRational(rng.randrange(1, 16), f.rank + 4)
        assert dyadic_translate(f, h) == f


def test_dilations():
    assert dilate(CHI_02, CONTRACT) == CHI_01
    assert dilate(CHI_01, EXPAND) == CHI_02
    assert dilate(CHI_12, CONTRACT) == CHI_HALF_1
    assert dilate_power(CHI_01, -3) == make_step(0, 3, [1] * 8)
    with pytest.raises(ValueError):
        dilate(CHI_01, 'sideways')


def test_dilate_pointwise(rng):
    for _ in range(20):
        f = random_step(rng)
        g = dilate(f, CONTRACT)
        for _ in range(10):
            x = DyadicRational(rng.randrange(256), 5)
            assert evaluate(g, x) == evaluate(f, x.shift(1))


@pytest.mark.parametrize('f, expected', [
    (CHI_01, 1),
    (scale(CHI_02, HALF), 1),
    (make_step(1, 0, [3, 5]), 4),
    (make_step(-1, 1, [3]), 6),
])
def test_integrate(f, expected):
    assert integrate(f) == expected


@pytest.mark.parametrize('f, g, expected', [
    (CHI_01, CHI_01, 1),
    (CHI_01, CHI_12, 0),
    (CHI_0_HALF, CHI_01, HALF),
])
def test_inner(f, g, expected):
    assert inner(f, g) == expected


def test_inner_is_hermitian(rng):
    for _ in range(20):
        f = random_step(rng)
        g = random_step(rng)
        assert inner(f, g) == inner(g, f).conjugate()
        assert inner(f, f).is_real and inner(f, f).re >= 0


def test_pointwise_mul():
    chi_half_three_halves = make_step(1, 1, [0, 1, 1, 0])
    assert pointwise_mul(CHI_01, chi_half_three_halves) == CHI_HALF_1
    assert pointwise_mul(CHI_02, CHI_12) == CHI_12
    assert pointwise_mul(CHI_02, zero_function()).is_zero()


def test_restrict():
    assert restrict(CHI_02, 0) == CHI_01
    assert restrict(CHI_02, 0).support_exp == 0
    assert restrict(CHI_01, 2).values == (1, 0, 0, 0)
    # Window inside the first atom
    narrow = restrict(make_step(-2, 2, [5]), -1)
    assert (narrow.rank, narrow.support_exp, narrow.values) == (1, -1, (5,))


def test_restrict_to_support_is_identity(rng):
    for _ in range(20):
        f = random_step(rng)
        assert restrict(f, f.support_exp) == f


def test_evaluate():
    f = make_step(1, 1, [1, 2, 3, 4])
    assert evaluate(f, DyadicRational.parse('3/4')) == 2
    assert evaluate(f, DyadicRational.parse('3/2')) == 4
    assert evaluate(f, DyadicRational.parse('2')) == 0


@pytest.mark.parametrize('interval, shape', [
    ((0, 0), (0, 0, (1,))),
    ((1, 0), (1, -1, (1,))),
    ((1, 1), (1, 0, (0, 1))),
    ((0, 1), (0, 1, (0, 1))),
    ((-1, 1), (-1, 2, (0, 1))),
])
def test_indicator(interval, shape):
    f = indicator(interval)
    assert (f.rank, f.support_exp, f.values) == shape


def test_canonical():
    padded = make_step(2, 1, [1, 1, 1, 1, 0, 0, 0, 0])
    reduced = canonical(padded)
    assert (reduced.rank, reduced.support_exp, reduced.values) == \
        (0, 0, (1,))
    assert reduced == padded
    zero = canonical(zero_function(3, 2))
    assert (zero.rank, zero.support_exp, zero.values) == (0, 0, (0,))
    assert minimal_rank(make_step(2, 0, [1, 1, 0, 0])) == 1


def test_canonical_keeps_the_function(rng):
    for _ in range(30):
        f = random_step(rng)
        refined = extend_support(refine_rank(f, f.rank + 1), f.support_exp + 2)
        assert canonical(refined) == f
        assert canonical(refined).values == canonical(f).values


@pytest.mark.parametrize('rank, index', [
    (0, 0), (0, 1), (0, 5), (2, 3), (3, 6), (-1, 3), (-2, 1), (1, 7),
])
def test_generate_indicator(rank, index):
    interval = DyadicInterval(rank, index)
    assert generate_indicator(interval) == indicator(interval)


def test_dyadic_interval():
    interval = DyadicInterval(2, 3)
    assert str(interval) == '[3/2^2, 1)'
    assert interval.length == Fraction(1, 4)
    assert interval.contains(DyadicRational.parse('7/8'))
    assert not interval.contains(DyadicRational(1))
    assert list(interval.subintervals(3)) == [
        DyadicInterval(3, 6), DyadicInterval(3, 7)
    ]
    with pytest.raises(ValueError):
        list(interval.subintervals(1))
    with pytest.raises(ValueError):
        DyadicInterval(0, -1)


def test_indicator_pointwise(rng):
    for _ in range(20):
        interval = DyadicInterval(rng.randrange(-2, 4), rng.randrange(0, 9))
        f = indicator(interval)
        for _ in range(10):
            x = DyadicRational(rng.randrange(1024), 5)
            assert evaluate(f, x) == (1 if interval.contains(x) else 0)
