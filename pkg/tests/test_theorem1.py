from fractions import Fraction
import itertools

import pytest

from dyadwalsh import theorem1
from dyadwalsh.constants import QUADRATURE_BLOCK_LIMIT
from dyadwalsh.dyadic_core import DyadicRational, psi, walsh_constancy_rank
from dyadwalsh.scalar import ExactScalar
from dyadwalsh.theorem1 import (
    QuadratureMismatch, alternating_block_value, block_term,
    divergence_witness, fhat_at, fhat_on_block, harmonic_lower_bound,
    iter_partial_sums, pairing_partial_sum, paper_value,
    termwise_lower_bound_holds, theorem1_report
)


def kernel_quadrature(y):
    """
    int_0^1 x psi(x, y) dx, evaluating psi itself at the left end of every
    atom on which it is constant
    """
    rank = walsh_constancy_rank(y.floor())
    total = Fraction(0)
    for q in range(1 << rank):
        left = DyadicRational(q, rank)
        total += psi(left, y) * Fraction(2 * q + 1, 2 << (2 * rank))
    return total


@pytest.mark.parametrize('n, expected', [
    (0, Fraction(-1, 4)),
    (1, Fraction(-1, 8)),
    (2, Fraction(-1, 16)),
    (3, Fraction(-1, 32)),
])
def test_fhat_on_block(n, expected):
    assert fhat_on_block(n) == expected


def test_fhat_on_block_rejects_negative():
    with pytest.raises(ValueError):
        fhat_on_block(-1)


def test_block_mismatch_raises(monkeypatch):
    monkeypatch.setattr(theorem1, 'fhat_at', lambda y: ExactScalar(0))
    fhat_on_block.cache_clear()
    try:
        with pytest.raises(QuadratureMismatch):
            fhat_on_block(2)
    finally:
        fhat_on_block.cache_clear()


def test_fhat_halves_from_block_to_block():
    for n in range(1, 20):
        assert fhat_on_block(n).re / fhat_on_block(n + 1).re == 2


def test_quadrature_matches_alternating_sum():
    for n in range(QUADRATURE_BLOCK_LIMIT + 1):
        assert fhat_on_block(n) == alternating_block_value(n)
    # Beyond the quadrature limit the closed form is used directly
    n = QUADRATURE_BLOCK_LIMIT + 5
    assert fhat_on_block(n) == Fraction(-1, 1 << (n + 2))


@pytest.mark.parametrize('y', [
    '0', '1/2', '1', '7/4', '2', '5/2', '3', '13/4', '4', '6', '23/8', '9',
])
def test_fhat_at_matches_kernel(y):
    y = DyadicRational.parse(y)
    assert fhat_at(y) == kernel_quadrature(y)


def test_fhat_constant_on_blocks(rng):
    for n in range(0, 7):
        for _ in range(5):
            y = DyadicRational((1 << n << 6) + rng.randrange(64), 6)
            assert fhat_at(y) == fhat_on_block(n)


def test_fhat_below_one_is_the_integral():
    assert fhat_at(DyadicRational.parse('3/8')) == Fraction(1, 2)


def test_paper_value_deviates_by_a_factor_two():
    for n in range(1, 12):
        assert paper_value(n) == -Fraction(1, 1 << (n + 1))
        assert paper_value(n) == 2 * fhat_on_block(n)


def test_partial_sums():
    assert pairing_partial_sum(1) == Fraction(5, 32)
    assert pairing_partial_sum(2) == Fraction(1, 4)
    with pytest.raises(ValueError):
        pairing_partial_sum(0)


def test_block_term_closed_form():
    for n in range(1, 40):
        expected = (Fraction(1, 4) + Fraction(1, 1 << (n + 3))) / (n + 1)
        assert block_term(n) == expected


def test_partial_sums_increase():
    sums = [
        total.re for _, total in itertools.islice(iter_partial_sums(), 60)
    ]
    assert all(a < b for a, b in zip(sums, sums[1:]))


def test_harmonic_lower_bound():
    assert termwise_lower_bound_holds(10 ** 4)
    for terms in (1, 10, 250):
        assert pairing_partial_sum(terms).re >= \
            harmonic_lower_bound(terms).re
    assert harmonic_lower_bound(1) == Fraction(1, 8)


def test_divergence_witness():
    terms, total = divergence_witness(1)
    assert total.re > 1
    assert pairing_partial_sum(terms - 1).re <= 1
    assert total == pairing_partial_sum(terms)


def test_divergence_witness_for_two():
    terms, total = divergence_witness(2)
    assert total.re > 2
    assert terms > 1000


def test_divergence_witness_gives_up():
    with pytest.raises(ValueError):
        divergence_witness(10, max_terms=100)


def test_report():
    report = theorem1_report(3, 3)
    assert report.n_range == (1, 3)
    assert report.fhat_values == {
        1: Fraction(-1, 8), 2: Fraction(-1, 16), 3: Fraction(-1, 32),
    }
    assert report.paper_constant == {
        1: Fraction(-1, 4), 2: Fraction(-1, 8), 3: Fraction(-1, 16),
    }
    assert report.block_zero == Fraction(-1, 4)
    assert all(report.deviates[n] for n in report.deviates)
    assert list(report.partial_sums) == [1, 2, 3]
    assert report.partial_sums[1] == Fraction(5, 32)


def test_report_partial_sums_monotone():
    report = theorem1_report(2, 30)
    sums = [report.partial_sums[n].re for n in report.partial_sums]
    assert sums == sorted(sums)
    assert len(set(sums)) == len(sums)


def test_report_rejects_empty_ranges():
    with pytest.raises(ValueError):
        theorem1_report(0, 3)
    with pytest.raises(ValueError):
        theorem1_report(3, 0)
