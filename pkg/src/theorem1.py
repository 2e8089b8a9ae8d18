# MIT License
#
# Copyright (c) 2017 Matt Boyer
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in
# all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

"""
Exact audit of the computations behind the non-existence result for
multiplication by x on transform-invariant dyadic distribution spaces.

For f(x) = x chi_[0,1)(x) the transform f-hat(y) = int_0^1 x psi(x, y) dx
depends only on [y]; on the block [2**n, 2**n + 1) it is the integral of x
against (-1)**x_{-n-1}. Pairing y f-hat(y) with g(y) = -1/(n + 1) on the
same blocks gives a series whose partial sums grow without bound.

The printed closed form -2**-(n+1) is kept as an audit target: values here
come from exact quadrature and are reported side by side with it.
"""

from fractions import Fraction
import functools
import itertools

from . import _LOGGER
from .constants import QUADRATURE_BLOCK_LIMIT
from .dyadic_core import DyadicRational, walsh, walsh_constancy_rank
from .scalar import ExactScalar
from .tuples import Theorem1Report, UNIT_INTERVAL
from .utils import IndexDict, power_of_two
from .wft import moment_integral, walsh_signs


class QuadratureMismatch(Exception):
    pass


def fhat_at(y):
    """
    The defining integral of f-hat at a single point y, by exact quadrature
    over the atoms of [0, 1) on which psi(., y) is constant
    """
    y = DyadicRational.coerce(y)
    integer_part = y.floor()
    rank = walsh_constancy_rank(integer_part)
    # psi(x, y) = w_[y](x) * w_[x](y) and [x] = 0 on [0, 1)
    second_factor = walsh(0, y)
    weighted = sum(
        sign * (2 * q + 1)
        for q, sign in enumerate(walsh_signs(integer_part, rank))
    )
    return ExactScalar(
        Fraction(second_factor * weighted, 2) * power_of_two(-2 * rank)
    )


def _block_samples(n):
    start = DyadicRational(1 << n)
    return (start, DyadicRational((4 << n) + 3, 2))


def alternating_block_value(n):
    """
    sum((-1)**k (2k + 1), k < 2**(n + 1)) / 2**(2n + 3), summed pairwise:
    each of the 2**n pairs contributes -2
    """
    return ExactScalar(Fraction(-2 * (1 << n), 1 << (2 * n + 3)))


def paper_value(n):
    return ExactScalar(-power_of_two(-(n + 1)))


@functools.lru_cache(maxsize=None)
def fhat_on_block(n):
    """
    The constant value of f-hat on [2**n, 2**n + 1)
    """
    if n < 0:
        raise ValueError("Block indices are non-negative")
    closed_form = alternating_block_value(n)
    if n > QUADRATURE_BLOCK_LIMIT:
        return closed_form

    value = moment_integral(1 << n, UNIT_INTERVAL)
    for y in _block_samples(n):
        sampled = fhat_at(y)
        if sampled != value:
            raise QuadratureMismatch(
                "f-hat({}) = {} but block {} integrates to {}".format(
                    y, sampled, n, value
                )
            )
    if value != closed_form:
        raise QuadratureMismatch(
            "Block {} integrates to {}, the alternating sum gives {}".format(
                n, value, closed_form
            )
        )
    _LOGGER.debug("Block %d: f-hat = %s", n, value)
    return value


def block_term(n):
    """
    The n-th term of (g, y f-hat(y)): |f-hat| on the block times the integral
    of y over it, weighted by 1/(n + 1)
    """
    magnitude = abs(fhat_on_block(n).re)
    y_integral = (1 << n) + Fraction(1, 2)
    return Fraction(1, n + 1) * magnitude * y_integral


def iter_partial_sums():
    total = Fraction(0)
    for n in itertools.count(1):
        total += block_term(n)
        yield n, ExactScalar(total)


def pairing_partial_sum(terms):
    if terms < 1:
        raise ValueError("Partial sums start at N = 1")
    for n, total in iter_partial_sums():
        if n == terms:
            return total


def harmonic_lower_bound(terms):
    """
    (H_{N+1} - 1) / 4
    """
    return ExactScalar(
        sum((Fraction(1, n + 1) for n in range(1, terms + 1)), Fraction(0))
        / 4
    )


def termwise_lower_bound_holds(terms):
    """
    Every term dominates 1 / (4 (n + 1)), hence S_N >= (H_{N+1} - 1) / 4
    """
    return all(
        block_term(n) >= Fraction(1, 4 * (n + 1))
        for n in range(1, terms + 1)
    )


def divergence_witness(bound, max_terms=None):
    """
    The first (N, S_N) with S_N > bound
    """
    bound = Fraction(bound)
    for n, total in iter_partial_sums():
        if total.re > bound:
            _LOGGER.info("S_%d = %s exceeds %s", n, float(total.re), bound)
            return n, total
        if max_terms is not None and n >= max_terms:
            raise ValueError(
                "No partial sum up to N = {} exceeds {}".format(n, bound)
            )


def theorem1_report(n_max, terms_max):
    if n_max < 1 or terms_max < 1:
        raise ValueError("The report needs n_max >= 1 and N_max >= 1")

    fhat_values = IndexDict()
    paper_constant = IndexDict()
    deviates = IndexDict()
    for n in range(1, n_max + 1):
        fhat_values[n] = fhat_on_block(n)
        paper_constant[n] = paper_value(n)
        deviates[n] = fhat_values[n] != paper_constant[n]

    partial_sums = IndexDict(
        itertools.islice(iter_partial_sums(), terms_max)
    )
    return Theorem1Report(
        n_range=(1, n_max),
        block_zero=fhat_on_block(0),
        fhat_values=fhat_values,
        paper_constant=paper_constant,
        deviates=deviates,
        partial_sums=partial_sums,
    )
