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
Dyadic step functions: finite linear combinations of indicators of dyadic
intervals.

A StepFunction of rank j and support exponent m is constant on every
Delta_{j,k} and vanishes outside [0, 2**m); it stores its 2**(m + j) values
in index order. Ranks and support exponents may be negative as long as
m + j >= 0. No minimal form is kept, comparisons refine on demand.
"""

from .dyadic_core import DyadicRational
from .scalar import ExactScalar, ZERO, ONE
from .tuples import DyadicInterval
from .utils import power_of_two


CONTRACT = 'contract'
EXPAND = 'expand'


class LengthMismatch(ValueError):
    pass


class RankError(ValueError):
    pass


class StepFunction(object):
    __slots__ = ('_rank', '_support_exp', '_values')

    def __init__(self, rank, support_exp, values):
        rank = int(rank)
        support_exp = int(support_exp)
        if rank + support_exp < 0:
            raise LengthMismatch(
                "Rank {} and support exponent {} leave no atoms".format(
                    rank, support_exp
                )
            )
        values = tuple(ExactScalar.coerce(v) for v in values)
        expected = 1 << (rank + support_exp)
        if len(values) != expected:
            raise LengthMismatch(
                "Expected {} values at rank {} on [0, 2^{}), got {}".format(
                    expected, rank, support_exp, len(values)
                )
            )
        self._rank = rank
        self._support_exp = support_exp
        self._values = values

    @classmethod
    def _trusted(cls, rank, support_exp, values):
        # Values are already a tuple of ExactScalar of the right length
        step = object.__new__(cls)
        step._rank = rank
        step._support_exp = support_exp
        step._values = values
        return step

    @property
    def rank(self):
        return self._rank

    @property
    def support_exp(self):
        return self._support_exp

    @property
    def values(self):
        return self._values

    def __len__(self):
        return len(self._values)

    def __iter__(self):
        for index, value in enumerate(self._values):
            yield DyadicInterval(self._rank, index), value

    def is_zero(self):
        return not any(self._values)

    def __eq__(self, other):
        if not isinstance(other, StepFunction):
            return NotImplemented
        _, _, (mine, theirs) = _aligned(self, other)
        return mine == theirs

    __hash__ = None

    def __add__(self, other):
        if not isinstance(other, StepFunction):
            return NotImplemented
        return linear_combine(ONE, self, ONE, other)

    def __sub__(self, other):
        if not isinstance(other, StepFunction):
            return NotImplemented
        return linear_combine(ONE, self, -ONE, other)

    def __neg__(self):
        return scale(self, -ONE)

    def __mul__(self, factor):
        if isinstance(factor, StepFunction):
            return pointwise_mul(self, factor)
        try:
            factor = ExactScalar.coerce(factor)
        except TypeError:
            return NotImplemented
        return scale(self, factor)

    __rmul__ = __mul__

    def __repr__(self):
        return '<StepFunction rank {}, support [0, 2^{}), {} values>'.format(
            self._rank, self._support_exp, len(self._values)
        )


def make_step(rank, support_exp, values):
    return StepFunction(rank, support_exp, values)


def zero_function(rank=0, support_exp=0):
    return StepFunction._trusted(
        rank, support_exp, (ZERO,) * (1 << (rank + support_exp))
    )


def indicator(interval):
    """
    chi_Delta for Delta = Delta_{j,k}, on the smallest [0, 2**m) holding it.
    Accepts a DyadicInterval or a (rank, index) pair.
    """
    interval = DyadicInterval(*interval)
    length_exp = interval.index.bit_length()
    values = [ZERO] * (1 << length_exp)
    values[interval.index] = ONE
    return StepFunction._trusted(
        interval.rank, length_exp - interval.rank, tuple(values)
    )


def refine_rank(f, rank):
    if rank < f.rank:
        raise RankError(
            "Cannot refine rank {} down to {}".format(f.rank, rank)
        )
    if rank == f.rank:
        return f
    repeat = 1 << (rank - f.rank)
    values = tuple(v for v in f.values for _ in range(repeat))
    return StepFunction._trusted(rank, f.support_exp, values)


def extend_support(f, support_exp):
    if support_exp < f.support_exp:
        raise RankError(
            "Support [0, 2^{}) does not cover [0, 2^{})".format(
                support_exp, f.support_exp
            )
        )
    if support_exp == f.support_exp:
        return f
    padding = (1 << (support_exp + f.rank)) - len(f)
    return StepFunction._trusted(
        f.rank, support_exp, f.values + (ZERO,) * padding
    )


def restrict(f, support_exp):
    """
    f * chi_[0, 2**support_exp), carried on exactly that window
    """
    if support_exp >= f.support_exp:
        return extend_support(f, support_exp)
    if support_exp + f.rank < 0:
        # The window lies inside the first atom
        return StepFunction._trusted(-support_exp, support_exp, f.values[:1])
    size = 1 << (support_exp + f.rank)
    return StepFunction._trusted(f.rank, support_exp, f.values[:size])


def _aligned(*functions):
    rank = max(f.rank for f in functions)
    support_exp = max(f.support_exp for f in functions)
    return rank, support_exp, [
        extend_support(refine_rank(f, rank), support_exp).values
        for f in functions
    ]


def scale(f, factor):
    factor = ExactScalar.coerce(factor)
    return StepFunction._trusted(
        f.rank, f.support_exp, tuple(factor * v for v in f.values)
    )


def linear_combination(terms):
    """
    Sum of a_i * f_i over (a_i, f_i) pairs, at the finest rank and the
    widest support among the f_i
    """
    terms = [(ExactScalar.coerce(a), f) for a, f in terms]
    if not terms:
        raise ValueError("An empty linear combination has no rank")
    rank, support_exp, all_values = _aligned(*(f for _, f in terms))
    result = [ZERO] * (1 << (rank + support_exp))
    for (factor, _), values in zip(terms, all_values):
        if not factor:
            continue
        result = [
            acc + factor * v if v else acc
            for acc, v in zip(result, values)
        ]
    return StepFunction._trusted(rank, support_exp, tuple(result))


def linear_combine(a, f, b, g):
    return linear_combination(((a, f), (b, g)))


def dyadic_translate(f, h):
    """
    x -> f(x (+) h)
    """
    h = DyadicRational.coerce(h)
    if not h:
        return f
    rank = max(f.rank, h.min_rank())
    support_exp = max(f.support_exp, h.exponent_bound())
    f = extend_support(refine_rank(f, rank), support_exp)
    offset = h.integral_at_rank(rank)
    values = f.values
    return StepFunction._trusted(
        rank, support_exp, tuple(values[k ^ offset] for k in range(len(f)))
    )


def dilate_power(f, exponent):
    """
    x -> f(2**exponent * x)
    """
    return StepFunction._trusted(
        f.rank + exponent, f.support_exp - exponent, f.values
    )


def dilate(f, direction):
    if direction == CONTRACT:
        return dilate_power(f, 1)
    if direction == EXPAND:
        return dilate_power(f, -1)
    raise ValueError("Unknown dilation {!r}".format(direction))


def integrate(f):
    return sum(f.values, ZERO) * power_of_two(-f.rank)


def inner(f, g):
    """
    The integral of f * conj(g), also used as the pairing (f, phi)
    """
    rank, _, (f_values, g_values) = _aligned(f, g)
    total = ZERO
    for a, b in zip(f_values, g_values):
        if a and b:
            total += a * b.conjugate()
    return total * power_of_two(-rank)


def pointwise_mul(f, g):
    rank, support_exp, (f_values, g_values) = _aligned(f, g)
    return StepFunction._trusted(rank, support_exp, tuple(
        a * b if a and b else ZERO for a, b in zip(f_values, g_values)
    ))


def evaluate(f, x):
    x = DyadicRational.coerce(x)
    if x.to_fraction() >= power_of_two(f.support_exp):
        return ZERO
    return f.values[x.shift(f.rank).floor()]


def canonical(f):
    """
    The equal function on the smallest support and then at the coarsest rank
    """
    if f.is_zero():
        return zero_function()
    rank, support_exp, values = f.rank, f.support_exp, f.values
    changed = True
    while changed:
        changed = False
        while rank + support_exp > 0 and not any(values[len(values) // 2:]):
            values = values[:len(values) // 2]
            support_exp -= 1
            changed = True
        while rank + support_exp > 0 and values[0::2] == values[1::2]:
            values = values[0::2]
            rank -= 1
            changed = True
    return StepFunction._trusted(rank, support_exp, values)


def minimal_rank(f):
    return canonical(f).rank


def generate_indicator(interval):
    """
    Builds chi_Delta out of chi_[0,1) with the shift x -> x (+) 1 and the
    binary dilations alone.

    Delta_{j,k} = {x : 2**j x (+) k in [0, 1)}, and a shift by 2**i is a
    shift by 1 conjugated with i dilations.
    """
    f = indicator(DyadicInterval(0, 0))
    position = 0
    remaining = interval.index
    while remaining:
        if remaining & 1:
            f = dilate_power(f, position)
            f = dyadic_translate(f, 1)
            f = dilate_power(f, -position)
        remaining >>= 1
        position += 1
    return dilate_power(f, interval.rank)
