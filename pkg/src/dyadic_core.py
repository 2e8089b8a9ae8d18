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
Points of the dyadic half-line and the digitwise operations on them.

A point x = sum(x_k 2**k) is held as numerator * 2**-scale with a terminating
binary expansion, so bit x_k, the digitwise sum x (+) y and the pairing
(y, x) = sum(y_k x_{-1-k}) can all be computed on plain integers.
"""

from fractions import Fraction
import functools
import numbers
import re

from .constants import BINARY_SUFFIX
from .utils import is_power_of_two, trailing_zeros


class NotDyadic(ValueError):
    pass


_FRACTION_RE = re.compile(
    r'\A\s*(?P<num>\d+)\s*(?:/\s*(?:2\s*\^\s*(?P<exp>\d+)|(?P<den>\d+)))?\s*\Z'
)
_BINARY_RE = re.compile(
    r'\A\s*(?P<int>[01]*)(?:\.(?P<frac>[01]*))?' + BINARY_SUFFIX + r'\s*\Z'
)


@functools.total_ordering
class DyadicRational(object):
    """
    A non-negative rational numerator * 2**-scale in canonical form: either
    scale is 0 or numerator is odd.
    """

    __slots__ = ('_numerator', '_scale')

    def __init__(self, numerator=0, scale=0):
        if not isinstance(numerator, numbers.Integral) or \
                not isinstance(scale, numbers.Integral):
            raise TypeError("Dyadic rationals need integer parts")
        numerator = int(numerator)
        scale = int(scale)
        if numerator < 0:
            raise NotDyadic(
                "Points of the dyadic half-line are non-negative"
            )
        if numerator == 0:
            scale = 0
        elif scale < 0:
            numerator <<= -scale
            scale = 0
        elif scale > 0:
            shift = min(trailing_zeros(numerator), scale)
            numerator >>= shift
            scale -= shift
        self._numerator = numerator
        self._scale = scale

    @classmethod
    def coerce(cls, value):
        if isinstance(value, DyadicRational):
            return value
        if isinstance(value, str):
            return cls.parse(value)
        if isinstance(value, numbers.Integral):
            return cls(value)
        if isinstance(value, numbers.Rational):
            return cls.from_fraction(Fraction(value))
        raise TypeError("Cannot read {!r} as a dyadic rational".format(value))

    @classmethod
    def from_fraction(cls, value):
        value = Fraction(value)
        denominator = value.denominator
        if not is_power_of_two(denominator):
            raise NotDyadic(
                "{} has no terminating binary expansion".format(value)
            )
        return cls(value.numerator, denominator.bit_length() - 1)

    @classmethod
    def parse(cls, text):
        """
        Accepts "p", "p/q" with q a power of two, "p/2^s" and binary
        literals such as "10.011b"
        """
        binary = _BINARY_RE.match(text)
        if binary:
            int_digits = binary.group('int') or ''
            frac_digits = binary.group('frac') or ''
            if not int_digits and not frac_digits:
                raise NotDyadic("Empty binary literal {!r}".format(text))
            return cls(int(int_digits + frac_digits or '0', 2),
                       len(frac_digits))

        decimal = _FRACTION_RE.match(text)
        if not decimal:
            raise NotDyadic("Malformed dyadic rational {!r}".format(text))
        numerator = int(decimal.group('num'))
        if decimal.group('exp') is not None:
            return cls(numerator, int(decimal.group('exp')))
        if decimal.group('den') is not None:
            denominator = int(decimal.group('den'))
            if denominator == 0:
                raise NotDyadic("Zero denominator in {!r}".format(text))
            return cls.from_fraction(Fraction(numerator, denominator))
        return cls(numerator)

    @property
    def numerator(self):
        return self._numerator

    @property
    def scale(self):
        return self._scale

    def to_fraction(self):
        return Fraction(self._numerator, 1 << self._scale)

    def floor(self):
        return self._numerator >> self._scale

    def fractional(self):
        return DyadicRational(
            self._numerator & ((1 << self._scale) - 1), self._scale
        )

    def shift(self, exponent):
        """
        Returns self * 2**exponent
        """
        return DyadicRational(self._numerator, self._scale - exponent)

    def integral_at_rank(self, rank):
        """
        Returns self * 2**rank when that is an integer, None otherwise
        """
        shifted = self.shift(rank)
        if shifted.scale:
            return None
        return shifted.numerator

    def min_rank(self):
        """
        The smallest rank j for which self * 2**j is an integer
        """
        if self._numerator == 0:
            return None
        if self._scale:
            return self._scale
        return -trailing_zeros(self._numerator)

    def exponent_bound(self):
        """
        The smallest e such that self < 2**e
        """
        if self._numerator == 0:
            return None
        return self._numerator.bit_length() - self._scale

    def binary(self):
        if not self._scale:
            return '{:b}{}'.format(self._numerator, BINARY_SUFFIX)
        digits = '{:b}'.format(self._numerator).rjust(self._scale + 1, '0')
        return '{}.{}{}'.format(
            digits[:-self._scale], digits[-self._scale:], BINARY_SUFFIX
        )

    def __bool__(self):
        return bool(self._numerator)

    def __eq__(self, other):
        if isinstance(other, DyadicRational):
            return (self._numerator, self._scale) == \
                (other._numerator, other._scale)
        if isinstance(other, numbers.Rational):
            return self.to_fraction() == other
        return NotImplemented

    def __lt__(self, other):
        if isinstance(other, DyadicRational):
            return self.to_fraction() < other.to_fraction()
        if isinstance(other, numbers.Rational):
            return self.to_fraction() < other
        return NotImplemented

    def __hash__(self):
        return hash(self.to_fraction())

    def __str__(self):
        if not self._scale:
            return str(self._numerator)
        return '{}/2^{}'.format(self._numerator, self._scale)

    def __repr__(self):
        return '<DyadicRational {} = {}>'.format(self, self.binary())


def _common_scale(x, y):
    scale = max(x.scale, y.scale)
    return (
        x.numerator << (scale - x.scale),
        y.numerator << (scale - y.scale),
        scale,
    )


def bit(x, i):
    """
    Digit x_i of x = sum(x_k 2**k), using the terminating expansion
    """
    x = DyadicRational.coerce(x)
    position = i + x.scale
    if position < 0:
        return 0
    return (x.numerator >> position) & 1


def dyadic_add(x, y):
    x = DyadicRational.coerce(x)
    y = DyadicRational.coerce(y)
    x_num, y_num, scale = _common_scale(x, y)
    return DyadicRational(x_num ^ y_num, scale)


# Subtraction and addition coincide on the dyadic half-line
dyadic_sub = dyadic_add


def pairing(y, x):
    """
    (y, x) = sum over k of y_k * x_{-1-k}; finite since both expansions
    terminate
    """
    y = DyadicRational.coerce(y)
    x = DyadicRational.coerce(x)
    total = 0
    remaining = y.numerator
    while remaining:
        lowest = remaining & -remaining
        digit = lowest.bit_length() - 1 - y.scale
        total += bit(x, -1 - digit)
        remaining ^= lowest
    return total


def walsh(k, x):
    if not isinstance(k, numbers.Integral) or k < 0:
        raise ValueError("Walsh functions are indexed by integers k >= 0")
    if pairing(DyadicRational(k), x) & 1:
        return -1
    return 1


def psi(x, y):
    """
    The generalised Walsh kernel w_[y](x) * w_[x](y)
    """
    x = DyadicRational.coerce(x)
    y = DyadicRational.coerce(y)
    return walsh(y.floor(), x) * walsh(x.floor(), y)


def walsh_constancy_rank(k):
    """
    w_k is constant on every dyadic interval of this rank
    """
    return int(k).bit_length()
