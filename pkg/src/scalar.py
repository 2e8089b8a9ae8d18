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

from fractions import Fraction
import numbers
import re


_SCALAR_RE = re.compile(r'''
    \A\s*
    (?P<re>[-+]?\d+(?:/\d+)?)?      # real part
    (?:\s*(?P<im>[-+]\s*\d*(?:/\d+)?)i)?   # imaginary part
    \s*\Z
''', re.VERBOSE)


def _as_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (numbers.Rational, str)):
        return Fraction(value)
    raise TypeError(
        "Cannot use {!r} as an exact rational".format(value)
    )


class ExactScalar(object):
    """
    A complex number whose real and imaginary parts are exact rationals.

    Instances are immutable. Every arithmetic operation is carried out on
    Fraction objects, so no rounding ever takes place.
    """

    __slots__ = ('_re', '_im')

    def __init__(self, re=0, im=0):
        self._re = _as_fraction(re)
        self._im = _as_fraction(im)

    @classmethod
    def _make(cls, re, im):
        # Internal fast path, both parts are already Fractions
        scalar = object.__new__(cls)
        scalar._re = re
        scalar._im = im
        return scalar

    @classmethod
    def coerce(cls, value):
        if isinstance(value, ExactScalar):
            return value
        if isinstance(value, complex):
            raise TypeError("Inexact complex value {!r}".format(value))
        if isinstance(value, str):
            return cls.parse(value)
        return cls(value)

    @classmethod
    def parse(cls, text):
        """
        Reads "p/q", "p/q+r/si", "-r/si" and the like.
        """
        match = _SCALAR_RE.match(text)
        if not match or not (match.group('re') or match.group('im')):
            raise ValueError("Malformed exact scalar {!r}".format(text))
        re_part = Fraction(match.group('re') or 0)
        im_part = Fraction(0)
        if match.group('im') is not None:
            im_text = match.group('im').replace(' ', '')
            if im_text in ('+', '-'):
                im_text += '1'
            im_part = Fraction(im_text)
        return cls._make(re_part, im_part)

    @classmethod
    def from_parts(cls, re_num, re_den, im_num=0, im_den=1):
        return cls._make(Fraction(re_num, re_den), Fraction(im_num, im_den))

    @property
    def re(self):
        return self._re

    @property
    def im(self):
        return self._im

    @property
    def is_real(self):
        return self._im == 0

    def parts(self):
        """
        Returns (re_num, re_den, im_num, im_den) in lowest terms
        """
        return (
            self._re.numerator, self._re.denominator,
            self._im.numerator, self._im.denominator,
        )

    def conjugate(self):
        return ExactScalar._make(self._re, -self._im)

    def abs_squared(self):
        return self._re * self._re + self._im * self._im

    def __add__(self, other):
        if not isinstance(other, ExactScalar):
            try:
                other = ExactScalar.coerce(other)
            except TypeError:
                return NotImplemented
        if not self._im and not other._im:
            return ExactScalar._make(self._re + other._re, self._im)
        return ExactScalar._make(self._re + other._re, self._im + other._im)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, ExactScalar):
            try:
                other = ExactScalar.coerce(other)
            except TypeError:
                return NotImplemented
        if not self._im and not other._im:
            return ExactScalar._make(self._re - other._re, self._im)
        return ExactScalar._make(self._re - other._re, self._im - other._im)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return ExactScalar._make(-self._re, -self._im)

    def __mul__(self, other):
        if isinstance(other, ExactScalar):
            if not other._im and not self._im:
                return ExactScalar._make(self._re * other._re, self._im)
            return ExactScalar._make(
                self._re * other._re - self._im * other._im,
                self._re * other._im + self._im * other._re,
            )
        if isinstance(other, numbers.Rational):
            return ExactScalar._make(self._re * other, self._im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, numbers.Rational):
            if other == 0:
                raise ZeroDivisionError("ExactScalar division by zero")
            return ExactScalar._make(
                self._re / other, self._im / other
            )
        if not isinstance(other, ExactScalar):
            return NotImplemented
        denominator = other.abs_squared()
        if denominator == 0:
            raise ZeroDivisionError("ExactScalar division by zero")
        numerator = self * other.conjugate()
        return ExactScalar._make(
            numerator._re / denominator, numerator._im / denominator
        )

    def __bool__(self):
        return bool(self._re) or bool(self._im)

    def __eq__(self, other):
        if isinstance(other, ExactScalar):
            return self._re == other._re and self._im == other._im
        if isinstance(other, numbers.Rational):
            return self._im == 0 and self._re == other
        return NotImplemented

    def __hash__(self):
        if not self._im:
            return hash(self._re)
        return hash((self._re, self._im))

    def __complex__(self):
        return complex(float(self._re), float(self._im))

    def __str__(self):
        if not self._im:
            return str(self._re)
        return '{}{}{}i'.format(
            self._re, '+' if self._im > 0 else '-', abs(self._im)
        )

    def __repr__(self):
        return '<ExactScalar {}>'.format(self)


ZERO = ExactScalar()
ONE = ExactScalar(1)
