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

import collections

from .dyadic_core import DyadicRational


class DyadicInterval(collections.namedtuple('DyadicInterval', (
    'rank',
    'index',
))):
    """
    Delta_{j,k} = [2**-j * k, 2**-j * (k + 1))
    """

    __slots__ = ()

    def __new__(cls, rank, index):
        if index < 0:
            raise ValueError("Dyadic intervals have non-negative indices")
        return super().__new__(cls, int(rank), int(index))

    @property
    def left(self):
        return DyadicRational(self.index, self.rank)

    @property
    def right(self):
        return DyadicRational(self.index + 1, self.rank)

    @property
    def length(self):
        return DyadicRational(1, self.rank)

    def contains(self, x):
        x = DyadicRational.coerce(x).to_fraction()
        return self.left.to_fraction() <= x < self.right.to_fraction()

    def subintervals(self, rank):
        """
        Yields the atoms of a finer rank that tile this interval
        """
        if rank < self.rank:
            raise ValueError(
                "Rank {} is coarser than {}".format(rank, self.rank)
            )
        factor = 1 << (rank - self.rank)
        for index in range(self.index * factor, (self.index + 1) * factor):
            yield DyadicInterval(rank, index)

    def __str__(self):
        return '[{}, {})'.format(self.left, self.right)


Theorem1Report = collections.namedtuple('Theorem1Report', (
    'n_range',
    'block_zero',
    'fhat_values',
    'paper_constant',
    'deviates',
    'partial_sums',
))


CascadeDiagnostics = collections.namedtuple('CascadeDiagnostics', (
    'depth',
    'gap',
    'tolerance',
    'converged',
))


UNIT_INTERVAL = DyadicInterval(0, 0)
