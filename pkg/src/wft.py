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
The Walsh-Fourier transform on dyadic step functions.

For f of rank n supported in [0, 2**m), the kernel psi(x, y) is constant on
every product of a rank-n atom in x with a rank-m atom in y, so the
transform is again a step function, of rank m supported in [0, 2**n).
Writing x = q 2**-n and y = p 2**-m, psi(x, y) is the parity of the bits
shared by q and the (m + n)-bit reversal of p. The fast path is therefore a
natural-order Hadamard butterfly followed by a bit-reversal permutation.
"""

from fractions import Fraction

from . import _LOGGER
from .dyadic_core import DyadicRational, psi, walsh_constancy_rank
from .scalar import ExactScalar, ZERO
from .stepfn import StepFunction, inner, refine_rank
from .tuples import DyadicInterval
from .utils import bit_reversal_permutation, bit_reverse, power_of_two


def _butterfly(values):
    values = list(values)
    size = len(values)
    half = 1
    while half < size:
        for start in range(0, size, half << 1):
            for idx in range(start, start + half):
                a = values[idx]
                b = values[idx + half]
                values[idx] = a + b
                values[idx + half] = a - b
        half <<= 1
    return values


def wft(f):
    width = f.rank + f.support_exp
    _LOGGER.debug("Hadamard butterfly over %d atoms", 1 << width)
    spectrum = _butterfly(f.values)
    # Applied once, after the butterfly, so intermediate values stay
    # integer combinations of the inputs
    factor = power_of_two(-f.rank)
    order = bit_reversal_permutation(width)
    return StepFunction._trusted(
        f.support_exp, f.rank,
        tuple(spectrum[order[p]] * factor for p in range(1 << width))
    )


def _kernel_sum(f, out_rank, out_support):
    # f-hat at the left endpoint of every atom of the requested grid
    points = [
        DyadicRational(q, f.rank) for q in range(len(f))
    ]
    factor = power_of_two(-f.rank)
    result = []
    for p in range(1 << (out_rank + out_support)):
        y = DyadicRational(p, out_rank)
        total = ZERO
        for x, value in zip(points, f.values):
            if not value:
                continue
            if psi(x, y) > 0:
                total += value
            else:
                total -= value
        result.append(total * factor)
    return StepFunction._trusted(out_rank, out_support, tuple(result))


def _kernel_constant_on_atoms(f, out_rank, out_support):
    for q in range(len(f)):
        left = DyadicRational(q, f.rank)
        middle = DyadicRational(2 * q + 1, f.rank + 1)
        for p in range(1 << (out_rank + out_support)):
            y = DyadicRational(p, out_rank)
            if psi(left, y) != psi(middle, y):
                _LOGGER.debug(
                    "Kernel varies on %s at y = %s",
                    DyadicInterval(f.rank, q), y
                )
                return False
    return True


def wft_direct(f, check_kernel=False):
    """
    The transform by explicit kernel summation, O(N**2). With check_kernel
    the input is refined until psi(., y) is constant on its atoms.
    """
    out_rank, out_support = f.support_exp, f.rank
    if check_kernel:
        refinements = 0
        while not _kernel_constant_on_atoms(f, out_rank, out_support):
            f = refine_rank(f, f.rank + 1)
            refinements += 1
            assert(refinements <= 2)
    return _kernel_sum(f, out_rank, out_support)


def verify_duality(f):
    """
    Checks that f-hat has rank = supp exponent of f, supp exponent = rank of
    f, and that it re-derives identically on the grid one rank finer
    """
    fhat = wft(f)
    if (fhat.rank, fhat.support_exp) != (f.support_exp, f.rank):
        return False
    finer = _kernel_sum(f, fhat.rank + 1, fhat.support_exp)
    return finer == fhat


def wft_pairing(f, phi):
    """
    (f-hat, phi) = (f, phi-check); the transform is its own inverse
    """
    return inner(f, wft(phi))


def walsh_signs(k, rank):
    """
    The sign of w_k on each atom of [0, 1) at the given rank, which must be
    at least the bit length of k
    """
    assert(rank >= walsh_constancy_rank(k))
    mask = bit_reverse(k, rank)
    signs = [1]
    # Atom q + 2**t flips the sign of atom q when bit t of the mask is set
    for t in range(rank):
        if (mask >> t) & 1:
            signs += [-s for s in signs]
        else:
            signs += signs
    return signs


def moment_integral(k, interval):
    """
    The integral of x * w_k(x) over a dyadic interval, exactly
    """
    interval = DyadicInterval(*interval)
    rank = max(interval.rank, walsh_constancy_rank(k))
    first = interval.index << (rank - interval.rank)
    # w_k has period 1, so signs on [0, 1) cover every atom
    period = 1 << rank
    signs = walsh_signs(k, rank)
    weighted = 0
    for q in range(first, first + (1 << (rank - interval.rank))):
        # (right**2 - left**2) * 2**(2 * rank) == 2q + 1
        weighted += signs[q % period] * (2 * q + 1)
    return ExactScalar(Fraction(weighted, 2) * power_of_two(-2 * rank))
