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
Refinement equations phi(x) = sum(c_k phi(2x (+) k)) on the dyadic half-line.

The mask m(y) = 1/2 sum(c_k w_k(y)) of coefficients c_0..c_K is constant on
the atoms of rank r = bit_length(K) and has period 1. Since m(0) = 1 for a
normalised mask, m is identically 1 on [0, 2**-r), which is what makes the
infinite product for phi-hat finite on every window [0, 2**N).
"""

from . import _LOGGER
from .constants import MASK_COEFFICIENT_SUM, PANEL_MAX_RANK
from .dyadic_core import DyadicRational, walsh, walsh_constancy_rank
from .scalar import ExactScalar, ZERO, ONE
from .stepfn import (
    CONTRACT, StepFunction, dilate, dilate_power, dyadic_translate,
    indicator, inner, integrate, linear_combination, pointwise_mul,
    refine_rank, restrict, scale
)
from .tuples import CascadeDiagnostics, DyadicInterval, UNIT_INTERVAL
from .utils import power_of_two
from .wft import wft


class SumNotTwo(ValueError):
    def __init__(self, total):
        super().__init__(
            "Mask coefficients sum to {}, not {}".format(
                total, MASK_COEFFICIENT_SUM
            )
        )
        self.total = total


class ZeroSum(ValueError):
    pass


class NegativeCoefficient(ValueError):
    pass


def _derive_table(coefficients, rank):
    table = []
    for q in range(1 << rank):
        y = DyadicRational(q, rank)
        total = ZERO
        for k, c in enumerate(coefficients):
            if walsh(k, y) > 0:
                total += c
            else:
                total -= c
        table.append(total / 2)
    return tuple(table)


class Mask(object):
    def __init__(self, coefficients):
        coefficients = tuple(ExactScalar.coerce(c) for c in coefficients)
        if not coefficients:
            raise ValueError("A mask needs at least one coefficient")
        total = sum(coefficients, ZERO)
        if total != MASK_COEFFICIENT_SUM:
            raise SumNotTwo(total)
        self._coefficients = coefficients
        self._resolution = walsh_constancy_rank(self.top_index)
        self._table = _derive_table(coefficients, self._resolution)

    @property
    def coefficients(self):
        return self._coefficients

    @property
    def top_index(self):
        return len(self._coefficients) - 1

    @property
    def resolution(self):
        return self._resolution

    @property
    def table(self):
        return self._table

    @property
    def is_nonnegative(self):
        return all(c.is_real and c.re >= 0 for c in self._coefficients)

    def __call__(self, y):
        return mask_eval(self, y)

    def __eq__(self, other):
        if not isinstance(other, Mask):
            return NotImplemented
        return self._coefficients == other._coefficients

    def __hash__(self):
        return hash(self._coefficients)

    def __repr__(self):
        return '<Mask K={} r={}: {}>'.format(
            self.top_index, self._resolution,
            ', '.join(str(c) for c in self._coefficients)
        )


def mask_new(coefficients):
    return Mask(coefficients)


def mask_normalize(coefficients):
    coefficients = [ExactScalar.coerce(c) for c in coefficients]
    total = sum(coefficients, ZERO)
    if not total:
        raise ZeroSum("Mask coefficients sum to zero")
    factor = ExactScalar(MASK_COEFFICIENT_SUM) / total
    return [factor * c for c in coefficients]


def mask_table_at(mask, rank):
    """
    The mask values re-derived on the atoms of any rank >= its resolution
    """
    if rank < mask.resolution:
        raise ValueError(
            "The mask is only constant on atoms of rank {} or finer".format(
                mask.resolution
            )
        )
    return _derive_table(mask.coefficients, rank)


def mask_eval(mask, y):
    y = DyadicRational.coerce(y)
    atom = y.fractional().shift(mask.resolution).floor()
    return mask.table[atom]


def mask_step(mask, j, support_exp):
    """
    y -> m(2**-j y) on [0, 2**support_exp)
    """
    # Build z -> m(z) on [0, 2**(N - j)) first, then stretch it by 2**j
    z_support = support_exp - j
    z_rank = max(mask.resolution, -z_support)
    coarsen = z_rank - mask.resolution
    period = 1 << mask.resolution
    values = tuple(
        mask.table[(q >> coarsen) % period]
        for q in range(1 << (z_rank + z_support))
    )
    return dilate_power(
        StepFunction._trusted(z_rank, z_support, values), -j
    )


def transition(mask, f):
    """
    Tf(x) = sum(c_k f(2x (+) k))
    """
    return linear_combination(
        (c, dilate(dyadic_translate(f, k), CONTRACT))
        for k, c in enumerate(mask.coefficients)
    )


def iterate_rank(mask, rank, k):
    """
    The rank carried by T**k f when f has the given rank
    """
    for _ in range(k):
        if mask.top_index >= 1:
            # The shift by 1 needs integer translates to be exact
            rank = max(rank, 0)
        rank += 1
    return rank


def cascade(mask, f0, kmax):
    if kmax < 1:
        raise ValueError("The cascade needs at least one step")
    iterates = []
    current = f0
    for step in range(1, kmax + 1):
        current = transition(mask, current)
        _LOGGER.debug(
            "Cascade step %d: rank %d, support [0, 2^%d)",
            step, current.rank, current.support_exp
        )
        iterates.append(current)
    return iterates


def wft_iterate_identity(mask, f, k, window=None):
    """
    f-hat(2**-k y) * prod(m(2**-j y), j = 1..k) on [0, 2**window).

    The default window is the support of the transform of T**k f, where both
    sides agree exactly.
    """
    if window is None:
        window = iterate_rank(mask, f.rank, k)
    product = restrict(dilate_power(wft(f), -k), window)
    for j in range(1, k + 1):
        product = pointwise_mul(product, mask_step(mask, j, window))
    return product


def phihat_window(mask, support_exp):
    """
    The product of m(2**-j y) over all j >= 1, restricted to [0, 2**N).
    Factors with j >= N + r are identically 1 there, so the product stops at
    J = N + r - 1.
    """
    if support_exp < 0:
        raise ValueError("The window exponent must be non-negative")
    depth = support_exp + mask.resolution - 1
    product = StepFunction._trusted(-support_exp, support_exp, (ONE,))
    for j in range(1, depth + 1):
        product = pointwise_mul(product, mask_step(mask, j, support_exp))
    return refine_rank(
        product, max(product.rank, mask.resolution - 1, -support_exp)
    )


def stabilization_depth(mask, support_exp):
    """
    The cascade depth from which the transform of T**k chi_[0,1) agrees with
    phihat_window on [0, 2**N). Past the mask product's J = N + r - 1 the
    dilated transform of chi_[0,1) must also be 1 on the window, which needs
    k >= N; the two differ only for a single-tap mask.
    """
    if support_exp < 0:
        raise ValueError("The window exponent must be non-negative")
    return max(support_exp + mask.resolution - 1, support_exp, 1)


def solve_refinable(mask, kmax, start=None):
    """
    T**kmax applied to the start function (chi_[0,1) by default), divided by
    the start function's integral
    """
    if start is None:
        start = indicator(UNIT_INTERVAL)
    total = integrate(start)
    if not total:
        raise ZeroSum("The start function has zero integral")
    current = start
    for _ in range(kmax):
        current = transition(mask, current)
    if total != 1:
        current = scale(current, ONE / total)
    return current


def check_support(f, n):
    """
    True when every non-zero value of f sits on an atom inside [0, 2**n)
    """
    bound = power_of_two(n)
    width = power_of_two(-f.rank)
    for index, value in enumerate(f.values):
        if value and (index + 1) * width > bound:
            return False
    return True


def check_nonnegative_cascade(mask, kmax):
    for k, c in enumerate(mask.coefficients):
        if not c.is_real or c.re < 0:
            raise NegativeCoefficient(
                "Coefficient c_{} = {} is not a non-negative real".format(
                    k, c
                )
            )
    for step, iterate in enumerate(
        cascade(mask, indicator(UNIT_INTERVAL), kmax), start=1
    ):
        for value in iterate.values:
            if not value.is_real or value.re < 0:
                _LOGGER.warning(
                    "Iterate %d takes the value %s with non-negative "
                    "coefficients", step, value
                )
                return False
    return True


def is_fixed_point(mask, f):
    return transition(mask, f) == f


def default_panel(mask):
    """
    Every atom Delta_{j,q} inside [0, 2**r) with -r <= j <= PANEL_MAX_RANK
    """
    resolution = mask.resolution
    return [
        DyadicInterval(rank, index)
        for rank in range(-resolution, PANEL_MAX_RANK + 1)
        for index in range(1 << (rank + resolution))
    ]


def transform_pairing(mask, f, k, atom):
    """
    (T**k f, chi_atom), evaluated on the transform side: the transform of
    chi_atom lives on [0, 2**rank), so only that window of the product is
    needed
    """
    atom_hat = wft(indicator(atom))
    iterate_hat = wft_iterate_identity(
        mask, f, k, window=atom_hat.support_exp
    )
    return inner(iterate_hat, atom_hat)


def pairing_panel(mask, f, k, atoms=None):
    if atoms is None:
        atoms = default_panel(mask)
    return {
        DyadicInterval(*atom): transform_pairing(mask, f, k, atom)
        for atom in atoms
    }


def uniqueness_gap(mask, f, g, k, atoms=None):
    """
    The largest squared modulus of the difference between the pairings of
    T**k f and T**k g over the panel
    """
    f_pairings = pairing_panel(mask, f, k, atoms)
    g_pairings = pairing_panel(mask, g, k, atoms)
    return max(
        (f_pairings[atom] - g_pairings[atom]).abs_squared()
        for atom in f_pairings
    )


def cascade_diagnostics(mask, f, g, k, tolerance, atoms=None):
    gap = uniqueness_gap(mask, f, g, k, atoms)
    return CascadeDiagnostics(
        depth=k,
        gap=gap,
        tolerance=tolerance,
        converged=gap < tolerance * tolerance,
    )
