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


# Exit statuses of the command-line front end
EXIT_OK = 0
EXIT_MALFORMED_INPUT = 1
EXIT_PRECONDITION = 2

# Step-function CSV layout
STEP_HEADER = ('rank', 'support_exp')
STEP_VALUE_HEADER = ('index', 're_num', 're_den', 'im_num', 'im_den')
STEP_FLOAT_HEADER = ('re_float_lossy', 'im_float_lossy')

# Audit table layout
THEOREM1_HEADER = (
    'n', 'computed_num', 'computed_den', 'paper_value_num', 'paper_value_den',
)

MASK_JSON_KEY = 'coefficients'

# The binary literal suffix accepted and emitted for dyadic rationals
BINARY_SUFFIX = 'b'

# Atoms of rank up to this value make up the default pairing panel
PANEL_MAX_RANK = 3

# Pairings closer than this (in modulus) count as converged
UNIQUENESS_TOLERANCE = Fraction(1, 10**6)

# Sum of the coefficients of a normalised mask, i.e. m(0) = 1
MASK_COEFFICIENT_SUM = 2

DEFAULT_CASCADE_DEPTH = 10
DEFAULT_THEOREM1_BLOCKS = 8
DEFAULT_THEOREM1_TERMS = 16

# Blocks up to this index are evaluated by exact quadrature over all
# 2**(n + 1) atoms; beyond it the pairwise alternating-sum identity is used
QUADRATURE_BLOCK_LIMIT = 20
