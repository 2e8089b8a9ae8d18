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
Text codecs for the command-line front end: step functions as CSV, masks as
JSON and the audit report as JSON or CSV. Every value travels as an exact
numerator/denominator pair.
"""

import csv
import io
import json

from . import _LOGGER
from .constants import (
    MASK_JSON_KEY, STEP_FLOAT_HEADER, STEP_HEADER, STEP_VALUE_HEADER,
    THEOREM1_HEADER
)
from .refine import Mask
from .scalar import ExactScalar
from .stepfn import StepFunction


class MalformedInput(Exception):
    def __init__(self, path, line, column, message):
        super().__init__(
            "{}:{}:{}: {}".format(path, line, column, message)
        )
        self.path = path
        self.line = line
        self.column = column


def _int_field(row, column, path, line):
    try:
        return int(row[column])
    except IndexError as ex:
        raise MalformedInput(
            path, line, column + 1, "Missing field"
        ) from ex
    except ValueError as ex:
        raise MalformedInput(
            path, line, column + 1,
            "Expected an integer, got {!r}".format(row[column])
        ) from ex


def _expect_header(reader, expected, path):
    try:
        row = next(reader)
    except StopIteration as ex:
        raise MalformedInput(
            path, reader.line_num + 1, 1, "Truncated file"
        ) from ex
    if tuple(row[:len(expected)]) != tuple(expected):
        raise MalformedInput(
            path, reader.line_num, 1,
            "Expected header {!r}".format(','.join(expected))
        )
    return row


def read_step(stream, path='<stream>'):
    reader = csv.reader(stream)
    _expect_header(reader, STEP_HEADER, path)
    try:
        shape = next(reader)
    except StopIteration as ex:
        raise MalformedInput(
            path, reader.line_num + 1, 1, "Truncated file"
        ) from ex
    rank = _int_field(shape, 0, path, reader.line_num)
    support_exp = _int_field(shape, 1, path, reader.line_num)
    if rank + support_exp < 0:
        raise MalformedInput(
            path, reader.line_num, 1,
            "Rank {} and support exponent {} leave no atoms".format(
                rank, support_exp
            )
        )
    _expect_header(reader, STEP_VALUE_HEADER, path)

    expected = 1 << (rank + support_exp)
    values = []
    for row in reader:
        if not row:
            continue
        line = reader.line_num
        index = _int_field(row, 0, path, line)
        if index != len(values):
            raise MalformedInput(
                path, line, 1,
                "Expected index {}, got {}".format(len(values), index)
            )
        re_num, re_den, im_num, im_den = (
            _int_field(row, column, path, line) for column in range(1, 5)
        )
        if re_den <= 0 or im_den <= 0:
            raise MalformedInput(
                path, line, 3 if re_den <= 0 else 5,
                "Denominators must be positive"
            )
        values.append(ExactScalar.from_parts(re_num, re_den, im_num, im_den))

    if len(values) != expected:
        raise MalformedInput(
            path, reader.line_num, 1,
            "Expected {} value rows, got {}".format(expected, len(values))
        )
    _LOGGER.debug(
        "Read step function of rank %d on [0, 2^%d) from %s",
        rank, support_exp, path
    )
    return StepFunction._trusted(rank, support_exp, tuple(values))


def parse_step(path):
    with open(path, 'r', encoding='UTF8', newline='') as step_file:
        return read_step(step_file, path)


def write_step(f, stream, with_float=False):
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(STEP_HEADER)
    writer.writerow((f.rank, f.support_exp))
    value_header = STEP_VALUE_HEADER
    if with_float:
        value_header += STEP_FLOAT_HEADER
    writer.writerow(value_header)
    for index, value in enumerate(f.values):
        row = (index,) + value.parts()
        if with_float:
            row += (repr(float(value.re)), repr(float(value.im)))
        writer.writerow(row)


def emit_step_csv(f, with_float=False):
    buf = io.StringIO()
    write_step(f, buf, with_float)
    return buf.getvalue()


def emit_csv(f):
    return emit_step_csv(f).encode('utf-8')


def _scalar_from_json(entry, path, position):
    if not isinstance(entry, list) or len(entry) != 4 or \
            not all(isinstance(n, int) and not isinstance(n, bool)
                    for n in entry):
        raise MalformedInput(
            path, 1, 1,
            "Coefficient {} must be [re_num, re_den, im_num, im_den]".format(
                position
            )
        )
    if entry[1] <= 0 or entry[3] <= 0:
        raise MalformedInput(
            path, 1, 1,
            "Coefficient {} has a non-positive denominator".format(position)
        )
    return ExactScalar.from_parts(*entry)


def read_mask_coefficients(text, path='<stream>'):
    """
    The raw coefficient list of a mask document, before any normalisation
    """
    try:
        document = json.loads(text)
    except json.JSONDecodeError as ex:
        raise MalformedInput(path, ex.lineno, ex.colno, ex.msg) from ex
    if not isinstance(document, dict) or MASK_JSON_KEY not in document:
        raise MalformedInput(
            path, 1, 1, "Expected an object with a {!r} key".format(
                MASK_JSON_KEY
            )
        )
    entries = document[MASK_JSON_KEY]
    if not isinstance(entries, list) or not entries:
        raise MalformedInput(
            path, 1, 1, "{!r} must be a non-empty list".format(MASK_JSON_KEY)
        )
    return [
        _scalar_from_json(entry, path, position)
        for position, entry in enumerate(entries)
    ]


def read_mask_file(path):
    with open(path, 'r', encoding='UTF8') as mask_file:
        return read_mask_coefficients(mask_file.read(), path)


def parse_mask(path):
    return Mask(read_mask_file(path))


def emit_mask_json(coefficients):
    if isinstance(coefficients, Mask):
        coefficients = coefficients.coefficients
    document = {
        MASK_JSON_KEY: [
            list(ExactScalar.coerce(c).parts()) for c in coefficients
        ]
    }
    return json.dumps(document, indent=2, sort_keys=True) + '\n'


def emit_cascade(iterates, with_float=False):
    """
    One step CSV block per iterate, each introduced by an ``iterate,<k>``
    line and separated from the next by a blank line
    """
    buf = io.StringIO()
    for position, (step, f) in enumerate(iterates):
        if position:
            buf.write('\n')
        buf.write('iterate,{}\n'.format(step))
        write_step(f, buf, with_float)
    return buf.getvalue()


def _string_map(mapping):
    return {str(n): str(mapping[n]) for n in mapping}


def emit_theorem1_json(report):
    document = {
        'n_range': list(report.n_range),
        'block_zero': str(report.block_zero),
        'fhat_values': _string_map(report.fhat_values),
        'paper_values': _string_map(report.paper_constant),
        'deviates': {
            str(n): report.deviates[n] for n in report.deviates
        },
        'partial_sums': _string_map(report.partial_sums),
    }
    return json.dumps(document, indent=2, sort_keys=True) + '\n'


def emit_theorem1_csv(report):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator='\n')
    writer.writerow(THEOREM1_HEADER)
    for n in report.fhat_values:
        computed = report.fhat_values[n].re
        printed = report.paper_constant[n].re
        writer.writerow((
            n,
            computed.numerator, computed.denominator,
            printed.numerator, printed.denominator,
        ))
    return buf.getvalue()


def emit_witness_json(bound, terms, total):
    document = {
        'N': terms,
        'bound': str(bound),
        'partial_sum': str(total),
    }
    return json.dumps(document, indent=2, sort_keys=True) + '\n'


def emit_witness_csv(bound, terms, total):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator='\n')
    writer.writerow(('N', 'bound', 'partial_sum_num', 'partial_sum_den'))
    writer.writerow(
        (terms, bound, total.re.numerator, total.re.denominator)
    )
    return buf.getvalue()
