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

import argparse
from fractions import Fraction
import logging
import os.path
import sys

from . import PROJECT_DESCRIPTION, PROJECT_NAME
from . import _LOGGER
from .catalog import MaskRegistry
from .constants import (
    DEFAULT_CASCADE_DEPTH, DEFAULT_THEOREM1_BLOCKS, DEFAULT_THEOREM1_TERMS,
    EXIT_MALFORMED_INPUT, EXIT_OK, EXIT_PRECONDITION
)
from .dyadic_core import DyadicRational, NotDyadic, walsh
from .formats import (
    MalformedInput, emit_cascade, emit_mask_json, emit_step_csv,
    emit_theorem1_csv, emit_theorem1_json, emit_witness_csv,
    emit_witness_json, parse_step, read_mask_file
)
from .refine import (
    Mask, cascade, check_support, mask_normalize, phihat_window,
    solve_refinable, stabilization_depth
)
from .stepfn import StepFunction, canonical, indicator, inner
from .theorem1 import divergence_witness, theorem1_report
from .tuples import UNIT_INTERVAL
from .wft import wft


def _write_output(args, text):
    if args.output:
        with open(args.output, 'w', encoding='UTF8', newline='') as out_file:
            out_file.write(text)
        _LOGGER.info("Wrote %s", args.output)
    else:
        sys.stdout.write(text)


def _step_output(args, f):
    if not args.raw:
        f = canonical(f)
    return emit_step_csv(f, with_float=args.float)


def _argument_point(text, position):
    try:
        return DyadicRational.parse(text)
    except NotDyadic as ex:
        raise MalformedInput('<arguments>', 1, position, str(ex)) from ex


def _argument_fraction(text, option):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as ex:
        raise MalformedInput(
            '<arguments>', 1, 1, "{} expects a rational, got {!r}".format(
                option, text
            )
        ) from ex


def _load_mask(args):
    """
    Reads a JSON mask file, or looks the argument up in the mask catalog
    """
    source = args.mask
    if os.path.exists(source):
        coefficients = read_mask_file(source)
    else:
        registry = MaskRegistry()
        registry.load_masks()
        if source not in registry:
            raise MalformedInput(
                source, 0, 0, "Neither a mask file nor a catalog mask"
            )
        coefficients = registry[source].coefficients
    if args.normalize:
        coefficients = mask_normalize(coefficients)
    return Mask(coefficients)


def _start_function(args):
    if args.start is None:
        return indicator(UNIT_INTERVAL)
    return parse_step(args.start)


def _check_depth(k):
    if k < 1:
        raise ValueError("--k must be at least 1, got {}".format(k))


def walsh_value(args):
    x = _argument_point(args.x, 2)
    _write_output(args, '{}\n'.format(walsh(args.k, x)))


def transform(args):
    f = parse_step(args.step_path)
    _LOGGER.info(
        "Transforming rank %d function on [0, 2^%d)", f.rank, f.support_exp
    )
    _write_output(args, _step_output(args, wft(f)))


def show_mask(args):
    mask = _load_mask(args)
    if args.emit_coefficients:
        _write_output(args, emit_mask_json(mask))
        return
    table = StepFunction._trusted(mask.resolution, 0, mask.table)
    _write_output(args, emit_step_csv(table, with_float=args.float))


def run_cascade(args):
    _check_depth(args.k)
    mask = _load_mask(args)
    iterates = cascade(mask, _start_function(args), args.k)
    if args.last:
        _write_output(args, _step_output(args, iterates[-1]))
        return
    if not args.raw:
        iterates = [canonical(f) for f in iterates]
    _write_output(
        args,
        emit_cascade(enumerate(iterates, start=1), with_float=args.float)
    )


def run_phihat(args):
    if args.window < 0:
        raise ValueError("--window must be non-negative")
    mask = _load_mask(args)
    _LOGGER.debug(
        "Cascade transforms match this window from k = %d",
        stabilization_depth(mask, args.window)
    )
    _write_output(args, _step_output(args, phihat_window(mask, args.window)))


def solve(args):
    _check_depth(args.k)
    mask = _load_mask(args)
    start = _start_function(args)
    phi = solve_refinable(mask, args.k, start=start)

    # Smallest s with 2**s >= K + 1, and at least the start's support
    support_exp = max(mask.top_index.bit_length(), start.support_exp)
    supported = check_support(phi, support_exp)
    print(
        'support [0, 2^{}): {}'.format(
            support_exp, 'ok' if supported else 'VIOLATED'
        ),
        file=sys.stderr
    )
    _write_output(args, _step_output(args, phi))


def audit(args):
    if args.bound is not None:
        bound = _argument_fraction(args.bound, '--bound')
        terms, total = divergence_witness(bound)
        if args.format == 'json':
            _write_output(args, emit_witness_json(bound, terms, total))
        else:
            _write_output(args, emit_witness_csv(bound, terms, total))
        return

    report = theorem1_report(args.nmax, args.Nmax)
    if args.format == 'json':
        _write_output(args, emit_theorem1_json(report))
    else:
        _write_output(args, emit_theorem1_csv(report))


def pair(args):
    f = parse_step(args.f_path)
    g = parse_step(args.g_path)
    _write_output(args, '{}\n'.format(inner(f, g)))


def list_masks(args):
    registry = MaskRegistry()
    registry.load_masks()
    lines = []
    for name in registry.names:
        description = registry[name].description
        lines.append('{}\t{}\n'.format(name, description) if description
                     else '{}\n'.format(name))
    _write_output(args, ''.join(lines))


subcmd_actions = {
    'walsh': walsh_value,
    'transform': transform,
    'mask': show_mask,
    'cascade': run_cascade,
    'phihat': run_phihat,
    'solve': solve,
    'theorem1': audit,
    'pair': pair,
    'list': list_masks,
}


def subcmd_dispatcher(arg_ns):
    return subcmd_actions[arg_ns.subcmd](arg_ns)


def build_parser():
    # SUPPRESS keeps a global -v from being reset by the subcommand's default
    verbose_parser = argparse.ArgumentParser(add_help=False)
    verbose_parser.add_argument(
        '-v', '--verbose',
        action='count',
        default=argparse.SUPPRESS,
        help='Give *A LOT* more output.',
    )

    output_parser = argparse.ArgumentParser(add_help=False)
    output_parser.add_argument(
        '-o', '--output',
        default=None,
        help='Output file path, stdout by default'
    )

    step_parser = argparse.ArgumentParser(add_help=False)
    step_parser.add_argument(
        '--float',
        action='store_true',
        help='Append lossy decimal columns for plotting'
    )
    step_parser.add_argument(
        '--raw',
        action='store_true',
        help='Do not reduce step functions to their canonical form'
    )

    mask_parser = argparse.ArgumentParser(add_help=False)
    mask_parser.add_argument(
        'mask',
        help='Mask JSON file path or catalog mask name'
    )
    mask_parser.add_argument(
        '--normalize',
        action='store_true',
        help='Rescale the coefficients so that they sum to 2'
    )

    cli_parser = argparse.ArgumentParser(
        prog=PROJECT_NAME,
        description=PROJECT_DESCRIPTION,
        parents=[verbose_parser],
    )

    subcmd_parsers = cli_parser.add_subparsers(
        title='Subcommands',
        description='%(prog)s implements the following subcommands:',
        dest='subcmd',
    )

    walsh_parser = subcmd_parsers.add_parser(
        'walsh',
        parents=[verbose_parser, output_parser],
        help='Prints the value of a Walsh function at a point',
    )
    walsh_parser.add_argument('k', type=int, help='Walsh function index')
    walsh_parser.add_argument(
        'x',
        help='Dyadic rational, e.g. 3/4, 3/2^2 or 0.11b'
    )

    transform_parser = subcmd_parsers.add_parser(
        'transform',
        parents=[verbose_parser, output_parser, step_parser],
        help='Walsh-Fourier transform of a step function CSV file',
    )
    transform_parser.add_argument('step_path', help='Step function CSV path')

    show_mask_parser = subcmd_parsers.add_parser(
        'mask',
        parents=[verbose_parser, output_parser, mask_parser],
        help='Validates a mask and prints its table',
        description=(
            'Prints the values of m(y) on the atoms of [0, 1) at the mask '
            'resolution as a step function CSV'
        ),
    )
    show_mask_parser.add_argument(
        '--float',
        action='store_true',
        help='Append lossy decimal columns for plotting'
    )
    show_mask_parser.add_argument(
        '--emit-coefficients',
        action='store_true',
        help='Print the mask as JSON instead of its table'
    )

    cascade_parser = subcmd_parsers.add_parser(
        'cascade',
        parents=[verbose_parser, output_parser, step_parser, mask_parser],
        help='Emits the cascade iterates T^k f',
    )
    cascade_parser.add_argument(
        '--k',
        type=int,
        default=DEFAULT_CASCADE_DEPTH,
        help='Number of cascade steps'
    )
    cascade_parser.add_argument(
        '--start',
        default=None,
        help='Start function CSV path, chi_[0,1) by default'
    )
    cascade_parser.add_argument(
        '--last',
        action='store_true',
        help='Only emit the final iterate'
    )

    phihat_parser = subcmd_parsers.add_parser(
        'phihat',
        parents=[verbose_parser, output_parser, step_parser, mask_parser],
        help='Emits the mask product on a window [0, 2^N)',
    )
    phihat_parser.add_argument(
        '--window',
        type=int,
        required=True,
        help='Window exponent N'
    )

    solve_parser = subcmd_parsers.add_parser(
        'solve',
        parents=[verbose_parser, output_parser, step_parser, mask_parser],
        help='Approximates the refinable function by cascade iteration',
    )
    solve_parser.add_argument(
        '--k',
        type=int,
        default=DEFAULT_CASCADE_DEPTH,
        help='Number of cascade steps'
    )
    solve_parser.add_argument(
        '--start',
        default=None,
        help='Start function CSV path, chi_[0,1) by default'
    )

    theorem1_parser = subcmd_parsers.add_parser(
        'theorem1',
        parents=[verbose_parser, output_parser],
        help='Audits the transform of x chi_[0,1) and its divergent pairing',
    )
    theorem1_parser.add_argument(
        '--nmax',
        type=int,
        default=DEFAULT_THEOREM1_BLOCKS,
        help='Last block index n'
    )
    theorem1_parser.add_argument(
        '--Nmax',
        type=int,
        default=DEFAULT_THEOREM1_TERMS,
        help='Last partial sum index N'
    )
    theorem1_parser.add_argument(
        '--format',
        choices=('json', 'csv'),
        default='json',
        help='Report format'
    )
    theorem1_parser.add_argument(
        '--bound',
        default=None,
        help='Find the first partial sum exceeding this rational bound'
    )

    pair_parser = subcmd_parsers.add_parser(
        'pair',
        parents=[verbose_parser, output_parser],
        help='Prints the exact inner product of two step functions',
    )
    pair_parser.add_argument('f_path', help='Step function CSV path')
    pair_parser.add_argument('g_path', help='Step function CSV path')

    list_parser = subcmd_parsers.add_parser(
        'list',
        parents=[verbose_parser, output_parser],
        help='Displays catalog masks',
        description=(
            'Displays the names of all masks known to {}'.format(PROJECT_NAME)
        ),
    )
    return cli_parser


def main(argv=None):
    cli_parser = build_parser()
    cli_args = cli_parser.parse_args(argv)
    if getattr(cli_args, 'verbose', 0):
        _LOGGER.setLevel(logging.DEBUG)
    else:
        _LOGGER.setLevel(logging.INFO)

    if not cli_args.subcmd:
        # No subcommand specified, print the usage and bail
        cli_parser.print_help()
        return EXIT_OK

    try:
        subcmd_dispatcher(cli_args)
    except MalformedInput as ex:
        _LOGGER.error("Malformed input: %s", ex)
        return EXIT_MALFORMED_INPUT
    except OSError as ex:
        _LOGGER.error("Cannot read input: %s", ex)
        return EXIT_MALFORMED_INPUT
    except UnicodeDecodeError as ex:
        _LOGGER.error("Input is not UTF-8: %s", ex)
        return EXIT_MALFORMED_INPUT
    except ValueError as ex:
        _LOGGER.error("%s", ex)
        return EXIT_PRECONDITION
    return EXIT_OK
