# -*- coding: utf-8 -*-
# file: cli.py
# time: 2026/10/17

import argparse
import sys

from termcolor import colored

from varkit import __version__
from varkit.functional import (catalog_lines, check_report, dimsub_report, identities_report, magnus_report,
                               trprod_report, verbal_lines)
from varkit.utils.exceptions import ResourceCapError
from varkit.utils.logger import get_logger
from varkit.utils.varkit_utils import init_config, override_downward

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_INVALID = 2
EXIT_CAP = 3


class _Parser(argparse.ArgumentParser):

    def error(self, message):
        # usage errors share the exit code of validation errors
        self.print_usage(sys.stderr)
        sys.stderr.write(colored('error: {}\n'.format(message), 'red'))
        raise SystemExit(EXIT_INVALID)


def build_parser():
    parser = _Parser(prog='varkit', description='Exact computations with group representations, '
                                                'polynomial identities and dimension subgroups.')
    parser.add_argument('--version', action='version', version='%(prog)s {}'.format(__version__))
    parser.add_argument('--max-group', type=int, default=None, help='lower the group order cap')
    parser.add_argument('--max-degree', type=int, default=None, help='lower the multilinear degree cap')
    parser.add_argument('--max-assign', type=int, default=None, help='lower the assignment cap')
    parser.add_argument('--verbose', action='store_true', help='log progress to stderr')
    parser.add_argument('--log-dir', default=None, help='also write the log below this directory')
    verbs = parser.add_subparsers(dest='verb', metavar='verb')
    verbs.required = True

    magnus = verbs.add_parser('magnus', help='Magnus expansion of a free-group word')
    magnus.add_argument('word')
    magnus.add_argument('--letters', type=int, required=True)
    magnus.add_argument('--cutoff', type=int, required=True)
    magnus.add_argument('--test-n', type=int, default=None)

    dimsub = verbs.add_parser('dimsub', help='dimension series of a finite group')
    dimsub.add_argument('--group', required=True, help='catalog name or representation file')
    dimsub.add_argument('--coeff', default='Z', help='Z, Q or F<p>')
    dimsub.add_argument('--nmax', type=int, required=True)
    dimsub.add_argument('--gamma', action='store_true', help='compare with the lower central series')

    identities = verbs.add_parser('identities', help='multilinear identities of an algebra')
    source = identities.add_mutually_exclusive_group(required=True)
    source.add_argument('--algebra', help='algebra file (kind=algebra)')
    source.add_argument('--rep', help='representation file; its enveloping algebra is used')
    identities.add_argument('--degree', type=int, required=True)

    trprod = verbs.add_parser('trprod', help='triangular product of two representations')
    trprod.add_argument('--left', required=True)
    trprod.add_argument('--right', required=True)
    trprod.add_argument('--hom', default='full')

    check = verbs.add_parser('check', help='check an action or polynomial identity')
    check.add_argument('--rep', required=True)
    check.add_argument('--identity', required=True, help='action:<element> or poly:<polynomial>')

    verbal = verbs.add_parser('verbal', help='verbal ideal and D_Sigma of a finite group')
    verbal.add_argument('--group', required=True)
    verbal.add_argument('--coeff', default='Q')
    verbal.add_argument('--identity', action='append', required=True, help='polynomial; may be repeated')

    verbs.add_parser('catalog', help='list the shipped groups')
    return parser


def _run(args, config):
    if args.verb == 'magnus':
        return EXIT_OK, magnus_report(args.word, args.letters, args.cutoff, args.test_n, config)
    if args.verb == 'dimsub':
        return EXIT_OK, dimsub_report(args.group, args.coeff, args.nmax, args.gamma, config)
    if args.verb == 'identities':
        return EXIT_OK, identities_report(args.rep or args.algebra, args.degree, bool(args.rep), config)
    if args.verb == 'trprod':
        return EXIT_OK, trprod_report(args.left, args.right, args.hom).splitlines()
    if args.verb == 'check':
        holds, lines = check_report(args.rep, args.identity, config)
        return (EXIT_OK if holds else EXIT_FALSE), lines
    if args.verb == 'verbal':
        return EXIT_OK, verbal_lines(args.group, args.coeff, args.identity, config)
    return EXIT_OK, catalog_lines(config)


def _load_config():
    try:
        return init_config()
    except AssertionError:
        raise ValueError('caps out of range, check the VARKIT_* environment variables')


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        config = _load_config()
        override_downward(config, max_group_order=args.max_group, max_degree=args.max_degree,
                          max_assignments=args.max_assign)
        if args.verbose:
            config.log_level = 'INFO'
            config.show_progress = True
        get_logger(args.log_dir, log_type=args.verb, level=config.log_level)
        code, lines = _run(args, config)
    except ResourceCapError as e:
        sys.stderr.write(colored('resource cap: {}\n'.format(e), 'yellow'))
        return EXIT_CAP
    except (ValueError, OSError) as e:
        sys.stderr.write(colored('error: {}\n'.format(e), 'red'))
        return EXIT_INVALID
    sys.stdout.write(''.join(line + '\n' for line in lines))
    sys.stdout.flush()
    return code


if __name__ == '__main__':
    sys.exit(main())
