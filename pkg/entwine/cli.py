from __future__ import annotations

import argparse
import logging
import os
import sys

from entwine.commands import create_command
from entwine.dsl import DslError
from entwine.errors import EntwineError
from entwine.utils import DEFAULT_SEED, SEED_ENV, VERSION

log = logging.getLogger(__name__)


def build_parser():
    parser = argparse.ArgumentParser(
        prog='entwine', description='Certificates for entwining structures over small linear categories')
    parser.add_argument('--version', action='version', version=f'%(prog)s {VERSION}')
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument('--format', choices=('json', 'text'), default='json')
    shared.add_argument('--verbose', action='store_true', help='debug logging, witnesses in text output')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('verify', parents=[shared], help='structural verification of every block')
    p.add_argument('file')
    p = sub.add_parser('sep', parents=[shared], help='separability of F and G')
    p.add_argument('--functor', choices=('F', 'G'), default=None, help='check only one functor')
    p.add_argument('file')
    p = sub.add_parser('frobenius', parents=[shared], help='Frobenius property with witnesses')
    p.add_argument('--seed', type=int, default=None, help=f'search seed (default: ${SEED_ENV} or 0)')
    p.add_argument('--trials', type=int, default=None, help='sampled points for large searches')
    p.add_argument('file')
    p = sub.add_parser('galois', parents=[shared], help='Galois analysis of the coactions')
    p.add_argument('file')
    return parser


def resolve_seed(explicit, environ=None):
    """--seed, else $ENTWINE_SEED, else the default seed"""
    if explicit is not None:
        return explicit
    environ = os.environ if environ is None else environ
    raw = environ.get(SEED_ENV, '').strip()
    if not raw:
        return DEFAULT_SEED
    try:
        return int(raw)
    except ValueError:
        raise EntwineError(f'{SEED_ENV}={raw!r} is not an integer')


def main(argv=None):
    """
    Run one command and print its report on stdout. Returns the exit code:
    0 when every check passes, 1 for a negative verdict on a well-formed
    instance, 2 for input errors.
    """
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code

    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr,
                        format='%(levelname)s %(name)s: %(message)s')
    props = {'format': args.format, 'verbose': args.verbose}
    try:
        if args.command == 'sep':
            props['functor'] = args.functor
        if args.command == 'frobenius':
            props['seed'] = resolve_seed(args.seed)
            if args.trials is not None:
                props['trials'] = args.trials
        command = create_command(args.command, props)
        with open(args.file, 'rb') as f:
            data = f.read()
        report = command.execute(data)
    except DslError as err:
        for diagnostic in err.diagnostics:
            print(f'{args.file}:{diagnostic}', file=sys.stderr)
        return 2
    except (OSError, EntwineError) as err:
        print(f'entwine: {err}', file=sys.stderr)
        return 2
    print(command.render(report))
    return report.exit_code


if __name__ == '__main__':
    sys.exit(main())
