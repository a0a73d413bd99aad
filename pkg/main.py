# main.py: the orbk command line
import sys
from typing import Optional

import click

from config import settings
from api.api_logger import setup_command_logging
from api.commands import Flags, load_resources, registry, run_command
from api.validators import parse_input
from model.cyclotomic import parse_rational
from model.utils.errors import ExpressionSyntaxError, SemanticError, handle_error
from model.utils.response import render_json

LOG_LEVELS = ['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL']


def read_input(command: str, file: Optional[str]):
    """Read and parse the input for a command; None when the command runs without one."""
    load_resources()
    resource = registry.get(command)
    if file is None:
        if not resource.needs_input:
            return None
        file = '-'
    if file == '-':
        text, path = sys.stdin.read(), '<stdin>'
    else:
        try:
            with open(file, 'rb') as handle:
                raw = handle.read()
        except OSError as err:
            raise SemanticError(f"Cannot read input file: {err.strerror}", details={'path': file})
        try:
            text = raw.decode('utf-8')
        except UnicodeDecodeError as err:
            raise ExpressionSyntaxError(f"Input is not UTF-8: {err.reason}", column=err.start + 1, path=file)
        path = file
    return parse_input(text, path)


def execute(command: str, file: Optional[str], flags: Flags) -> tuple:
    try:
        spec = read_input(command, file)
    except Exception as error:
        return handle_error(error)
    return run_command(command, spec, flags)


@click.command(context_settings={'help_option_names': ['-h', '--help']})
@click.argument('command')
@click.argument('file', required=False)
@click.option('--sector', type=int, multiple=True, help='Sector index (repeatable).')
@click.option('--class', 'classes', type=int, multiple=True, help='Conjugacy class index (repeatable).')
@click.option('--element', help='Element as a word over generator indices, e.g. "0.1.0".')
@click.option('--c1a', help='The pairing c1(TX).A as p/q.')
@click.option('--dim', type=int, help='Complex dimension n.')
@click.option('--genus', type=int, default=0, show_default=True, help='Genus g.')
@click.option('--marks', type=int, help='Number of marked points k.')
@click.option('--iota', multiple=True, help='Degree shifting number p/q of a mark (repeatable).')
@click.option('--cap', type=click.IntRange(min=1), help='Closure cap (overrides ORBK_CAP).')
@click.option('--axis', type=int, multiple=True, help='Coordinate index of the subspace W (repeatable).')
@click.option('--order', type=int, help='Order m of the cyclic local group.')
@click.option('--action', type=int, help='Character k of the action zeta_m^k on W.')
@click.option('--log-level', type=click.Choice(LOG_LEVELS, case_sensitive=False), help='Log level for stderr.')
@click.pass_context
def cli(ctx, command, file, sector, classes, element, c1a, dim, genus, marks, iota, cap, axis, order, action,
        log_level):
    """Exact orbifold cohomology toolkit.

    COMMAND is one of sectors, poincare, euler, ring, pairing, threepoint,
    kpoint, goodmap, lifts, vdim, mckay, verify. FILE is a JSON input
    description; stdin is read when it is omitted and the command needs input.
    """
    logger = setup_command_logging(log_level or settings['ORBK_LOG_LEVEL'], settings['ORBK_LOG_FILE'])
    logger.log_command_start(command, file)
    try:
        flags = Flags(
            sector=tuple(sector),
            classes=tuple(classes),
            element=element,
            c1a=parse_rational(c1a) if c1a is not None else None,
            dim=dim,
            genus=genus,
            marks=marks,
            iota=tuple(parse_rational(v) for v in iota),
            cap=cap,
            axis=tuple(axis),
            order=order,
            action=action,
        )
        payload, code = execute(command, file, flags)
    except Exception as error:
        payload, code = handle_error(error)
    if code and isinstance(payload, dict) and payload.get('success') is False:
        logger.log_error(payload.get('message'), {'error': payload.get('error')})
    click.echo(render_json(payload), nl=False)
    logger.log_command_end(code)
    ctx.exit(code)


if __name__ == '__main__':
    cli()
