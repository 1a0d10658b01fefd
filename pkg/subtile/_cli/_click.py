import sys

import click

from .._errors import EXIT_USAGE, EXIT_VALIDATION, SubtileError


class SubtileGroup(click.Group):
    """
    Command group that turns errors into the documented exit codes.

    Usage errors exit with 1, malformed input and failed checks with 2, exhausted
    tile caps with 3 and inconclusive searches with 4. Diagnostics go to standard
    error.
    """

    def main(self, args=None, prog_name=None, standalone_mode=True, **extra):
        try:
            rv = super().main(args, prog_name, standalone_mode=False, **extra)
            code = rv if isinstance(rv, int) else 0
        except click.UsageError as e:
            e.show()
            code = EXIT_USAGE
        except click.ClickException as e:
            e.show()
            code = e.exit_code
        except click.Abort:
            click.echo("Aborted!", err=True)
            code = EXIT_USAGE
        except SubtileError as e:
            click.echo(f"Error: {e}", err=True)
            code = e.exit_code
        except ValueError as e:
            click.echo(f"Error: {e}", err=True)
            code = EXIT_VALIDATION

        if not standalone_mode:
            return code
        sys.exit(code)
