"""Utility classes for extending click functionality"""
import click
from lectl.utils.errors import LectlError, ValidationError

VALIDATION_EXIT_CODE = 1
RUNTIME_EXIT_CODE = 2


class OptionMutex(click.Option):
    """Option that refuses to be combined with the options named in ``exclusive_with``"""

    def __init__(self, *args, **kwargs):
        """Create OptionMutex object for mutually excluding options"""
        self.exclusive_with: list = kwargs.pop('exclusive_with')

        assert self.exclusive_with, '"exclusive_with" parameter required'
        kwargs['help'] = '{0} [Conflicts with {1}]'.format(
            kwargs.get('help', ''), ', '.join('"{0}"'.format(name) for name in self.exclusive_with)).strip()

        super().__init__(*args, **kwargs)

    def handle_parse_result(self, ctx, opts, args):
        """Handle parse result"""
        if self.name in opts:
            for other in self.exclusive_with:
                if other in opts:
                    raise click.UsageError('"{0}" is mutually exclusive with "{1}".'.format(self.name, other))
        return super().handle_parse_result(ctx, opts, args)


class LectlGroup(click.Group):
    """Command group that turns lectl errors into click errors with the documented exit codes"""

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except ValidationError as error:
            raise _exit_error(error, VALIDATION_EXIT_CODE) from error
        except LectlError as error:
            raise _exit_error(error, RUNTIME_EXIT_CODE) from error


def _exit_error(error, exit_code):
    exception = click.ClickException(str(error))
    exception.exit_code = exit_code
    return exception
