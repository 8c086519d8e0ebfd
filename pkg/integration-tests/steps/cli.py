import shlex

from behave import *
from click.testing import CliRunner

from moodal.cli import cli


@when('the user runs "moodal {arguments}"')
def step_impl(context, arguments):
    args = [
        context.models_dir + "/" + arg[len("models/") :] if arg.startswith("models/") else arg
        for arg in shlex.split(arguments)
    ]
    result = CliRunner().invoke(cli, ["--no-colour"] + args)
    context.output = result.output
    context.exit_code = result.exit_code
