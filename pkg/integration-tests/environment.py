import logging
import os


def before_all(context):
    context.models_dir = os.path.join(os.getcwd(), "integration-tests", "models")
    logging.getLogger("moodal").setLevel(logging.CRITICAL)


def before_scenario(context, scenario):
    os.environ.pop("MOODAL_CAP", None)
    context.error = None
    context.response = None
    context.output = None
    context.exit_code = None
    context.model = None
    context.moodal_context = None


def after_scenario(context, scenario):
    logging.getLogger("moodal").setLevel(logging.CRITICAL)
