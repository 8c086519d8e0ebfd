"""
moodal.logging

Records about a single model carry its name and kind, both in the message
prefix and as the ``model`` and ``model_kind`` record attributes.
"""
from logging import Logger, LoggerAdapter
from typing import Any, MutableMapping, Optional, Tuple


class ModelLoggerAdapter(LoggerAdapter):
    """
    Prefixes messages with ``<name> (<kind>)``, or just the name while the
    kind is unknown. Per-call ``extra`` values are merged with the model's
    instead of replacing them.

    :param logger: The logger to wrap.
    :param name: The model name.
    :param kind: The model kind, if known yet.
    :param extra: Further record attributes.
    """

    def __init__(self, logger: Logger, name: str, kind: Optional[str] = None, **extra):
        super().__init__(logger, dict(extra, model=name, model_kind=kind))

    @classmethod
    def for_model(cls, logger: Logger, model, **extra) -> "ModelLoggerAdapter":
        return cls(logger, model.name, model.kind, **extra)

    @property
    def prefix(self) -> str:
        if self.extra["model_kind"] is None:
            return self.extra["model"]
        return "{0} ({1})".format(self.extra["model"], self.extra["model_kind"])

    def process(
        self, msg: str, kwargs: MutableMapping[str, Any]
    ) -> Tuple[str, MutableMapping[str, Any]]:
        kwargs["extra"] = {**self.extra, **kwargs.get("extra", {})}
        return "{0} - {1}".format(self.prefix, msg), kwargs
