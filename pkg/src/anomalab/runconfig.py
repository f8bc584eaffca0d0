# Copyright 2026 The anomalab Authors.

"""
RunConfig: one validated run of an experiment.  Values come from an optional
JSON configuration file with the command-line flags merged over it; the
merged document is checked against schema/runconfig.schema.json, which
rejects unknown keys.
"""

import json
import logging
import os
import threading
from dataclasses import dataclass, field

import jsonschema

from anomalab import settings
from anomalab.errors import ConfigError, ValidationError
from anomalab.experiments import check_params
from anomalab.messages import get_message

logger = logging.getLogger(__name__)

SCHEMA_PATH = os.path.join(os.path.dirname(os.path.abspath(__file__)), "schema",
                           "runconfig.schema.json")

_schema_lock = threading.Lock()
_validator = None


def _get_validator():
    global _validator
    with _schema_lock:
        if _validator is None:
            with open(SCHEMA_PATH, "r", encoding="utf-8") as f:
                schema = json.load(f)
            jsonschema.Draft7Validator.check_schema(schema)
            _validator = jsonschema.Draft7Validator(schema)
        return _validator


def validate_document(document):
    """
    Raises
        ConfigError - naming the first violation, located by its JSON path.
    """
    errors = sorted(_get_validator().iter_errors(document), key=lambda e: list(e.absolute_path))
    if errors:
        first = errors[0]
        where = "/".join(str(p) for p in first.absolute_path) or "<root>"
        raise ConfigError(get_message('ConfigInvalid', "%s: %s" % (where, first.message)))


def load_config_file(path):
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except (OSError, ValueError) as err:
        raise ConfigError(get_message('ConfigUnreadable', path, err))


def parse_eps_sweep(text):
    """
    Read an eps sweep: "start:stop:geometric" halves from start down to stop,
    anything else is a comma-separated list.

    Returns
        list of float
    """
    text = text.strip()
    try:
        if ":" in text:
            start, stop, kind = (part.strip() for part in text.split(":"))
            if kind != "geometric":
                raise ValueError(kind)
            values = settings.geometric_eps(float(start), float(stop))
        else:
            values = [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise ValidationError(get_message('BadEpsSweep', text))
    if not values:
        raise ValidationError(get_message('BadEpsSweep', text))
    return values


@dataclass(frozen=True)
class RunConfig:
    command: str
    params: dict = field(default_factory=dict)
    out: str = None
    plot: bool = False
    verbose: bool = False
    assertion: bool = True
    golden: str = None

    @classmethod
    def build(cls, command, params=None, config_path=None, out=None, plot=None, verbose=None,
              assertion=None, golden=None):
        """
        Merge the configuration file (if any) under the given values and
        validate the result.  None means "not given on the command line".

        Raises
            ConfigError - if the file cannot be read or the merged document
            violates the schema.
            ValidationError - if a parameter does not apply to the command.
        """
        document = load_config_file(config_path) if config_path else {}
        if not isinstance(document, dict):
            raise ConfigError(get_message('ConfigInvalid', "<root>: not an object"))
        document = dict(document)
        merged = dict(document.get("params", {}))
        merged.update({k: v for k, v in (params or {}).items() if v is not None})
        document["params"] = merged
        if command is not None:
            document["command"] = command
        for key, value in (("out", out), ("plot", plot), ("verbose", verbose), ("assert", assertion),
                           ("golden", golden)):
            if value is not None:
                document[key] = value
        validate_document(document)
        if "command" not in document:
            raise ConfigError(get_message('ConfigInvalid', "command: missing"))
        check_params(document["command"], merged)
        logger.debug("run configuration %s", document)
        return cls(document["command"], merged, document.get("out"),
                   document.get("plot", False), document.get("verbose", False),
                   document.get("assert", True), document.get("golden"))

    def as_dict(self):
        return {"command": self.command, "params": dict(self.params), "out": self.out,
                "plot": self.plot, "verbose": self.verbose, "assert": self.assertion,
                "golden": self.golden}
