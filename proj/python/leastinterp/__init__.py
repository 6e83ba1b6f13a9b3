"""Least interpolation spaces of parametrized germs."""

import json

from ._core import (
    SCHEMA_VERSION,
    LeastInterpError,
    check_config,
    commands,
    pushforward,
    theta_table,
)
from . import _core

__all__ = [
    "SCHEMA_VERSION",
    "LeastInterpError",
    "check_config",
    "commands",
    "config_text",
    "pushforward",
    "run",
    "theta_table",
]


def config_text(**keys):
    """Render keyword arguments as config lines; lists are comma-joined."""
    lines = []
    for key, value in keys.items():
        if value is None:
            continue
        if isinstance(value, (list, tuple)):
            value = ", ".join(str(v) for v in value)
        lines.append(f"{key} = {value}")
    return "\n".join(lines) + "\n"


def run(command, text=None, **keys):
    """Run a subcommand and return (exit_code, report dict)."""
    if text is None:
        text = config_text(**keys)
    out = _core.run(command, text)
    return out["exit_code"], json.loads(out["json"])
