"""Agent-based simulation of trust in flood vigilance announcements."""

import json

from ._core import (
    Config,
    ConfigError,
    Error,
    IngestError,
    ProtocolError,
    Scenario,
    Session,
    SessionComplete,
    UsageError,
    blend,
    classify,
    run_policy,
    subjective_risk,
    updated_trust,
)

COLOURS = ("green", "yellow", "orange", "red")


def parse_history(text):
    """Decode a history document produced by ``run_policy`` or ``Session.history_text``."""
    return json.loads(text)


__all__ = [
    "COLOURS",
    "Config",
    "ConfigError",
    "Error",
    "IngestError",
    "ProtocolError",
    "Scenario",
    "Session",
    "SessionComplete",
    "UsageError",
    "blend",
    "classify",
    "parse_history",
    "run_policy",
    "subjective_risk",
    "updated_trust",
]
