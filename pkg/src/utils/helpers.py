"""
Helper utilities for the Enriques toolkit.
"""
import json
import time
from collections.abc import Iterator
from contextlib import contextmanager
from typing import Any

import yaml


def render_document(document: dict[str, Any], as_json: bool = False) -> str:
    """
    Render a report document.

    YAML keeps the insertion order of the report fields; JSON is indented
    with two spaces. Both end with a newline.

    Args:
        document: JSON-compatible mapping
        as_json: Emit JSON instead of YAML

    Returns:
        The rendered text
    """
    if as_json:
        return json.dumps(document, indent=2) + "\n"
    return yaml.safe_dump(document, sort_keys=False, default_flow_style=False, allow_unicode=True)


class Stopwatch:
    """Elapsed wall time, read after the timed block exits."""

    def __init__(self) -> None:
        self.seconds = 0.0


@contextmanager
def timed() -> Iterator[Stopwatch]:
    """
    Time a block.

    Example:
        >>> with timed() as clock:
        ...     pass
        >>> clock.seconds >= 0
        True
    """
    clock = Stopwatch()
    start = time.perf_counter()
    try:
        yield clock
    finally:
        clock.seconds = round(time.perf_counter() - start, 6)
