"""
Suite parser

Loads YAML suite files, validates every row as a run configuration and
produces a typed SuiteSpec for the runner.
"""

from __future__ import annotations

from pathlib import Path
from typing import Any

import yaml
from pydantic import ValidationError

from splitbasis.workbench.schema import SuiteSpec

DEFAULT_SUITE = Path(__file__).resolve().parents[2] / "specs" / "acceptance.suite.yaml"


class SuiteParseError(Exception):
    """Raised when a suite file fails to parse or validate."""

    def __init__(self, suite_path: str, errors: list[dict[str, Any]]):
        self.suite_path = suite_path
        self.errors = errors
        msg = f"Failed to parse {suite_path}:\n"
        for err in errors:
            loc = " → ".join(str(part) for part in err.get("loc", []))
            msg += f"  [{loc}] {err['msg']}\n"
        super().__init__(msg)


def load_suite(path: str | Path = DEFAULT_SUITE) -> SuiteSpec:
    """
    Load and validate a verification suite from a YAML file.

    Raises:
        SuiteParseError: If the suite is empty or invalid
        FileNotFoundError: If the file doesn't exist
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Suite file not found: {path}")

    with open(path) as f:
        try:
            raw = yaml.safe_load(f)
        except yaml.YAMLError as e:
            raise SuiteParseError(str(path), [{"loc": [], "msg": str(e)}]) from e

    if raw is None:
        raise SuiteParseError(str(path), [{"loc": [], "msg": "Empty suite file"}])
    if not isinstance(raw, dict):
        raise SuiteParseError(str(path), [{"loc": [], "msg": "Suite must be a mapping"}])

    try:
        suite = SuiteSpec(**raw)
    except ValidationError as e:
        raise SuiteParseError(str(path), e.errors()) from e

    # Post-validation: instance ids are unique
    seen: set[str] = set()
    for index, row in enumerate(suite.rows):
        if row.id in seen:
            raise SuiteParseError(str(path), [{
                "loc": ["rows", index, "id"],
                "msg": f"Duplicate instance id '{row.id}'",
            }])
        seen.add(row.id)

    return suite
