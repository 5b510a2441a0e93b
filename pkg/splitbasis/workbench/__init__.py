"""
Workbench: run configurations, YAML suites, the runner and report rendering.
"""

from splitbasis.workbench.parser import DEFAULT_SUITE, SuiteParseError, load_suite
from splitbasis.workbench.render import emit, render, render_json, render_text
from splitbasis.workbench.runner import (
    RUNNERS,
    run,
    run_basis,
    run_lattice,
    run_orbits,
    run_regions,
    run_row,
    run_suite,
)
from splitbasis.workbench.schema import (
    Command,
    OutputFormat,
    OutputOptions,
    RunConfig,
    SuiteRow,
    SuiteSpec,
    parse_int_list,
    parse_vector,
)

__all__ = [
    "DEFAULT_SUITE",
    "RUNNERS",
    "Command",
    "OutputFormat",
    "OutputOptions",
    "RunConfig",
    "SuiteParseError",
    "SuiteRow",
    "SuiteSpec",
    "emit",
    "load_suite",
    "parse_int_list",
    "parse_vector",
    "render",
    "render_json",
    "render_text",
    "run",
    "run_basis",
    "run_lattice",
    "run_orbits",
    "run_regions",
    "run_row",
    "run_suite",
]
