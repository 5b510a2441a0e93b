"""Text and JSON rendering of workbench reports."""

from __future__ import annotations

from pathlib import Path

from splitbasis.reports import (
    CertificateReport,
    CheckResult,
    LatticeReport,
    OrbitReport,
    RegionsReport,
    SuiteReport,
)
from splitbasis.workbench.schema import OutputFormat, OutputOptions

Renderable = CertificateReport | LatticeReport | RegionsReport | OrbitReport | SuiteReport


def _status(passed: bool) -> str:
    return "PASS" if passed else "FAIL"


def _check_lines(checks: list[CheckResult], indent: str = "  ") -> list[str]:
    lines = []
    for check in checks:
        mark = "[OK]" if check.passed else "[FAIL]"
        detail = f": {check.detail}" if check.detail else ""
        lines.append(f"{indent}{mark} {check.name}{detail}")
    return lines


def _timing(millis: float) -> str:
    return f"  ({millis} ms)" if millis else ""


def _certificate(report: CertificateReport) -> list[str]:
    c = report.counts
    det = f", det {report.determinant}" if report.determinant is not None else ""
    vector = f"  v = ({', '.join(report.vector)})" if report.vector else ""
    return [
        f"basis {report.instance}: {_status(report.passed)}{_timing(report.millis)}",
        f"  elements {c.elements}, chains {c.chains}, rank {c.rank}, basis {c.basis}{det}",
        *([vector] if vector else []),
        *_check_lines(report.checks),
    ]


def _lattice(report: LatticeReport) -> list[str]:
    lines = [
        f"lattice {report.instance}: {_status(report.passed)}{_timing(report.millis)}",
        f"  {len(report.elements)} elements, mu {report.mobius}, "
        f"rank profile {' '.join(str(k) for k in report.rank_profile)}, "
        f"top homology rank {report.top_rank}",
    ]
    for degree in report.homology:
        torsion = f" torsion {degree.torsion}" if degree.torsion else ""
        lines.append(f"  H~_{degree.degree}: rank {degree.rank}{torsion}")
    lines.extend(_check_lines(report.checks))
    lines.append("  elements:")
    lines.extend(f"    {x}" for x in report.elements)
    lines.append("  covers:")
    lines.extend(f"    {x}  <  {y}" for x, y in report.covers)
    return lines


def _regions(report: RegionsReport) -> list[str]:
    lines = [
        f"regions {report.instance}: {_status(report.passed)}{_timing(report.millis)}",
        f"  {report.bounded_count} bounded of {report.total_count}"
        f"  v = ({', '.join(report.vector)})",
    ]
    z = report.zaslavsky
    if z is not None:
        lines.append(
            f"  zaslavsky: bounded {z.bounded_regions}, |sum mu| {z.slice_mobius_sum}, "
            f"|mu(0,1)| {z.top_mobius}, slice isomorphic {z.slice_isomorphic}"
        )
    lines.extend(_check_lines(report.checks))
    width = max((len(row.label) for row in report.regions), default=0)
    for row in report.regions:
        flag = "bounded" if row.bounded else "-"
        lines.append(f"    {row.label:<{width}}  {flag:<7}  {row.witness}".rstrip())
    return lines


def _orbits(report: OrbitReport) -> list[str]:
    lines = [
        f"orbits {report.instance}: {_status(report.passed)}{_timing(report.millis)}",
        f"  group order {report.group_order}, {len(report.orbits)} orbits "
        f"(expected {report.expected_orbits}), sizes {report.sizes}, regular {report.regular}",
    ]
    lines.extend(_check_lines(report.checks))
    for i, orbit in enumerate(report.orbits, start=1):
        lines.append(f"    orbit {i}: {', '.join(orbit)}")
    return lines


def _suite(report: SuiteReport) -> list[str]:
    lines = []
    for row in report.rows:
        mark = "[OK]" if row.passed else "[FAIL]"
        outcome = _status(row.report.passed) if row.report is not None else "ERROR"
        millis = _timing(row.report.millis) if row.report is not None else ""
        lines.append(f"{mark} {row.instance} ({row.command}) -> {outcome}{millis}")
        if row.error:
            lines.append(f"    {row.error}")
        elif not row.passed and row.report is not None:
            lines.extend(_check_lines(row.report.failures(), indent="    "))
    lines.append(report.summary())
    return lines


def render_text(report: Renderable) -> str:
    if isinstance(report, SuiteReport):
        lines = _suite(report)
    elif isinstance(report, CertificateReport):
        lines = _certificate(report)
    elif isinstance(report, LatticeReport):
        lines = _lattice(report)
    elif isinstance(report, RegionsReport):
        lines = _regions(report)
    else:
        lines = _orbits(report)
    return "\n".join(lines) + "\n"


def render_json(report: Renderable) -> str:
    return report.model_dump_json(by_alias=True, indent=2) + "\n"


def render(report: Renderable, fmt: OutputFormat = OutputFormat.TEXT) -> str:
    return render_json(report) if fmt == OutputFormat.JSON else render_text(report)


def emit(report: Renderable, options: OutputOptions) -> str:
    """Render the report and write it to ``options.out`` or stdout."""
    text = render(report, options.format)
    if options.out is not None:
        out = Path(options.out)
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text)
    else:
        print(text, end="")
    return text
