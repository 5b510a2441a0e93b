"""
Workbench runner: one report per command, and suites run in a worker pool.

Each suite row is an independent pure computation, so rows are fanned out
to processes and the report is assembled afterwards in row order.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor
from itertools import repeat

from splitbasis import config
from splitbasis.geometry import flat_isomorphism, regions_report, verify_theorem_T2
from splitbasis.homology import homology_profile
from splitbasis.lattices import build_family_lattice, rank_mismatches
from splitbasis.observe import SpanContext, get_logger
from splitbasis.poset import moebius
from splitbasis.reports import (
    CertificateReport,
    HomologyDegree,
    LatticeReport,
    OrbitReport,
    RegionsReport,
    SuiteReport,
    SuiteRowResult,
)
from splitbasis.splitting import (
    ambient_complex,
    folkman_checks,
    orbit_report,
    verify_splitting_basis,
)
from splitbasis.workbench.schema import Command, RunConfig, SuiteRow, SuiteSpec

logger = get_logger("workbench")

Report = CertificateReport | LatticeReport | RegionsReport | OrbitReport


def run_lattice(cfg: RunConfig) -> LatticeReport:
    """Elements, covers, μ(0̂,1̂), rank profile and the homology of the proper part."""
    params = cfg.lattice_family
    lattice = build_family_lattice(params)
    order = lattice.canonical_order()
    position = {label: i for i, label in enumerate(order)}
    report = LatticeReport(
        instance=f"lattice-{params.instance_id}",
        family=params.family.value,
        n=params.n,
        T=list(params.T),
        elements=order,
        covers=sorted(lattice.covers, key=lambda c: (position[c[0]], position[c[1]])),
    )
    report.mobius = moebius(lattice, lattice.bottom, lattice.top)
    sizes = Counter(lattice.rank(x) for x in order)
    report.rank_profile = [sizes[r] for r in range(max(sizes) + 1)]

    report.add_check("graded", lattice.is_graded(), f"rank profile {report.rank_profile}")
    if params.n <= config.LATTICE_CHECK_MAX_N:
        report.add_check("is_lattice", lattice.is_lattice(), "every pair has a join")
    mismatched = rank_mismatches(lattice)
    report.add_check(
        "rank_is_codimension",
        not mismatched,
        "rank equals codimension of the subspace"
        if not mismatched
        else f"differ at {mismatched[:5]}",
    )

    profile = homology_profile(ambient_complex(lattice))
    report.homology = [
        HomologyDegree(degree=k, rank=r, torsion=torsion) for k, r, torsion in profile
    ]
    report.top_rank = folkman_checks(report, profile, report.mobius)

    gamma, reason = flat_isomorphism(params.family, params.n, params.T)
    report.add_check("flat_isomorphism", gamma is not None, reason)
    return report


def run_basis(cfg: RunConfig) -> CertificateReport:
    """Algebraic basis checks, plus the geometric ones when a generic vector applies."""
    report = verify_splitting_basis(
        cfg.family,
        cfg.n,
        cfg.T,
        indices=cfg.indices,
        cross_check=cfg.cross_check,
        fault=cfg.fault,
    )
    if cfg.geometric and cfg.indices == "theorem":
        geometric = verify_theorem_T2(cfg.family, cfg.n, cfg.T, cfg.exact_vector)
        report.vector = geometric.vector
        report.extend(geometric.checks, prefix="geometric.")
    return report


def run_regions(cfg: RunConfig) -> RegionsReport:
    return regions_report(cfg.family, cfg.n, cfg.T, cfg.exact_vector)


def run_orbits(cfg: RunConfig) -> OrbitReport:
    return orbit_report(cfg.n, cfg.T)


RUNNERS: dict[Command, Callable[[RunConfig], Report]] = {
    Command.LATTICE: run_lattice,
    Command.BASIS: run_basis,
    Command.REGIONS: run_regions,
    Command.ORBITS: run_orbits,
}


def run(cfg: RunConfig, timing: bool = True) -> Report:
    """Run one command; ``millis`` is zeroed when timing is off so output is reproducible."""
    span = SpanContext(operation=f"workbench.{cfg.command.value}")
    span.set_attribute("instance", cfg.lattice_family.instance_id)
    report = RUNNERS[cfg.command](cfg)
    span.set_attribute("passed", report.passed)
    report.millis = span.elapsed_ms() if timing else 0.0
    logger.debug(f"TRACE {span.operation}", extra={"extra_fields": span.end()})
    return report


# =============================================================================
# Suites
# =============================================================================


def run_row(row: SuiteRow, timing: bool = True) -> SuiteRowResult:
    """One suite row; the row passes when its outcome matches ``expect``."""
    try:
        report = run(row.run_config(), timing)
    except Exception as exc:
        logger.error(
            "suite row raised",
            exc_info=True,
            extra={"extra_fields": {"instance": row.id}},
        )
        return SuiteRowResult(
            instance=row.id,
            command=row.command.value,
            passed=False,
            error=f"{type(exc).__name__}: {exc}",
        )
    matched = row.expect == "any" or report.passed == (row.expect == "pass")
    logger.info(
        "suite row",
        extra={"extra_fields": {"instance": row.id, "outcome": report.passed, "ok": matched}},
    )
    return SuiteRowResult(
        instance=row.id, command=row.command.value, passed=matched, report=report
    )


def run_suite(
    suite: SuiteSpec,
    include_slow: bool = False,
    threads: int | None = None,
    timing: bool = True,
) -> SuiteReport:
    rows = suite.selected(include_slow)
    workers = min(threads or config.WORKBENCH_THREADS, len(rows))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run_row, rows, repeat(timing)))
    else:
        results = [run_row(row, timing) for row in rows]
    report = SuiteReport(name=suite.name, rows=results)
    logger.info(report.summary(), extra={"extra_fields": {"rows": len(results)}})
    return report
