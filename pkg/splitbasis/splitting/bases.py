"""
Basis index sets and the verification of splitting bases.

Each family's index set names the splitting subposets whose fundamental
cycles should form a ℤ-basis of the top homology of the lattice's proper
part. ``verify_splitting_basis`` builds everything from scratch and records
one ``CheckResult`` per property; mathematical failures never raise.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from math import factorial, prod
from typing import Literal, NamedTuple

from splitbasis import config
from splitbasis.homology import (
    ChainVector,
    HomologyError,
    SimplicialComplex,
    choose_certificate_facets,
    homology_profile,
    inject_sign_flip,
    is_cycle,
    kernel_cross_check,
    spans_kernel,
    verify_basis_certificate,
    verify_unimodular_spanning,
)
from splitbasis.lattices import (
    Family,
    InvalidParameters,
    LatticeFamily,
    build_family_lattice,
)
from splitbasis.observe import get_logger, traced
from splitbasis.poset import PosetError, moebius
from splitbasis.reports import CertificateReport, Counts, LatticeReport
from splitbasis.splitting.permutations import (
    SignedPermutation,
    all_permutations,
    all_signed_permutations,
    left_to_right_maxima,
    maxima_unbarred,
    right_to_left_maxima,
)
from splitbasis.splitting.subposets import ambient_complex, rho_cycle, splitting_subposet

logger = get_logger("splitting")

IndexSelector = Literal["theorem", "all", "ltr"]

# smallest n with a nonempty top homology to certify
MIN_BASIS_N = {Family.A: 3, Family.B: 2, Family.D: 2, Family.DB: 2, Family.AT: 3}


class BasisIndex(NamedTuple):
    """A group element and which splitting subposet it indexes (A, B or D)."""

    perm: SignedPermutation
    kind: str

    @property
    def label(self) -> str:
        return str(self.perm) if self.kind != "D" else f"~{self.perm}"


def _odd_product(upto: int) -> int:
    return prod(range(1, 2 * upto, 2))


def expected_basis_size(params: LatticeFamily) -> int:
    n, t = params.n, len(params.T)
    return {
        Family.A: factorial(n - 1),
        Family.B: _odd_product(n),
        Family.D: _odd_product(n - 1) * (n - 1),
        Family.DB: (t + n - 1) * _odd_product(n - 1),
        Family.AT: factorial(n - 2) * t if n >= 2 else 0,
    }[params.family]


def _rlm_unbarred(w: SignedPermutation) -> bool:
    return maxima_unbarred(w, right_to_left_maxima(w))


def _theorem_indices(params: LatticeFamily) -> Iterator[BasisIndex]:
    n, T = params.n, set(params.T)
    if params.family == Family.A:
        for w in all_permutations(n):
            if w.omega[-1] == n:
                yield BasisIndex(w, "A")
    elif params.family == Family.AT:
        for w in all_permutations(n):
            if w.omega[-1] == n and w.omega[-2] in T:
                yield BasisIndex(w, "A")
    elif params.family == Family.B:
        for w in all_signed_permutations(n):
            if _rlm_unbarred(w):
                yield BasisIndex(w, "B")
    elif params.family == Family.D:
        for w in all_signed_permutations(n, even_only=True):
            if w.omega[0] != n and _rlm_unbarred(w):
                yield BasisIndex(w, "D")
    else:
        for w in all_signed_permutations(n):
            if not _rlm_unbarred(w):
                continue
            if w.omega[0] in T:
                yield BasisIndex(w, "B")
            elif w.omega[0] != n and w.is_even:
                yield BasisIndex(w, "D")


def _all_indices(params: LatticeFamily) -> Iterator[BasisIndex]:
    n, T = params.n, set(params.T)
    if params.family == Family.A:
        yield from (BasisIndex(w, "A") for w in all_permutations(n))
    elif params.family == Family.AT:
        # Π_ω lies in Π_n(T) exactly when the letters next to n belong to T
        for w in all_permutations(n):
            p = w.omega.index(n)
            neighbours = w.omega[max(p - 1, 0) : p] + w.omega[p + 1 : p + 2]
            if set(neighbours) <= T:
                yield BasisIndex(w, "A")
    elif params.family == Family.B:
        yield from (BasisIndex(w, "B") for w in all_signed_permutations(n))
    elif params.family == Family.D:
        yield from (BasisIndex(w, "D") for w in all_signed_permutations(n, even_only=True))
    else:
        for w in all_signed_permutations(n):
            if w.omega[0] in T:
                yield BasisIndex(w, "B")
            elif w.is_even:
                yield BasisIndex(w, "D")


def _ltr_indices(params: LatticeFamily) -> Iterator[BasisIndex]:
    if params.family != Family.B:
        raise InvalidParameters(
            params.family, params.n, params.T, "the ltr index set is type B only"
        )
    for w in all_signed_permutations(params.n):
        if maxima_unbarred(w, left_to_right_maxima(w)):
            yield BasisIndex(w, "B")


def basis_index_set(
    family: str | Family,
    n: int,
    T: Iterable[int] = (),
    indices: IndexSelector = "theorem",
) -> list[BasisIndex]:
    """Index set in deterministic order (lexicographic in ω, then ε with + first)."""
    params = LatticeFamily(family=family, n=n, T=tuple(T))
    selectors = {"theorem": _theorem_indices, "all": _all_indices, "ltr": _ltr_indices}
    if indices not in selectors:
        raise InvalidParameters(params.family, n, params.T, f"unknown index selector {indices!r}")
    return list(selectors[indices](params))


# =============================================================================
# Verification
# =============================================================================


def folkman_checks(
    report: CertificateReport | LatticeReport,
    profile: list[tuple[int, int, list[int]]],
    mu: int,
) -> int:
    """Homology vanishes below the top degree and the top rank is |mu|; returns that rank."""
    top = profile[-1][0] if profile else -1
    top_rank = profile[-1][1] if profile else 0
    lower = [(k, r, t) for k, r, t in profile if k < top and (r or t)]
    report.add_check(
        "homology_concentrated",
        not lower and not (profile and profile[-1][2]),
        "only the top degree is nonzero"
        if not lower
        else f"nonzero lower degrees: {[k for k, _, _ in lower]}",
    )
    report.add_check("top_rank_is_mobius", top_rank == abs(mu), f"rank {top_rank}, mu {mu}")
    return top_rank


@traced
def verify_splitting_basis(
    family: str | Family,
    n: int,
    T: Iterable[int] = (),
    *,
    indices: IndexSelector = "theorem",
    cross_check: bool = False,
    fault: str | None = None,
) -> CertificateReport:
    params = LatticeFamily(family=family, n=n, T=tuple(T))
    minimum = MIN_BASIS_N[params.family]
    if n < minimum:
        raise InvalidParameters(
            params.family, n, params.T, f"basis verification needs n >= {minimum}"
        )
    report = CertificateReport(
        instance=params.instance_id, family=params.family.value, n=n, T=list(params.T)
    )
    lattice = build_family_lattice(params)
    complex_ = ambient_complex(lattice)
    mu = moebius(lattice, lattice.bottom, lattice.top)
    rank = folkman_checks(report, homology_profile(complex_), mu)

    index = basis_index_set(params.family, n, params.T, indices)
    report.counts = Counts(
        elements=len(lattice), chains=len(complex_.facets), rank=rank, basis=len(index)
    )
    if indices == "theorem":
        expected = expected_basis_size(params)
        report.add_check(
            "index_count", len(index) == expected, f"{len(index)} indices, closed form {expected}"
        )

    cycles: list[ChainVector] = []
    not_boolean: list[str] = []
    mismatched: list[str] = []
    for entry in index:
        try:
            subposet = splitting_subposet(entry.perm, entry.kind, lattice)
            cycles.append(rho_cycle(subposet, lattice, complex_))
            if cross_check and not kernel_cross_check(subposet, complex_):
                mismatched.append(entry.label)
        except (PosetError, HomologyError, ValueError) as exc:
            not_boolean.append(f"{entry.label}: {exc}")
    report.add_check(
        "boolean_subposets",
        not not_boolean,
        f"{len(index) - len(not_boolean)}/{len(index)} Boolean"
        + (f"; first failure {not_boolean[0]}" if not_boolean else ""),
    )
    if cross_check:
        report.add_check(
            "kernel_cross_check",
            not mismatched,
            "formula matches kernel generator" if not mismatched else ", ".join(mismatched[:5]),
        )
    if not_boolean:
        return report

    if fault == "sign_flip" and cycles:
        cycles[0] = inject_sign_flip(cycles[0])
        logger.info("fault injected", extra={"extra_fields": {"instance": params.instance_id}})
    open_chains = [index[i].label for i, c in enumerate(cycles) if not is_cycle(c)]
    report.add_check(
        "cycles_closed",
        not open_chains,
        f"{len(cycles)} cycles" if not open_chains else f"nonzero boundary: {open_chains[:5]}",
    )

    report.add_check(
        "size_matches_rank", len(cycles) == rank, f"{len(cycles)} cycles, rank {rank}"
    )
    if indices == "all":
        _check_generation(report, cycles, complex_)
    else:
        certify_cycles(report, cycles, complex_, rank)
    logger.info(
        "basis verified",
        extra={"extra_fields": {"instance": params.instance_id, "passed": report.passed}},
    )
    return report


def certify_cycles(
    report: CertificateReport,
    cycles: list[ChainVector],
    complex_: SimplicialComplex,
    rank: int,
) -> None:
    """Run the coefficient certificate and the spanning test, recording both as checks.

    When no unimodular facet minor turns up within the search budget the
    coefficient certificate is inconclusive, and its check carries the
    spanning verdict instead of failing a valid basis.
    """
    try:
        spanning = verify_unimodular_spanning(cycles, complex_)
        spanning_detail = "cycles span ker of the top boundary"
    except HomologyError as exc:
        spanning, spanning_detail = False, str(exc)
    try:
        facets, method = choose_certificate_facets(cycles)
        if method == "failed":
            report.add_check(
                "coefficient_certificate",
                spanning,
                f"no unimodular facet minor within {config.CERT_SEARCH_BUDGET} search nodes; "
                "decided by the spanning test",
            )
        else:
            certificate = verify_basis_certificate(cycles, facets, rank)
            report.determinant = certificate.determinant
            report.add_check(
                "coefficient_certificate",
                certificate.passed,
                f"det {certificate.determinant} on facets chosen by {method}",
            )
    except HomologyError as exc:
        report.add_check("coefficient_certificate", False, str(exc))
    report.add_check("unimodular_spanning", spanning, spanning_detail)


def _check_generation(
    report: CertificateReport, cycles: list[ChainVector], complex_: SimplicialComplex
) -> None:
    try:
        spans = spans_kernel(cycles, complex_)
        report.add_check("spans_kernel", spans, "ℤ-span equals ker of the top boundary")
    except HomologyError as exc:
        report.add_check("spans_kernel", False, str(exc))
