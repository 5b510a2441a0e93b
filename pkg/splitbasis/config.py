"""Environment-driven settings, read once at import."""

from __future__ import annotations

import os

LOG_LEVEL = os.getenv("LOG_LEVEL", "WARNING")

WORKBENCH_THREADS = max(1, int(os.getenv("WORKBENCH_THREADS", str(os.cpu_count() or 1))))

# Desk-scale ceilings per family; the CLI's --max-n overrides them.
MAX_N = {
    "A": int(os.getenv("SPLITBASIS_MAX_N_A", "6")),
    "B": int(os.getenv("SPLITBASIS_MAX_N_B", "4")),
    "D": int(os.getenv("SPLITBASIS_MAX_N_B", "4")),
    "DB": int(os.getenv("SPLITBASIS_MAX_N_B", "4")),
    "AT": int(os.getenv("SPLITBASIS_MAX_N_AT", "6")),
}

# Lattice axioms are asserted at build time up to this n.
LATTICE_CHECK_MAX_N = int(os.getenv("SPLITBASIS_LATTICE_CHECK_MAX_N", "4"))

# Node budget for the certificate facet search once the greedy pass fails.
CERT_SEARCH_BUDGET = int(os.getenv("SPLITBASIS_CERT_SEARCH_BUDGET", "20000"))
