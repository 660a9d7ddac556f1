"""Fractional repetition code toolkit.

Build FR and weak FR codes (partial regular graph, ring placement,
shifted placement), brute-force their coverage and reconstruction
degree, check universal goodness, plan exact single-node repair, and
regenerate or audit parameter tables.
"""

from .analysis import (
    DEFAULT_BUDGET,
    CoverageProfile,
    GoodnessReport,
    KPrediction,
    PrgMargin,
    coverage_profile,
    goodness_arithmetic,
    goodness_rhs,
    goodness_structural,
    min_coverage,
    predicted_k_ring,
    prg_margin,
    reconstruction_degree,
    ring_margin_case1,
    ring_margin_case2,
    weak_form_applies,
)
from .constructions import (
    PrgSpec,
    RingSpec,
    TSpec,
    build_prg,
    build_ring,
    build_t_code,
    export_code,
    import_code,
)
from .core import (
    CodeProfile,
    DssParams,
    FrCode,
    IdentityReport,
    check_identities,
    code_from_matrix,
    incidence_matrix,
    make_code,
    profile,
    single_deficit_shape,
)
from .errors import (
    BudgetExceeded,
    DegenerateOffsets,
    DegreeRange,
    EmptySystem,
    FrcError,
    IndexOutOfRange,
    InvariantViolation,
    KOutOfRange,
    MalformedRow,
    OrphanPacket,
    ParityError,
    ParseError,
    RhoRange,
    Unreachable,
    Unrepairable,
)
from .repair import (
    RepairPlan,
    plan_repair,
    plan_repair_greedy,
    repair_degree_profile,
)
from .sweep import (
    BUNDLED_TABLES,
    FAMILY_RING,
    FAMILY_T,
    PROVENANCE_GENERATED,
    PROVENANCE_TRANSCRIBED,
    AuditFinding,
    ConjectureFinding,
    DedupAudit,
    FilterAudit,
    TableRow,
    audit_dedup,
    audit_rhs_filter,
    audit_table,
    bundled_table_family,
    conjecture_harness,
    dedup_rows,
    default_theta_rule,
    filter_rhs,
    load_bundled_table,
    read_rows_csv,
    restrict_rho,
    sweep_ring,
    write_rows_csv,
)

__version__ = "0.1.0"

__all__ = [
    "AuditFinding",
    "BUNDLED_TABLES",
    "BudgetExceeded",
    "CodeProfile",
    "ConjectureFinding",
    "CoverageProfile",
    "DEFAULT_BUDGET",
    "DedupAudit",
    "DegenerateOffsets",
    "DegreeRange",
    "DssParams",
    "EmptySystem",
    "FAMILY_RING",
    "FAMILY_T",
    "FilterAudit",
    "FrCode",
    "FrcError",
    "GoodnessReport",
    "IdentityReport",
    "IndexOutOfRange",
    "InvariantViolation",
    "KOutOfRange",
    "KPrediction",
    "MalformedRow",
    "OrphanPacket",
    "PROVENANCE_GENERATED",
    "PROVENANCE_TRANSCRIBED",
    "ParityError",
    "ParseError",
    "PrgMargin",
    "PrgSpec",
    "RepairPlan",
    "RhoRange",
    "RingSpec",
    "TSpec",
    "TableRow",
    "Unreachable",
    "Unrepairable",
    "audit_dedup",
    "audit_rhs_filter",
    "audit_table",
    "build_prg",
    "build_ring",
    "build_t_code",
    "bundled_table_family",
    "check_identities",
    "code_from_matrix",
    "conjecture_harness",
    "coverage_profile",
    "dedup_rows",
    "default_theta_rule",
    "export_code",
    "filter_rhs",
    "goodness_arithmetic",
    "goodness_rhs",
    "goodness_structural",
    "import_code",
    "incidence_matrix",
    "load_bundled_table",
    "make_code",
    "min_coverage",
    "plan_repair",
    "plan_repair_greedy",
    "predicted_k_ring",
    "prg_margin",
    "profile",
    "read_rows_csv",
    "reconstruction_degree",
    "repair_degree_profile",
    "restrict_rho",
    "ring_margin_case1",
    "ring_margin_case2",
    "single_deficit_shape",
    "sweep_ring",
    "weak_form_applies",
    "write_rows_csv",
]
