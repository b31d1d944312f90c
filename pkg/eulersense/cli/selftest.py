"""
Golden checks and a small property grid, run by ``eulersense selftest``.

Every check is deterministic: details carry exact values only, never timings,
so two runs produce byte-identical output and the same content hash.
"""

import logging
from collections.abc import Callable
from fractions import Fraction
from typing import Any

import numpy as np
from pydantic import BaseModel

from eulersense._internal.hashing import with_content_hash
from eulersense.analysis.blocks import block_coherence, verify_block_orthogonality
from eulersense.analysis.bounds import column_bound_report
from eulersense.analysis.overlap import coherence, max_overlap, naive_max_overlap
from eulersense.analysis.spectral import spectral_norm_sym
from eulersense.enums import CoherenceMethod, Solver
from eulersense.errors import EulerSenseError
from eulersense.field.arithmetic import field_inv, field_mul, find_irreducible, make_field
from eulersense.field.models import FieldElement
from eulersense.ges.construct import (
    Combiner,
    IntArray,
    combine_values,
    construct_es,
    construct_ges,
    construct_prime_power_ges,
    transpose,
)
from eulersense.ges.io import ges_document
from eulersense.ges.verify import verify_ges
from eulersense.matrix.build import build_matrix
from eulersense.matrix.io import phi_document
from eulersense.recovery.experiment import run_recovery_experiment
from eulersense.recovery.guarantees import bomp_guarantee
from eulersense.recovery.params import ExperimentConfig

logger = logging.getLogger(__name__)

SELFTEST_FORMAT = "eulersense.selftest"

# ES(3,2), row-major
GOLDEN_ES_3_2 = (
    ((0, 0), (1, 2), (2, 1)),
    ((1, 1), (2, 0), (0, 2)),
    ((2, 2), (0, 1), (1, 0)),
)

# the three 6x3 blocks of Φ(3,2,1) grouped by constant term, as row-index sets
GOLDEN_PHI_3_2_BLOCKS = (
    ((0, 3), (1, 5), (2, 4)),
    ((1, 4), (2, 3), (0, 5)),
    ((2, 5), (0, 4), (1, 3)),
)

# GES(5,4,2): column index -> polynomial values at x = 1..4 for row 0
GOLDEN_GES_5_4_2 = {
    0: (0, 0, 0, 0),  # 0
    1: (1, 2, 3, 4),  # x
    23: (2, 2, 0, 1),  # 4x² + 3x
    24: (3, 4, 3, 0),  # 4x² + 4x
}

GRID: tuple[tuple[int, int, int], ...] = (
    (3, 2, 1),
    (4, 2, 1),
    (4, 3, 1),
    (4, 3, 2),
    (5, 2, 1),
    (5, 4, 1),
    (5, 3, 2),
    (5, 4, 2),
    (7, 6, 1),
    (7, 3, 2),
    (15, 2, 1),
    (21, 2, 1),
)


class SelftestCheck(BaseModel, frozen=True):
    """Outcome of one selftest check."""

    name: str
    passed: bool
    detail: str = ""


def faulty_combine(first: IntArray, second: IntArray, first_order: int) -> IntArray:
    """Composition off by one in the second symbol: merges symbols 0 and 1."""
    return first + first_order * np.maximum(second - 1, 0)


MUTATIONS: dict[str, Combiner] = {"composition": faulty_combine}


def _check(name: str, fn: Callable[[], tuple[bool, str]]) -> SelftestCheck:
    try:
        passed, detail = fn()
    except EulerSenseError as exc:
        passed, detail = False, f"{type(exc).__name__}: {exc.message}"
    if not passed:
        logger.error("selftest %s failed: %s", name, detail)
    return SelftestCheck(name=name, passed=passed, detail=detail)


# ---------------------------------------------------------------------------
# Golden checks
# ---------------------------------------------------------------------------


def _field() -> tuple[bool, str]:
    gf4, gf5 = make_field(4), make_field(5)
    product = field_mul(gf4, FieldElement(idx=2), FieldElement(idx=3)).idx
    inverse = field_inv(gf5, FieldElement(idx=2)).idx
    moduli = (find_irreducible(2, 2), find_irreducible(2, 3), find_irreducible(3, 2))
    ok = product == 1 and inverse == 3 and moduli == ((1, 1, 1), (1, 1, 0, 1), (1, 0, 1))
    return ok, f"GF(4) 2·3={product}, GF(5) 2⁻¹={inverse}, moduli {list(moduli)}"


def _es_3_2() -> tuple[bool, str]:
    g = construct_es(3, 2)
    cells = tuple(g.cells[3 * i : 3 * i + 3] for i in range(3))
    return cells == GOLDEN_ES_3_2, f"row 0 = {cells[0]}"


def _phi_3_2_blocks() -> tuple[bool, str]:
    m = build_matrix(transpose(construct_es(3, 2)))
    blocks = tuple(m.columns[3 * b : 3 * b + 3] for b in range(3))
    ok = blocks == GOLDEN_PHI_3_2_BLOCKS and m.nnz == 18 and (m.rows, m.cols) == (6, 9)
    return ok, f"{m}, {m.nnz} nonzeros"


def _ges_5_4_2() -> tuple[bool, str]:
    values = construct_prime_power_ges(5, 4, 2).to_numpy()
    mismatched = [
        col
        for col, row0 in GOLDEN_GES_5_4_2.items()
        for j in range(5)
        if tuple(int(v) for v in values[j, col]) != tuple((v + j) % 5 for v in row0)
    ]
    return not mismatched, f"columns {sorted(GOLDEN_GES_5_4_2)} checked, mismatches {mismatched}"


def _coherence() -> tuple[bool, str]:
    expected = {
        (3, 2, 1): (Fraction(1, 2), 15),
        (5, 4, 2): (Fraction(1, 2), 285),
        (7, 6, 1): (Fraction(1, 6), None),
    }
    found = []
    ok = True
    for (n, k, t), (mu, bound) in expected.items():
        m = build_matrix(construct_ges(n, k, t))
        report = coherence(m)
        ok &= report.certified and report.mu.to_fraction() == mu
        if bound is not None:
            ok &= column_bound_report(m).bound == bound
        found.append(f"μ({n},{k},{t})={report.mu}")
    return ok, ", ".join(found)


def _block_coherence() -> tuple[bool, str]:
    found = []
    ok = True
    for p, d in ((4, 2), (8, 2), (8, 4), (9, 3)):
        m = build_matrix(construct_es(p, p - 1))
        structural = block_coherence(m, d, CoherenceMethod.STRUCTURAL)
        numeric = block_coherence(m, d, CoherenceMethod.NUMERIC)
        target = Fraction(1, p - 1)
        ok &= structural.mu_b_exact is not None and structural.mu_b_exact.to_fraction() == target
        ok &= abs(numeric.mu_b - float(target)) <= 1e-9
        found.append(f"μ_B({p},d={d})={structural.mu_b_exact}")
    return ok, ", ".join(found)


def _spectral() -> tuple[bool, str]:
    bad = [
        d
        for d in range(1, 9)
        if abs(spectral_norm_sym(np.ones((d, d))) - d) > 1e-9
        or (d > 1 and abs(spectral_norm_sym(np.ones((d, d)) - np.eye(d)) - (d - 1)) > 1e-9)
    ]
    return not bad, f"all-ones and hollow-ones d=1..8, mismatches {bad}"


def _overlap_oracle() -> tuple[bool, str]:
    bad = []
    for n, k, t in ((3, 2, 1), (4, 3, 1), (5, 4, 1), (4, 3, 2), (5, 3, 2)):
        m = build_matrix(construct_ges(n, k, t))
        if max_overlap(m) != naive_max_overlap(m):
            bad.append((n, k, t))
    return not bad, f"row-wise vs pairwise, mismatches {bad}"


def _guarantees() -> tuple[bool, str]:
    values = (
        bomp_guarantee(7, 2).s_star,
        bomp_guarantee(4, 2, t=2).s_star,
        bomp_guarantee(6, 1).s_star,
    )
    return values == (2, 0, 3), f"s* = {values}"


def _recovery() -> tuple[bool, str]:
    configs = (
        ExperimentConfig(n=4, k=3, d=2, s=1, exhaustive=True, seed=42),
        ExperimentConfig(n=5, k=4, s=2, trials=20, seed=7, solver=Solver.OMP),
    )
    found = []
    for config in configs:
        stats = run_recovery_experiment(config, strict=False)
        label = f"{stats.solver.value} Φ({config.n},{config.k},1)"
        found.append(f"{label} {stats.exact_successes}/{stats.trials}")
        if stats.exact_successes != stats.trials:
            return False, ", ".join(found)
    return True, ", ".join(found)


def golden_checks() -> list[SelftestCheck]:
    return [
        _check("field.arithmetic", _field),
        _check("ges.es_3_2", _es_3_2),
        _check("matrix.phi_3_2_blocks", _phi_3_2_blocks),
        _check("ges.ges_5_4_2", _ges_5_4_2),
        _check("analysis.coherence", _coherence),
        _check("analysis.block_coherence", _block_coherence),
        _check("analysis.spectral_norm", _spectral),
        _check("analysis.overlap_oracle", _overlap_oracle),
        _check("recovery.guarantees", _guarantees),
        _check("recovery.exact", _recovery),
    ]


# ---------------------------------------------------------------------------
# Property grid
# ---------------------------------------------------------------------------


def _grid_point(n: int, k: int, t: int, combine: Combiner) -> tuple[bool, str]:
    g = construct_ges(n, k, t, combine=combine)
    report = verify_ges(g)
    if not report.passed:
        names = ", ".join(axiom.value for axiom in report.failed_axioms)
        return False, f"{names} violated, witnesses {sorted(report.witnesses)}"
    m = build_matrix(g)
    overlap = max_overlap(m).count
    ok = (
        overlap <= t
        and verify_block_orthogonality(m).passed
        and column_bound_report(m).within_bound
    )
    if t == 1 and k == n - 1:
        ok &= coherence(m).mu.to_fraction() == Fraction(1, k)
    return ok, f"max overlap {overlap}"


def grid_checks(combine: Combiner = combine_values) -> list[SelftestCheck]:
    return [
        _check(f"grid.ges_{n}_{k}_{t}", lambda n=n, k=k, t=t: _grid_point(n, k, t, combine))
        for n, k, t in GRID
    ]


def artifact_hashes() -> dict[str, str]:
    """Content hashes of the golden artifacts."""
    es = construct_es(3, 2)
    return {
        "es_3_2.ges.json": str(ges_document(es)["content_hash"]),
        "ges_5_4_2.ges.json": str(ges_document(construct_prime_power_ges(5, 4, 2))["content_hash"]),
        "phi_3_2_1.phi.json": str(phi_document(build_matrix(es))["content_hash"]),
    }


def run_selftest(
    mutate: str | None = None, run_config: dict[str, Any] | None = None
) -> dict[str, Any]:
    """
    Run every check and return the hashed result document.

    Args:
        mutate: Name of a deliberate defect to inject (``"composition"``);
                the run must then fail.
        run_config: Run configuration echoed into the document.
    """
    combine = MUTATIONS[mutate] if mutate is not None else combine_values
    checks = golden_checks() + grid_checks(combine)
    payload: dict[str, Any] = {
        "format": SELFTEST_FORMAT,
        "version": 1,
        "passed": all(check.passed for check in checks),
        "checks": [check.model_dump() for check in checks],
        "artifacts": artifact_hashes(),
    }
    if run_config is not None:
        payload["run_config"] = run_config
    logger.info("selftest: %d/%d checks passed", sum(c.passed for c in checks), len(checks))
    return with_content_hash(payload)
