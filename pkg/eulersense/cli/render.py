"""
Plain-text tables for terminal output.

Rendering only: tables are never parsed back. The JSON artifacts are the
machine-readable record.
"""

from collections.abc import Sequence
from typing import Any

from eulersense.analysis.models import AnalysisReport
from eulersense.cli.selftest import SelftestCheck
from eulersense.ges.models import AxiomReport, GesArray
from eulersense.matrix.models import BinarySensingMatrix
from eulersense.recovery.models import RecoveryStats


def format_table(headers: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    """Left-aligned columns separated by two spaces, with a rule under the header."""
    cells = [[str(h) for h in headers], *[[str(v) for v in row] for row in rows]]
    widths = [max(len(row[i]) for row in cells) for i in range(len(headers))]
    lines = [
        "  ".join(value.ljust(width) for value, width in zip(row, widths, strict=True)).rstrip()
        for row in cells
    ]
    lines.insert(1, "  ".join("-" * width for width in widths))
    return "\n".join(lines)


def _yes(flag: bool) -> str:
    return "yes" if flag else "NO"


def render_ges(g: GesArray, report: AxiomReport | None = None) -> str:
    components = list(g.provenance.components)
    lines = [f"GES({g.n},{g.k},{g.t}): {g.n} x {g.ncols} array, components {components}"]
    if report is not None:
        rows = [
            ("GES1 range", _yes(report.range_ok), ""),
            ("GES2 same column", _yes(report.same_column_ok), report.max_same_column),
            ("GES3 same row", _yes(report.same_row_ok), report.max_same_row),
            ("GES4 overall", _yes(report.overall_ok), report.max_overall),
        ]
        lines.append(format_table(("axiom", "holds", "max intersections"), rows))
    return "\n".join(lines)


def render_matrix(m: BinarySensingMatrix) -> str:
    return f"{m}, {m.nnz} nonzeros, density {m.k}/{m.rows} = 1/{m.n}"


def render_analysis(report: AnalysisReport) -> str:
    m = report.matrix
    coh = report.coherence
    bound = report.column_bound
    lines = [
        f"Φ({m.n},{m.k},{m.t}): {m.rows}×{m.cols}, {m.nnz} nonzeros",
        "",
        format_table(
            ("quantity", "value", "bound", "holds"),
            [
                ("coherence μ", coh.mu, coh.bound, _yes(coh.certified)),
                ("columns", bound.columns, bound.bound, _yes(bound.within_bound)),
                ("columns / bound", bound.ratio, f"≥ {bound.ratio_floor}", ""),
                (
                    "aspect ratio",
                    report.aspect.ratio,
                    f"ES: {report.aspect.euler_square_ratio}",
                    "",
                ),
                (
                    f"block orthogonality (d={report.block_orthogonality.d})",
                    f"{report.block_orthogonality.blocks_checked} blocks",
                    "",
                    _yes(report.block_orthogonality.passed),
                ),
            ],
        ),
    ]
    if report.rip:
        lines += [
            "",
            format_table(
                ("k′", "δ_k′ ≤ (k′−1)μ", "δ < 1"),
                [(r.order, r.delta, _yes(r.valid_regime)) for r in report.rip],
            ),
        ]
    block = report.block_coherence
    if block is not None:
        lines += [
            "",
            f"block coherence (d={block.d}, {block.method.value}): μ_B = {block.mu_b:.9g}"
            + (f" = {block.mu_b_exact}" if block.mu_b_exact is not None else "")
            + f", bound {block.bound_used}, holds: {_yes(block.within_bounds)}",
            format_table(
                ("pattern", "block pairs"),
                [(pattern.value, count) for pattern, count in sorted(block.histogram.items())],
            ),
        ]
    if report.failures:
        lines += ["", "FAILED:", *(f"  - {failure}" for failure in report.failures)]
    return "\n".join(lines)


def render_recovery(stats: RecoveryStats) -> str:
    config = stats.config
    guarantee = stats.guarantee
    header = (
        f"{stats.solver.value.upper()} on Φ({config.n},{config.k},{config.t}), d={config.d}: "
        f"{stats.exact_successes}/{stats.trials} exact"
    )
    if guarantee is not None:
        header += f", guaranteed for s ≤ {guarantee.s_star} (s < {guarantee.bound})"
    rows = [
        (
            s.s,
            s.trials,
            s.exact_successes,
            f"{s.success_rate:.3f}",
            f"{s.max_error:.2e}",
            "yes" if s.guaranteed else "",
        )
        for s in stats.per_sparsity
    ]
    table = format_table(("s", "trials", "exact", "rate", "max |x̂−x|", "guaranteed"), rows)
    return f"{header}\n{table}"


def render_selftest(checks: Sequence[SelftestCheck]) -> str:
    rows = [(check.name, "pass" if check.passed else "FAIL", check.detail) for check in checks]
    passed = sum(check.passed for check in checks)
    table = format_table(("check", "result", "detail"), rows)
    return f"{table}\n{passed}/{len(checks)} checks passed"
