"""Line-oriented ``key: value`` report formatting."""
from typing import Any, Iterable, List, Optional, Tuple

from spinekit.models.schemas import CriterionResult, SpineReport, VerificationSummary


def _fmt(value: Any) -> str:
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.12f}"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_fmt(v) for v in value) + "]"
    return str(value)


def format_block(pairs: Iterable[Tuple[str, Any]]) -> str:
    """Render key/value pairs one per line."""
    return "\n".join(f"{key}: {_fmt(value)}" for key, value in pairs) + "\n"


def spine_report_pairs(report: SpineReport) -> List[Tuple[str, Any]]:
    """Ordered fields of a spine report."""
    if report.error is not None:
        return [("source", report.source), ("error", report.error)]

    pairs: List[Tuple[str, Any]] = [
        ("source", report.source),
        ("tetrahedra", report.n_tets),
        ("edge_classes", report.edge_class_sizes),
        ("triple_edges", report.triple_edges),
        ("components2", report.components2),
        ("euler", report.euler),
        ("boundary_components", report.boundary_components),
        ("boundary_genera", report.boundary_genera),
        ("poor", report.poor),
        ("simple_subpolyhedra", report.simple_subpolyhedra),
        ("epsilon", report.epsilon),
        ("epsilon_float", report.epsilon_float),
        ("regular_angle", report.regular_angle),
    ]
    if report.volume is not None:
        pairs.extend([
            ("volume", report.volume.scale * report.volume.via_lobachevsky),
            ("volume_integral", report.volume.scale * report.volume.via_integral),
            ("volume_discrepancy", report.volume.discrepancy),
        ])
    else:
        pairs.append(("volume", None))
    pairs.extend([
        ("geodesic_class", report.geodesic_class),
        ("complexity_if_hyperbolic", report.complexity_if_hyperbolic),
    ])
    return pairs


def format_spine_report(report: SpineReport) -> str:
    return format_block(spine_report_pairs(report))


def format_criteria_table(
    results: List[CriterionResult],
    summary: Optional[VerificationSummary] = None
) -> str:
    """Pass/fail table for acceptance runs."""
    width = max((len(r.name) for r in results), default=10)
    lines = [f"{'#':>2}  {'criterion':<{width}}  result  detail"]
    for r in results:
        verdict = "PASS" if r.passed else "FAIL"
        lines.append(f"{r.number:>2}  {r.name:<{width}}  {verdict:<6}  {r.detail}")
    if summary is not None:
        lines.append(f"total: {summary.total}  passed: {summary.passed}  failed: {summary.failed}")
    return "\n".join(lines) + "\n"
