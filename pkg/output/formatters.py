"""
Output Formatters

Provides functions to format counts, bound reports, verdict tables and the
witness table as JSON documents or human-readable text.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, TextIO

from digraph.formats import tree_name
from digraph.graph import Digraph
from inequalities.checker import SuiteResult
from inequalities.report import GUARD_BAND, BoundReport, to_json_value
from search.appendix import AppendixResult
from search.sweep import PairVerdict
from search.verdict import HostWitness

logger = logging.getLogger(__name__)

SCHEMA = "dihom/1"


def to_json(
    kind: str,
    body: Dict[str, Any],
    path: Optional[str] = None,
    schema: str = SCHEMA,
    indent: int = 2,
) -> str:
    """
    Serialize one result document.

    Args:
        kind: Document kind, e.g. "count" or "check"
        body: JSON-ready payload; counts already as decimal strings, stray
            rationals are stringified
        path: Optional output file path
        schema: Schema version string
        indent: JSON indentation level

    Returns:
        The JSON text
    """
    output = {"schema": schema, "kind": kind}
    output.update(body)
    text = json.dumps(output, indent=indent, ensure_ascii=False, default=str)

    if path is not None:
        path_obj = Path(path)
        path_obj.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8") as f:
            f.write(text + "\n")
        logger.info(f"Results written to {path}")

    return text


def host_bits(host: Digraph) -> str:
    """Row-major bit string of the adjacency matrix, prefixed by n."""
    bits = "".join(str(x) for row in host.matrix() for x in row)
    return f"{host.n} {bits}"


def _relation_text(report: BoundReport) -> str:
    if report.relation == "==":
        return "==" if report.holds else "!="
    return "<=" if report.holds else ">"


def to_text(
    reports: Sequence[BoundReport],
    title: str = "BOUND REPORTS",
    file: Optional[TextIO] = None,
) -> str:
    """
    Format bound reports as a human-readable table.

    Args:
        reports: Reports to list
        title: Header line
        file: Optional file to write to

    Returns:
        Formatted text string
    """
    lines = []

    lines.append("=" * 60)
    lines.append(title)
    lines.append("=" * 60)

    for report in reports:
        marker = "[OK]  " if report.holds else "[FAIL]"
        lines.append(f"  {marker} {report.label}: {report.lhs} {_relation_text(report)} {report.rhs}")
        if not report.exact:
            lines.append(f"         float sides, guard band {GUARD_BAND:.3g}")
        if report.details:
            for key, value in report.details.items():
                lines.append(f"         {key}: {to_json_value(value)}")

    held = sum(1 for r in reports if r.holds)
    lines.append("-" * 40)
    lines.append(f"  {held}/{len(reports)} hold")
    lines.append("=" * 60)

    text = "\n".join(lines)

    if file is not None:
        file.write(text)

    return text


def format_suites(results: List[SuiteResult]) -> str:
    """
    Format suite outcomes as a summary text.

    Args:
        results: Suite results

    Returns:
        Formatted summary string
    """
    lines = []
    failed = [r for r in results if not r.holds]
    total = sum(r.reports for r in results)
    lines.append(f"Ran {len(results)} suite(s), {total} reports: {len(failed)} suite(s) with violations")
    lines.append("")

    for result in results:
        status = "PASS" if result.holds else "FAIL"
        slack = "n/a" if result.worst_slack is None else f"{result.worst_slack:.6g}"
        lines.append(
            f"[{status}] {result.suite:<12} size={result.size:<6} reports={result.reports:<7} worst slack={slack}"
        )
        for key, value in sorted(result.stats.items()):
            lines.append(f"         {key}: {value}")
        for violation in result.violations:
            report = violation["report"]
            lines.append(f"         instance {violation['index']}: {report['lhs']} vs {report['rhs']}")

    return "\n".join(lines)


def _witness_cells(witness: HostWitness, sign: str) -> str:
    a, b = witness.counts
    return f"{host_bits(witness.host):<30} {a}{sign}{b}"


def format_verdicts(verdicts: Sequence[PairVerdict]) -> str:
    """
    Verdict table in the witness-table layout: pair, H_>, counts, H_<, counts.
    """
    lines = []
    header = f"{'pair':<24} {'H_>':<30} {'':>8} {'H_<':<30}"
    lines.append(header)
    lines.append("─" * len(header))

    for pv in verdicts:
        pair = f"{tree_name(pv.a)} ∥ {tree_name(pv.b)}"
        record = pv.verdict.witness
        if record is not None:
            lines.append(f"{pair:<24} {_witness_cells(record.host_gt, '>'):<39} {_witness_cells(record.host_lt, '<')}")
        else:
            lines.append(f"{pair:<24} {pv.verdict.kind.value} up to n={pv.verdict.n_max}")

    counts: Dict[str, int] = {}
    for pv in verdicts:
        counts[pv.verdict.kind.value] = counts.get(pv.verdict.kind.value, 0) + 1
    lines.append("")
    lines.append("  ".join(f"{kind}: {n}" for kind, n in sorted(counts.items())))
    return "\n".join(lines)


def format_appendix(result: AppendixResult) -> str:
    """Boxed rendering of the verified witness table."""
    lines = []

    lines.append("╔" + "═" * 78 + "╗")
    lines.append("║" + "INCOMPARABILITY WITNESSES, 3-ARC TREES".center(78) + "║")
    lines.append("╚" + "═" * 78 + "╝")
    lines.append("")

    for row in result.rows:
        pair = f"{row.a} ∥ {row.b}"
        gt = f"{host_bits(row.host_gt):<28} {row.counts_gt[0]}>{row.counts_gt[1]}"
        lt = f"{host_bits(row.host_lt):<28} {row.counts_lt[0]}<{row.counts_lt[1]}"
        lines.append(f"  {pair:<20} │ {gt:<36} │ {lt}")

    lines.append("")
    delta = result.delta
    mark = "✓" if delta.equal else "✗"
    lines.append(f"  {mark} Δ(H) on the 5-vertex host: {delta.lhs} (arc sum {delta.rhs})")
    lines.append(f"  {len(result.rows)} rows verified")
    return "\n".join(lines)
