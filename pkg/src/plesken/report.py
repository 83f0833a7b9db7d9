"""Verification reports: deterministic JSON, optional Markdown rendering.

Every verdict in a report is computed in the invocation that emits it;
nothing is cached between runs.  Reports are rendered byte-identically for
identical inputs, flags and seed; wall-clock timing is therefore only
included when explicitly requested.
"""

from __future__ import annotations

import json

from .algebra import (
    Algebra,
    AntiInvolution,
    bracket_closure_check,
    describe_vector,
    plesken_basis,
    plesken_lie_algebra,
    validate_associativity,
    validate_involution,
    validate_unit,
)
from .cellular import (
    CellDatum,
    check_gram_properties,
    gram_matrix,
    is_semisimple,
    predicted_decomposition,
    validate_cell_datum,
    verify_theorem,
)
from .lie import fingerprint, fingerprint_match
from .scalars import ZERO

DEFAULT_BRACKET_CAP = 12


def dumps(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


class DocumentInvalid(ValueError):
    """An input document failed structural validation."""


def validate_algebra(algebra: Algebra, sigma: AntiInvolution) -> dict:
    """Run the structural checks, raising DocumentInvalid on failure."""
    triple = validate_associativity(algebra)
    if triple is not None:
        raise DocumentInvalid(f"associativity fails at basis triple {triple}")
    bad_unit = validate_unit(algebra)
    if bad_unit is not None:
        raise DocumentInvalid(f"unit axiom fails at basis index {bad_unit}")
    failure = validate_involution(algebra, sigma)
    if failure is not None:
        raise DocumentInvalid(f"involution invalid: {failure}")
    return {"associativity": "pass", "unit": "pass", "involution": "pass"}


def analysis_report(
    name: str,
    algebra: Algebra,
    sigma: AntiInvolution,
    *,
    bracket_cap: int = DEFAULT_BRACKET_CAP,
    seed: int = 0,
    closure_samples: int = 25,
) -> dict:
    """Skew-part structure of one algebra: basis, brackets, fingerprint."""
    checks = validate_algebra(algebra, sigma)
    basis = plesken_basis(algebra, sigma)
    lie = plesken_lie_algebra(algebra, sigma)
    closure = bracket_closure_check(algebra, sigma, closure_samples, seed=seed)
    checks["bracket_closure"] = (
        "pass" if closure is None else f"counterexample at sample {closure.sample}"
    )
    report = {
        "input": {
            "name": name,
            "dim": algebra.dim,
            "involution_conjugates_scalars": sigma.conjugates_scalars,
        },
        "checks": checks,
        "plesken": {
            "dim": lie.dim,
            "basis": [
                {
                    "label": lie.labels[i],
                    "element": describe_vector(algebra.labels, basis[i].coeffs),
                }
                for i in range(lie.dim)
            ],
        },
        "fingerprint": fingerprint(lie).as_dict(),
        "seed": seed,
    }
    if lie.dim <= bracket_cap:
        table = []
        for a in range(lie.dim):
            for b in range(a + 1, lie.dim):
                coeffs = [ZERO] * lie.dim
                for k, c in lie.bracket_terms(a, b):
                    coeffs[k] = c
                table.append(
                    [lie.labels[a], lie.labels[b], describe_vector(lie.labels, coeffs)]
                )
        report["plesken"]["bracket_table"] = table
    else:
        report["plesken"]["bracket_table"] = None
    return report


def cellular_report(
    name: str,
    algebra: Algebra,
    sigma: AntiInvolution,
    datum: CellDatum,
    *,
    bracket_cap: int = DEFAULT_BRACKET_CAP,
    seed: int = 0,
) -> dict:
    """Full cellularity verification on top of the analysis report."""
    report = analysis_report(
        name, algebra, sigma, bracket_cap=bracket_cap, seed=seed
    )
    failure = validate_cell_datum(algebra, sigma, datum)
    if failure is not None:
        report["cellularity"] = {"valid": False, "failure": str(failure)}
        return report
    report["cellularity"] = {"valid": True}
    gram_issues = [
        str(problem)
        for lam in datum.lambdas
        if (problem := check_gram_properties(algebra, sigma, datum, lam))
        is not None
    ]
    report["gram_properties"] = {"pass": not gram_issues, "failures": gram_issues}
    verdict = is_semisimple(algebra, datum)
    report["semisimplicity"] = verdict.as_dict()
    grams = [gram_matrix(algebra, datum, lam) for lam in datum.lambdas]
    if verdict.semisimple:
        decomposition = predicted_decomposition(datum, grams)
        report["predicted_decomposition"] = decomposition.as_dict()
        sizes = decomposition.size_list()
    else:
        report["predicted_decomposition"] = None
        sizes = [len(datum.members(lam)) for lam in datum.lambdas if datum.members(lam)]
    outcome = verify_theorem(algebra, sigma, datum)
    report["theorem"] = outcome.as_dict()
    lie = plesken_lie_algebra(algebra, sigma)
    report["fingerprint_comparison"] = {
        "model_sizes": sizes,
        **fingerprint_match(lie, sizes).as_dict(),
    }
    return report


def _md_table(headers: list[str], rows: list[list]) -> list[str]:
    lines = ["| " + " | ".join(headers) + " |"]
    lines.append("|" + "|".join(" --- " for _ in headers) + "|")
    for row in rows:
        lines.append("| " + " | ".join(str(v) for v in row) + " |")
    return lines


def render_markdown(report: dict) -> str:
    lines = [f"# Report: {report['input']['name']}", ""]
    lines.append(f"- algebra dimension: {report['input']['dim']}")
    lines.append(f"- skew-part dimension: {report['plesken']['dim']}")
    for check, verdict in sorted(report["checks"].items()):
        lines.append(f"- {check}: {verdict}")
    lines.append("")
    if report["plesken"].get("bracket_table"):
        lines.append("## Bracket table")
        lines.append("")
        lines.extend(
            _md_table(["x", "y", "[x, y]"], report["plesken"]["bracket_table"])
        )
        lines.append("")
    lines.append("## Fingerprint")
    lines.append("")
    for key, value in sorted(report["fingerprint"].items()):
        lines.append(f"- {key}: {value}")
    lines.append("")
    if "semisimplicity" in report:
        lines.append("## Cellular structure")
        lines.append("")
        lines.append(f"- cell datum valid: {report['cellularity']['valid']}")
        if report["cellularity"]["valid"]:
            lines.append(
                f"- semisimple: {report['semisimplicity']['semisimple']}"
            )
            lines.extend(
                _md_table(
                    ["cell", "size", "rank"],
                    [
                        [c["cell"], c["size"], c["rank"]]
                        for c in report["semisimplicity"]["cells"]
                    ],
                )
            )
            lines.append("")
            lines.append(f"- certificate: {report['theorem']['certified']}")
            if report["theorem"]["failed_check"]:
                lines.append(f"- failed check: {report['theorem']['failed_check']}")
            comparison = report.get("fingerprint_comparison")
            if comparison:
                lines.append(
                    f"- fingerprint matches model {comparison['model_sizes']}: "
                    f"{comparison['matches']}"
                )
    lines.append("")
    return "\n".join(lines)
