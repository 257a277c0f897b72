"""
Report assembly and rendering. The report body is deterministic; timing and
version data live under the separate ``run`` key.
"""

import json
import sys
from typing import Any, Dict, List, Optional

from calculus import Calculus
from cyclo import CycNum, format_literal
from double import Sector
from errors import CoverageError, GateFailure, QdcError, ResourceBound
from exterior import ExteriorData, Form, decode
from group import Section

REPORT_VERSION = 1


def conventions(section: Optional[Section] = None) -> Dict[str, Any]:
    record: Dict[str, Any] = {
        "permutation_product": "(st)(i) = s(t(i))",
        "pairing": "<delta_s (x) u, t (x) delta_v> = [s = t][u = v]",
        "dg_antipode": "S(delta_s (x) u) = delta_{u^-1 s^-1 u} (x) u^-1",
        "dstar_antipode": "S(s (x) delta_u) = u^-1 s^-1 u (x) delta_{u^-1}",
        "generic_construction": "R1 = (<., a> (x) id)R, R2 = (id (x) <., a>)R, Q paired on its second leg",
        "innerness": "d a = a theta - theta a",
        "higher_d": "d w = (-1)^n w ^ theta - theta ^ w",
        "lambda_coordinates": "pivot columns of the reduced echelon form of A_n",
        "reduced_words": "left-to-right bubble sort, permutations in lexicographic order",
    }
    if section is not None:
        group = section.group
        record["basepoint"] = group.name(section.basepoint)
        record["section"] = {group.name(a): group.name(g) for a, g in section.as_dict().items()}
    return record


def _matrix_literals(m) -> Any:
    if m.rows == 1 and m.cols == 1:
        return format_literal(m[0, 0])
    return [[format_literal(m[i, j]) for j in range(m.cols)] for i in range(m.rows)]


def cocycle_report(sector: Sector) -> Dict[str, Any]:
    """zeta_a(u) for every class element a and group element u, with its image under the representation."""
    group = sector.group
    zeta: Dict[str, List[str]] = {}
    rho: Dict[str, List[Any]] = {}
    for a in sector.elements:
        name = group.name(a)
        zeta[name] = [group.name(sector.zeta_values[(a, u)]) for u in group.elements()]
        rho[name] = [_matrix_literals(sector.zeta(a, u)) for u in group.elements()]
    return {
        "columns": [group.name(u) for u in group.elements()],
        "zeta": zeta,
        "rho": rho,
    }


def format_tensor(calc: Calculus, tensor: Dict[int, CycNum], degree: int) -> List[List[str]]:
    """[label, ..., coefficient] rows sorted by tensor index."""
    dim = calc.dim
    return [
        [calc.label_name(lab) for lab in decode(index, degree, dim)] + [format_literal(v)]
        for index, v in sorted(tensor.items())
    ]


def format_form(ext: ExteriorData, form: Form) -> List[List[str]]:
    """[Lambda tensor, s, y, coefficient] rows; the Lambda^n coordinate is shown by its lifted word."""
    calc, group = ext.calc, ext.calc.group
    deg = ext.degree(form.degree)
    rows = []
    for (k, (s, y)), v in form.items():
        word = decode(deg.lift(k), form.degree, ext.dim)
        rows.append(
            [" ".join(calc.label_name(lab) for lab in word) or "1", group.name(s), group.name(y), format_literal(v)]
        )
    return rows


def error_record(exc: QdcError) -> Dict[str, Any]:
    record: Dict[str, Any] = {"type": type(exc).__name__, "message": str(exc), "exit_code": exc.exit_code}
    if isinstance(exc, GateFailure):
        record["gate"] = exc.gate
        record["counterexample"] = exc.counterexample
    elif isinstance(exc, CoverageError):
        record["class_elements"] = exc.class_elements
        record["centralizer_order"] = exc.centralizer_order
    elif isinstance(exc, ResourceBound):
        record["partial"] = exc.partial
    return record


def render_text(report: Dict[str, Any]) -> str:
    """Short human-readable summary of a report."""
    lines = [f"command: {report.get('command')}", f"group: {report.get('group', {}).get('source')}"]
    if "summary" in report:
        summary = report["summary"]
        lines.append(f"calculi: {summary['count']}, dimensions {summary['dims']}, sum {summary['dim_sum']}")
        for pair in report.get("pairs", []):
            lines.append(
                f"  class {{{','.join(pair['class_elements'])}}} irrep {pair['irrep']}: dim {pair['calculus_dim']}"
            )
    if "pair" in report:
        lines.append(f"pair: {report['pair']['description']}, calculus dimension {report['pair']['calculus_dim']}")
    for key in ("lambda_dims", "relation_count", "betti", "field_conductor", "classical_dims"):
        if key in report:
            lines.append(f"{key}: {report[key]}")
    if "gates" in report:
        lines.append("gates: " + ", ".join(f"{g}={r}" for g, r in report["gates"].items()))
    if "error" in report:
        lines.append(f"error: {report['error']['message']}")
    return "\n".join(lines) + "\n"


def render(report: Dict[str, Any], output_format: str = "json") -> str:
    if output_format == "text":
        return render_text(report)
    return json.dumps(report, ensure_ascii=False, indent=2) + "\n"


def write_report(report: Dict[str, Any], out: Optional[str], output_format: str = "json") -> None:
    text = render(report, output_format)
    if out:
        with open(out, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
