import time
from typing import Any, Callable, Dict, Tuple

from calculus import build_calculus, calculus_dump, verify_first_order
from double import (
    Sector,
    check_antipode_axiom,
    check_rho_homomorphism,
    check_yang_baxter,
    enumerate_blocks,
)
from errors import GateFailure, InputError, QdcError, ResourceBound
from exterior import (
    braiding,
    build_exterior,
    check_bimodule_stability,
    check_reduced_word_independence,
    classical_dims,
    cohomology,
    hilbert_probe,
    quadratic_dims,
)
from group import (
    FiniteGroup,
    Section,
    centralizer,
    check_cocycle_identity,
    default_section,
    load_group,
    load_section,
    resolve_class,
)
from rep import resolve_irrep
from utils.logger import logger

from .config import JobConfig
from .report import REPORT_VERSION, conventions, cocycle_report, error_record, format_form, format_tensor

Report = Dict[str, Any]


def _group_record(job: JobConfig, group: FiniteGroup) -> Dict[str, Any]:
    return {"source": job.group, "order": group.order, "abelian": group.is_abelian()}


def cmd_classify(job: JobConfig, report: Report) -> None:
    """Every nontrivial (class, irrep) pair with its calculus dimension |C|^2 dim(V)^2."""
    group = load_group(job.group)
    report["group"] = _group_record(job, group)
    report["conventions"] = conventions()
    blocks = enumerate_blocks(group)
    report["blocks"] = len(blocks)
    pairs = [b for b in blocks if not b.trivial]
    if job.class_selector != "all":
        wanted = set(resolve_class(group, job.class_selector).elements)
        pairs = [b for b in pairs if set(b.conj_class.elements) == wanted]
    if job.irrep != "all":
        pairs = [b for b in pairs if b.rep.family == job.irrep]
    report["pairs"] = [b.report() for b in pairs]
    dims = sorted(b.calculus_dim for b in pairs)
    total = sum(b.calculus_dim for b in blocks if not b.trivial)
    expected = group.order ** 2 - 1
    if total != expected:
        raise GateFailure("dimension_sum", f"calculus dimensions sum to {total}, expected {expected}", {"sum": total})
    report["summary"] = {"count": len(pairs), "dims": dims, "dim_sum": sum(dims), "expected_sum": expected}
    report["gates"] = {"block_decomposition": "pass", "dimension_sum": "pass"}
    logger.info(f"{len(pairs)} calculi, dimensions {dims}")


def _select_section(job: JobConfig, group: FiniteGroup) -> Section:
    if job.section is None:
        return default_section(group, resolve_class(group, job.class_selector))
    section = load_section(job.section, group)
    if job.class_selector != "all":
        cls = resolve_class(group, job.class_selector)
        if set(cls.elements) != set(section.conj_class.elements):
            raise InputError(
                f"Section basepoint {group.name(section.basepoint)} is not in the class of {job.class_selector}"
            )
    return section


def cmd_pipeline(job: JobConfig, report: Report) -> None:
    """Build, verify, exterior algebra, relations and cohomology for one (class, irrep) pair."""
    group = load_group(job.group)
    report["group"] = _group_record(job, group)
    section = _select_section(job, group)
    report["conventions"] = conventions(section)
    cent = centralizer(group, section.basepoint)
    rep = resolve_irrep(job.irrep, cent)
    sector = Sector(group, section, rep, cent)
    report["pair"] = {
        "description": sector.describe(),
        "class_elements": [group.name(a) for a in sector.elements],
        "centralizer_order": cent.order,
        "irrep": rep.family,
        "irrep_dim": rep.dim,
        "calculus_dim": sector.m ** 2,
    }
    report["cocycle"] = cocycle_report(sector)
    gates: Dict[str, str] = {}
    report["gates"] = gates

    check_cocycle_identity(section)
    gates["cocycle"] = "pass"
    check_antipode_axiom(group)
    gates["antipode"] = "pass"
    check_rho_homomorphism(sector)
    gates["rho_homomorphism"] = "pass"
    check_yang_baxter(sector)
    gates["yang_baxter"] = "pass"

    calc = build_calculus(sector)
    first = verify_first_order(calc)
    gates.update(calc.gates)
    report["first_order"] = {k: v for k, v in first.items() if k != "gates"}
    if not job.verify_only:
        report["calculus"] = calculus_dump(calc)

    braid = braiding(calc)
    gates.update(calc.gates)
    if braid.dim ** 3 <= job.max_matrix_dim:
        check_reduced_word_independence(braid, job.max_matrix_dim)
        gates["reduced_words"] = "pass"
    else:
        gates["reduced_words"] = "skipped"

    try:
        ext = build_exterior(calc, braid, job.n_max, job.max_matrix_dim)
    except ResourceBound as exc:
        report["lambda_dims"] = exc.partial.get("lambda_dims", [])
        raise
    report["lambda_dims"] = ext.lambda_dims()
    report["classical_dims"] = classical_dims(ext)

    if job.n_max >= 2:
        relations = ext.relations()
        report["relation_count"] = len(relations)
        check_bimodule_stability(ext)
        gates["bimodule_stability"] = "pass"
        if job.relations:
            report["relations_deg2"] = [format_tensor(calc, r, 2) for r in relations]
            report["quadratic"] = quadratic_dims(ext, bound=job.max_matrix_dim)
    if job.hilbert:
        report["hilbert"] = hilbert_probe(report["lambda_dims"])
    if job.verify_only:
        return

    coh = cohomology(ext, job.cohomology_degree)
    gates.update(calc.gates)
    report["betti"] = coh.betti
    report["field_conductor"] = coh.field_conductor
    report["theta_class"] = coh.theta_class
    if job.cohomology:
        report["cohomology"] = {
            "ranks": coh.ranks,
            "representatives": {
                str(k): [format_form(ext, f) for f in forms] for k, forms in sorted(coh.representatives.items())
            },
        }


COMMANDS: Dict[str, Callable[[JobConfig, Report], None]] = {
    "classify": cmd_classify,
    "pipeline": cmd_pipeline,
}


def run_job(job: JobConfig) -> Tuple[Report, int]:
    """
    Run one job. A QdcError ends the run with its exit code; whatever was
    computed before it stays in the report next to an ``error`` record.
    """
    report: Report = {"command": job.command}
    started = time.time()
    code = 0
    try:
        COMMANDS[job.command](job, report)
    except QdcError as exc:
        logger.error(f"{type(exc).__name__}: {exc}")
        report["error"] = error_record(exc)
        code = exc.exit_code
    report["run"] = {
        "report_version": REPORT_VERSION,
        "elapsed_seconds": round(time.time() - started, 3),
        "exit_code": code,
    }
    return report, code
