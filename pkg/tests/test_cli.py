"""
Tests for the command-line surface: classify, pipeline, exit codes and job validation
"""
import pytest
import sys
import os
import json
import tempfile

# Add src to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from jobs import JobConfig
from main import main

DATA_DIR = os.path.join(os.path.dirname(__file__), '..', 'data')
SECTION_FILE = os.path.join(DATA_DIR, 's3_transposition_section.json')

# A Latin square with identity 0 that is not associative
LOOP_TABLE = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 4, 0, 1, 3],
    [3, 2, 4, 0, 1],
    [4, 3, 1, 2, 0],
]


@pytest.fixture
def temp_dir():
    """Create a temporary directory for reports and input files"""
    path = tempfile.mkdtemp()
    yield path
    for name in os.listdir(path):
        os.remove(os.path.join(path, name))
    os.rmdir(path)


@pytest.fixture
def run(temp_dir):
    """Run the CLI with --out in a temporary file; return (exit code, report)"""
    counter = [0]

    def _run(*argv, parse=True):
        counter[0] += 1
        out = os.path.join(temp_dir, f"report_{counter[0]}.out")
        code = main(list(argv) + ["--out", out])
        with open(out, encoding="utf-8") as f:
            text = f.read()
        return code, (json.loads(text) if parse else text)

    return _run


# classify

def test_classify_s3(run):
    """Seven calculi of dimensions 1, 4, 4, 4, 4, 9, 9 summing to 35"""
    code, report = run("classify", "--group", "S3")
    assert code == 0
    assert report["blocks"] == 8
    summary = report["summary"]
    assert summary["dims"] == [1, 4, 4, 4, 4, 9, 9]
    assert summary["dim_sum"] == 35
    assert summary["expected_sum"] == 35
    assert summary["count"] == 7
    assert report["gates"]["dimension_sum"] == "pass"
    assert report["run"]["exit_code"] == 0


def test_classify_filters(run):
    """--class and --irrep narrow the listed pairs"""
    _, report = run("classify", "--group", "S3", "--class", "(1 2)")
    assert report["summary"]["dims"] == [9, 9]
    _, report = run("classify", "--group", "S3", "--irrep", "trivial")
    assert report["summary"]["dims"] == [4, 9]


def test_classify_abelian(run):
    code, report = run("classify", "--group", "Z2")
    assert code == 0
    assert report["summary"]["dims"] == [1, 1, 1]


def test_classify_text(run):
    code, text = run("classify", "--group", "S3", "--format", "text", parse=False)
    assert code == 0
    assert "calculi: 7" in text


def test_non_associative_table(run, temp_dir):
    """A loop table is an input error"""
    path = os.path.join(temp_dir, "loop.json")
    with open(path, 'w') as f:
        json.dump({"order": 5, "table": LOOP_TABLE}, f)
    code, report = run("classify", "--group", f"file:{path}")
    assert code == 2
    assert report["error"]["type"] == "InputError"


def test_uncovered_group(run):
    """S4 stops at the centralizer of e with exit code 3"""
    code, report = run("classify", "--group", "S4")
    assert code == 3
    assert report["error"]["centralizer_order"] == 24
    assert report["error"]["class_elements"] == ["e"]


def test_bad_log_level(temp_dir):
    code = main(["classify", "--group", "S3", "--log-level", "chatty", "--out", os.path.join(temp_dir, "x.json")])
    assert code == 2


# pipeline

def test_pipeline_requires_irrep(temp_dir):
    code = main(["pipeline", "--group", "S3", "--class", "(1 2)", "--out", os.path.join(temp_dir, "x.json")])
    assert code == 2


def test_pipeline_line_calculus(run):
    """The 1-dimensional calculus end to end"""
    args = ("pipeline", "--group", "S3", "--class", "e", "--irrep", "sign_Sn", "--nmax", "2")
    code, report = run(*args)
    assert code == 0
    assert report["lambda_dims"] == [1, 1, 0]
    assert report["betti"] == [18, 18]
    assert report["pair"]["calculus_dim"] == 1
    assert all(result == "pass" for result in report["gates"].values())
    assert "calculus" in report


def test_pipeline_deterministic(run):
    """Two runs give the same report apart from the run record"""
    args = ("pipeline", "--group", "S3", "--class", "e", "--irrep", "sign_Sn", "--nmax", "2")
    _, first = run(*args)
    _, second = run(*args)
    first.pop("run")
    second.pop("run")
    assert first == second


def test_pipeline_section_file(run):
    """The data/ section with the sign of Z2, checks only"""
    code, report = run(
        "pipeline", "--group", "S3",
        "--section", f"file:{SECTION_FILE}",
        "--irrep", "cyclic(2,1)",
        "--verify-only", "--nmax", "2",
    )
    assert code == 0
    assert report["cocycle"]["rho"]["(1 2)"] == ["1", "-1", "1", "-1", "-1", "1"]
    assert report["conventions"]["section"] == {"(1 2)": "e", "(2 3)": "(1 3)", "(1 3)": "(2 3)"}
    assert "calculus" not in report
    assert "betti" not in report
    assert report["lambda_dims"] == [1, 9, 48]
    assert report["relation_count"] == 33
    assert report["gates"]["bimodule_stability"] == "pass"


def test_pipeline_transposition_calculus(run):
    """The 9-dimensional calculus with the sign of Z2 end to end, up to Lambda^3"""
    code, report = run(
        "pipeline", "--group", "S3", "--class", "(1 2)",
        "--irrep", "cyclic(2,1)",
        "--section", f"file:{SECTION_FILE}",
        "--nmax", "3",
    )
    assert code == 0
    assert report["pair"]["calculus_dim"] == 9
    assert report["lambda_dims"] == [1, 9, 48, 198]
    assert report["relation_count"] == 33
    assert report["classical_dims"] == [1, 3, 4, 3, 1]
    assert report["betti"] == [1, 1]
    assert report["field_conductor"] == 1
    assert report["theta_class"] is True
    assert all(result == "pass" for result in report["gates"].values())
    assert report["gates"]["dd_zero"] == "pass"
    assert "calculus" in report


def test_pipeline_relations(run):
    """--relations lists the 33 relations and the quadratic dimensions"""
    code, report = run(
        "pipeline", "--group", "S3", "--class", "(1 2)", "--irrep", "trivial",
        "--verify-only", "--nmax", "2", "--relations", "--hilbert",
    )
    assert code == 0
    assert len(report["relations_deg2"]) == 33
    assert report["quadratic"]["quadratic_dims"] == [1, 9, 48]
    assert report["hilbert"] == {"top_degree": None, "symmetric": None}


def test_pipeline_bound(run):
    """A small matrix bound stops after Lambda^2 with exit code 5"""
    code, report = run(
        "pipeline", "--group", "S3", "--class", "(1 2)", "--irrep", "trivial",
        "--max-matrix-dim", "100", "--verify-only", "--nmax", "3",
    )
    assert code == 5
    assert report["lambda_dims"] == [1, 9, 48]
    assert report["gates"]["reduced_words"] == "skipped"
    assert report["error"]["type"] == "ResourceBound"


# JobConfig

def test_job_config_validation():
    """Degrees, bounds and selectors are validated"""
    with pytest.raises(ValueError):
        JobConfig(command="pipeline", group="S3", class_selector="e", irrep="sign_Sn", n_max=0)
    with pytest.raises(ValueError):
        JobConfig(command="classify", group="S3", max_matrix_dim=0)
    with pytest.raises(ValueError):
        JobConfig(command="pipeline", group="S3", irrep="trivial")
    job = JobConfig(command="pipeline", group="S3", section="file:x.json", irrep="trivial")
    assert job.class_selector == "all"


def test_cohomology_degree():
    """H^k needs Lambda^{k+1}"""
    job = JobConfig(command="pipeline", group="S3", class_selector="e", irrep="sign_Sn", n_max=3, h_max=1)
    assert job.cohomology_degree == 1
    job = JobConfig(command="pipeline", group="S3", class_selector="e", irrep="sign_Sn", n_max=1, h_max=1)
    assert job.cohomology_degree == 0


if __name__ == '__main__':
    pytest.main([__file__, '-v'])
