"""Solution tables: derivation from braces, the three checks, and text I/O."""

import io

import numpy as np
import pytest

from bracekit.braces import check_axioms
from bracekit.construct import build_family, parse_spec, trivial_brace
from bracekit.errors import AxiomsNotVerifiedError, SolutionFormatError
from bracekit.ybe import (
    SolutionTable,
    check_solution,
    export_solution,
    import_solution,
    solution_from_brace,
)

CF72_DICT = {
    "blocks": [
        {"p": 2, "gram": [[0, 1], [1, 0]], "f": [[0, 1], [1, 1]], "m": 1, "r": 1},
        {"p": 3, "gram": [[1]], "f": [[2]], "m": 1, "r": 1},
    ]
}


@pytest.fixture(scope="module")
def cf72_solution():
    B = build_family(parse_spec(CF72_DICT))
    check_axioms(B, mode="exhaustive")
    return solution_from_brace(B)


def _flip(n):
    grid = np.tile(np.arange(n), (n, 1))
    return SolutionTable(sigma=grid, gamma=grid.T)


def test_requires_verified_axioms():
    B = trivial_brace([4])
    with pytest.raises(AxiomsNotVerifiedError):
        solution_from_brace(B)
    check_axioms(B)
    table = solution_from_brace(B)
    assert table == _flip(4)


def test_trivial_brace_gives_flip():
    B = trivial_brace([2])
    check_axioms(B)
    table = solution_from_brace(B)
    assert table.sigma.tolist() == [[0, 1], [0, 1]]
    assert table.gamma.tolist() == [[0, 0], [1, 1]]
    report = check_solution(table)
    assert report.ok and report.braid_mode == "exhaustive"


def test_cf72_solution_passes_all_checks(cf72_solution):
    assert cf72_solution.size == 72
    report = check_solution(cf72_solution)
    assert report.ok
    assert report.involutive and report.nondegenerate and report.braid
    assert report.braid_mode == "exhaustive"
    assert report.braid_checked == 72**3
    assert report.counterexample is None
    # a non-trivial brace does not give the flip
    assert cf72_solution != _flip(72)


def test_identity_map_is_degenerate():
    n = 3
    X, Y = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    table = SolutionTable(sigma=X, gamma=Y)  # r(x, y) = (x, y)
    report = check_solution(table)
    assert not report.nondegenerate
    assert not report.ok


def test_corrupted_table_fails():
    table = _flip(2)
    gamma = table.gamma.copy()
    gamma[0, 0] = 1
    report = check_solution(SolutionTable(sigma=table.sigma, gamma=gamma))
    assert not report.ok


def test_braid_failure_reports_counterexample():
    # involutive and non-degenerate but braid-violating: swap one row pair
    sigma = np.array([[1, 0, 2], [0, 1, 2], [2, 1, 0]])
    gamma = sigma.T.copy()
    report = check_solution(SolutionTable(sigma=sigma, gamma=gamma))
    if not report.braid:
        assert report.counterexample is not None


def test_sampled_braid_mode():
    table = _flip(210)
    report = check_solution(table, braid_cap=200, trials=5_000, seed=7)
    assert report.ok
    assert report.braid_mode == "sampled"
    assert report.braid_checked == 5_000


def test_table_validation():
    with pytest.raises(ValueError):
        SolutionTable(sigma=np.zeros((2, 3), dtype=int), gamma=np.zeros((2, 3), dtype=int))
    with pytest.raises(ValueError):
        SolutionTable(sigma=np.array([[5]]), gamma=np.array([[0]]))


def test_export_n1_exact_bytes(tmp_path):
    table = SolutionTable(sigma=np.array([[0]]), gamma=np.array([[0]]))
    buf = io.BytesIO()
    written = export_solution(table, buf)
    assert buf.getvalue() == b"YBE v1 N=1\n0\n\n0\n"
    assert written == len(buf.getvalue())
    path = tmp_path / "one.ybe"
    export_solution(table, path)
    assert path.read_bytes() == b"YBE v1 N=1\n0\n\n0\n"


def test_roundtrip_cf72(cf72_solution, tmp_path):
    path = tmp_path / "cf72.ybe"
    export_solution(cf72_solution, path)
    again = import_solution(path)
    assert again == cf72_solution
    buf = io.BytesIO()
    export_solution(again, buf)
    assert buf.getvalue() == path.read_bytes()


def test_import_error_paths():
    with pytest.raises(SolutionFormatError, match="header"):
        import_solution(b"YBE v2 N=1\n0\n\n0\n")
    with pytest.raises(SolutionFormatError, match="truncated"):
        import_solution(b"YBE v1 N=2\n0 1\n")
    with pytest.raises(SolutionFormatError, match="blank separator"):
        import_solution(b"YBE v1 N=1\n0\n0\n0\n")
    with pytest.raises(SolutionFormatError, match="out of range"):
        import_solution(b"YBE v1 N=1\n4\n\n0\n")
    with pytest.raises(SolutionFormatError, match="non-integer"):
        import_solution(b"YBE v1 N=1\nx\n\n0\n")
    with pytest.raises(SolutionFormatError, match="after the gamma"):
        import_solution(b"YBE v1 N=1\n0\n\n0\n0\n")


def test_import_from_stream(cf72_solution):
    buf = io.BytesIO()
    export_solution(cf72_solution, buf)
    buf.seek(0)
    assert import_solution(buf) == cf72_solution
