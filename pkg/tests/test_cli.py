import numpy as np
import pytest

from tetrasimplex.archive import read_manifest, read_matrix, write_matrix
from tetrasimplex.cli import main, parse_complex
from tetrasimplex.clifford import CliffordCoeffs, constraint_residual
from tetrasimplex.hietarinta import UnitaryFamilyPoint, family_eigenvalues
from tetrasimplex.simplex import tetra_vertex
from tetrasimplex.tensalg import random_unitary
from tetrasimplex.unitary import spectrum_distance


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def report(text):
    return dict(line.split(": ", 1) for line in text.strip().splitlines())


def test_parse_complex():
    assert parse_complex("i") == 1j
    assert parse_complex("-i") == -1j
    assert parse_complex("1.5-2i") == 1.5 - 2j
    assert parse_complex("3") == 3
    assert parse_complex("2@0") == 2
    assert abs(parse_complex("1@1.5707963267948966") - 1j) <= 1e-15
    with pytest.raises(ValueError):
        parse_complex("abc")


def test_catalog(capsys):
    code, out, _ = run(capsys, "catalog", "list", "--kind", "unitary")
    assert code == 0 and out.count("family_id:") == 13
    code, out, _ = run(capsys, "catalog", "list")
    assert code == 0 and out.count("family_id:") >= 13
    code, _, err = run(capsys, "catalog", "list", "--kind", "bogus")
    assert code == 2 and "usage" in err


def test_usage_errors(capsys):
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "build", "--family", "row9")[0] == 2
    assert run(capsys, "build", "--family", "row2", "--params", "p")[0] == 2
    assert run(capsys, "gate", "cnot", "--params", "phi=1")[0] == 2
    assert run(capsys, "verify", "--relation", "nope", "--input", "x")[0] == 2


def test_build_row2(capsys, tmp_path):
    out_file = tmp_path / "r2.smat"
    code, out, _ = run(capsys, "build", "--family", "row2", "--params", "p=i,q=-1,r=1", "--out", str(out_file))
    assert code == 0
    rep = report(out)
    assert rep["status"] == "ok" and float(rep["unitarity_residual"]) <= 1e-10
    T = read_matrix(out_file)
    assert tetra_vertex(T) <= 1e-10
    code, _, err = run(capsys, "build", "--family", "row2", "--params", "p=2,q=1,r=1")
    assert code == 1 and "|p|=1 violated" in err


def test_build_row5_spectrum(capsys):
    code, out, _ = run(capsys, "build", "--family", "row5", "--params", "thetap=1.0,thetaq=0.3", "--branch", "+")
    assert code == 0
    rep = report(out)
    ev = np.array([complex(t.replace("i", "j")) for t in rep["eigenvalues"].split()])
    want = family_eigenvalues(UnitaryFamilyPoint(5, params={"thetap": 1.0, "thetaq": 0.3}))
    assert spectrum_distance(ev, want) <= 1e-10


def test_build_aliases_and_row1(capsys):
    code, out, _ = run(capsys, "build", "--family", "F3-MY", "--params",
                       "p=2,q=0.5,q1=1,q4=1.4142135623730951")
    assert code == 0 and report(out)["family"] == "row4-MY"
    code, out, _ = run(capsys, "build", "--family", "row1", "--params",
                       "alpha0=0.5,alpha1=0.5,alpha2=0.5,alpha3=0.5")
    assert code == 0 and report(out)["family"] == "row1"
    code, _, err = run(capsys, "build", "--family", "row1", "--params", "alpha0=1,alpha1=1,alpha2=0,alpha3=0")
    assert code == 1 and "violated" in err


def test_verify(capsys, tmp_path):
    f = tmp_path / "id.smat"
    write_matrix(np.eye(8), f)
    code, out, _ = run(capsys, "verify", "--relation", "vertex-tetra", "--input", str(f))
    assert code == 0 and float(report(out)["residual"]) == 0
    code, out, _ = run(capsys, "build", "--family", "row4", "--params", "p=1,q=1",
                       "--out", str(tmp_path / "f3.smat"))
    assert code == 0
    assert run(capsys, "verify", "--relation", "tetra-vertex", "--input", str(tmp_path / "f3.smat"))[0] == 0
    write_matrix(random_unitary(8, np.random.default_rng(0)), tmp_path / "u.smat")
    code, out, _ = run(capsys, "verify", "--relation", "tetra-vertex", "--input", str(tmp_path / "u.smat"))
    assert code == 1 and float(report(out)["residual"]) > 0.05
    code, _, err = run(capsys, "verify", "--relation", "4simplex", "--input", str(f))
    assert code == 1 and "shape" in err
    write_matrix(np.eye(32), tmp_path / "i32.smat")
    code, out, _ = run(capsys, "verify", "--relation", "5simplex", "--input", str(tmp_path / "i32.smat"),
                       "--probes", "3", "--seed", "4")
    rep = report(out)
    assert code == 0 and rep["mode"] == "matrix-free" and rep["probes"] == "3"
    (tmp_path / "bad.smat").write_text("SIMPLEXMAT 1\ndim 8 8\n")
    assert run(capsys, "verify", "--relation", "tetra", "--input", str(tmp_path / "bad.smat"))[0] == 1


def test_gate(capsys, tmp_path):
    code, out, _ = run(capsys, "gate", "cnot")
    rep = report(out)
    assert code == 0 and rep["factors"] == "3"
    assert all(float(rep[f"factor{n}_tetra_vertex"]) <= 1e-12 for n in range(3))
    code, out, _ = run(capsys, "gate", "deutsch", "--params", "lambda=0", "--emit", str(tmp_path / "d"))
    assert code == 0
    composed = read_matrix(tmp_path / "d" / "composed.smat")
    assert np.allclose(composed[6:, 6:], 1j * np.eye(2), atol=1e-12)
    assert (tmp_path / "d" / "factor2.smat").exists() and (tmp_path / "d" / "report.txt").exists()


def test_solve(capsys):
    code, out, _ = run(capsys, "solve", "clifford-case1", "--seed", "7", "--tol", "1e-10")
    assert code == 0
    rep = report(out)
    alphas = [complex(rep[f"alpha{n}"].replace("i", "j")) for n in range(4)]
    assert constraint_residual(CliffordCoeffs(tuple(alphas))).max() <= 1e-10
    code2, out2, _ = run(capsys, "solve", "clifford-case1", "--seed", "7", "--tol", "1e-10")
    assert out2 == out
    code, _, err = run(capsys, "solve", "clifford-case1", "--seed", "7", "--tol", "1e-40", "--max-iter", "2")
    assert code == 1 and "best residual" in err


def test_export(capsys, tmp_path):
    f = tmp_path / "cat.txt"
    code, out, _ = run(capsys, "export", "--kind", "unitary", "--out", str(f))
    assert code == 0 and len(read_manifest(f)) == 13
