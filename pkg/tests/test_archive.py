import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from tetrasimplex.archive import (
    CatalogRecord, format_matrix, format_report, parse_manifest, parse_matrix, read_manifest,
    read_matrix, write_manifest, write_matrix,
)
from tetrasimplex.errors import FormatError
from tetrasimplex.hietarinta import UnitaryFamilyPoint, catalog, unitary_family


def test_identity_file(tmp_path):
    f = tmp_path / "i.smat"
    write_matrix(np.eye(2), f)
    lines = f.read_text().splitlines()
    assert lines == ["SIMPLEXMAT 1", "dim 2 2", "1,0 0,0", "0,0 1,0"]
    assert np.array_equal(read_matrix(f), np.eye(2))


def test_family_matrix_bit_exact(tmp_path):
    T, _ = unitary_family(UnitaryFamilyPoint(3, "MY", Q=np.array([[1, 0.3 + 0.2j], [-(0.3 - 0.2j), 1]])))
    f = tmp_path / "t.smat"
    write_matrix(T, f)
    back = read_matrix(f)
    assert np.array_equal(back.view(np.float64), T.view(np.float64))
    assert format_matrix(back) == f.read_text()


finite = st.floats(allow_nan=False, allow_infinity=False)


@settings(max_examples=60, deadline=None)
@given(re=arrays(np.float64, (3, 4), elements=finite), im=arrays(np.float64, (3, 4), elements=finite))
def test_roundtrip_property(re, im):
    m = re + 1j * im
    back = parse_matrix(format_matrix(m))
    assert np.array_equal(back.real, m.real) and np.array_equal(back.imag, m.imag)


def test_matrix_errors():
    good = format_matrix(np.eye(8))
    lines = good.splitlines()
    short = "\n".join(lines[:-1] + [" ".join(lines[-1].split()[:-1])])
    with pytest.raises(FormatError, match="entry count mismatch"):
        parse_matrix(short)
    with pytest.raises(FormatError, match="malformed header"):
        parse_matrix("SIMPLEXMAT 2\ndim 1 1\n1,0\n")
    with pytest.raises(FormatError, match="malformed header"):
        parse_matrix("SIMPLEXMAT 1\nsize 1 1\n1,0\n")
    with pytest.raises(FormatError):
        parse_matrix("SIMPLEXMAT 1\ndim 1 1\n1;0\n")
    with pytest.raises(FormatError):
        parse_matrix("SIMPLEXMAT 1\ndim 1 1\nnan,0\n")
    with pytest.raises(FormatError):
        format_matrix(np.array([[np.inf]]))
    with pytest.raises(FormatError):
        format_matrix(np.ones(3))


def test_manifest_roundtrip(tmp_path):
    recs = [r for r in catalog() if r.kind == "unitary"]
    f = tmp_path / "m.txt"
    write_manifest(recs, f)
    assert f.read_text().count("family_id:") == 13
    assert len(f.read_text().strip().split("\n\n")) == 13
    assert read_manifest(f) == recs
    full = catalog()
    assert parse_manifest(f.read_text()) == recs
    write_manifest(full, f)
    assert read_manifest(f) == full


def test_manifest_empty_and_duplicates(tmp_path):
    f = tmp_path / "e.txt"
    write_manifest([], f)
    assert f.read_text() == "" and read_manifest(f) == []
    rec = CatalogRecord("x", parameters=("a: real",))
    with pytest.raises(FormatError, match="duplicate"):
        write_manifest([rec, rec], f)
    text = "family_id: x\n\nfamily_id: x\n"
    with pytest.raises(FormatError, match="duplicate"):
        parse_manifest(text)
    with pytest.raises(FormatError):
        parse_manifest("nonsense line\n")
    with pytest.raises(FormatError):
        parse_manifest("kind: unitary\n")


def test_report_format():
    out = format_report({"a": 1.5e-13, "b": "ok", "c": 3})
    assert out == "a: 1.500000e-13\nb: ok\nc: 3\n"
