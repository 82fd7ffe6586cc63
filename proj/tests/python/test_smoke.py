from fractions import Fraction

import pytest

import cellkit


def test_temperley_lieb_basics():
    tl = cellkit.temperley_lieb(3, 2)
    assert tl.dim == 5
    assert tl.ring == "Z"
    assert tl.cell_labels == ["1", "3"]
    assert tl.validate()
    assert tl.gram("1") == [[2, 1], [1, 2]]
    assert tl.gram("1", ring="F3") == [[2, 1], [1, 2]]


def test_tl2_at_zero_is_not_quasi_hereditary():
    tl = cellkit.temperley_lieb(2, 0)
    r = tl.qh_check("Q")
    assert not r["quasi_hereditary"]
    assert r["cartan_det"] == 2
    assert "phi_0 vanishes over Q" in r["notes"]
    assert tl.decomposition_matrix("Q") == [[1], [1]]
    assert tl.cartan_matrix("Q") == ([[2]], 2)


def test_bad_primes():
    assert cellkit.temperley_lieb(2, 2).bad_primes() == [2]
    assert cellkit.schur(2, 2).bad_primes() == []


def test_schur():
    s = cellkit.schur(2, 2)
    assert s.dim == 10
    assert s.cell_labels == ["(2)", "(1,1)"]
    assert s.qh_check("Fp:2")["cartan_det"] == 1
    assert s.simple_dims("F2") == {"(2)": 2, "(1,1)": 1}
    assert s.simple_dims("Q") == {"(2)": 3, "(1,1)": 1}


def test_dimension_formulas():
    assert cellkit.gldim_schur("Fp:2", 2, 2) == 2
    assert cellkit.gldim_schur("Z", 2, 2) == 3
    assert cellkit.gldim_schur("Zm:4", 2, 2) is None
    assert cellkit.findim_schur_mod_m(2, 2, 6) == 2
    assert [cellkit.alpha_p(2, 2), cellkit.alpha_p(5, 2), cellkit.alpha_p(5, 3)] == [1, 2, 3]


def test_smith_normal_form():
    m = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
    u, s, v = cellkit.smith_normal_form(m)
    assert s == [[2, 0, 0], [0, 6, 0], [0, 0, 12]]
    assert abs(cellkit.determinant(u)) == 1
    assert abs(cellkit.determinant(v)) == 1


def test_rational_constants_come_back_as_fractions():
    text = cellkit.temperley_lieb(2, 1).export().replace('"Z"', '"Q"', 1)
    a = cellkit.load_spec(text)
    assert a.ring == "Q"
    assert all(isinstance(c, int) for _, c in a.product(0, 0))
    assert Fraction(1, 2) + a.product(1, 1)[0][1] == Fraction(3, 2)


def test_export_round_trip():
    tl = cellkit.temperley_lieb(3, 1)
    text = tl.export()
    assert cellkit.load_spec(text).export() == text


def test_errors_are_translated():
    with pytest.raises(cellkit.CellkitError, match="WrongRing"):
        cellkit.temperley_lieb(2, 0).decomposition_matrix("Zm:6")
    with pytest.raises(cellkit.CellkitError, match="ParseError"):
        cellkit.load_spec("{")


def test_cli_entry_point():
    code, out, _ = cellkit.run_cli(["qh-check", "--algebra", "schur:2,2", "--ring", "F2"])
    assert code == 0
    assert "det C = 1" in out
    code, _, _ = cellkit.run_cli(["qh-check", "--algebra", "tl:2,0", "--ring", "Q"])
    assert code == 1
