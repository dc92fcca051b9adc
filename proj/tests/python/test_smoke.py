from fractions import Fraction

import pytest

import symgen


def test_parse_and_print():
    p = symgen.parse_poly("1 - 2*y*x^-1")
    assert str(p) == "1 - 2*y*x^-1"
    assert p.terms() == {(0, 0, 0): Fraction(1), (1, -1, 0): Fraction(-2)}
    assert symgen.parse_poly(str(p)) == p
    with pytest.raises(symgen.InputError, match="unknown variable"):
        symgen.parse_poly("1 + w")


def test_arithmetic_and_adams():
    a = symgen.parse_poly("1 + y*x*z^2")
    assert str(a * a) == "1 + 2*y*x*z^2 + y^2*x^2*z^4"
    assert str(symgen.parse_poly("y + 2*x^-1*z").adams(2)) == "2*x^-2*z^2 + y^2"
    assert str(a.specialize({"z": 1})) == "1 + y*x"
    assert a.specialize({"z": 1}).variables == ["y", "x"]


def test_symmetric_series():
    p1 = symgen.symmetric_series("hodge", "1 + y*x*z^2", order=2)
    assert str(p1[2]) == "1 + y*x*z^2 + y^2*x^2*z^4"
    euler = symgen.symmetric_series("euler", 2, order=3)
    assert [str(c) for c in euler] == ["1", "2", "3", "4"]
    ell = symgen.symmetric_series("hodge", "1 - y*z - x*z + y*x*z^2", order=2)
    assert ell[2] == symgen.parse_poly("1 - y*z - x*z + 2*y*x*z^2 - y^2*x*z^3 - y*x^2*z^3 + y^2*x^2*z^4")


def test_configuration_and_signature():
    odd = symgen.configuration_series("hodge", "-x*z", order=3)
    assert [str(c) for c in odd] == ["1", "-x*z", "x^2*z^2", "-x^3*z^3"]
    assert symgen.signature_series(1, 3, order=4) == [1, 1, 2, 2, 3]
    with pytest.raises(symgen.InputError):
        symgen.signature_series(0, 1)


def test_pre_lambda_structure():
    p = symgen.parse_poly("y - 3*x^-1*z + 2")
    assert symgen.adams_from_sigma(p, 5) == [p.adams(r) for r in range(1, 6)]
    sigma = symgen.sigma_series(p, 4)
    lam = symgen.lambda_series(p, 4)
    assert str(sigma[0]) == "1" and str(lam[0]) == "1"


def test_characters():
    classes, values = symgen.character_table(3)
    assert classes == [[3], [2, 1], [1, 1, 1]]
    assert values == [[1, 1, 1], [-1, 0, 2], [1, -1, 1]]


def test_brute_force_matches_series():
    p1 = {(0, 0, 0): 1, (1, 1, 2): 1}
    sym2 = symgen.sym_power_brute(p1, 2)
    assert sym2 == {(0, 0, 0): 1, (1, 1, 2): 1, (2, 2, 4): 1}
    assert symgen.hodge_poly(sym2) == symgen.symmetric_series("hodge", "1 + y*x*z^2", order=2)[2]
    odd = {(0, 1, 1): 1}
    assert symgen.sym_power_brute(odd, 2) == {}
    assert symgen.alt_power_brute(odd, 2) == {(0, 2, 2): 1}
    assert symgen.schur_multiplicity({(0, 0, 0): 2}, 2, [2]) == {(0, 0, 0): 3}


def test_cli_in_process():
    code, out, err = symgen.run_cli(["characters", "3"])
    assert code == 0 and "(2,1)" in out
    code, out, err = symgen.run_cli(["series", "--kind", "hodge", "--poly", "1 + q"])
    assert code == 2 and "unknown variable" in err
