from fractions import Fraction

import pytest

import equiloc


def test_thom_values():
    assert equiloc.thom(1, 0) == "c1"
    assert equiloc.thom(2, 0) == "c1^2 + c2"
    assert equiloc.thom(3, 0) == "c1^3 + 3*c1*c2 + 2*c3"


def test_grassmannian():
    assert equiloc.grass_integrate(4, 2, "c1^2*c2") == 1
    assert equiloc.grass_integrate(4, 2, "c1^4") == 2


def test_residue():
    assert equiloc.residue("1", ["z1", "z2"], ["z1", "z2"]) == "1"
    assert equiloc.residue("z1^3", ["l1-z1", "l2-z1", "l3-z1"], ["z1"]) == "l1 + l2 + l3"


def test_flags():
    assert equiloc.flag_check(4, 2, trials=5, seed=3)


def test_hyperbolicity():
    assert equiloc.theta(1) == 1
    assert equiloc.theta(2) == 12
    r = equiloc.gg(1)
    assert equiloc.canonical(r["p"]) == equiloc.canonical("(1 - delta)*(d - 3)")
    assert equiloc.canonical(equiloc.euler(1)) == equiloc.canonical("d*(d-3)*m - 1/2*d*(d-3)")


def test_jets():
    v = [[1, 2], [Fraction(1, 2), 0]]
    assert equiloc.rho(v) == [[1, 2, 0, 0, 0], [Fraction(1, 2), 0, 1, 4, 4]]
    assert equiloc.minors(v)[0] == -1
    assert len(equiloc.rho_symbolic(2, 4)[0]) == 14


def test_errors():
    with pytest.raises(equiloc.EquilocError) as info:
        equiloc.thom(5, 0)
    assert info.value.kind == "MissingQ"
    with pytest.raises(equiloc.EquilocError):
        equiloc.canonical("c1^(")


def test_cli():
    code, out, err = equiloc.run(["thom", "--k", "1", "--codim", "0"])
    assert (code, out, err) == (0, "c1\n", "")
    code, _, err = equiloc.run(["residue", "--job", "missing.json"])
    assert code == 2 and "error" in err
