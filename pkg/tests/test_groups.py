from core.groups import (AutOf, Cyclic, Dihedral, Direct, Named, Power, Semidirect, Stabilized, Symmetric,
                         Trivial, Unclassified, circulant_normal_expression, twin_expression)


def test_orders():
    assert Trivial().order == 1
    assert Symmetric(4).order == 24
    assert Cyclic(7).order == 7
    assert Dihedral(14).order == 28
    assert Power(Symmetric(2), 4).order == 16
    assert Direct((Symmetric(5), Symmetric(2))).order == 240
    assert Stabilized(Named("H", 144), 18).order == 2592


def test_rendering():
    assert Dihedral(14).render() == "D14"
    assert Power(Symmetric(2), 4).render() == "(S2^4)"
    assert Power(Symmetric(3), 1).render() == "S3"
    assert Direct((Symmetric(4), Symmetric(2))).render() == "S4 x S2"
    assert Semidirect(Cyclic(8), Named("stab4", 4)).render() == "Z8 : stab4"
    assert AutOf("C_4(±1)", Dihedral(4)).render() == "Aut(C_4(±1))"
    assert AutOf("C_4(±1)", Dihedral(4)).expanded() == "Aut(C_4(±1)) = D4"
    assert Unclassified(12).render() == "unclassified[12]"
    assert str(Stabilized(Direct((Symmetric(2), Symmetric(2))), 6)) == "(S2 x S2) . 6"


def test_circulant_normal_expression():
    assert circulant_normal_expression(14, 2) == Dihedral(14)
    assert circulant_normal_expression(5, 1) == Cyclic(5)
    assert circulant_normal_expression(8, 4).order == 32


def test_twin_expression_collapses_trivial_quotient():
    assert twin_expression(5, 1, Trivial()) == Power(Symmetric(5), 1)
    expr = twin_expression(2, 4, AutOf("C_4(±1)", Dihedral(4)))
    assert expr.order == 128
    assert expr.render() == "(S2^4) : Aut(C_4(±1))"
