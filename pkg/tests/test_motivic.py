import pytest

from procsm.errors import MalformedExpression, MissingSmoothDim
from procsm.motivic import (
    EPS,
    ONE,
    Affine,
    Complement,
    DisjointUnion,
    GWElement,
    Gm,
    Point,
    Product,
    Proj,
    chi_compact,
    chi_compact_quadratic,
    chi_homological_quadratic,
    gw_add,
    gw_invariants,
    gw_mul,
)

ZERO = GWElement()


def test_gw_arithmetic():
    assert gw_mul(EPS, EPS) == ONE
    assert gw_mul(ONE - EPS, ONE - EPS) == GWElement(2, -2)
    x = GWElement(3, -7)
    assert gw_mul(x, ONE) == x
    assert gw_add(x, ZERO) == x


def test_gw_invariants():
    assert gw_invariants(EPS - ONE) == (0, -2)
    assert gw_invariants(GWElement(2, 1)) == (3, 1)
    assert gw_invariants(ZERO) == (0, 0)


def test_gw_str():
    assert str(EPS - ONE) == "<-1> - 1"
    assert str(ONE - EPS) == "1 - <-1>"
    assert str(GWElement(2, 1)) == "2 + <-1>"
    assert str(ZERO) == "0"


def test_chi_compact():
    gm = Complement(whole=Proj(n=1), closed=DisjointUnion(parts=(Point(), Point())))
    assert chi_compact(gm) == 0
    assert chi_compact(Product(factors=(Affine(n=1), Gm()))) == 0
    assert chi_compact(Proj(n=2)) == 3


def test_chi_compact_quadratic():
    assert chi_compact_quadratic(Gm()) == EPS - ONE
    assert chi_compact_quadratic(Product(factors=(Gm(), Gm()))) == GWElement(2, -2)
    assert chi_compact_quadratic(Proj(n=2)) == GWElement(2, 1)


def test_affine_line_value_forced_by_gm():
    # G_m = A^1 minus a point
    a1 = chi_compact_quadratic(Affine(n=1))
    assert a1 == EPS
    assert chi_compact_quadratic(Complement(whole=Affine(n=1), closed=Point())) == chi_compact_quadratic(Gm())


def test_chi_homological():
    assert chi_homological_quadratic(Gm(smooth_dim=1)) == ONE - EPS
    assert chi_homological_quadratic(Proj(n=2, smooth_dim=2)) == GWElement(2, 1)
    assert chi_homological_quadratic(Affine(n=2, smooth_dim=2)) == ONE
    assert chi_homological_quadratic(Gm(smooth_dim=1)) + chi_compact_quadratic(Gm()) == ZERO
    with pytest.raises(MissingSmoothDim):
        chi_homological_quadratic(Gm())


@pytest.mark.parametrize(
    "expr",
    [Affine(n=0), Proj(n=-1), Product(factors=()), DisjointUnion(parts=()), Gm(smooth_dim=-1),
     Complement(whole=Proj(n=1), closed="pt")],
)
def test_malformed(expr):
    with pytest.raises(MalformedExpression):
        chi_compact(expr)
