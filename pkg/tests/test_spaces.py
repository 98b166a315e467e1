import pytest
from hypothesis import given, settings

from epoly.errors import NoDiamond, NotDivisible
from epoly.hodge import SignConvention as S, to_epoly
from epoly.poly import L, U, V, BivariatePoly as P, weight_sums
from epoly import spaces as sp
from epoly.spaces import (
    Abelian, Affine, Difference, FreeQuotient, Gm, Known, KummerQuot, Point, Proj, Sym2,
    diamond, eval_space, find_named, product,
)
from conftest import space_exprs

K = KummerQuot(2)


def test_atoms():
    assert eval_space(Point()) == 1
    assert eval_space(Affine(3)) == L**3
    assert eval_space(Gm()) == L - 1
    assert eval_space(Proj(2)) == 1 + L + L**2
    assert eval_space(sp.Quadric3()) == eval_space(Proj(3))
    assert eval_space(sp.Finite(16)) == 16


def test_sl2_and_q_pieces():
    assert eval_space(sp.sl2_space()) == L**3 - L
    q = sp.quartic_cone_Q()
    assert eval_space(find_named(q, "Q0")) == L**4 + L**3 - L
    assert eval_space(find_named(q, "QminusQ0")) == L**5 - 2 * L**3 + L
    assert eval_space(q) == L**5 + L**4 - L**3


def test_quotient_by_sl2():
    s3 = FreeQuotient(Difference(Affine(6), sp.quartic_cone_Q()), sp.sl2_space())
    assert eval_space(s3) == L**3 - L**2


def test_kummer_open_part_stratum():
    s1 = product(Difference(K, sp.Finite(16)), Affine(2), Gm())
    assert eval_space(s1) == P.parse("u^5v^5+u^3v^5+u^5v^3+3u^4v^4-19u^3v^3-u^2v^4-u^4v^2+15u^2v^2")


def test_stable_locus_weights():
    s = Difference(Proj(3), K)
    assert eval_space(s) == P.parse("u^3v^3 - 3uv - u^2 - v^2")
    assert weight_sums(eval_space(s)) == {6: 1, 2: -5}


def test_conventions_differ_only_on_odd_classes():
    assert eval_space(Abelian(1), S.UNSIGNED) == (1 + U) * (1 + V)
    assert eval_space(Abelian(1)) == (1 - U) * (1 - V)
    assert eval_space(Proj(4), S.UNSIGNED) == eval_space(Proj(4))


def test_sym2_of_jacobian():
    j2 = eval_space(Sym2(Abelian(2)), S.UNSIGNED)
    # 8 even and 8 odd basis classes: C(9,2) + C(8,2) + 8*8
    assert j2(1, 1) == 128
    assert eval_space(Sym2(Abelian(2)))(1, 1) == 0


def test_diamond_agrees_with_eval():
    e = product(Abelian(2), Proj(1)) - Point()
    assert to_epoly(diamond(e)) == eval_space(e)


def test_no_diamond_for_quotients():
    with pytest.raises(NoDiamond):
        diamond(Known(L))
    with pytest.raises(NoDiamond):
        diamond(FreeQuotient(Affine(3), Gm()))


def test_free_quotient_remainder():
    with pytest.raises(NotDivisible):
        eval_space(FreeQuotient(Affine(3), sp.sl2_space()))


def test_operators_build_nodes():
    assert Affine(1) * Gm() == sp.Product(Affine(1), Gm())
    assert 3 * Point() == sp.ScaledCopies(3, Point())
    assert Proj(1) + Point() == sp.Union(Proj(1), Point())


@pytest.mark.parametrize("ctor", [Affine, Proj, Abelian, KummerQuot, sp.Finite])
def test_negative_sizes_rejected(ctor):
    with pytest.raises(ValueError):
        ctor(-1)


ALL = settings(max_examples=200, deadline=None)


@ALL
@given(space_exprs, space_exprs)
def test_additive_and_multiplicative(a, b):
    for c in S:
        ea, eb = eval_space(a, c), eval_space(b, c)
        assert eval_space(sp.Union(a, b), c) == ea + eb
        assert eval_space(Difference(a, b), c) == ea - eb
        assert eval_space(sp.Product(a, b), c) == ea * eb
        assert eval_space(sp.Bundle(a, b), c) == ea * eb


@ALL
@given(space_exprs)
def test_diamond_is_compatible(e):
    assert to_epoly(diamond(e)) == eval_space(e)


def test_gm_keeps_its_class_when_unsigned():
    assert eval_space(Gm(), S.UNSIGNED) == L - 1
    assert to_epoly(diamond(Gm()), S.UNSIGNED) == L + 1


@ALL
@given(space_exprs)
def test_quotient_undoes_product(e):
    g = sp.sl2_space()
    assert eval_space(FreeQuotient(sp.Product(e, g), g)) == eval_space(e)
