import pytest
from hypothesis import given, settings

from epoly.errors import (
    DegreeOverflow, FlavorMismatch, NegativeBetti, NegativeMultiplicity, NotExteriorAlgebra,
)
from epoly.hodge import (
    Flavor, HodgeDiamond as H, SignConvention as S, betti_from_pure_E, d_add, d_dual, d_tensor,
    exterior_from_h1, graded_sym2, minus_one_invariants, point, projective, pure_diamond_from_E,
    purity_check, tate_twist, to_epoly, trim_betti,
)
from epoly.oracles import sym2_bruteforce
from epoly.poly import L, U, V, BivariatePoly as P
from conftest import diamonds, effective_diamonds

C = Flavor.COMPACT


def test_abelian_surface():
    a = exterior_from_h1(2)
    assert a.betti() == [1, 4, 6, 4, 1]
    assert to_epoly(a) == (1 - U) ** 2 * (1 - V) ** 2
    assert to_epoly(a, S.UNSIGNED) == (1 + U) ** 2 * (1 + V) ** 2


def test_kummer_invariants():
    k = minus_one_invariants(exterior_from_h1(2))
    assert k.betti() == [1, 0, 6, 0, 1]
    assert to_epoly(k) == P.parse("1 + u^2 + 4uv + v^2 + u^2v^2")
    with pytest.raises(NotExteriorAlgebra):
        minus_one_invariants(projective(2))


def test_sym2_elliptic_curve_is_p1_bundle():
    e = exterior_from_h1(1, C)
    assert to_epoly(graded_sym2(e)) == to_epoly(e) * (1 + L)


def test_sym2_koszul_counts():
    odd = H({(1, 1, 0): 3})
    even = H({(2, 1, 1): 3})
    assert graded_sym2(odd) == H({(2, 2, 0): 3})
    assert graded_sym2(even) == H({(4, 2, 2): 6})
    assert graded_sym2(H()) == H()


@pytest.mark.parametrize("g", [0, 1, 2, 3])
def test_sym2_abelian_matches_oracle(g):
    a = exterior_from_h1(g, C)
    assert graded_sym2(a) == sym2_bruteforce(a)


@settings(max_examples=300, deadline=None)
@given(effective_diamonds(12))
def test_sym2_matches_oracle(a):
    assert graded_sym2(a) == sym2_bruteforce(a)


def test_sym2_rejects_virtual():
    with pytest.raises(NegativeMultiplicity):
        graded_sym2(H({(0, 0, 0): -1}))
    with pytest.raises(NegativeMultiplicity):
        sym2_bruteforce(H({(0, 0, 0): -1}))


def test_flavors_do_not_mix():
    with pytest.raises(FlavorMismatch):
        d_add(point(), point(C))
    with pytest.raises(FlavorMismatch):
        d_tensor(point(), point(C))


def test_dual_of_projective_space():
    assert d_dual(projective(3), 3) == projective(3, C)
    with pytest.raises(DegreeOverflow):
        d_dual(projective(3), 2)


def test_tate_twist_shifts():
    assert tate_twist(point(), 3) == H({(6, 3, 3): 1})
    with pytest.raises(ValueError):
        tate_twist(point(), -1)


def test_betti_from_pure_e():
    ie = P.parse("u^6v^6+u^5v^5+15u^4v^4+u^5v^3+u^3v^5+17u^3v^3")
    assert betti_from_pure_E(ie, 6) == [1, 0, 1, 0, 17, 0, 17, 0, 0, 0, 0, 0, 0]
    assert trim_betti(betti_from_pure_E(ie, 6)) == [1, 0, 1, 0, 17, 0, 17]
    with pytest.raises(DegreeOverflow):
        betti_from_pure_E(L**4, 3)
    with pytest.raises(NegativeBetti):
        betti_from_pure_E(L - 1, 1)


def test_pure_diamond_from_e():
    d = pure_diamond_from_E(P.parse("u^3v^3 + 2uv^2"), 3)
    assert d == H({(0, 0, 0): 1, (3, 2, 1): 2})
    assert purity_check(d)
    assert not purity_check(H({(2, 0, 0): 1}))
    with pytest.raises(NegativeBetti):
        pure_diamond_from_E(-L, 1)


def test_render_table_rows():
    assert exterior_from_h1(1).render() == "0: (0,0)\n1: (1,0) + (0,1)\n2: (1,1)"


@given(diamonds(), diamonds())
def test_to_epoly_is_a_ring_hom(a, b):
    for c in S:
        assert to_epoly(d_add(a, b), c) == to_epoly(a, c) + to_epoly(b, c)
        assert to_epoly(d_tensor(a, b), c) == to_epoly(a, c) * to_epoly(b, c)


@given(diamonds())
def test_dual_is_an_involution(a):
    assert d_dual(d_dual(a, 8), 8) == a


@given(diamonds(), diamonds())
def test_twist_laws(a, b):
    assert tate_twist(tate_twist(a, 1), 2) == tate_twist(a, 3)
    assert tate_twist(d_tensor(a, b), 1) == d_tensor(tate_twist(a, 1), b)
    assert to_epoly(tate_twist(a, 2)) == L**2 * to_epoly(a)


@given(diamonds())
def test_json_roundtrip(a):
    assert H.from_json(a.to_json()) == a
