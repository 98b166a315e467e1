import pytest
from hypothesis import given, settings, strategies as st

from epoly.errors import DegreeOverflow, NotDivisible, PolySyntaxError
from epoly.poly import (
    ONE, ZERO, BivariatePoly as P, L, U, V, exact_div, parse_poly, reciprocal_dual, render, weight_sums,
)
from conftest import polys

p_ = P.parse


class TestExamples:
    def test_add_recovers_p3(self):
        s = p_("u^3v^3 - 3uv - u^2 - v^2")
        k = p_("1 + 4uv + u^2 + v^2 + u^2v^2")
        assert s + k == p_("1 + uv + u^2v^2 + u^3v^3")

    def test_add_identities(self):
        q = p_("uv - 1")
        assert q + ZERO == q
        assert q + 1 == L

    def test_mul_kummer_open_part(self):
        got = p_("u^2v^2+4uv+u^2+v^2-15") * p_("u^3v^3-u^2v^2")
        assert got == p_("u^5v^5+3u^4v^4+u^5v^3+u^3v^5-19u^3v^3-u^2v^4-u^4v^2+15u^2v^2")

    def test_mul_small(self):
        assert (L + 1) * (L - 1) == p_("u^2v^2 - 1")
        assert p_("3u + v") * ONE == p_("3u + v")

    def test_exact_div_quotient_by_sl2(self):
        num = p_("u^6v^6 - u^5v^5 - u^4v^4 + u^3v^3")
        assert exact_div(num, p_("u^3v^3 - uv")) == p_("u^3v^3 - u^2v^2")
        assert exact_div(p_("u^2v^2 - 1"), L - 1) == L + 1
        assert num // ONE == num

    def test_exact_div_remainder(self):
        with pytest.raises(NotDivisible) as info:
            exact_div(L**3, L**3 - L)
        assert info.value.remainder == L

    def test_exact_div_fractional_coefficient(self):
        with pytest.raises(NotDivisible):
            exact_div(p_("3uv"), p_("2uv"))

    def test_exact_div_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            exact_div(ONE, ZERO)

    def test_reciprocal_dual(self):
        assert reciprocal_dual(p_("u^3v^3 - 3uv - u^2 - v^2"), 3) == p_("1 - 3u^2v^2 - uv^3 - u^3v")
        assert reciprocal_dual(ONE, 0) == ONE
        with pytest.raises(DegreeOverflow):
            reciprocal_dual(U**4, 3)

    def test_weight_sums(self):
        ie = p_("u^6v^6+u^5v^5+15u^4v^4+u^5v^3+u^3v^5+17u^3v^3")
        assert weight_sums(ie) == {12: 1, 10: 1, 8: 17, 6: 17}
        assert list(weight_sums(ie)) == [12, 10, 8, 6]
        assert weight_sums(ZERO) == {}
        assert weight_sums(L - 1) == {2: 1, 0: -1}

    def test_weight_sums_drop_cancelled(self):
        assert weight_sums(U - V) == {}


class TestText:
    def test_render_order(self):
        q = P({(3, 3): 1, (1, 1): -3, (2, 0): -1, (0, 2): -1})
        assert render(q) == "u^3*v^3 - u^2 - 3*u*v - v^2"
        assert str(ZERO) == "0"
        assert str(P.const(-4)) == "-4"

    def test_json_order(self):
        assert (L - 1 + U).to_json() == [[1, 1, 1], [1, 0, 1], [0, 0, -1]]
        assert P.from_json((L - 1).to_json()) == L - 1

    @pytest.mark.parametrize("text, expected", [
        ("uv", L),
        ("3u^2v^4", P.monomial(2, 4, 3)),
        ("u^{10}v^9", P.monomial(10, 9)),
        ("u^10 v^8", P.monomial(10, 8)),
        ("-16", P.const(-16)),
        ("2 u^9 v^{10} + u", P({(9, 10): 2, (1, 0): 1})),
        ("u*v - u*v", ZERO),
        ("+v", V),
    ])
    def test_parse_forms(self, text, expected):
        assert parse_poly(text) == expected

    @pytest.mark.parametrize("bad", ["", "u+", "u--v", "u^", "x", "3 + * u", "u^{2"])
    def test_parse_rejects(self, bad):
        with pytest.raises(PolySyntaxError):
            parse_poly(bad)

    @given(polys())
    def test_render_parse_roundtrip(self, p):
        assert parse_poly(render(p)) == p


class TestCanonical:
    def test_zero_terms_dropped(self):
        assert P({(1, 1): 0}) == ZERO
        assert P({(1, 1): 0}).terms == {}

    def test_int_comparison_and_hash(self):
        assert P.const(5) == 5
        assert hash(P({(1, 0): 1, (0, 1): 2})) == hash(P({(0, 1): 2, (1, 0): 1}))

    def test_rejects_bad_terms(self):
        with pytest.raises(ValueError):
            P({(-1, 0): 1})
        with pytest.raises(TypeError):
            P({(0, 0): 1.5})

    def test_big_coefficients_exact(self):
        big = P.const(10**40) * U
        assert (big * big).coeff(2, 0) == 10**80


RING = settings(max_examples=1000, deadline=None)


@RING
@given(polys(), polys(), polys())
def test_ring_axioms_and_exact_div(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == ZERO
    if not q.is_zero():
        assert exact_div(p * q, q) == p
        assert exact_div(p * q + r * q, q) == p + r


@given(polys(), st.integers(0, 8))
def test_reciprocal_dual_involution(p, d):
    a, b = p.degree()
    if a > d or b > d:
        with pytest.raises(DegreeOverflow):
            reciprocal_dual(p, d)
    else:
        assert reciprocal_dual(reciprocal_dual(p, d), d) == p


@given(polys(), polys(), st.integers(-3, 3), st.integers(-3, 3))
def test_evaluation_is_a_ring_hom(p, q, x, y):
    assert (p * q)(x, y) == p(x, y) * q(x, y)
    assert (p + q)(x, y) == p(x, y) + q(x, y)


@given(polys(), st.integers(0, 4))
def test_pow_matches_repeated_product(p, n):
    out = ONE
    for _ in range(n):
        out = out * p
    assert p**n == out
