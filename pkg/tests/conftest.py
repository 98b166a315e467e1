from hypothesis import strategies as st

from epoly.hodge import Flavor, HodgeDiamond
from epoly.poly import BivariatePoly
from epoly import spaces as sp

exponent = st.integers(min_value=0, max_value=6)
coeff = st.integers(min_value=-50, max_value=50)


def polys(max_terms: int = 6, coeffs=coeff) -> st.SearchStrategy[BivariatePoly]:
    return st.dictionaries(st.tuples(exponent, exponent), coeffs, max_size=max_terms).map(BivariatePoly)



keys = st.tuples(st.integers(0, 8), st.integers(0, 4), st.integers(0, 4))


def diamonds(flavor=Flavor.ORDINARY, mult=st.integers(-5, 5), max_size=5):
    return st.dictionaries(keys, mult, max_size=max_size).map(lambda d: HodgeDiamond(d, flavor))


def effective_diamonds(max_total: int = 12, flavor=Flavor.COMPACT):
    """Diamonds with nonnegative multiplicities and total dimension <= max_total."""
    return (st.dictionaries(keys, st.integers(1, 4), max_size=5)
            .filter(lambda d: sum(d.values()) <= max_total)
            .map(lambda d: HodgeDiamond(d, flavor)))


atoms = st.one_of(
    st.just(sp.Point()),
    st.just(sp.Gm()),
    st.just(sp.Quadric3()),
    st.builds(sp.Affine, st.integers(0, 3)),
    st.builds(sp.Proj, st.integers(0, 3)),
    st.builds(sp.Abelian, st.integers(0, 2)),
    st.builds(sp.KummerQuot, st.integers(0, 2)),
    st.builds(sp.Finite, st.integers(0, 5)),
)


def _grow(children):
    return st.one_of(
        st.builds(sp.Product, children, children),
        st.builds(sp.Bundle, children, children),
        st.builds(sp.Difference, children, children),
        st.builds(sp.Union, children, children),
        st.builds(sp.ScaledCopies, st.integers(0, 4), children),
    )


space_exprs = st.recursive(atoms, _grow, max_leaves=6)
