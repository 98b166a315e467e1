"""Expression trees describing classes of varieties, and their evaluation.

Every fibration is treated as Zariski locally trivial, so ``Bundle`` and
``Product`` evaluate identically.  Atoms whose cohomology is all of even
degree and type (k, k) (points, affine and projective spaces, the quadric
threefold) have the same E-polynomial under both sign conventions; only
atoms built from an actual diamond with odd classes (``Abelian``,
``KummerQuot``, ``Sym2``) see the convention.  ``Gm`` is fixed at ``uv - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from epoly.errors import NoDiamond
from epoly.hodge import (
    Flavor,
    HodgeDiamond,
    SignConvention,
    d_add,
    d_tensor,
    exterior_from_h1,
    graded_sym2,
    minus_one_invariants,
    point,
    projective,
    to_epoly,
)
from epoly.poly import ONE, BivariatePoly, L, exact_div

C = Flavor.COMPACT


class SpaceExpr:
    """Base class of the expression nodes."""

    def __mul__(self, other: SpaceExpr) -> SpaceExpr:
        return Product(self, other)

    def __sub__(self, other: SpaceExpr) -> SpaceExpr:
        return Difference(self, other)

    def __add__(self, other: SpaceExpr) -> SpaceExpr:
        return Union(self, other)

    def __truediv__(self, other: SpaceExpr) -> SpaceExpr:
        return FreeQuotient(self, other)

    def __rmul__(self, n: int) -> SpaceExpr:
        if isinstance(n, int):
            return ScaledCopies(n, self)
        return NotImplemented


def _nonneg(name: str, n: int) -> None:
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"{name} must be a nonnegative integer, got {n!r}")


@dataclass(frozen=True)
class Point(SpaceExpr):
    pass


@dataclass(frozen=True)
class Affine(SpaceExpr):
    n: int

    def __post_init__(self):
        _nonneg("Affine dimension", self.n)


@dataclass(frozen=True)
class Gm(SpaceExpr):
    pass


@dataclass(frozen=True)
class Proj(SpaceExpr):
    n: int

    def __post_init__(self):
        _nonneg("Proj dimension", self.n)


@dataclass(frozen=True)
class Quadric3(SpaceExpr):
    """Smooth quadric threefold (the fibre over the most singular points)."""


@dataclass(frozen=True)
class Abelian(SpaceExpr):
    g: int

    def __post_init__(self):
        _nonneg("Abelian dimension", self.g)


@dataclass(frozen=True)
class KummerQuot(SpaceExpr):
    """Quotient of a g-dimensional abelian variety by ``x -> -x``."""

    g: int

    def __post_init__(self):
        _nonneg("Kummer dimension", self.g)


@dataclass(frozen=True)
class Finite(SpaceExpr):
    n: int

    def __post_init__(self):
        _nonneg("point count", self.n)


@dataclass(frozen=True)
class Product(SpaceExpr):
    left: SpaceExpr
    right: SpaceExpr


@dataclass(frozen=True)
class Bundle(SpaceExpr):
    base: SpaceExpr
    fiber: SpaceExpr


@dataclass(frozen=True)
class Difference(SpaceExpr):
    ambient: SpaceExpr
    closed: SpaceExpr


@dataclass(frozen=True)
class Union(SpaceExpr):
    """Disjoint union of locally closed pieces."""

    left: SpaceExpr
    right: SpaceExpr


@dataclass(frozen=True)
class FreeQuotient(SpaceExpr):
    total: SpaceExpr
    group: SpaceExpr


@dataclass(frozen=True)
class Sym2(SpaceExpr):
    inner: SpaceExpr


@dataclass(frozen=True)
class ScaledCopies(SpaceExpr):
    n: int
    inner: SpaceExpr

    def __post_init__(self):
        _nonneg("copy count", self.n)


@dataclass(frozen=True)
class Known(SpaceExpr):
    """A class given only by its E-polynomial (no diamond available)."""

    poly: BivariatePoly


@dataclass(frozen=True)
class Named(SpaceExpr):
    """A named sub-expression; transparent to evaluation."""

    name: str
    inner: SpaceExpr


def eval_space(e: SpaceExpr, convention: SignConvention = SignConvention.SIGNED) -> BivariatePoly:
    c = SignConvention(convention)
    match e:
        case Point():
            return ONE
        case Affine(n):
            return L**n
        case Gm():
            return L - 1
        case Proj(n):
            return sum((L**k for k in range(n + 1)), BivariatePoly())
        case Quadric3():
            return 1 + L + L**2 + L**3
        case Abelian(g):
            return to_epoly(exterior_from_h1(g, C), c)
        case KummerQuot(g):
            return to_epoly(minus_one_invariants(exterior_from_h1(g, C)), c)
        case Finite(n):
            return BivariatePoly.const(n)
        case Product(a, b) | Bundle(a, b):
            return eval_space(a, c) * eval_space(b, c)
        case Difference(a, z):
            return eval_space(a, c) - eval_space(z, c)
        case Union(a, b):
            return eval_space(a, c) + eval_space(b, c)
        case FreeQuotient(total, group):
            return exact_div(eval_space(total, c), eval_space(group, c))
        case Sym2(inner):
            return to_epoly(graded_sym2(diamond(inner)), c)
        case ScaledCopies(n, inner):
            return n * eval_space(inner, c)
        case Known(p):
            return p
        case Named(_, inner):
            return eval_space(inner, c)
    raise TypeError(f"not a space expression: {e!r}")


def diamond(e: SpaceExpr) -> HodgeDiamond:
    """Compact-support diamond of ``e``; virtual when differences are involved."""
    match e:
        case Point():
            return point(C)
        case Affine(n):
            return HodgeDiamond({(2 * n, n, n): 1}, C)
        case Gm():
            return HodgeDiamond({(1, 0, 0): 1, (2, 1, 1): 1}, C)
        case Proj(n):
            return projective(n, C)
        case Quadric3():
            return projective(3, C)
        case Abelian(g):
            return exterior_from_h1(g, C)
        case KummerQuot(g):
            return minus_one_invariants(exterior_from_h1(g, C))
        case Finite(n):
            return point(C).scaled(n)
        case Product(a, b) | Bundle(a, b):
            return d_tensor(diamond(a), diamond(b))
        case Difference(a, z):
            return d_add(diamond(a), -diamond(z))
        case Union(a, b):
            return d_add(diamond(a), diamond(b))
        case Sym2(inner):
            return graded_sym2(diamond(inner))
        case ScaledCopies(n, inner):
            return diamond(inner).scaled(n)
        case Named(_, inner):
            return diamond(inner)
        case FreeQuotient() | Known():
            raise NoDiamond(f"{type(e).__name__} carries an E-polynomial only")
    raise TypeError(f"not a space expression: {e!r}")


def product(*factors: SpaceExpr) -> SpaceExpr:
    return reduce(Product, factors)


def sl2_space() -> SpaceExpr:
    # SL2 -> C^2 \ {0} (first column) has affine-line fibres
    return Named("SL2", Bundle(Difference(Affine(2), Point()), Affine(1)))


def cone_minus_vertex() -> SpaceExpr:
    """Rank-one symmetric forms minus the origin, ``(C^2 \\ 0)/{+-1}``.

    The quotient has trivial monodromy on cohomology, so its class is the one
    of ``C^2 \\ 0``.
    """
    return Named("ConeMinusVertex", Difference(Affine(2), Point()))


def quartic_cone_Q() -> SpaceExpr:
    """Pairs of traceless 2x2 matrices with a common eigenvector, in ``C^6``.

    ``Q0`` (the locus where the pair spans a line) is
    ``(C^3 \\ 0) x C  u  {0} x C^3``; the rest fibres over the cone minus its
    vertex with fibre SL2.
    """
    q0 = Named("Q0", Union(Product(Difference(Affine(3), Point()), Affine(1)),
                           Product(Point(), Affine(3))))
    rest = Named("QminusQ0", Bundle(cone_minus_vertex(), sl2_space()))
    return Named("Q", Union(q0, rest))


def find_named(e: SpaceExpr, name: str) -> SpaceExpr | None:
    """Depth-first search for a ``Named`` node."""
    if isinstance(e, Named) and e.name == name:
        return e
    for child in children(e):
        hit = find_named(child, name)
        if hit is not None:
            return hit
    return None


def children(e: SpaceExpr) -> tuple[SpaceExpr, ...]:
    match e:
        case Product(a, b) | Bundle(a, b) | Difference(a, b) | Union(a, b) | FreeQuotient(a, b):
            return (a, b)
        case Sym2(inner) | ScaledCopies(_, inner) | Named(_, inner):
            return (inner,)
    return ()
