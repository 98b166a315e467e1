"""Hodge diamonds: multiplicities of type-(p, q) classes in degree i.

A :class:`HodgeDiamond` is the bookkeeping object behind every E-polynomial
that is built from actual cohomology rather than by cut-and-paste.  Entries
are keyed by ``(i, p, q)``; multiplicities may be negative when a diamond is a
formal difference.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Mapping
from itertools import combinations_with_replacement
from math import comb
from types import MappingProxyType

from epoly.errors import (
    DegreeOverflow,
    FlavorMismatch,
    NegativeBetti,
    NegativeMultiplicity,
    NotExteriorAlgebra,
)
from epoly.poly import BivariatePoly, weight_sums

Key = tuple[int, int, int]


class Flavor(str, enum.Enum):
    ORDINARY = "ordinary"
    COMPACT = "compact_support"


class SignConvention(str, enum.Enum):
    """How odd-degree classes enter an E-polynomial.

    ``SIGNED`` is the Hodge-Deligne definition, ``sum (-1)^i h^{i,p,q} u^p v^q``.
    ``UNSIGNED`` drops the sign; the GL(2) computations print Jacobian factors
    such as ``(1+u)^2(1+v)^2`` that only arise this way.
    """

    SIGNED = "signed"
    UNSIGNED = "unsigned"


class HodgeDiamond:
    __slots__ = ("_entries", "flavor", "exterior_rank", "_hash")

    def __init__(self, entries: Mapping[Key, int] | Iterable[tuple[Key, int]] = (),
                 flavor: Flavor = Flavor.ORDINARY, exterior_rank: int | None = None):
        items = entries.items() if isinstance(entries, Mapping) else entries
        acc: dict[Key, int] = {}
        for (i, p, q), m in items:
            if i < 0 or p < 0 or q < 0:
                raise ValueError(f"negative index in {(i, p, q)}")
            acc[(i, p, q)] = acc.get((i, p, q), 0) + m
        self._entries = {k: m for k, m in acc.items() if m}
        self.flavor = Flavor(flavor)
        # set only by exterior_from_h1: the algebra is generated by H^1 of rank 2g
        self.exterior_rank = exterior_rank
        self._hash = None

    @property
    def entries(self) -> Mapping[Key, int]:
        return MappingProxyType(self._entries)

    def with_flavor(self, flavor: Flavor) -> HodgeDiamond:
        return HodgeDiamond(self._entries, flavor, self.exterior_rank)

    def scaled(self, n: int) -> HodgeDiamond:
        return HodgeDiamond({k: n * m for k, m in self._entries.items()}, self.flavor)

    def __neg__(self) -> HodgeDiamond:
        return self.scaled(-1)

    def __add__(self, other: HodgeDiamond) -> HodgeDiamond:
        return d_add(self, other)

    def __sub__(self, other: HodgeDiamond) -> HodgeDiamond:
        return d_add(self, -other)

    def __mul__(self, other: HodgeDiamond) -> HodgeDiamond:
        return d_tensor(self, other)

    def total_dimension(self) -> int:
        return sum(abs(m) for m in self._entries.values())

    def is_virtual(self) -> bool:
        return any(m < 0 for m in self._entries.values())

    def betti(self) -> list[int]:
        """Per-degree totals ``b_0, b_1, ...`` up to the top nonzero degree."""
        if not self._entries:
            return []
        top = max(i for i, _, _ in self._entries)
        out = [0] * (top + 1)
        for (i, _, _), m in self._entries.items():
            out[i] += m
        return out

    def to_json(self) -> list[list[int]]:
        return [[i, p, q, m] for (i, p, q), m in sorted(self._entries.items())]

    @classmethod
    def from_json(cls, rows: Iterable[Iterable[int]], flavor: Flavor = Flavor.ORDINARY) -> HodgeDiamond:
        return cls((((i, p, q), m) for i, p, q, m in rows), flavor)

    def render(self) -> str:
        """One line per degree, ``m(p,q)`` summands as in printed diamond tables."""
        by_degree: dict[int, list[tuple[int, int, int]]] = {}
        for (i, p, q), m in self._entries.items():
            by_degree.setdefault(i, []).append((p, q, m))
        lines = []
        for i in sorted(by_degree):
            parts = []
            for p, q, m in sorted(by_degree[i], key=lambda t: (-t[0], t[1])):
                parts.append(f"({p},{q})" if m == 1 else f"{m}({p},{q})")
            lines.append(f"{i}: " + " + ".join(parts))
        return "\n".join(lines)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HodgeDiamond):
            return NotImplemented
        return self._entries == other._entries and self.flavor == other.flavor

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((frozenset(self._entries.items()), self.flavor))
        return self._hash

    def __repr__(self) -> str:
        return f"HodgeDiamond({self.to_json()}, flavor={self.flavor.value!r})"


def _same_flavor(a: HodgeDiamond, b: HodgeDiamond) -> Flavor:
    if a.flavor != b.flavor:
        raise FlavorMismatch(f"cannot combine {a.flavor.value} with {b.flavor.value} diamonds")
    return a.flavor


def point(flavor: Flavor = Flavor.ORDINARY) -> HodgeDiamond:
    return HodgeDiamond({(0, 0, 0): 1}, flavor)


def projective(n: int, flavor: Flavor = Flavor.ORDINARY) -> HodgeDiamond:
    return HodgeDiamond({(2 * k, k, k): 1 for k in range(n + 1)}, flavor)


def d_add(a: HodgeDiamond, b: HodgeDiamond) -> HodgeDiamond:
    flavor = _same_flavor(a, b)
    out = dict(a._entries)
    for k, m in b._entries.items():
        out[k] = out.get(k, 0) + m
    return HodgeDiamond(out, flavor)


def d_tensor(a: HodgeDiamond, b: HodgeDiamond) -> HodgeDiamond:
    flavor = _same_flavor(a, b)
    out: dict[Key, int] = {}
    for (i, p, q), m in a._entries.items():
        for (j, r, s), n in b._entries.items():
            k = (i + j, p + r, q + s)
            out[k] = out.get(k, 0) + m * n
    return HodgeDiamond(out, flavor)


def tate_twist(a: HodgeDiamond, n: int) -> HodgeDiamond:
    if n < 0:
        raise ValueError("twist must be nonnegative")
    return HodgeDiamond({(i + 2 * n, p + n, q + n): m for (i, p, q), m in a._entries.items()},
                        a.flavor)


def d_dual(a: HodgeDiamond, d: int) -> HodgeDiamond:
    """Poincare duality for a smooth ``d``-dimensional variety; toggles the flavor."""
    out = {}
    for (i, p, q), m in a._entries.items():
        if i > 2 * d or p > d or q > d:
            raise DegreeOverflow(f"entry {(i, p, q)} does not fit dimension {d}")
        out[(2 * d - i, d - p, d - q)] = m
    flavor = Flavor.COMPACT if a.flavor is Flavor.ORDINARY else Flavor.ORDINARY
    return HodgeDiamond(out, flavor)


def graded_sym2(a: HodgeDiamond) -> HodgeDiamond:
    """Symmetric square with the Koszul sign rule.

    A pair of distinct graded pieces contributes the product of their
    multiplicities.  A piece of multiplicity ``m`` paired with itself gives
    ``C(m+1, 2)`` in even degree and ``C(m, 2)`` in odd degree, since odd
    classes anticommute.
    """
    if a.is_virtual():
        raise NegativeMultiplicity("graded_sym2 needs a diamond with nonnegative multiplicities")
    keys = sorted(a._entries)
    out: dict[Key, int] = {}
    for x, y in combinations_with_replacement(keys, 2):
        k = (x[0] + y[0], x[1] + y[1], x[2] + y[2])
        if x == y:
            m = a._entries[x]
            n = comb(m + 1, 2) if x[0] % 2 == 0 else comb(m, 2)
        else:
            n = a._entries[x] * a._entries[y]
        out[k] = out.get(k, 0) + n
    return HodgeDiamond(out, a.flavor)


def exterior_from_h1(g: int, flavor: Flavor = Flavor.ORDINARY) -> HodgeDiamond:
    """Cohomology of a g-dimensional abelian variety, the exterior algebra on
    ``H^1 = g(1,0) + g(0,1)``."""
    entries = {(p + q, p, q): comb(g, p) * comb(g, q) for p in range(g + 1) for q in range(g + 1)}
    return HodgeDiamond(entries, flavor, exterior_rank=g)


def minus_one_invariants(a: HodgeDiamond) -> HodgeDiamond:
    # x -> -x acts by (-1)^i on the degree-i part of an algebra generated in degree 1
    if a.exterior_rank is None:
        raise NotExteriorAlgebra("input is not an exterior algebra generated by H^1")
    return HodgeDiamond({k: m for k, m in a._entries.items() if k[0] % 2 == 0}, a.flavor)


def to_epoly(a: HodgeDiamond, convention: SignConvention = SignConvention.SIGNED) -> BivariatePoly:
    signed = SignConvention(convention) is SignConvention.SIGNED
    return BivariatePoly(((p, q), (-m if signed and i % 2 else m))
                         for (i, p, q), m in a._entries.items())


def purity_check(a: HodgeDiamond) -> bool:
    return all(p + q == i for i, p, q in a._entries)


def betti_from_pure_E(p: BivariatePoly, d: int) -> list[int]:
    """Betti numbers ``b_0..b_{2d}`` of a pure ``d``-dimensional variety from its E-polynomial.

    Purity puts degree-k cohomology in weight k, and duality sends it to
    compact-support weight ``2d - k``, so ``b_k`` is the coefficient sum over
    ``a + b = 2d - k``.
    """
    sums = weight_sums(p)
    bad = [w for w in sums if w < 0 or w > 2 * d]
    if bad:
        raise DegreeOverflow(f"weights {bad} fall outside 0..{2 * d}")
    out = [sums.get(2 * d - k, 0) for k in range(2 * d + 1)]
    negative = [(k, b) for k, b in enumerate(out) if b < 0]
    if negative:
        raise NegativeBetti(f"negative weight sums {negative}: the purity hypothesis fails")
    return out


def trim_betti(betti: Iterable[int]) -> list[int]:
    out = list(betti)
    while out and out[-1] == 0:
        out.pop()
    return out


def pure_diamond_from_E(p: BivariatePoly, d: int) -> HodgeDiamond:
    """Ordinary diamond of a pure ``d``-dimensional variety: a compact-support
    term ``c u^a v^b`` is a class of type ``(d-a, d-b)`` in degree ``2d-a-b``."""
    entries = {}
    for (a, b), c in p.terms.items():
        if a > d or b > d:
            raise DegreeOverflow(f"term u^{a}*v^{b} exceeds dimension {d}")
        entries[(2 * d - a - b, d - a, d - b)] = c
    out = HodgeDiamond(entries)
    if out.is_virtual():
        raise NegativeBetti("negative coefficient: not the E-polynomial of a pure variety")
    return out

