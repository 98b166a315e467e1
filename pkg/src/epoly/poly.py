"""Exact bivariate integer polynomials in u, v.

Every E-polynomial in the package is a :class:`BivariatePoly`.  A polynomial
is a finite map ``(a, b) -> c`` standing for ``sum c * u^a * v^b`` with
nonnegative exponents and Python (arbitrary precision) integer coefficients.
Zero coefficients are never stored, so two polynomials are equal exactly when
their term maps are equal.

Text form sorts terms by total degree, then by the ``u`` exponent, both
descending::

    >>> str(BivariatePoly({(3, 3): 1, (1, 1): -3, (2, 0): -1, (0, 2): -1}))
    'u^3*v^3 - u^2 - 3*u*v - v^2'
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Mapping
from types import MappingProxyType
from typing import Union

from epoly.errors import DegreeOverflow, NotDivisible, PolySyntaxError

Exponent = tuple[int, int]


class BivariatePoly:
    """Immutable polynomial with integer coefficients in two variables."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, int] | Iterable[tuple[Exponent, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponent, int] = {}
        for (a, b), c in items:
            if not (isinstance(a, int) and isinstance(b, int)) or a < 0 or b < 0:
                raise ValueError(f"exponents must be nonnegative integers, got {(a, b)!r}")
            if not isinstance(c, int):
                raise TypeError(f"coefficients must be integers, got {c!r}")
            acc[(a, b)] = acc.get((a, b), 0) + c
        self._terms = {k: c for k, c in acc.items() if c != 0}
        self._hash: int | None = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def const(cls, c: int) -> BivariatePoly:
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, a: int, b: int, c: int = 1) -> BivariatePoly:
        return cls({(a, b): c})

    @classmethod
    def lefschetz(cls, n: int = 1) -> BivariatePoly:
        """``(uv)^n``, the class of the affine space of dimension ``n``."""
        return cls({(n, n): 1})

    @classmethod
    def parse(cls, text: str) -> BivariatePoly:
        return parse_poly(text)

    @classmethod
    def from_json(cls, triples: Iterable[Iterable[int]]) -> BivariatePoly:
        return cls(((a, b), c) for a, b, c in triples)

    # -- views --------------------------------------------------------------

    @property
    def terms(self) -> Mapping[Exponent, int]:
        return MappingProxyType(self._terms)

    def sorted_terms(self) -> list[tuple[int, int, int]]:
        return sorted(((a, b, c) for (a, b), c in self._terms.items()),
                      key=lambda t: (t[0] + t[1], t[0]), reverse=True)

    def to_json(self) -> list[list[int]]:
        return [list(t) for t in self.sorted_terms()]

    def coeff(self, a: int, b: int) -> int:
        return self._terms.get((a, b), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> tuple[int, int]:
        """Largest ``u`` and ``v`` exponents (``(-1, -1)`` for zero)."""
        if not self._terms:
            return (-1, -1)
        return (max(a for a, _ in self._terms), max(b for _, b in self._terms))

    def __call__(self, x, y):
        return sum(c * x**a * y**b for (a, b), c in self._terms.items())

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: PolyLike) -> BivariatePoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __neg__(self) -> BivariatePoly:
        return BivariatePoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: PolyLike) -> BivariatePoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return add(self, -other)

    def __rsub__(self, other: PolyLike) -> BivariatePoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return add(other, -self)

    def __mul__(self, other: PolyLike) -> BivariatePoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> BivariatePoly:
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        out, base = ONE, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __floordiv__(self, other: PolyLike) -> BivariatePoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return exact_div(self, other)

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = BivariatePoly.const(other)
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"BivariatePoly.parse({render(self)!r})"


PolyLike = Union[BivariatePoly, int]


def _coerce(x):
    if isinstance(x, BivariatePoly):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return BivariatePoly.const(x)
    return NotImplemented


def add(p: BivariatePoly, q: BivariatePoly) -> BivariatePoly:
    out = dict(p._terms)
    for k, c in q._terms.items():
        out[k] = out.get(k, 0) + c
    return BivariatePoly(out)


def mul(p: BivariatePoly, q: BivariatePoly) -> BivariatePoly:
    out: dict[Exponent, int] = {}
    for (a1, b1), c1 in p._terms.items():
        for (a2, b2), c2 in q._terms.items():
            k = (a1 + a2, b1 + b2)
            out[k] = out.get(k, 0) + c1 * c2
    return BivariatePoly(out)


def _leading(p: BivariatePoly) -> tuple[int, int]:
    # graded-lex: total degree first, then the u exponent
    return max(p._terms, key=lambda k: (k[0] + k[1], k[0]))


def exact_div(p: BivariatePoly, q: BivariatePoly) -> BivariatePoly:
    """Return ``r`` with ``r * q == p``; raise :class:`NotDivisible` otherwise.

    Leading terms are eliminated under graded-lex order.  Since that order is
    a monomial order, the leading term of ``r * q`` is the product of leading
    terms, so a nonzero remainder is detected at the first step where the
    leading term of the running remainder is not a multiple of ``lt(q)``.
    """
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    la, lb = _leading(q)
    lc = q._terms[(la, lb)]
    rem = dict(p._terms)
    quot: dict[Exponent, int] = {}
    while rem:
        a, b = max(rem, key=lambda k: (k[0] + k[1], k[0]))
        c = rem[(a, b)]
        if a < la or b < lb or c % lc:
            raise NotDivisible(p, q, BivariatePoly(rem))
        da, db, dc = a - la, b - lb, c // lc
        quot[(da, db)] = dc
        for (qa, qb), qc in q._terms.items():
            k = (qa + da, qb + db)
            v = rem.get(k, 0) - qc * dc
            if v:
                rem[k] = v
            else:
                rem.pop(k, None)
    return BivariatePoly(quot)


def reciprocal_dual(p: BivariatePoly, d: int) -> BivariatePoly:
    """``(uv)^d * p(1/u, 1/v)``: swaps ordinary and compact-support E of a
    smooth ``d``-dimensional variety."""
    out = {}
    for (a, b), c in p._terms.items():
        if a > d or b > d:
            raise DegreeOverflow(f"term u^{a}*v^{b} exceeds dimension {d}")
        out[(d - a, d - b)] = c
    return BivariatePoly(out)


def weight_sums(p: BivariatePoly) -> dict[int, int]:
    sums: dict[int, int] = {}
    for (a, b), c in p._terms.items():
        sums[a + b] = sums.get(a + b, 0) + c
    return {w: s for w, s in sorted(sums.items(), reverse=True) if s != 0}


ZERO = BivariatePoly()
ONE = BivariatePoly.const(1)
U = BivariatePoly.monomial(1, 0)
V = BivariatePoly.monomial(0, 1)
L = BivariatePoly.lefschetz(1)


# -- text form ----------------------------------------------------------------

def _monomial_text(a: int, b: int) -> str:
    parts = []
    if a:
        parts.append("u" if a == 1 else f"u^{a}")
    if b:
        parts.append("v" if b == 1 else f"v^{b}")
    return "*".join(parts)


def render(p: BivariatePoly) -> str:
    if p.is_zero():
        return "0"
    out = []
    for a, b, c in p.sorted_terms():
        mono = _monomial_text(a, b)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(out)


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<var>[uv])|(?P<op>[-+*^{}()]))")


def parse_poly(text: str) -> BivariatePoly:
    """Parse a polynomial literal.

    Accepts the rendered form (``3*u^2*v^4 - u*v + 1``) as well as the compact
    notation used in DSL sources and in typeset formulas: ``3u^2v^4``, ``uv``,
    ``u^{10}v^9``, juxtaposed factors separated by spaces.
    """
    toks: list[tuple[str, str, int]] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise PolySyntaxError(f"unexpected character {text[col]!r}", col)
        kind = m.lastgroup
        toks.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    toks.append(("end", "", len(text)))
    i = 0

    def peek():
        return toks[i]

    def take(kind=None, value=None):
        nonlocal i
        k, val, at = toks[i]
        if (kind and k != kind) or (value and val != value):
            want = value or kind
            raise PolySyntaxError(f"expected {want!r}, found {val or 'end of input'!r}", at)
        i += 1
        return val

    def exponent() -> int:
        if peek()[1] == "{":
            take("op", "{")
            n = int(take("num"))
            take("op", "}")
            return n
        return int(take("num"))

    def term() -> tuple[int, int, int] | None:
        coef, a, b, seen = 1, 0, 0, False
        while True:
            k, val, _ = peek()
            if k == "num":
                coef *= int(take())
            elif k == "var":
                take()
                n = 1
                if peek()[1] == "^":
                    take("op", "^")
                    n = exponent()
                if val == "u":
                    a += n
                else:
                    b += n
            elif val == "*" and seen:
                take()
                continue
            else:
                break
            seen = True
        if not seen:
            return None
        return a, b, coef

    terms: dict[Exponent, int] = {}
    sign = 1
    if peek()[1] in "+-" and peek()[0] == "op":
        sign = -1 if take() == "-" else 1
    while True:
        t = term()
        if t is None:
            k, val, at = peek()
            raise PolySyntaxError(f"expected a term, found {val or 'end of input'!r}", at)
        a, b, c = t
        terms[(a, b)] = terms.get((a, b), 0) + sign * c
        k, val, at = peek()
        if k == "end":
            break
        if val not in ("+", "-"):
            raise PolySyntaxError(f"expected '+' or '-', found {val!r}", at)
        take()
        sign = 1 if val == "+" else -1
    return BivariatePoly(terms)
