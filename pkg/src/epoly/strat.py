"""Semismall maps and the numerical decomposition theorem.

Local systems on the strata are assumed trivial of rank one, so a relevant
stratum with fibre dimension k contributes ``(uv)^k * E_c(closure)`` to the
E-polynomial of the resolution.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from epoly.errors import NotRelevant, UnknownStratum
from epoly.poly import BivariatePoly


@dataclass(frozen=True)
class Stratum:
    name: str
    e_closure: BivariatePoly
    dim_stratum: int
    fiber_dim: int
    top_fiber_multiplicity: int = 1

    def __post_init__(self):
        if self.dim_stratum < 0 or self.fiber_dim < 0:
            raise ValueError("dimensions must be nonnegative")
        if self.top_fiber_multiplicity < 1:
            raise ValueError("top_fiber_multiplicity must be positive")


@dataclass(frozen=True)
class SemismallMap:
    total_dim: int
    e_total: BivariatePoly
    strata: tuple[Stratum, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "strata", tuple(self.strata))
        names = [s.name for s in self.strata]
        dupes = sorted({n for n in names if names.count(n) > 1})
        if dupes:
            raise ValueError(f"duplicate stratum names: {dupes}")

    def stratum(self, name: str) -> Stratum:
        for s in self.strata:
            if s.name == name:
                return s
        raise UnknownStratum(f"no stratum named {name!r}")


class SemismallRow(NamedTuple):
    name: str
    bound_ok: bool
    relevant: bool


def _defect(m: SemismallMap, s: Stratum) -> int:
    # 2 * (half codimension - fibre dimension); >= 0 iff the bound holds
    return (m.total_dim - s.dim_stratum) - 2 * s.fiber_dim


def check_semismall(m: SemismallMap) -> list[SemismallRow]:
    return [SemismallRow(s.name, _defect(m, s) >= 0, _defect(m, s) == 0) for s in m.strata]


def is_semismall(m: SemismallMap) -> bool:
    return all(r.bound_ok for r in check_semismall(m))


def stratum_contribution(s: Stratum) -> BivariatePoly:
    return BivariatePoly.lefschetz(s.fiber_dim) * s.top_fiber_multiplicity * s.e_closure


def ie_from_desing(m: SemismallMap, singular_strata: Iterable[str]) -> BivariatePoly:
    """E-polynomial of the intersection cohomology of the target."""
    out = m.e_total
    for name in singular_strata:
        s = m.stratum(name)
        if _defect(m, s) != 0:
            raise NotRelevant(f"stratum {name!r} is not relevant "
                              f"(dim {s.dim_stratum}, fibre {s.fiber_dim}, total {m.total_dim})")
        out = out - stratum_contribution(s)
    return out
