"""Independent checks used by the audit and the test-suite.

Nothing here calls the routine it is meant to check.
"""

from __future__ import annotations

from collections import Counter

from epoly.errors import NegativeMultiplicity
from epoly.hodge import HodgeDiamond, Key


def sym2_bruteforce(a: HodgeDiamond) -> HodgeDiamond:
    """Independent oracle for :func:`graded_sym2`.

    Lists one token per basis vector and tallies unordered pairs of tokens;
    a token may pair with itself only in even degree.
    """
    if a.is_virtual():
        raise NegativeMultiplicity("basis enumeration needs nonnegative multiplicities")
    basis = [k for k, m in sorted(a.entries.items()) for _ in range(m)]
    tally: Counter[Key] = Counter()
    for s in range(len(basis)):
        for t in range(s, len(basis)):
            x, y = basis[s], basis[t]
            if s == t and x[0] % 2:
                continue
            tally[(x[0] + y[0], x[1] + y[1], x[2] + y[2])] += 1
    return HodgeDiamond(tally, a.flavor)
