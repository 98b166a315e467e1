"""Genus-2 Higgs moduli: the bundled programs, expected values and audit.

``sl.sx`` and ``gl.sx`` describe the stratifications; ``expected.json``
holds every transcribed printed value.  :func:`audit` evaluates both
programs and classifies each expected value as

* ``ok``          computed value equals the printed one,
* ``documented``  they differ and the entry is a known discrepancy,
* ``mismatch``    they differ and the entry is pinned,
* ``error``       the value could not be computed.

The expected-values path can be overridden with ``EPOLY_EXPECTED``.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path

from epoly.dsl import Directive, Program, Report, Runner, parse, run
from epoly.hodge import (
    Flavor,
    HodgeDiamond,
    SignConvention,
    betti_from_pure_E,
    exterior_from_h1,
    graded_sym2,
    pure_diamond_from_E,
    purity_check,
    to_epoly,
    trim_betti,
)
from epoly.oracles import sym2_bruteforce
from epoly.poly import BivariatePoly, L, weight_sums
from epoly.spaces import diamond, find_named

SUITES = ("sl", "gl")
ENV_EXPECTED = "EPOLY_EXPECTED"

__all__ = [
    "AuditItem", "AuditReport", "ExpectedValue", "audit", "build_gl_suite", "build_sl_suite",
    "expected_values", "load_suite_source", "run_suite",
]


@dataclass(frozen=True)
class ExpectedValue:
    label: str
    suite: str
    binding: str
    kind: str
    value: object
    source: str
    convention: SignConvention
    status_class: str
    printed: str = ""
    note: str = ""
    dim: int | None = None

    @classmethod
    def from_json(cls, d: dict) -> ExpectedValue:
        return cls(d["label"], d["suite"], d["binding"], d["kind"], d["value"], d["source"],
                   SignConvention(d["convention"]), d["status_class"], d.get("printed", ""),
                   d.get("note", ""), d.get("dim"))

    def poly(self) -> BivariatePoly:
        return BivariatePoly.from_json(self.value)


def expected_path() -> Path:
    override = os.environ.get(ENV_EXPECTED)
    if override:
        return Path(override)
    return Path(str(resources.files(__package__) / "data" / "expected.json"))


def expected_values(path: str | Path | None = None) -> list[ExpectedValue]:
    rows = json.loads(Path(path or expected_path()).read_text(encoding="utf-8"))
    out = [ExpectedValue.from_json(r) for r in rows]
    labels = [e.label for e in out]
    if len(labels) != len(set(labels)):
        raise ValueError("duplicate labels in expected values")
    return out


def load_suite_source(suite: str) -> str:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    return (resources.files(__package__) / "data" / f"{suite}.sx").read_text(encoding="utf-8")


@lru_cache(maxsize=None)
def _base_program(suite: str) -> Program:
    return parse(load_suite_source(suite))


def _build(suite: str, expected: list[ExpectedValue] | None) -> Program:
    from epoly.spaces import Known

    expected = expected_values() if expected is None else expected
    extra = [Directive("expect", e.binding, (Known(e.poly()),), e.convention)
             for e in expected if e.suite == suite and e.kind == "poly"]
    return _base_program(suite).extended(extra)


def build_sl_suite(expected: list[ExpectedValue] | None = None) -> Program:
    return _build("sl", expected)


def build_gl_suite(expected: list[ExpectedValue] | None = None) -> Program:
    return _build("gl", expected)


def run_suite(suite: str) -> Report:
    return run(_base_program(suite))


# -- audit --------------------------------------------------------------------

@dataclass
class AuditItem:
    label: str
    suite: str
    kind: str
    status: str
    computed: str | None
    expected: str
    source: str = ""
    note: str = ""

    def to_json(self) -> dict:
        return {"label": self.label, "suite": self.suite, "kind": self.kind, "status": self.status,
                "computed": self.computed, "expected": self.expected, "source": self.source,
                "note": self.note}


@dataclass
class AuditReport:
    items: list[AuditItem] = field(default_factory=list)
    values: dict[str, BivariatePoly] = field(default_factory=dict)

    def by_label(self, label: str) -> AuditItem:
        for it in self.items:
            if it.label == label:
                return it
        raise KeyError(label)

    @property
    def failures(self) -> list[AuditItem]:
        return [it for it in self.items if it.status in ("mismatch", "error")]

    @property
    def ok(self) -> bool:
        return not self.failures

    def counts(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for it in self.items:
            out[it.status] = out.get(it.status, 0) + 1
        return dict(sorted(out.items()))

    def to_json(self) -> str:
        body = {"summary": self.counts(), "items": [it.to_json() for it in self.items]}
        return json.dumps(body, indent=2, ensure_ascii=False) + "\n"

    def to_text(self) -> str:
        lines = []
        for it in self.items:
            lines.append(f"[{it.status}] {it.suite}:{it.label} ({it.kind})")
            if it.status != "ok":
                lines.append(f"    computed: {it.computed}")
                lines.append(f"    expected: {it.expected}")
            if it.note and it.status != "ok":
                lines.append(f"    note: {it.note}")
        summary = ", ".join(f"{k}={v}" for k, v in self.counts().items())
        lines.append(f"summary: {summary}")
        return "\n".join(lines) + "\n"


def _fmt_diamond(entries) -> str:
    return " ".join(f"{m}({p},{q})@{i}" for i, p, q, m in entries)


def _check(e: ExpectedValue, runner: Runner) -> tuple[str | None, str, bool]:
    """Return (computed text, expected text, equal)."""
    c = e.convention
    if e.kind == "poly":
        got, want = runner.value(e.binding, c), e.poly()
        return str(got), str(want), got == want
    if e.kind == "betti":
        got = trim_betti(betti_from_pure_E(runner.value(e.binding, c), e.dim))
        want = trim_betti(e.value)
        return " ".join(map(str, got)), " ".join(map(str, want)), got == want
    if e.kind == "weights":
        got = weight_sums(runner.value(e.binding, c))
        want = {w: s for w, s in e.value}
        fmt = lambda d: " ".join(f"{w}:{s}" for w, s in d.items())
        return fmt(got), fmt(want), got == want
    if e.kind == "euler":
        got = runner.value(e.binding, SignConvention.SIGNED)(1, 1)
        want = sum((-1) ** k * b for k, b in e.value)
        return str(got), str(want), got == want
    if e.kind == "hodge_table":
        table = HodgeDiamond.from_json(e.value, Flavor.COMPACT)
        got, want = runner.value(e.binding, SignConvention.SIGNED), to_epoly(table, SignConvention.SIGNED)
        return str(got), str(want), got == want
    if e.kind in ("diamond", "diamond_betti"):
        d = diamond(_space_of(runner, e.binding))
        if e.kind == "diamond_betti":
            got_b, want_b = d.betti(), list(e.value)
            return " ".join(map(str, got_b)), " ".join(map(str, want_b)), got_b == want_b
        want_d = HodgeDiamond.from_json(e.value, Flavor.COMPACT)
        return _fmt_diamond(d.to_json()), _fmt_diamond(want_d.to_json()), d == want_d
    if e.kind == "ih_diamond":
        got_d = pure_diamond_from_E(runner.value(e.binding, c), e.dim)
        want_d = HodgeDiamond.from_json(e.value)
        note = "" if purity_check(want_d) else " [printed table is not pure]"
        return _fmt_diamond(got_d.to_json()), _fmt_diamond(want_d.to_json()) + note, got_d == want_d
    raise ValueError(f"unknown kind {e.kind!r}")


def _space_of(runner: Runner, name: str):
    from epoly.dsl import SpaceDef

    d = runner.defs[name]
    if not isinstance(d, SpaceDef):
        raise TypeError(f"{name!r} is not a space binding")
    return d.expr


def _oracles(runners: dict[str, Runner]) -> list[AuditItem]:
    items = []

    def add(label, got, want, note):
        items.append(AuditItem(label, "oracle", "oracle", "ok" if got == want else "mismatch",
                               str(got), str(want), "independent recomputation", note))

    for g, name in ((1, "elliptic curve"), (2, "abelian surface")):
        a = exterior_from_h1(g, Flavor.COMPACT)
        add(f"Sym2.bruteforce.g{g}", graded_sym2(a), sym2_bruteforce(a),
            f"graded symmetric square of the {name}: formula vs unordered-pair enumeration")
    if "gl" in runners:
        r = runners["gl"]
        unsigned = SignConvention.UNSIGNED
        sigma = to_epoly(graded_sym2(diamond(_space_of(r, "Omega"))), unsigned)
        add("Sym2.JxA2", sigma, r.value("E.J2", unsigned) * L**4,
            "E(Sym^2(J x C^2)) against E(J^(2)) (uv)^4")
        sig = find_named(_space_of(r, "Sigma"), "Omega")
        add("Sym2.JxA2.bruteforce", graded_sym2(diamond(sig)), sym2_bruteforce(diamond(sig)),
            "brute-force graded square of J x C^2")
    return items


def audit(suites: tuple[str, ...] = SUITES, expected: list[ExpectedValue] | None = None) -> AuditReport:
    expected = expected_values() if expected is None else expected
    report = AuditReport()
    runners: dict[str, Runner] = {}
    for suite in suites:
        runner = Runner(_base_program(suite))
        runners[suite] = runner
        suite_report = runner.run()
        for name, v in suite_report.values.items():
            report.values.setdefault(name, v)
        for entry in suite_report.failures:
            report.items.append(AuditItem(f"{entry.directive}:{entry.input}", suite, "program",
                                          "error", entry.computed, "", "", entry.note))
        for e in expected:
            if e.suite != suite:
                continue
            try:
                got, want, equal = _check(e, runner)
            except Exception as exc:  # report content, not a crash
                report.items.append(AuditItem(e.label, suite, e.kind, "error", None, str(e.value),
                                              e.source, f"{type(exc).__name__}: {exc}"))
                continue
            if equal:
                status = "ok"
            elif e.status_class == "known_discrepancy":
                status = "documented"
            else:
                status = "mismatch"
            report.items.append(AuditItem(e.label, suite, e.kind, status, got, want, e.source, e.note))
    report.items.extend(_oracles(runners))
    return report
