"""The ``.sx`` stratification language.

A program is a sequence of ``;``-terminated statements::

    # Kummer surface and the stable-bundle locus
    space K = Quot2(Abelian(2));
    space S = Proj(3) - K;
    poly TS = u^6v^6 - u^3v^5 - u^5v^3 - 3u^4v^4;
    map M = semismall(dim=6, total=Mt) {
        stratum Sigma (dim=4, fiber=1, closure=SigmaCl);
        stratum Omega (dim=0, fiber=3, closure=16);
    };
    poly IE.SL = ie(M, Sigma, Omega);
    weights(IE.SL);
    betti(IE.SL, 6);
    expect(S, u^3v^3 - 3uv - u^2 - v^2);

Expressions combine constructors (``Point``, ``Affine(n)``, ``Gm``,
``Proj(n)``, ``Quadric3``, ``Abelian(g)``, ``Quot2(Abelian(g))``,
``Finite(n)``, ``Sym2(e)``), bound names and polynomial literals with
``+`` (disjoint union), ``-`` (complement), ``*`` (bundle) and ``/`` (free
quotient).  ``n * e`` with a literal nonnegative integer ``n`` is ``n``
disjoint copies of ``e``.  Literal-only subexpressions are folded to a single
polynomial at parse time, so ``3u^2v^4 - uv + 1`` is one literal.

``convention signed;`` / ``convention unsigned;`` sets the sign convention
used by every later statement that does not name one explicitly.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field, fields, is_dataclass, replace
from typing import Union as TUnion

from epoly.errors import (
    DslSyntaxError,
    DuplicateName,
    UnboundName,
)
from epoly.hodge import SignConvention, betti_from_pure_E, trim_betti
from epoly.poly import ZERO, BivariatePoly, parse_poly, render as render_poly, weight_sums
from epoly.spaces import (
    Abelian,
    Affine,
    Bundle,
    Difference,
    Finite,
    FreeQuotient,
    Gm,
    Known,
    KummerQuot,
    Named,
    Point,
    Product,
    Proj,
    Quadric3,
    ScaledCopies,
    SpaceExpr,
    Sym2,
    Union,
    eval_space,
)
from epoly.strat import SemismallMap, Stratum, check_semismall, ie_from_desing

CONSTRUCTORS = ("Point", "Affine", "Gm", "Proj", "Quadric3", "Abelian", "Quot2", "Finite", "Sym2")
STATEMENTS = ("space", "poly", "map", "convention")
DIRECTIVES = ("epoly", "weights", "betti", "semismall", "ie", "expect")
CONVENTIONS = ("signed", "unsigned")


# -- program model ------------------------------------------------------------

@dataclass(frozen=True)
class Deferred(SpaceExpr):
    """Reference to a value produced at run time (an ``ie`` binding)."""

    name: str


@dataclass(frozen=True)
class SpaceDef:
    name: str
    expr: SpaceExpr
    kind: str = "space"  # "space" or "poly"
    convention: SignConvention | None = None
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class StratumDecl:
    name: str
    dim: int
    fiber: int
    closure: SpaceExpr
    mult: int = 1


@dataclass(frozen=True)
class MapDef:
    name: str
    dim: int
    total: SpaceExpr
    strata: tuple[StratumDecl, ...]
    convention: SignConvention | None = None
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class IEDef:
    name: str
    map_name: str
    strata: tuple[str, ...]
    convention: SignConvention | None = None
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class ConventionStmt:
    convention: SignConvention
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Directive:
    kind: str
    name: str
    args: tuple = ()
    convention: SignConvention | None = None
    line: int = field(default=0, compare=False)


Statement = TUnion[SpaceDef, MapDef, IEDef, ConventionStmt, Directive]


@dataclass(frozen=True)
class Program:
    statements: tuple[Statement, ...] = ()

    @property
    def bindings(self) -> list[SpaceDef | MapDef | IEDef]:
        return [s for s in self.statements if isinstance(s, (SpaceDef, MapDef, IEDef))]

    @property
    def directives(self) -> list[Directive]:
        return [s for s in self.statements if isinstance(s, Directive)]

    def extended(self, extra: list[Statement]) -> Program:
        return Program(self.statements + tuple(extra))


# -- lexer --------------------------------------------------------------------

_MONO = r"\d*(?:[uv](?:\^(?:\d+|\{\d+\}))?)+(?![A-Za-z0-9_.])"
_LEX = re.compile(
    rf"(?P<ws>[ \t\r\n]+|\#[^\n]*)"
    rf"|(?P<mono>{_MONO})"
    r"|(?P<int>\d+)"
    r"|(?P<ident>[A-Za-z_][A-Za-z0-9_.]*)"
    r"|(?P<punct>[(){},;=+\-*/])"
)
_POLY_NAME = re.compile(r"[uv]+")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


def tokenize(source: str) -> list[Token]:
    out = []
    pos, line, line_start = 0, 1, 0
    while pos < len(source):
        m = _LEX.match(source, pos)
        col = pos - line_start + 1
        if not m:
            raise DslSyntaxError(f"unexpected character {source[pos]!r}", line, col)
        kind = m.lastgroup
        text = m.group()
        if kind != "ws":
            out.append(Token(kind, text, line, col))
        nl = text.count("\n")
        if nl:
            line += nl
            line_start = m.start() + text.rfind("\n") + 1
        pos = m.end()
    out.append(Token("eof", "", line, pos - line_start + 1))
    return out


# -- parser -------------------------------------------------------------------

def _is_literal(e: SpaceExpr) -> bool:
    return isinstance(e, Known)


def _literal_count(e: SpaceExpr) -> int | None:
    if isinstance(e, Known) and set(e.poly.terms) <= {(0, 0)}:
        c = e.poly.coeff(0, 0)
        return c if c >= 0 else None
    return None


class Parser:
    def __init__(self, source: str):
        self.toks = tokenize(source)
        self.i = 0
        self.kinds: dict[str, str] = {}  # name -> "space" | "poly" | "map" | "ie"
        self.defs: dict[str, SpaceExpr] = {}
        self.maps: dict[str, MapDef] = {}
        self.convention: SignConvention | None = None

    # token helpers
    def peek(self, k: int = 0) -> Token:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def error(self, msg: str, tok: Token | None = None, expected=()) -> DslSyntaxError:
        tok = tok or self.peek()
        return DslSyntaxError(msg, tok.line, tok.col, expected)

    def take(self, text: str | None = None, kind: str | None = None) -> Token:
        tok = self.peek()
        if (text is not None and tok.text != text) or (kind is not None and tok.kind != kind):
            want = text if text is not None else kind
            found = tok.text or "end of input"
            raise self.error(f"unexpected {found!r}", tok, (want,))
        self.i += 1
        return tok

    def accept(self, text: str) -> bool:
        if self.peek().text == text and self.peek().kind in ("punct", "ident"):
            self.i += 1
            return True
        return False

    def integer(self) -> int:
        return int(self.take(kind="int").text)

    # statements
    def program(self) -> Program:
        stmts = []
        while self.peek().kind != "eof":
            stmts.append(self.statement())
        return Program(tuple(stmts))

    def statement(self) -> Statement:
        tok = self.peek()
        if tok.kind != "ident" or tok.text not in STATEMENTS + DIRECTIVES:
            raise self.error(f"unexpected {tok.text or 'end of input'!r}", tok, STATEMENTS + DIRECTIVES)
        self.i += 1
        if tok.text == "convention":
            conv = self.convention_word()
            self.take(";")
            self.convention = conv
            return ConventionStmt(conv, tok.line)
        if tok.text in ("space", "poly"):
            return self.space_def(tok)
        if tok.text == "map":
            return self.map_def(tok)
        return self.directive(tok)

    def convention_word(self) -> SignConvention:
        tok = self.peek()
        if tok.text not in CONVENTIONS:
            raise self.error(f"unexpected {tok.text or 'end of input'!r}", tok, CONVENTIONS)
        self.i += 1
        return SignConvention(tok.text)

    def new_name(self) -> Token:
        tok = self.take(kind="ident")
        if tok.text in CONSTRUCTORS or tok.text in STATEMENTS + DIRECTIVES + CONVENTIONS:
            raise self.error(f"{tok.text!r} is reserved", tok)
        if _POLY_NAME.fullmatch(tok.text):
            raise self.error(f"{tok.text!r} reads as a polynomial literal", tok)
        if tok.text in self.kinds:
            raise DuplicateName(f"{tok.text!r} is already bound", tok.line, tok.col)
        return tok

    def space_def(self, kw: Token) -> Statement:
        name = self.new_name()
        self.take("=")
        if kw.text == "poly" and self.peek().text == "ie" and self.peek(1).text == "(":
            self.i += 1
            map_name, strata = self.ie_args()
            self.take(";")
            self.kinds[name.text] = "ie"
            return IEDef(name.text, map_name, strata, self.convention, kw.line)
        expr = self.expr()
        self.take(";")
        self.kinds[name.text] = kw.text
        self.defs[name.text] = expr
        return SpaceDef(name.text, expr, kw.text, self.convention, kw.line)

    def ie_args(self) -> tuple[str, tuple[str, ...]]:
        self.take("(")
        mtok = self.take(kind="ident")
        if self.kinds.get(mtok.text) != "map":
            raise UnboundName(f"no map named {mtok.text!r}", mtok.line, mtok.col)
        known = {s.name for s in self.maps[mtok.text].strata}
        strata = []
        while self.accept(","):
            stok = self.take(kind="ident")
            if stok.text not in known:
                raise UnboundName(f"map {mtok.text!r} has no stratum {stok.text!r}", stok.line, stok.col)
            strata.append(stok.text)
        self.take(")")
        return mtok.text, tuple(strata)

    def map_def(self, kw: Token) -> MapDef:
        name = self.new_name()
        self.take("=")
        self.take("semismall")
        self.take("(")
        self.take("dim")
        self.take("=")
        dim = self.integer()
        self.take(",")
        self.take("total")
        self.take("=")
        total = self.expr()
        self.take(")")
        self.take("{")
        strata: list[StratumDecl] = []
        while not self.accept("}"):
            strata.append(self.stratum_decl(strata))
        self.take(";")
        m = MapDef(name.text, dim, total, tuple(strata), self.convention, kw.line)
        self.kinds[name.text] = "map"
        self.maps[name.text] = m
        return m

    def stratum_decl(self, seen: list[StratumDecl]) -> StratumDecl:
        self.take("stratum")
        tok = self.take(kind="ident")
        if any(s.name == tok.text for s in seen):
            raise DuplicateName(f"stratum {tok.text!r} declared twice", tok.line, tok.col)
        self.take("(")
        self.take("dim")
        self.take("=")
        dim = self.integer()
        self.take(",")
        self.take("fiber")
        self.take("=")
        fiber = self.integer()
        self.take(",")
        self.take("closure")
        self.take("=")
        closure = self.expr()
        mult = 1
        if self.accept(","):
            self.take("mult")
            self.take("=")
            mult = self.integer()
        self.take(")")
        self.take(";")
        return StratumDecl(tok.text, dim, fiber, closure, mult)

    def ref(self, tok: Token, kinds: tuple[str, ...]) -> str:
        kind = self.kinds.get(tok.text)
        if kind is None:
            raise UnboundName(f"{tok.text!r} is not bound", tok.line, tok.col)
        if kind not in kinds:
            raise self.error(f"{tok.text!r} is a {kind}, not a value", tok)
        return kind

    def directive(self, kw: Token) -> Directive:
        if kw.text == "ie":
            map_name, strata = self.ie_args()
            self.take(";")
            return Directive("ie", map_name, strata, self.convention, kw.line)
        self.take("(")
        tok = self.take(kind="ident")
        if kw.text == "semismall":
            if self.kinds.get(tok.text) != "map":
                raise UnboundName(f"no map named {tok.text!r}", tok.line, tok.col)
            args: tuple = ()
        else:
            self.ref(tok, ("space", "poly", "ie"))
            args = ()
            if kw.text == "epoly" and self.accept(","):
                args = (self.convention_word(),)
            elif kw.text == "betti":
                self.take(",")
                args = (self.integer(),)
            elif kw.text == "expect":
                self.take(",")
                args = (self.expr(),)
        self.take(")")
        self.take(";")
        return Directive(kw.text, tok.text, args, self.convention, kw.line)

    # expressions
    def expr(self) -> SpaceExpr:
        left = self.term()
        while self.peek().text in ("+", "-") and self.peek().kind == "punct":
            op = self.take().text
            right = self.term()
            if _is_literal(left) and _is_literal(right):
                left = Known(left.poly + right.poly if op == "+" else left.poly - right.poly)
            else:
                left = Union(left, right) if op == "+" else Difference(left, right)
        return left

    def term(self) -> SpaceExpr:
        left = self.unary()
        while True:
            if self.peek().text in ("*", "/") and self.peek().kind == "punct":
                op = self.take().text
            elif _is_literal(left) and self.peek().kind == "mono":
                op = "*"  # "15 u^2v^2": juxtaposed literal factors
            else:
                break
            right = self.unary()
            if op == "/":
                left = FreeQuotient(left, right)
            elif _is_literal(left) and _is_literal(right):
                left = Known(left.poly * right.poly)
            elif _literal_count(left) is not None:
                left = ScaledCopies(_literal_count(left), right)
            else:
                left = Bundle(left, right)
        return left

    def unary(self) -> SpaceExpr:
        if self.peek().text == "-" and self.peek().kind == "punct":
            self.take()
            inner = self.unary()
            if _is_literal(inner):
                return Known(-inner.poly)
            return Difference(Known(ZERO), inner)
        return self.atom()

    def atom(self) -> SpaceExpr:
        tok = self.peek()
        if tok.kind == "int":
            self.i += 1
            return Known(BivariatePoly.const(int(tok.text)))
        if tok.kind == "mono":
            self.i += 1
            return Known(parse_poly(tok.text))
        if tok.text == "(":
            self.i += 1
            e = self.expr()
            self.take(")")
            return e
        if tok.kind == "ident":
            self.i += 1
            if tok.text in CONSTRUCTORS:
                return self.constructor(tok)
            kind = self.ref(tok, ("space", "poly", "ie"))
            if kind == "ie":
                return Deferred(tok.text)
            return Named(tok.text, self.defs[tok.text])
        raise self.error(f"unexpected {tok.text or 'end of input'!r}", tok,
                         ("integer", "polynomial", "name", "(") + CONSTRUCTORS)

    def constructor(self, tok: Token) -> SpaceExpr:
        name = tok.text
        if name == "Point":
            return Point()
        if name == "Gm":
            return Gm()
        if name == "Quadric3":
            return Quadric3()
        self.take("(")
        if name in ("Quot2", "Sym2"):
            inner = self.expr()
            self.take(")")
            if name == "Sym2":
                return Sym2(inner)
            base = inner.inner if isinstance(inner, Named) else inner
            if not isinstance(base, Abelian):
                raise self.error("Quot2 is defined for Abelian(g) only", tok)
            return KummerQuot(base.g)
        n = self.integer()
        self.take(")")
        return {"Affine": Affine, "Proj": Proj, "Abelian": Abelian, "Finite": Finite}[name](n)


def parse(source: str) -> Program:
    return Parser(source).program()


# -- rendering ----------------------------------------------------------------

def render_expr(e: SpaceExpr, prec: int = 0) -> str:
    match e:
        case Known(p):
            c = _literal_count(e)
            return str(c) if c is not None else f"({render_poly(p)})"
        case Named(name, _) | Deferred(name):
            return name
        case Point():
            return "Point"
        case Gm():
            return "Gm"
        case Quadric3():
            return "Quadric3"
        case Affine(n):
            return f"Affine({n})"
        case Proj(n):
            return f"Proj({n})"
        case Abelian(g):
            return f"Abelian({g})"
        case KummerQuot(g):
            return f"Quot2(Abelian({g}))"
        case Finite(n):
            return f"Finite({n})"
        case Sym2(inner):
            return f"Sym2({render_expr(inner)})"
        case Union(a, b) | Difference(a, b):
            op = "+" if isinstance(e, Union) else "-"
            s = f"{render_expr(a, 1)} {op} {render_expr(b, 2)}"
            return f"({s})" if prec > 1 else s
        case Bundle(a, b) | Product(a, b) | FreeQuotient(a, b):
            op = "/" if isinstance(e, FreeQuotient) else "*"
            s = f"{render_expr(a, 2)} {op} {render_expr(b, 3)}"
            return f"({s})" if prec > 2 else s
        case ScaledCopies(n, inner):
            s = f"{n} * {render_expr(inner, 3)}"
            return f"({s})" if prec > 2 else s
    raise TypeError(f"cannot render {e!r}")


def render(program: Program) -> str:
    lines = []
    conv: SignConvention | None = None
    for s in program.statements:
        stmt_conv = getattr(s, "convention", None)
        if not isinstance(s, ConventionStmt) and stmt_conv is not None and stmt_conv != conv:
            # statement convention differs from the running one: restate it
            lines.append(f"convention {stmt_conv.value};")
            conv = stmt_conv
        match s:
            case ConventionStmt(c):
                lines.append(f"convention {c.value};")
                conv = c
            case SpaceDef(name, expr, kind):
                lines.append(f"{kind} {name} = {render_expr(expr)};")
            case IEDef(name, m, strata):
                lines.append(f"poly {name} = ie({', '.join((m,) + strata)});")
            case MapDef(name, dim, total, strata):
                lines.append(f"map {name} = semismall(dim={dim}, total={render_expr(total)}) {{")
                for st in strata:
                    extra = f", mult={st.mult}" if st.mult != 1 else ""
                    lines.append(f"    stratum {st.name} (dim={st.dim}, fiber={st.fiber}, "
                                 f"closure={render_expr(st.closure)}{extra});")
                lines.append("};")
            case Directive(kind, name, args):
                if kind == "ie":
                    lines.append(f"ie({', '.join((name,) + args)});")
                elif kind == "betti":
                    lines.append(f"betti({name}, {args[0]});")
                elif kind == "expect":
                    lines.append(f"expect({name}, {render_expr(args[0])});")
                elif kind == "epoly" and args:
                    lines.append(f"epoly({name}, {args[0].value});")
                else:
                    lines.append(f"{kind}({name});")
    return "\n".join(lines) + ("\n" if lines else "")


# -- evaluation ---------------------------------------------------------------

@dataclass
class Entry:
    directive: str
    input: str
    computed: str | None
    status: str
    note: str = ""
    expected: str | None = None

    def to_json(self) -> dict:
        out = {"directive": self.directive, "input": self.input, "computed": self.computed}
        if self.expected is not None:
            out["expected"] = self.expected
        out["status"] = self.status
        out["note"] = self.note
        return out


@dataclass
class Report:
    entries: list[Entry] = field(default_factory=list)
    values: dict[str, BivariatePoly] = field(default_factory=dict)

    @property
    def failures(self) -> list[Entry]:
        return [e for e in self.entries if e.status != "ok"]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> str:
        return json.dumps([e.to_json() for e in self.entries], indent=2, ensure_ascii=False) + "\n"

    def to_text(self) -> str:
        lines = []
        for e in self.entries:
            line = f"[{e.status}] {e.directive}({e.input})"
            if e.computed is not None:
                line += f" = {e.computed}"
            if e.expected is not None and e.status != "ok":
                line += f"\n    expected {e.expected}"
            if e.note:
                line += f"\n    {e.note}"
            lines.append(line)
        return "\n".join(lines) + ("\n" if lines else "")


def _substitute(e: SpaceExpr, env) -> SpaceExpr:
    """Replace :class:`Deferred` leaves by their run-time values."""
    if isinstance(e, Deferred):
        return Known(env(e.name))
    if not is_dataclass(e):
        return e
    changes = {}
    for f in fields(e):
        v = getattr(e, f.name)
        if isinstance(v, SpaceExpr):
            nv = _substitute(v, env)
            if nv is not v:
                changes[f.name] = nv
    return replace(e, **changes) if changes else e


class Runner:
    def __init__(self, program: Program, convention: SignConvention = SignConvention.SIGNED):
        self.program = program
        self.default = SignConvention(convention)
        self.defs = {b.name: b for b in program.bindings}
        self.cache: dict[tuple[str, SignConvention], BivariatePoly | Exception] = {}

    def conv(self, c: SignConvention | None) -> SignConvention:
        return c if c is not None else self.default

    def eval_expr(self, e: SpaceExpr, c: SignConvention) -> BivariatePoly:
        return eval_space(_substitute(e, lambda n: self.value(n, c)), c)

    def value(self, name: str, c: SignConvention | None = None) -> BivariatePoly:
        d = self.defs[name]
        c = c or self.conv(d.convention)
        key = (name, c)
        if key not in self.cache:
            try:
                if isinstance(d, SpaceDef):
                    self.cache[key] = self.eval_expr(d.expr, c)
                elif isinstance(d, IEDef):
                    self.cache[key] = ie_from_desing(self.semismall_map(d.map_name, c), d.strata)
                else:
                    raise TypeError(f"{name!r} is a map")
            except Exception as exc:
                self.cache[key] = exc
        v = self.cache[key]
        if isinstance(v, Exception):
            raise v
        return v

    def semismall_map(self, name: str, c: SignConvention | None = None) -> SemismallMap:
        d: MapDef = self.defs[name]
        c = c or self.conv(d.convention)
        strata = [Stratum(s.name, self.eval_expr(s.closure, c), s.dim, s.fiber, s.mult) for s in d.strata]
        return SemismallMap(d.dim, self.eval_expr(d.total, c), tuple(strata))

    def run(self) -> Report:
        report = Report()
        for s in self.program.statements:
            if isinstance(s, (SpaceDef, IEDef)):
                try:
                    report.values[s.name] = self.value(s.name)
                except Exception as exc:
                    kind = "poly" if isinstance(s, IEDef) else s.kind
                    report.entries.append(Entry(kind, s.name, None, "error", _describe(exc)))
            elif isinstance(s, Directive):
                report.entries.append(self.directive(s))
        return report

    def directive(self, d: Directive) -> Entry:
        c = self.conv(d.convention)
        label = d.name if d.kind != "ie" else ", ".join((d.name,) + d.args)
        if d.kind == "betti":
            label = f"{d.name}, {d.args[0]}"
        try:
            if d.kind == "epoly":
                c = d.args[0] if d.args else c
                return Entry("epoly", d.name, str(self.value(d.name, c)), "ok", f"convention={c.value}")
            if d.kind == "weights":
                ws = weight_sums(self.value(d.name, c))
                return Entry("weights", d.name, " ".join(f"{w}:{s}" for w, s in ws.items()), "ok")
            if d.kind == "betti":
                b = trim_betti(betti_from_pure_E(self.value(d.name, c), d.args[0]))
                return Entry("betti", label, " ".join(map(str, b)), "ok")
            if d.kind == "semismall":
                rows = check_semismall(self.semismall_map(d.name, c))
                text = "; ".join(f"{r.name}: {'bound_ok' if r.bound_ok else 'bound_fails'}"
                                 f"{' relevant' if r.relevant else ''}" for r in rows)
                good = all(r.bound_ok for r in rows)
                return Entry("semismall", d.name, text, "ok" if good else "mismatch",
                             "" if good else "semismall bound violated")
            if d.kind == "ie":
                v = ie_from_desing(self.semismall_map(d.name, c), d.args)
                return Entry("ie", label, str(v), "ok")
            if d.kind == "expect":
                got = self.value(d.name, c)
                want = self.eval_expr(d.args[0], c)
                if got == want:
                    return Entry("expect", d.name, str(got), "ok", expected=str(want))
                return Entry("expect", d.name, str(got), "mismatch",
                             f"computed - expected = {got - want}", expected=str(want))
        except Exception as exc:
            return Entry(d.kind, label, None, "error", _describe(exc))
        raise ValueError(f"unknown directive {d.kind!r}")


def _describe(exc: Exception) -> str:
    return f"{type(exc).__name__}: {exc}"


def run(program: Program, convention: SignConvention = SignConvention.SIGNED) -> Report:
    return Runner(program, convention).run()


def run_source(source: str, convention: SignConvention = SignConvention.SIGNED) -> Report:
    return run(parse(source), convention)
