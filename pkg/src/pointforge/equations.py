"""Random equation ASTs: generation, canonical text, parsing, evaluation.

An equation is a list of terms joined by infix operators, optionally wrapped
by one outer scaled function.  Each term is a chain of function applications
over one argument atom, and every application is scaled by a fresh draw of
the equation's single sampler:

    t = s*f1( s*f2( ... s*fd(atom) ... ) )

Canonical text spells the sampler as its token (``uniform(-1,1)``, ...), the
identity function as a bare parenthesized argument, and the composite
functions as ``sqrt(abs(v))``, ``log(abs(v)+1)``, ``acosh(abs(v)+1)``.
The parser also accepts ``random.``/``math.``-prefixed spellings and the
double-sampler form ``s*s*f(v)`` (read as an identity link) found in older
config files.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .errors import EquationSyntaxError
from .kernel import program as prg
from .kernel import pure as _pure
from .rng import Distribution, Rng


class ArgKind(Enum):
    """The 21 argument atoms; values are the kernel atom codes."""

    XY = prg.ATOM_XY
    X = prg.ATOM_X
    Y = prg.ATOM_Y
    INV_X = prg.ATOM_INV_X
    INV_Y = prg.ATOM_INV_Y
    X_OVER_Y = prg.ATOM_X_OVER_Y
    Y_MINUS_X = prg.ATOM_Y_MINUS_X
    X_MINUS_Y = prg.ATOM_X_MINUS_Y
    X_PLUS_Y = prg.ATOM_X_PLUS_Y
    X_CUBED = prg.ATOM_X_CUBED
    Y_CUBED = prg.ATOM_Y_CUBED
    X_SQUARED = prg.ATOM_X_SQUARED
    Y_SQUARED = prg.ATOM_Y_SQUARED
    X2_Y = prg.ATOM_X2_Y
    Y2_X = prg.ATOM_Y2_X
    X2_PLUS_Y2 = prg.ATOM_X2_PLUS_Y2
    Y2_MINUS_X2 = prg.ATOM_Y2_MINUS_X2
    X2_Y3 = prg.ATOM_X2_Y3
    X3_Y2 = prg.ATOM_X3_Y2
    X_Y3 = prg.ATOM_X_Y3
    Y_X3 = prg.ATOM_Y_X3

    @property
    def text(self) -> str:
        return _ATOM_TEXT[self]


_ATOM_TEXT = {
    ArgKind.XY: "x*y",
    ArgKind.X: "x",
    ArgKind.Y: "y",
    ArgKind.INV_X: "1/x",
    ArgKind.INV_Y: "1/y",
    ArgKind.X_OVER_Y: "x/y",
    ArgKind.Y_MINUS_X: "y-x",
    ArgKind.X_MINUS_Y: "x-y",
    ArgKind.X_PLUS_Y: "x+y",
    ArgKind.X_CUBED: "x**3",
    ArgKind.Y_CUBED: "y**3",
    ArgKind.X_SQUARED: "x**2",
    ArgKind.Y_SQUARED: "y**2",
    ArgKind.X2_Y: "x**2*y",
    ArgKind.Y2_X: "y**2*x",
    ArgKind.X2_PLUS_Y2: "x**2+y**2",
    ArgKind.Y2_MINUS_X2: "y**2-x**2",
    ArgKind.X2_Y3: "x**2*y**3",
    ArgKind.X3_Y2: "x**3*y**2",
    ArgKind.X_Y3: "x*y**3",
    ArgKind.Y_X3: "y*x**3",
}


class FuncKind(Enum):
    """The 13 deterministic functions; values are the kernel function codes."""

    TANH = prg.FUNC_TANH
    COS = prg.FUNC_COS
    SIN = prg.FUNC_SIN
    IDENTITY = prg.FUNC_IDENTITY
    ABS = prg.FUNC_ABS
    CEIL = prg.FUNC_CEIL
    FLOOR = prg.FUNC_FLOOR
    TAN = prg.FUNC_TAN
    ERF = prg.FUNC_ERF
    SQRT_ABS = prg.FUNC_SQRT_ABS
    LOG_ABS1 = prg.FUNC_LOG_ABS1
    ACOSH_ABS1 = prg.FUNC_ACOSH_ABS1
    ASINH = prg.FUNC_ASINH


class OpKind(Enum):
    ADD = prg.BOP_ADD
    SUB = prg.BOP_SUB
    MUL = prg.BOP_MUL
    DIV = prg.BOP_DIV

    @property
    def symbol(self) -> str:
        return "+-*/"[self.value]


_DISTS = tuple(Distribution)
_FUNCS = tuple(FuncKind)
_ARGS = tuple(ArgKind)
_OPS = tuple(OpKind)


@dataclass(frozen=True)
class Term:
    """One chain of scaled function applications over an atom.

    ``chain`` is outermost-first and never empty; its length is the depth.
    """

    chain: tuple[FuncKind, ...]
    atom: ArgKind

    def __post_init__(self):
        if not self.chain:
            raise ValueError("term chain must be non-empty")


@dataclass(frozen=True)
class Equation:
    """Immutable equation AST; freely shareable once built."""

    dist: Distribution
    terms: tuple[Term, ...]
    ops: tuple[OpKind, ...]
    wrap: FuncKind | None = None

    def __post_init__(self):
        if not self.terms:
            raise ValueError("equation needs at least one term")
        if len(self.ops) != len(self.terms) - 1:
            raise ValueError("operator count must be term count - 1")


@dataclass(frozen=True)
class GenConfig:
    """Generation bounds: term count in [c_min, c_max], depth in [d_min, d_max].

    ``wrap_p`` is the probability of the outer scaled wrap.
    """

    c_min: int = 1
    c_max: int = 14
    d_min: int = 1
    d_max: int = 2
    wrap_p: float = 0.5

    def __post_init__(self):
        if not (1 <= self.c_min <= self.c_max):
            raise ValueError("need 1 <= c_min <= c_max")
        if not (1 <= self.d_min <= self.d_max):
            raise ValueError("need 1 <= d_min <= d_max")
        if not (0.0 <= self.wrap_p <= 1.0):
            raise ValueError("wrap_p must be within [0, 1]")


DEFAULT_GEN_CONFIG = GenConfig()


def _rand_index(rng: Rng, k: int) -> int:
    # floor(U * k): single-draw uniform choice over k items.
    return int(rng.next_unit() * k)


def generate_equation(rng: Rng, cfg: GenConfig = DEFAULT_GEN_CONFIG) -> Equation:
    """Draw a random equation.

    Stream order (all draws are single ``next_unit`` calls scaled to the set
    size): term count n, sampler, then per term its depth d, its atom, its d
    functions innermost-first, and after every non-final term one operator;
    finally the wrap coin and, when it hits, the wrap function.
    """
    n = cfg.c_min + _rand_index(rng, cfg.c_max - cfg.c_min + 1)
    dist = _DISTS[_rand_index(rng, len(_DISTS))]
    terms = []
    ops = []
    for i in range(n):
        d = cfg.d_min + _rand_index(rng, cfg.d_max - cfg.d_min + 1)
        atom = _ARGS[_rand_index(rng, len(_ARGS))]
        inner_first = [_FUNCS[_rand_index(rng, len(_FUNCS))] for _ in range(d)]
        terms.append(Term(chain=tuple(reversed(inner_first)), atom=atom))
        if i < n - 1:
            ops.append(_OPS[_rand_index(rng, len(_OPS))])
    wrap = None
    if rng.next_unit() < cfg.wrap_p:
        wrap = _FUNCS[_rand_index(rng, len(_FUNCS))]
    return Equation(dist=dist, terms=tuple(terms), ops=tuple(ops), wrap=wrap)


# --------------------------------------------------------------------------
# Serialization
# --------------------------------------------------------------------------

_SIMPLE_FUNC_TEXT = {
    FuncKind.TANH: "tanh",
    FuncKind.COS: "cos",
    FuncKind.SIN: "sin",
    FuncKind.ABS: "abs",
    FuncKind.CEIL: "ceil",
    FuncKind.FLOOR: "floor",
    FuncKind.TAN: "tan",
    FuncKind.ERF: "erf",
    FuncKind.ASINH: "asinh",
}


def _apply_text(func: FuncKind, inner: str, sampler: str) -> str:
    if func is FuncKind.IDENTITY:
        return f"{sampler}*({inner})"
    if func is FuncKind.SQRT_ABS:
        return f"{sampler}*sqrt(abs({inner}))"
    if func is FuncKind.LOG_ABS1:
        return f"{sampler}*log(abs({inner})+1)"
    if func is FuncKind.ACOSH_ABS1:
        return f"{sampler}*acosh(abs({inner})+1)"
    return f"{sampler}*{_SIMPLE_FUNC_TEXT[func]}({inner})"


def serialize(eq: Equation) -> str:
    """Canonical infix text; ``parse`` inverts it structurally."""
    sampler = eq.dist.token
    parts = []
    for i, term in enumerate(eq.terms):
        if i:
            parts.append(eq.ops[i - 1].symbol)
        text = term.atom.text
        for func in reversed(term.chain):  # innermost application first
            text = _apply_text(func, text, sampler)
        parts.append(text)
    body = "".join(parts)
    if eq.wrap is not None:
        if len(eq.terms) == 1:
            # One extra paren pair marks the wrap boundary; without it the
            # text would re-parse as a longer chain, which consumes its
            # samples in a different order.
            body = f"({body})"
        body = _apply_text(eq.wrap, body, sampler)
    return body


# --------------------------------------------------------------------------
# Parsing
# --------------------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"""(?P<ws>\s+)
      | (?P<name>[A-Za-z_][A-Za-z_0-9]*(?:\.[A-Za-z_][A-Za-z_0-9]*)*)
      | (?P<num>\d+(?:\.\d+)?)
      | (?P<pow>\*\*)
      | (?P<op>[+\-*/])
      | (?P<lpar>\()
      | (?P<rpar>\))
      | (?P<comma>,)
    """,
    re.VERBOSE,
)

_DIST_BY_NAME = {
    "uniform": Distribution.UNIFORM,
    "gauss": Distribution.GAUSSIAN,
    "betavariate": Distribution.BETAVARIATE,
    "gammavariate": Distribution.GAMMAVARIATE,
    "lognormvariate": Distribution.LOGNORMVARIATE,
}

_DIST_PARAMS = {
    Distribution.UNIFORM: (-1.0, 1.0),
    Distribution.GAUSSIAN: (0.0, 1.0),
    Distribution.BETAVARIATE: (1.0, 1.0),
    Distribution.GAMMAVARIATE: (1.0, 1.0),
    Distribution.LOGNORMVARIATE: (0.0, 1.0),
}

_SIMPLE_FUNC_BY_NAME = {
    "tanh": FuncKind.TANH,
    "cos": FuncKind.COS,
    "sin": FuncKind.SIN,
    "ceil": FuncKind.CEIL,
    "floor": FuncKind.FLOOR,
    "tan": FuncKind.TAN,
    "erf": FuncKind.ERF,
    "asinh": FuncKind.ASINH,
    "arcsinh": FuncKind.ASINH,
}

_VAR_X = ("var", "x")
_VAR_Y = ("var", "y")


def _pow(base, k):
    return ("pow", base, ("num", float(k)))


_ATOM_SHAPES = {
    ("mul", _VAR_X, _VAR_Y): ArgKind.XY,
    _VAR_X: ArgKind.X,
    _VAR_Y: ArgKind.Y,
    ("div", ("num", 1.0), _VAR_X): ArgKind.INV_X,
    ("div", ("num", 1.0), _VAR_Y): ArgKind.INV_Y,
    ("div", _VAR_X, _VAR_Y): ArgKind.X_OVER_Y,
    ("sub", _VAR_Y, _VAR_X): ArgKind.Y_MINUS_X,
    ("sub", _VAR_X, _VAR_Y): ArgKind.X_MINUS_Y,
    ("add", _VAR_X, _VAR_Y): ArgKind.X_PLUS_Y,
    _pow(_VAR_X, 3): ArgKind.X_CUBED,
    _pow(_VAR_Y, 3): ArgKind.Y_CUBED,
    _pow(_VAR_X, 2): ArgKind.X_SQUARED,
    _pow(_VAR_Y, 2): ArgKind.Y_SQUARED,
    ("mul", _pow(_VAR_X, 2), _VAR_Y): ArgKind.X2_Y,
    ("mul", _pow(_VAR_Y, 2), _VAR_X): ArgKind.Y2_X,
    ("add", _pow(_VAR_X, 2), _pow(_VAR_Y, 2)): ArgKind.X2_PLUS_Y2,
    ("sub", _pow(_VAR_Y, 2), _pow(_VAR_X, 2)): ArgKind.Y2_MINUS_X2,
    ("mul", _pow(_VAR_X, 2), _pow(_VAR_Y, 3)): ArgKind.X2_Y3,
    ("mul", _pow(_VAR_X, 3), _pow(_VAR_Y, 2)): ArgKind.X3_Y2,
    ("mul", _VAR_X, _pow(_VAR_Y, 3)): ArgKind.X_Y3,
    ("mul", _VAR_Y, _pow(_VAR_X, 3)): ArgKind.Y_X3,
}


@dataclass
class _Token:
    kind: str
    text: str
    pos: int


@dataclass
class _Chain:
    links: list[FuncKind]
    payload: tuple  # ("atom", ArgKind) | ("sub", [_Chain...], [OpKind...])


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise EquationSyntaxError("unexpected character", pos, text[pos])
        kind = m.lastgroup or ""
        if kind != "ws":
            tokens.append(_Token(kind, m.group(), pos))
        pos = m.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0
        self.dist: Distribution | None = None

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        tok = self.tokens[self.i]
        if tok.kind != "end":
            self.i += 1
        return tok

    def expect(self, kind: str, text: str | None = None) -> _Token:
        tok = self.peek()
        if tok.kind != kind or (text is not None and tok.text != text):
            want = text if text is not None else kind
            if kind in ("lpar", "rpar"):
                raise EquationSyntaxError("mismatched parentheses", tok.pos, tok.text)
            raise EquationSyntaxError(f"expected {want!r}", tok.pos, tok.text)
        return self.advance()

    # -- samplers ---------------------------------------------------------

    def _is_sampler_ahead(self) -> bool:
        return self._is_sampler_at(self.i)

    def _is_sampler_at(self, index: int) -> bool:
        if index >= len(self.tokens):
            return False
        tok = self.tokens[index]
        if tok.kind != "name":
            return False
        name = tok.text
        if name.startswith("random."):
            name = name[len("random."):]
        return name in _DIST_BY_NAME

    def parse_sampler(self) -> Distribution:
        tok = self.expect("name")
        name = tok.text
        if name.startswith("random."):
            name = name[len("random."):]
        dist = _DIST_BY_NAME.get(name)
        if dist is None:
            raise EquationSyntaxError("unknown sampler", tok.pos, tok.text)
        self.expect("lpar")
        a = self.parse_number()
        self.expect("comma")
        b = self.parse_number()
        self.expect("rpar")
        if (a, b) != _DIST_PARAMS[dist]:
            raise EquationSyntaxError("unsupported sampler parameters", tok.pos, tok.text)
        if self.dist is None:
            self.dist = dist
        elif dist is not self.dist:
            raise EquationSyntaxError("mixed distributions in one equation", tok.pos, tok.text)
        return dist

    def parse_number(self) -> float:
        sign = 1.0
        tok = self.peek()
        if tok.kind == "op" and tok.text == "-":
            self.advance()
            sign = -1.0
        tok = self.expect("num")
        return sign * float(tok.text)

    # -- equation structure -------------------------------------------------

    def parse_chain_sequence(self) -> tuple[list[_Chain], list[OpKind]]:
        items = [self.parse_scaled_chain()]
        ops: list[OpKind] = []
        while self.peek().kind == "op":
            sym = self.advance().text
            ops.append(_OP_BY_SYMBOL[sym])
            items.append(self.parse_scaled_chain())
        return items, ops

    def parse_scaled_chain(self) -> _Chain:
        tok = self.peek()
        if not self._is_sampler_ahead():
            raise EquationSyntaxError("expected a sampler token", tok.pos, tok.text)
        self.parse_sampler()
        self.expect("op", "*")
        links, payload = self.parse_application()
        return _Chain(links, payload)

    def parse_application(self) -> tuple[list[FuncKind], tuple]:
        tok = self.peek()
        if tok.kind == "lpar":
            self.advance()
            inner = self.parse_inner()
            self.expect("rpar")
            return self._absorb(FuncKind.IDENTITY, inner)
        if tok.kind != "name":
            raise EquationSyntaxError("expected function name or '('", tok.pos, tok.text)
        if self._is_sampler_ahead():
            # Legacy double-sampler spelling s*s*f(v): an implicit identity link.
            self.parse_sampler()
            self.expect("op", "*")
            links, payload = self.parse_application()
            return [FuncKind.IDENTITY] + links, payload
        name = tok.text
        if name.startswith("math."):
            name = name[len("math."):]
        self.advance()
        if name == "sqrt":
            self.expect("lpar")
            self._expect_abs_open()
            inner = self.parse_inner()
            self.expect("rpar")
            self.expect("rpar")
            return self._absorb(FuncKind.SQRT_ABS, inner)
        if name in ("log", "acosh", "arccosh"):
            func = FuncKind.LOG_ABS1 if name == "log" else FuncKind.ACOSH_ABS1
            self.expect("lpar")
            self._expect_abs_open()
            inner = self.parse_inner()
            self.expect("rpar")
            self.expect("op", "+")
            one = self.expect("num")
            if float(one.text) != 1.0:
                raise EquationSyntaxError("expected '+1'", one.pos, one.text)
            self.expect("rpar")
            return self._absorb(func, inner)
        if name == "abs":
            self.expect("lpar")
            inner = self.parse_inner()
            self.expect("rpar")
            return self._absorb(FuncKind.ABS, inner)
        func = _SIMPLE_FUNC_BY_NAME.get(name)
        if func is None:
            raise EquationSyntaxError("unknown function name", tok.pos, tok.text)
        self.expect("lpar")
        inner = self.parse_inner()
        self.expect("rpar")
        return self._absorb(func, inner)

    def _expect_abs_open(self):
        tok = self.expect("name")
        name = tok.text
        if name.startswith("math."):
            name = name[len("math."):]
        if name != "abs":
            raise EquationSyntaxError("expected 'abs('", tok.pos, tok.text)
        self.expect("lpar")

    def parse_inner(self) -> tuple:
        if self._is_sampler_ahead():
            items, ops = self.parse_chain_sequence()
            if len(items) == 1:
                ch = items[0]
                return ("chain", ch.links, ch.payload)
            return ("sub", items, ops)
        tok = self.peek()
        if tok.kind == "lpar" and self._is_sampler_at(self.i + 1):
            # Parenthesized sub-equation: the explicit wrap-body marker.
            self.advance()
            items, ops = self.parse_chain_sequence()
            self.expect("rpar")
            return ("sub", items, ops)
        ast = self.parse_atom_expr()
        kind = _ATOM_SHAPES.get(ast)
        if kind is None:
            raise EquationSyntaxError("not a recognized argument form", tok.pos, tok.text)
        return ("atom", kind)

    @staticmethod
    def _absorb(func: FuncKind, inner: tuple) -> tuple[list[FuncKind], tuple]:
        if inner[0] == "chain":
            return [func] + inner[1], inner[2]
        return [func], inner

    # -- atom expressions ---------------------------------------------------

    def parse_atom_expr(self, min_prec: int = 1) -> tuple:
        node = self.parse_atom_unary()
        while True:
            tok = self.peek()
            if tok.kind != "op":
                return node
            if tok.text in "+-" and min_prec <= 1:
                self.advance()
                rhs = self.parse_atom_expr(2)
                node = ("add" if tok.text == "+" else "sub", node, rhs)
            elif tok.text in "*/" and min_prec <= 2:
                self.advance()
                rhs = self.parse_atom_expr(3)
                node = ("mul" if tok.text == "*" else "div", node, rhs)
            else:
                return node

    def parse_atom_unary(self) -> tuple:
        tok = self.peek()
        if tok.kind == "op" and tok.text == "-":
            self.advance()
            return ("neg", self.parse_atom_unary())
        return self.parse_atom_power()

    def parse_atom_power(self) -> tuple:
        base = self.parse_atom_primary()
        if self.peek().kind == "pow":
            self.advance()
            return ("pow", base, self.parse_atom_unary())
        return base

    def parse_atom_primary(self) -> tuple:
        tok = self.advance()
        if tok.kind == "lpar":
            node = self.parse_atom_expr()
            self.expect("rpar")
            return node
        if tok.kind == "num":
            return ("num", float(tok.text))
        if tok.kind == "name" and tok.text in ("x", "y"):
            return ("var", tok.text)
        raise EquationSyntaxError("unexpected token in argument", tok.pos, tok.text)


_OP_BY_SYMBOL = {op.symbol: op for op in OpKind}


def parse(text: str) -> Equation:
    """Parse canonical or legacy-aliased equation text into an Equation."""
    if not text or not text.strip():
        raise EquationSyntaxError("empty equation text", 0)
    parser = _Parser(text)
    items, ops = parser.parse_chain_sequence()
    tail = parser.peek()
    if tail.kind != "end":
        raise EquationSyntaxError("unexpected trailing input", tail.pos, tail.text)

    wrap: FuncKind | None = None
    if len(items) == 1 and items[0].payload[0] == "sub":
        links = items[0].links
        if len(links) != 1:
            raise EquationSyntaxError(
                "multi-term argument allowed only at the outermost application", 0
            )
        wrap = links[0]
        _, items, ops = items[0].payload

    terms = []
    for chain in items:
        if chain.payload[0] != "atom":
            raise EquationSyntaxError(
                "multi-term argument allowed only at the outermost application", 0
            )
        terms.append(Term(chain=tuple(chain.links), atom=chain.payload[1]))
    assert parser.dist is not None
    return Equation(dist=parser.dist, terms=tuple(terms), ops=tuple(ops), wrap=wrap)


# --------------------------------------------------------------------------
# Evaluation
# --------------------------------------------------------------------------

_PREC = {OpKind.ADD: 1, OpKind.SUB: 1, OpKind.MUL: 2, OpKind.DIV: 2}


@lru_cache(maxsize=256)
def compile_equation(eq: Equation) -> prg.Program:
    """Compile to the flat postfix program both kernel lanes interpret.

    Sample indices follow evaluation draw order: per term outermost-first,
    terms left to right, wrap last.
    """
    rows: list[tuple[int, int, int]] = []
    chunks = []
    base = 0
    for term in eq.terms:
        d = len(term.chain)
        chunk = [(prg.OP_ATOM, term.atom.value, 0)]
        for j in range(d - 1, -1, -1):  # innermost application first
            chunk.append((prg.OP_APPLY, term.chain[j].value, base + j))
        base += d
        chunks.append(chunk)

    rows.extend(chunks[0])
    opstack: list[OpKind] = []
    for op, chunk in zip(eq.ops, chunks[1:]):
        while opstack and _PREC[opstack[-1]] >= _PREC[op]:
            rows.append((prg.OP_BINOP, opstack.pop().value, 0))
        opstack.append(op)
        rows.extend(chunk)
    while opstack:
        rows.append((prg.OP_BINOP, opstack.pop().value, 0))

    if eq.wrap is not None:
        rows.append((prg.OP_APPLY, eq.wrap.value, base))
        base += 1

    depth = max_depth = 0
    for op, _, _ in rows:
        depth += 1 if op == prg.OP_ATOM else (-1 if op == prg.OP_BINOP else 0)
        max_depth = max(max_depth, depth)
    assert max_depth <= prg.MAX_STACK

    return prg.Program.from_rows(rows, n_samples=base, dist=eq.dist.value)


def count_samples(eq: Equation) -> int:
    """Sampler draws one evaluation consumes: sum of depths, +1 for the wrap."""
    return sum(len(t.chain) for t in eq.terms) + (1 if eq.wrap is not None else 0)


def evaluate(eq: Equation, x: float, y: float, rng) -> float:
    """Evaluate at (x, y), drawing one fresh sample per application from rng.

    Draw order: per term outermost-first, terms left to right, wrap last.
    Non-finite results are returned as-is for the caller to filter.  ``rng``
    is anything with ``sample_kind(code) -> float``.
    """
    program = compile_equation(eq)
    samples = [rng.sample_kind(program.dist) for _ in range(program.n_samples)]
    return _pure.run_program(program.rows, samples, float(x), float(y))


def structure_equal(a: Equation, b: Equation) -> bool:
    """AST equality (the family property's assertion level)."""
    return a == b
