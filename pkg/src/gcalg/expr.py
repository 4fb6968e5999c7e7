"""Parser, evaluator, and canonical printer for algebra expressions.

Surface syntax (ASCII only)::

    expr   := sum ;  sum := prod { ("+"|"-") prod } ;  prod := post { post }
    post   := atom { "^" int | "'" }
    atom   := "c[" uint "]" | "E[" uint "]" | "zeta" | "q" | rational | "(" expr ")"
    ket    := "|" uint { "," uint } ">" | "Omega"
    bra    := "<" uint { "," uint } "|"
    stateExpr  := [expr] ket
    scalarExpr := bra [expr] ket
    rational   := int [ "/" uint ] ;  int := ["-"] uint

Products are juxtaposition or an explicit ``*`` (also allowed between an
operator expression and a ket, matching the canonical printer's output).
A ``-`` is a sign only where an atom must begin; after a complete factor
it is always the binary minus.  ``'`` is the dagger and binds tightest;
``^`` with a negative exponent means the adjoint of the positive power.
Generator and digit ranges are validated at evaluation time against the
supplied context, not at parse time.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .cyclo import AlgebraContext, ContextMismatchError, CycloScalar
from .rep import QuditState, apply_element, basis_state, scalar_product
from .symbolic import AlgebraElement, projector_element

__all__ = [
    "EvalError",
    "Node",
    "ParseError",
    "eval_element",
    "eval_scalar",
    "eval_state",
    "parse",
    "print_canonical",
]


class ParseError(ValueError):
    """Syntax error with the offending position (0-based character offset)."""

    def __init__(self, message: str, text: str, pos: int):
        self.pos = min(pos, len(text))
        line = text.count("\n", 0, self.pos) + 1
        column = self.pos - (text.rfind("\n", 0, self.pos) + 1) + 1
        self.line = line
        self.column = column
        super().__init__(f"syntax error at {line}:{column}: {message}")


class EvalError(ValueError):
    """An expression parsed but cannot be evaluated in the given context."""


@dataclass
class Node:
    """AST node; ``span`` is the (start, end) character range in the source."""

    kind: str
    span: tuple[int, int]
    value: object = None
    children: tuple[Node, ...] = field(default=())


_SYMBOLS = "[]()|<>,^'+-*/"


def _lex(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    i = 0
    size = len(text)
    while i < size:
        ch = text[i]
        if ch in " \t\r\n":
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < size and text[j].isdigit():
                j += 1
            tokens.append(("NUMBER", text[i:j], i))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < size and text[j].isalpha():
                j += 1
            tokens.append(("NAME", text[i:j], i))
            i = j
            continue
        if ch in _SYMBOLS:
            tokens.append((ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", text, i)
    tokens.append(("EOF", "", size))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _lex(text)
        self.pos = 0

    def peek(self, ahead: int = 0):
        return self.tokens[min(self.pos + ahead, len(self.tokens) - 1)]

    def next(self):
        tok = self.tokens[self.pos]
        if tok[0] != "EOF":
            self.pos += 1
        return tok

    def error(self, message: str, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, self.text, tok[2])

    def expect(self, kind: str, what: str | None = None):
        tok = self.peek()
        if tok[0] != kind:
            self.error(f"expected {what or kind!r}", tok)
        return self.next()

    def _uint(self) -> int:
        tok = self.expect("NUMBER", "an unsigned integer")
        return int(tok[1])

    def _at_atom(self, ahead: int = 0) -> bool:
        kind, textv, _ = self.peek(ahead)
        if kind == "NUMBER" or kind == "(":
            return True
        return kind == "NAME" and textv in ("c", "E", "zeta", "q")

    def _at_ket(self, ahead: int = 0) -> bool:
        kind, textv, _ = self.peek(ahead)
        return kind == "|" or (kind == "NAME" and textv == "Omega")

    # atom := "c[" uint "]" | "E[" uint "]" | "zeta" | "q" | rational | "(" expr ")"
    def atom(self) -> Node:
        kind, textv, start = self.peek()
        if kind == "NUMBER" or kind == "-":
            return self.rational()
        if kind == "NAME":
            if textv in ("c", "E"):
                self.next()
                self.expect("[", "'[' after the generator name")
                index = self._uint()
                end_tok = self.expect("]", "']'")
                node_kind = "gen" if textv == "c" else "proj"
                return Node(node_kind, (start, end_tok[2] + 1), index)
            if textv == "zeta":
                self.next()
                return Node("zeta", (start, start + len(textv)))
            if textv == "q":
                self.next()
                return Node("q", (start, start + len(textv)))
            self.error(f"unknown name {textv!r}")
        if kind == "(":
            self.next()
            inner = self.sum()
            end_tok = self.expect(")", "')'")
            inner.span = (start, end_tok[2] + 1)
            return inner
        self.error("expected an atom (c[i], E[k], zeta, q, a rational, or '(')")

    # rational := int [ "/" uint ]
    def rational(self) -> Node:
        start = self.peek()[2]
        negative = False
        if self.peek()[0] == "-":
            negative = True
            self.next()
        tok = self.expect("NUMBER", "an integer")
        numerator = int(tok[1])
        end = tok[2] + len(tok[1])
        denominator = 1
        if self.peek()[0] == "/":
            self.next()
            dtok = self.expect("NUMBER", "a denominator")
            denominator = int(dtok[1])
            if denominator == 0:
                raise ParseError("zero denominator", self.text, dtok[2])
            end = dtok[2] + len(dtok[1])
        value = Fraction(-numerator if negative else numerator, denominator)
        return Node("rational", (start, end), value)

    # post := atom { "^" int | "'" }
    def post(self) -> Node:
        node = self.atom()
        while True:
            kind, _, pos = self.peek()
            if kind == "^":
                self.next()
                negative = False
                if self.peek()[0] == "-":
                    negative = True
                    self.next()
                tok = self.expect("NUMBER", "an integer exponent")
                exponent = int(tok[1])
                if negative:
                    exponent = -exponent
                node = Node("pow", (node.span[0], tok[2] + len(tok[1])), exponent, (node,))
            elif kind == "'":
                self.next()
                node = Node("dagger", (node.span[0], pos + 1), None, (node,))
            else:
                return node

    # prod := post { ["*"] post }     ('*' before a ket is left unconsumed)
    def prod(self) -> Node:
        factors = [self.post()]
        while True:
            kind, _, _ = self.peek()
            if kind == "*":
                if not self._at_atom(1):
                    break
                self.next()
                factors.append(self.post())
            elif self._at_atom():
                factors.append(self.post())
            else:
                break
        if len(factors) == 1:
            return factors[0]
        return Node("product", (factors[0].span[0], factors[-1].span[1]), None, tuple(factors))

    # sum := prod { ("+"|"-") prod }
    def sum(self) -> Node:
        terms = [self.prod()]
        while True:
            kind, _, pos = self.peek()
            if kind == "+":
                self.next()
                terms.append(self.prod())
            elif kind == "-":
                self.next()
                rhs = self.prod()
                minus_one = Node("rational", (pos, pos + 1), Fraction(-1))
                terms.append(Node("product", (pos, rhs.span[1]), None, (minus_one, rhs)))
            else:
                break
        if len(terms) == 1:
            return terms[0]
        return Node("sum", (terms[0].span[0], terms[-1].span[1]), None, tuple(terms))

    def _digits(self, closing: str) -> tuple[int, ...]:
        digits = [self._uint()]
        while self.peek()[0] == ",":
            self.next()
            digits.append(self._uint())
        self.expect(closing, f"{closing!r}")
        return tuple(digits)

    # ket := "|" uint {"," uint} ">" | "Omega"
    def ket(self) -> Node:
        kind, textv, start = self.peek()
        if kind == "NAME" and textv == "Omega":
            self.next()
            return Node("ket", (start, start + len(textv)), None)
        self.expect("|", "a ket")
        digits = self._digits(">")
        return Node("ket", (start, self.tokens[self.pos - 1][2] + 1), digits)

    # bra := "<" uint {"," uint} "|"
    def bra(self) -> Node:
        start = self.peek()[2]
        self.expect("<", "a bra")
        digits = self._digits("|")
        return Node("bra", (start, self.tokens[self.pos - 1][2] + 1), digits)

    def _try_shared_bar_ket(self) -> Node | None:
        # Dirac adjacency "<a|b>" writes the bar once; accept digits '>' here.
        start_pos = self.pos
        start = self.peek()[2]
        if self.peek()[0] != "NUMBER":
            return None
        digits = [int(self.next()[1])]
        while self.peek()[0] == ",":
            self.next()
            if self.peek()[0] != "NUMBER":
                self.pos = start_pos
                return None
            digits.append(int(self.next()[1]))
        if self.peek()[0] != ">":
            self.pos = start_pos
            return None
        end_tok = self.next()
        return Node("ket", (start, end_tok[2] + 1), tuple(digits))

    def top(self) -> Node:
        if self.peek()[0] == "<":
            bra = self.bra()
            operator = None
            ket = self._try_shared_bar_ket()
            if ket is None:
                if not self._at_ket():
                    operator = self.sum()
                    if self.peek()[0] == "*" and self._at_ket(1):
                        self.next()
                ket = self.ket()
            self.expect("EOF", "end of input")
            children = (bra, operator, ket) if operator is not None else (bra, ket)
            return Node("sandwich", (bra.span[0], ket.span[1]), None, children)
        if self._at_ket():
            ket = self.ket()
            self.expect("EOF", "end of input")
            return Node("apply", ket.span, None, (ket,))
        operator = self.sum()
        if self.peek()[0] == "*" and self._at_ket(1):
            self.next()
        if self._at_ket():
            ket = self.ket()
            self.expect("EOF", "end of input")
            return Node("apply", (operator.span[0], ket.span[1]), None, (operator, ket))
        self.expect("EOF", "end of input")
        return operator


def parse(text: str) -> Node:
    """Parse an element, state, or bra-ket expression into an AST.

    The root is a ``sandwich`` node for scalar expressions, an ``apply``
    node for states, and an operator node otherwise.
    """
    return _Parser(text).top()


def _eval_operator(node: Node, ctx: AlgebraContext) -> AlgebraElement:
    kind = node.kind
    if kind == "rational":
        return AlgebraElement.from_scalar(ctx, node.value)
    if kind == "q":
        return AlgebraElement.from_scalar(ctx, ctx.q())
    if kind == "zeta":
        return AlgebraElement.from_scalar(ctx, ctx.zeta())
    if kind == "gen":
        if not 1 <= node.value <= ctx.num_generators:
            raise EvalError(
                f"generator index {node.value} out of range 1..{ctx.num_generators}"
            )
        return AlgebraElement.generator(ctx, node.value)
    if kind == "proj":
        if not 1 <= node.value <= ctx.n:
            raise EvalError(f"projector index {node.value} out of range 1..{ctx.n}")
        return projector_element(ctx, node.value)
    if kind == "pow":
        return _eval_operator(node.children[0], ctx) ** node.value
    if kind == "dagger":
        return _eval_operator(node.children[0], ctx).adjoint()
    if kind == "product":
        out = AlgebraElement.one(ctx)
        for child in node.children:
            out = out * _eval_operator(child, ctx)
        return out
    if kind == "sum":
        out = AlgebraElement.zero(ctx)
        for child in node.children:
            out = out + _eval_operator(child, ctx)
        return out
    raise EvalError(f"expected an operator expression, found a {kind} node")


def _eval_ket(node: Node, ctx: AlgebraContext) -> QuditState:
    digits = node.value
    if digits is None:
        digits = (0,) * ctx.n
    if len(digits) != ctx.n:
        raise EvalError(f"ket has {len(digits)} digits, expected {ctx.n}")
    if any(not 0 <= d < ctx.N for d in digits):
        raise EvalError(f"ket digits must lie in [0, {ctx.N}): {digits}")
    return basis_state(ctx, digits)


def eval_element(ast: Node, ctx: AlgebraContext) -> AlgebraElement:
    """Evaluate an operator expression to an exact algebra element."""
    if ast.kind in ("apply", "sandwich", "ket", "bra"):
        raise EvalError(f"expected an element expression, got a {ast.kind}")
    return _eval_operator(ast, ctx)


def eval_state(ast: Node, ctx: AlgebraContext) -> QuditState:
    """Evaluate a ket expression (with optional operator prefix) to a state."""
    if ast.kind != "apply":
        raise EvalError(f"expected a state expression, got a {ast.kind}")
    ket = _eval_ket(ast.children[-1], ctx)
    if len(ast.children) == 1:
        return ket
    return apply_element(_eval_operator(ast.children[0], ctx), ket)


def eval_scalar(ast: Node, ctx: AlgebraContext) -> CycloScalar:
    """Evaluate a bra-operator-ket sandwich to an exact scalar.

    The bra slot is conjugate-linear: <b|x|a> = (|b>, x|a>) in the Hermitian
    product.
    """
    if ast.kind != "sandwich":
        raise EvalError(f"expected a bra-ket expression, got a {ast.kind}")
    bra_node = ast.children[0]
    digits = bra_node.value
    if len(digits) != ctx.n:
        raise EvalError(f"bra has {len(digits)} digits, expected {ctx.n}")
    if any(not 0 <= d < ctx.N for d in digits):
        raise EvalError(f"bra digits must lie in [0, {ctx.N}): {digits}")
    bra_state = basis_state(ctx, digits)
    ket_state = _eval_ket(ast.children[-1], ctx)
    if len(ast.children) == 3:
        ket_state = apply_element(_eval_operator(ast.children[1], ctx), ket_state)
    return scalar_product(bra_state, ket_state)


def _root_as_q_zeta(ctx: AlgebraContext, k: int) -> tuple[int, int, int]:
    """Decompose w^k as sign * q^a * zeta^b with b in {0, 1}.

    For even N zeta is an odd power of w, so b = k mod 2 and no sign is
    needed.  For odd N zeta is itself a power of q, so roots decompose as
    +-q^a instead (odd powers of w pick up the sign -1 = w^N).
    """
    N = ctx.N
    if k % 2 == 0:
        return 1, (k // 2) % N, 0
    if N % 2 == 0:
        return 1, ((k - ctx.zeta_exp) // 2) % N, 1
    return -1, ((k - N) // 2) % N, 0


def _scalar_terms(s: CycloScalar, ctx: AlgebraContext) -> list[tuple[Fraction, int, int]]:
    if s.order != ctx.order:
        raise ContextMismatchError("scalar ring does not match the context")
    out = []
    for k, r in sorted(s.coeffs.items()):
        sign, a, b = _root_as_q_zeta(ctx, k)
        out.append((sign * r, a, b))
    return out


def _term_body(mag: Fraction, a: int, b: int) -> str:
    factors = []
    if mag != 1:
        factors.append(str(mag))
    if a:
        factors.append("q" if a == 1 else f"q^{a}")
    if b:
        factors.append("zeta")
    if not factors:
        factors.append("1")
    return " * ".join(factors)


def _negate_body(body: str) -> str:
    # A leading '-' is only a sign before a digit; otherwise spell out -1.
    if body[0].isdigit():
        return "-" + body
    return "-1 * " + body


def _signed_join(pieces: list[tuple[bool, str]]) -> str:
    negative, body = pieces[0]
    out = _negate_body(body) if negative else body
    for negative, body in pieces[1:]:
        out += (" - " if negative else " + ") + body
    return out


def _scalar_text(s: CycloScalar, ctx: AlgebraContext) -> str:
    terms = _scalar_terms(s, ctx)
    if not terms:
        return "0"
    return _signed_join([(r < 0, _term_body(abs(r), a, b)) for r, a, b in terms])


def _coeff_piece(coeff: CycloScalar, ctx: AlgebraContext) -> tuple[bool, str, bool]:
    """Coefficient as (negative, body, is_plain_one) for use before generators."""
    terms = _scalar_terms(coeff, ctx)
    if len(terms) == 1:
        r, a, b = terms[0]
        if r == 1 and a == 0 and b == 0:
            return False, "1", True
        return r < 0, _term_body(abs(r), a, b), False
    return False, f"({_scalar_text(coeff, ctx)})", False


def _element_text(x: AlgebraElement) -> str:
    if not x.terms:
        return "0"
    ctx = x.ctx
    pieces = []
    for exps in sorted(x.terms):
        gens = " ".join(
            f"c[{i + 1}]" + (f"^{e}" if e > 1 else "")
            for i, e in enumerate(exps)
            if e
        )
        negative, body, _ = _coeff_piece(x.terms[exps], ctx)
        if not gens:
            text = body
        elif body == "1":
            text = gens
        else:
            text = f"{body} * {gens}"
        pieces.append((negative, text))
    return _signed_join(pieces)


def _state_text(s: QuditState) -> str:
    ctx = s.ctx
    if not s.amps:
        return "0 * Omega"
    if len(s.amps) == 1:
        (digits, amp), = s.amps.items()
        ket = "|" + ",".join(map(str, digits)) + ">"
        negative, body, is_one = _coeff_piece(amp, ctx)
        if is_one:
            return ket
        text = f"{body} * {ket}"
        return _negate_body(text) if negative else text
    # General states print as an even-generator element applied to Omega:
    # c_2^{a_1} ... c_{2n}^{a_n} reaches |a_1..a_n> with phase exactly one.
    terms = {}
    for digits, amp in s.amps.items():
        exps = [0] * ctx.num_generators
        for position, digit in enumerate(digits):
            exps[2 * position + 1] = digit
        terms[tuple(exps)] = amp
    element = AlgebraElement(ctx, terms)
    return f"({_element_text(element)}) Omega"


def print_canonical(value, ctx: AlgebraContext | None = None) -> str:
    """Canonical text form; ``parse`` + evaluation reproduces the value.

    Elements and states carry their context; printing a bare scalar needs
    the context passed explicitly (the zeta choice fixes the spelling).
    """
    if isinstance(value, AlgebraElement):
        return _element_text(value)
    if isinstance(value, QuditState):
        return _state_text(value)
    if isinstance(value, CycloScalar):
        if ctx is None:
            raise TypeError("printing a bare scalar requires the context")
        return _scalar_text(value, ctx)
    raise TypeError(f"cannot print a {type(value).__name__} canonically")
