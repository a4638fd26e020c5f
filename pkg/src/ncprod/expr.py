"""Expression language for algebra elements: AST, parser, evaluator, printer.

Grammar::

    expr     := term (('+'|'-') term)*
    term     := unary ('*' unary)*
    unary    := '-' unary | factor
    factor   := base ('^' sint)?
    base     := rational | 'z' | var | '(' expr ')'
    var      := ('x'|'y') uint
    rational := uint ('/' uint)?
    sint     := '-'? uint

``z`` is zeta_m of the active algebra.  Multiplication is always explicit.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple, Union

from .cyclo import CycNum
from .errors import BadIndex, NonunitPow, ParseError
from .twisted import AlgebraConfig, TwistedElement

__all__ = [
    "Rational",
    "Zeta",
    "Var",
    "Neg",
    "Add",
    "Sub",
    "Mul",
    "Pow",
    "parse",
    "evaluate",
    "parse_element",
    "format_element",
    "format_coefficient",
]


@dataclass(frozen=True)
class Rational:
    p: int
    q: int = 1


@dataclass(frozen=True)
class Zeta:
    pass


@dataclass(frozen=True)
class Var:
    kind: str
    index: int


@dataclass(frozen=True)
class Neg:
    arg: "Node"


@dataclass(frozen=True)
class Add:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Sub:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Mul:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: int


Node = Union[Rational, Zeta, Var, Neg, Add, Sub, Mul, Pow]


# ---------------------------------------------------------------------------
# tokenizer
# ---------------------------------------------------------------------------

_SINGLE = set("+-*/^()")


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], i))
            i = j
        elif ch in _SINGLE:
            tokens.append((ch, ch, i))
            i += 1
        elif ch in "xyz":
            tokens.append((ch, ch, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, config):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.config = config

    def peek(self):
        return self.tokens[self.pos]

    def take(self, kind, what=None):
        tok = self.peek()
        if tok[0] != kind:
            found = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {what or repr(kind)}, found {found}", tok[2])
        self.pos += 1
        return tok

    def expr(self):
        node = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take(self.peek()[0])[0]
            rhs = self.term()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    def term(self):
        node = self.unary()
        while self.peek()[0] == "*":
            self.take("*")
            node = Mul(node, self.unary())
        return node

    def unary(self):
        if self.peek()[0] == "-":
            self.take("-")
            return Neg(self.unary())
        return self.factor()

    def factor(self):
        start = self.peek()[2]
        base = self.base()
        if self.peek()[0] == "^":
            self.take("^")
            sign = 1
            if self.peek()[0] == "-":
                self.take("-")
                sign = -1
            e = sign * int(self.take("int", "integer exponent")[1])
            if e < 0 and self.config is not None and not _is_unit_term(base, self.config):
                raise NonunitPow(
                    "negative power of a non-monomial; use the 'inv' command for series inverses",
                    start,
                )
            return Pow(base, e)
        return base

    def base(self):
        kind, value, at = self.peek()
        if kind == "int":
            self.take("int")
            q = 1
            if self.peek()[0] == "/":
                self.take("/")
                q = int(self.take("int", "denominator")[1])
                if q == 0:
                    raise ParseError("zero denominator", at)
            return Rational(int(value), q)
        if kind == "z":
            self.take("z")
            return Zeta()
        if kind in ("x", "y"):
            self.take(kind)
            idx_tok = self.take("int", f"index after {kind!r}")
            index = int(idx_tok[1])
            if self.config is not None and not 1 <= index <= self.config.r:
                raise BadIndex(f"{kind}{index} outside 1..{self.config.r}", at)
            return Var(kind, index)
        if kind == "(":
            self.take("(")
            node = self.expr()
            self.take(")", "')'")
            return node
        found = "end of input" if kind == "end" else repr(value)
        raise ParseError(f"expected number, 'z', variable or '(', found {found}", at)


def _is_unit_term(node, config) -> bool:
    f = evaluate(node, config)
    return f.is_monomial()


def parse(text: str, config: AlgebraConfig = None) -> Node:
    p = _Parser(text, config)
    node = p.expr()
    kind, value, at = p.peek()
    if kind != "end":
        raise ParseError(f"unexpected {value!r} after complete expression", at)
    return node


def evaluate(node: Node, config: AlgebraConfig) -> TwistedElement:
    """Evaluate an AST to an EXACT element."""
    if isinstance(node, Rational):
        return TwistedElement.constant(config, Fraction(node.p, node.q))
    if isinstance(node, Zeta):
        return TwistedElement.constant(config, CycNum.zeta(config.m))
    if isinstance(node, Var):
        if not 1 <= node.index <= config.r:
            raise BadIndex(f"{node.kind}{node.index} outside 1..{config.r}")
        return TwistedElement.generator(config, node.kind, node.index)
    if isinstance(node, Neg):
        return -evaluate(node.arg, config)
    if isinstance(node, Add):
        return evaluate(node.left, config) + evaluate(node.right, config)
    if isinstance(node, Sub):
        return evaluate(node.left, config) - evaluate(node.right, config)
    if isinstance(node, Mul):
        return evaluate(node.left, config) * evaluate(node.right, config)
    if isinstance(node, Pow):
        base = evaluate(node.base, config)
        if node.exponent < 0:
            if not base.is_monomial():
                raise NonunitPow("negative power of a non-monomial; use the 'inv' command")
            return base.monomial_inverse() ** (-node.exponent)
        return base ** node.exponent
    raise TypeError(f"not an expression node: {node!r}")


def parse_element(text: str, config: AlgebraConfig) -> TwistedElement:
    return evaluate(parse(text, config), config)


# ---------------------------------------------------------------------------
# canonical printing
# ---------------------------------------------------------------------------

def _frac(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_coefficient(c: CycNum) -> str:
    """Rationals bare, anything else as a parenthesised polynomial in z."""
    if c.is_rational():
        return _frac(c.coeffs[0])
    return f"({c.to_text()})"


def _monomial_text(config, alpha) -> str:
    parts = []
    for k, a in enumerate(alpha):
        if a == 0:
            continue
        name = config.generator_name(k)
        parts.append(name if a == 1 else f"{name}^{a}")
    return "*".join(parts)


def format_element(f: TwistedElement) -> str:
    """Canonical text, terms ascending in right-to-left lexicographic order."""
    pieces = []
    for alpha, c in f.sorted_terms():
        mono = _monomial_text(f.config, alpha)
        if c.is_rational():
            q = c.coeffs[0]
            sign = "-" if q < 0 else "+"
            mag = abs(q)
            if not mono:
                body = _frac(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{_frac(mag)}*{mono}"
        else:
            sign = "+"
            coeff = format_coefficient(c)
            body = f"{coeff}*{mono}" if mono else coeff
        pieces.append((sign, body))
    if not pieces:
        return "0"
    sign, body = pieces[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out
