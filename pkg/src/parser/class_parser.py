"""
Parser for motivic class expressions such as "(P^1)^2 - A^2"

Grammar:
    expr    := term (('+' | '-') term)*
    term    := unary ('*' unary)*
    unary   := '-' unary | power
    power   := primary ('^' uint)?
    primary := uint | 'L' | 'pt' | 'A' '^' uint | 'P' '^' uint | '(' expr ')'

'^' binds tighter than unary '-', which binds tighter than '*'. A power may
not be raised again ("L^2^3" is rejected). Error offsets are 1-based bytes.
Evaluation rejects any '^' or '*' whose result has degree above MAX_DEGREE.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Tuple, Union

from src.series.lefschetz import LefschetzPoly, format_poly


logger = logging.getLogger(__name__)

MAX_EXPONENT = 4096
MAX_NESTING = 100
MAX_LITERAL_DIGITS = 4000
MAX_DEGREE = 4096


# Errors

class ClassParseError(ValueError):
    """Base class for every parse failure"""
    category = "parse_error"

    def __init__(self, message: str, offset: int):
        self.message = message
        self.offset = offset
        super().__init__(f"{message} at byte {offset}")


class UnexpectedTokenError(ClassParseError):
    category = "unexpected_token"


class UnbalancedParenthesesError(ClassParseError):
    category = "unbalanced_parentheses"


class InvalidExponentError(ClassParseError):
    category = "invalid_exponent"


class EmptyInputError(ClassParseError):
    category = "empty_input"


class NestingTooDeepError(ClassParseError):
    category = "nesting_too_deep"


class DegreeTooLargeError(InvalidExponentError):
    """A '^' or '*' whose result would exceed MAX_DEGREE; reported at that operator"""


# AST

class SymbolKind(str, Enum):
    LEFSCHETZ = "L"
    POINT = "pt"
    AFFINE = "A"
    PROJECTIVE = "P"


@dataclass(frozen=True)
class IntLiteral:
    value: int


@dataclass(frozen=True)
class Symbol:
    kind: SymbolKind
    n: int = 0


@dataclass(frozen=True)
class Neg:
    operand: "ClassExpr"


@dataclass(frozen=True)
class Add:
    left: "ClassExpr"
    right: "ClassExpr"


@dataclass(frozen=True)
class Sub:
    left: "ClassExpr"
    right: "ClassExpr"


@dataclass(frozen=True)
class Mul:
    left: "ClassExpr"
    right: "ClassExpr"
    offset: int = field(default=0, compare=False)  # byte offset of the '*'


@dataclass(frozen=True)
class Pow:
    base: "ClassExpr"
    exponent: int
    offset: int = field(default=0, compare=False)  # byte offset of the '^'


ClassExpr = Union[IntLiteral, Symbol, Neg, Add, Sub, Mul, Pow]


# Tokenizer

class TokenKind(str, Enum):
    INT = "integer"
    DECIMAL = "decimal"
    IDENT = "identifier"
    OP = "operator"
    END = "end of input"


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    offset: int  # 1-based byte offset


IDENTIFIERS = {"L", "pt", "A", "P"}
OPERATORS = set("+-*^()")


def tokenize(source: str) -> List[Token]:
    """Split an expression into tokens with byte offsets"""
    tokens: List[Token] = []
    # byte_offsets[i] is the 1-based byte offset of character i
    byte_offsets = []
    position = 1
    for char in source:
        byte_offsets.append(position)
        position += len(char.encode("utf-8", errors="surrogatepass"))
    byte_offsets.append(position)

    i = 0
    while i < len(source):
        char = source[i]
        if char.isspace():
            i += 1
            continue
        start = i
        if "0" <= char <= "9":
            while i < len(source) and "0" <= source[i] <= "9":
                i += 1
            kind = TokenKind.INT
            if i + 1 < len(source) and source[i] == "." and "0" <= source[i + 1] <= "9":
                i += 1
                while i < len(source) and "0" <= source[i] <= "9":
                    i += 1
                kind = TokenKind.DECIMAL
            tokens.append(Token(kind, source[start:i], byte_offsets[start]))
            continue
        if ("a" <= char <= "z") or ("A" <= char <= "Z"):
            while i < len(source) and (("a" <= source[i] <= "z") or ("A" <= source[i] <= "Z")):
                i += 1
            word = source[start:i]
            if word not in IDENTIFIERS:
                raise UnexpectedTokenError(f"Unknown symbol '{word}'", byte_offsets[start])
            tokens.append(Token(TokenKind.IDENT, word, byte_offsets[start]))
            continue
        if char in OPERATORS:
            tokens.append(Token(TokenKind.OP, char, byte_offsets[start]))
            i += 1
            continue
        raise UnexpectedTokenError(f"Unexpected character {char!r}", byte_offsets[start])
    tokens.append(Token(TokenKind.END, "", byte_offsets[len(source)]))
    return tokens


# Parser

class _Parser:
    """Recursive-descent parser over a token list"""

    def __init__(self, tokens: List[Token]):
        self.tokens = tokens
        self.index = 0
        self.depth = 0
        self.open_parens: List[Token] = []

    def peek(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.tokens[self.index]
        if token.kind is not TokenKind.END:
            self.index += 1
        return token

    def at_op(self, symbol: str) -> bool:
        token = self.peek()
        return token.kind is TokenKind.OP and token.text == symbol

    def parse(self) -> ClassExpr:
        if self.peek().kind is TokenKind.END:
            raise EmptyInputError("Empty expression", self.peek().offset)
        expr = self.expr()
        token = self.peek()
        if token.kind is not TokenKind.END:
            if token.text == ")":
                raise UnbalancedParenthesesError("Unmatched ')'", token.offset)
            raise UnexpectedTokenError(f"Unexpected {token.kind.value} '{token.text}'", token.offset)
        return expr

    def expr(self) -> ClassExpr:
        left = self.term()
        while self.at_op("+") or self.at_op("-"):
            op = self.advance().text
            right = self.term()
            left = Add(left, right) if op == "+" else Sub(left, right)
        return left

    def term(self) -> ClassExpr:
        left = self.unary()
        while self.at_op("*"):
            operator = self.advance()
            left = Mul(left, self.unary(), operator.offset)
        return left

    def unary(self) -> ClassExpr:
        if self.at_op("-"):
            token = self.advance()
            self._enter(token)
            try:
                return Neg(self.unary())
            finally:
                self.depth -= 1
        return self.power()

    def power(self) -> ClassExpr:
        base, raised = self.primary()
        if self.at_op("^"):
            if raised:
                raise UnexpectedTokenError("Chained '^' is not allowed", self.peek().offset)
            caret = self.advance()
            base = Pow(base, self.exponent(), caret.offset)
        if self.at_op("^"):
            raise UnexpectedTokenError("Chained '^' is not allowed", self.peek().offset)
        return base

    def exponent(self) -> int:
        token = self.peek()
        if token.kind is TokenKind.INT:
            self.advance()
            if len(token.text.lstrip("0")) > len(str(MAX_EXPONENT)):
                raise InvalidExponentError(f"Exponent exceeds {MAX_EXPONENT}", token.offset)
            value = int(token.text)
            if value > MAX_EXPONENT:
                raise InvalidExponentError(f"Exponent {value} exceeds {MAX_EXPONENT}", token.offset)
            return value
        if token.kind is TokenKind.OP and token.text == "-":
            raise InvalidExponentError("Negative exponent", token.offset)
        if token.kind is TokenKind.END:
            raise InvalidExponentError("Missing exponent", token.offset)
        raise InvalidExponentError(f"Exponent must be a non-negative integer, got '{token.text}'",
                                   token.offset)

    def primary(self) -> Tuple[ClassExpr, bool]:
        """Returns the node and whether it already consumed a '^'"""
        token = self.advance()
        if token.kind is TokenKind.INT:
            if len(token.text) > MAX_LITERAL_DIGITS:
                raise UnexpectedTokenError(
                    f"Integer literal longer than {MAX_LITERAL_DIGITS} digits", token.offset
                )
            return IntLiteral(int(token.text)), False
        if token.kind is TokenKind.DECIMAL:
            raise UnexpectedTokenError(f"Non-integer literal '{token.text}'", token.offset)
        if token.kind is TokenKind.IDENT:
            if token.text == "L":
                return Symbol(SymbolKind.LEFSCHETZ), False
            if token.text == "pt":
                return Symbol(SymbolKind.POINT), False
            kind = SymbolKind.AFFINE if token.text == "A" else SymbolKind.PROJECTIVE
            if not self.at_op("^"):
                raise UnexpectedTokenError(f"'{token.text}' must be followed by '^n'", self.peek().offset)
            self.advance()
            return Symbol(kind, self.exponent()), True
        if token.kind is TokenKind.OP and token.text == "(":
            self._enter(token)
            self.open_parens.append(token)
            inner = self.expr()
            if not self.at_op(")"):
                closing = self.peek()
                if closing.kind is TokenKind.END:
                    raise UnbalancedParenthesesError("Unclosed '('", token.offset)
                raise UnexpectedTokenError(f"Expected ')' but found '{closing.text}'", closing.offset)
            self.advance()
            self.open_parens.pop()
            self.depth -= 1
            return inner, False
        if token.kind is TokenKind.OP and token.text == ")":
            raise UnbalancedParenthesesError("Unmatched ')'", token.offset)
        if token.kind is TokenKind.END:
            if self.open_parens:
                raise UnbalancedParenthesesError("Unclosed '('", self.open_parens[-1].offset)
            raise UnexpectedTokenError("Unexpected end of input", token.offset)
        raise UnexpectedTokenError(f"Unexpected {token.kind.value} '{token.text}'", token.offset)

    def _enter(self, token: Token) -> None:
        self.depth += 1
        if self.depth > MAX_NESTING:
            raise NestingTooDeepError(f"Expression nested deeper than {MAX_NESTING}", token.offset)


def parse(source: Union[str, bytes]) -> ClassExpr:
    """
    Parse a class expression

    Args:
        source: Expression text (bytes are decoded as UTF-8)

    Returns:
        ClassExpr abstract syntax tree

    Raises:
        ClassParseError: One of its subclasses, carrying a 1-based byte offset
    """
    if isinstance(source, bytes):
        try:
            source = source.decode("utf-8")
        except UnicodeDecodeError as e:
            raise UnexpectedTokenError("Input is not valid UTF-8", e.start + 1)
    tree = _Parser(tokenize(source)).parse()
    logger.debug(f"Parsed class expression of {len(source)} characters")
    return tree


def _children(expr: ClassExpr) -> Tuple[ClassExpr, ...]:
    if isinstance(expr, Neg):
        return (expr.operand,)
    if isinstance(expr, Pow):
        return (expr.base,)
    if isinstance(expr, (Add, Sub, Mul)):
        return (expr.left, expr.right)
    raise TypeError(f"Not a class expression: {type(expr).__name__}")


def _symbol_value(symbol: Symbol) -> LefschetzPoly:
    if symbol.kind is SymbolKind.LEFSCHETZ:
        return LefschetzPoly.lefschetz()
    if symbol.kind is SymbolKind.POINT:
        return LefschetzPoly.one()
    if symbol.kind is SymbolKind.AFFINE:
        return LefschetzPoly.affine(symbol.n)
    return LefschetzPoly.projective(symbol.n)


def _check_degree(degree: int, offset: int) -> None:
    if degree > MAX_DEGREE:
        raise DegreeTooLargeError(f"Result degree {degree} exceeds {MAX_DEGREE}", offset)


def _apply(expr: ClassExpr, values: List[LefschetzPoly]) -> LefschetzPoly:
    """Combine the already evaluated operands on top of the value stack"""
    if isinstance(expr, Neg):
        return -values.pop()
    if isinstance(expr, Pow):
        base = values.pop()
        if expr.exponent and not base.is_zero():
            _check_degree(base.degree * expr.exponent, expr.offset)
        return base ** expr.exponent
    right = values.pop()
    left = values.pop()
    if isinstance(expr, Add):
        return left + right
    if isinstance(expr, Sub):
        return left - right
    if not (left.is_zero() or right.is_zero()):
        _check_degree(left.degree + right.degree, expr.offset)
    return left * right


def eval_expr(expr: ClassExpr) -> LefschetzPoly:
    """
    Evaluate an expression in Z[L]

    Walks the tree with an explicit stack, so long chains of '+' or '*' do not
    hit the interpreter's recursion limit.

    Raises:
        DegreeTooLargeError: If a '^' or '*' would produce a degree above MAX_DEGREE
    """
    values: List[LefschetzPoly] = []
    pending: List[Tuple[ClassExpr, bool]] = [(expr, False)]
    while pending:
        node, operands_ready = pending.pop()
        if isinstance(node, IntLiteral):
            values.append(LefschetzPoly.constant(node.value))
        elif isinstance(node, Symbol):
            values.append(_symbol_value(node))
        elif operands_ready:
            values.append(_apply(node, values))
        else:
            pending.append((node, True))
            # leftmost operand is popped, and therefore evaluated, first
            pending.extend((child, False) for child in reversed(_children(node)))
    return values.pop()


def parse_class(source: Union[str, bytes]) -> LefschetzPoly:
    """Parse and evaluate in one step"""
    return eval_expr(parse(source))


def render(p: LefschetzPoly) -> str:
    """Canonical text of a class; parses back to the same polynomial"""
    return format_poly(p)


def describe_error(error: ClassParseError, source: Optional[str] = None) -> str:
    """One-line message for the command line"""
    text = f"parse error ({error.category}): {error}"
    if source is not None:
        text += f" in {source!r}"
    return text
