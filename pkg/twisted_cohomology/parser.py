# -*- coding: utf-8 -*-

"""Text syntax for polynomials and differential forms.

Polynomials
    Signed terms such as ``3*x^2*y - 1/2*y^3``. Coefficients are integers or
    integer fractions ``a/b``; ``*`` is optional between factors and ``^1``
    may be left out. Parentheses group subexpressions. Whitespace is ignored.
    A run of letters such as ``xy`` is split into known variable names.

Forms
    The same grammar with the basis 1-forms ``dx``, ``dy``, ... for the
    variables. ``^`` between two factors that are not an exponent is the
    wedge product, so ``(x^2+y^2)*dx^dy`` is a 2-form and ``x dy - y dx`` a
    1-form.

Errors report the byte offset (in UTF-8) where parsing failed.
"""

from fractions import Fraction
import logging
import re

from .errors import ExponentOverflowError, ParseError, UnknownVariableError
from .forms import DifferentialForm, wedge
from .polynomial import Polynomial

logger = logging.getLogger(__name__)

MAX_EXPONENT = 10000

_TOKEN = re.compile(
    r"\s*(?:(?P<number>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^()]))"
)


def _tokenize(text):
    """Split text into (kind, value, byte offset) tuples ending with 'end'."""
    tokens = []
    position = 0
    length = len(text)
    while position < length:
        if text[position:].strip() == "":
            break
        match = _TOKEN.match(text, position)
        if match is None or match.end() == position:
            start = position + len(text[position:]) - len(text[position:].lstrip())
            raise ParseError(
                f"Unexpected character {text[start]!r}", _byte_offset(text, start), text
            )
        kind = match.lastgroup
        start = match.start(kind)
        tokens.append((kind, match.group(kind), _byte_offset(text, start)))
        position = match.end()
    tokens.append(("end", None, len(text.encode("utf-8"))))
    return tokens


def _byte_offset(text, index):
    return len(text[:index].encode("utf-8"))


def split_name(name, names):
    """Split a run of letters into known names, longest match first.

    Returns
    -------
    [int] or None
        The variable indices, or None if the run cannot be split.
    """
    if name in names:
        return [names.index(name)]
    ordered = sorted(set(names), key=len, reverse=True)

    def walk(rest):
        if rest == "":
            return []
        for candidate in ordered:
            if rest.startswith(candidate):
                tail = walk(rest[len(candidate):])
                if tail is not None:
                    return [names.index(candidate)] + tail
        return None

    return walk(name)


class _Parser:
    """Recursive-descent parser over the token list.

    Values are Polynomials until a basis 1-form appears, after which they
    are DifferentialForms.
    """

    def __init__(self, text, names, forms):
        self.text = text
        self.names = list(names)
        self.nvars = len(self.names)
        self.forms = forms
        self.tokens = _tokenize(text)
        self.index = 0

    # Token helpers

    @property
    def current(self):
        return self.tokens[self.index]

    def peek(self, offset=1):
        index = min(self.index + offset, len(self.tokens) - 1)
        return self.tokens[index]

    def advance(self):
        token = self.tokens[self.index]
        if token[0] != "end":
            self.index += 1
        return token

    def error(self, message, token=None, cls=ParseError):
        token = token or self.current
        return cls(message, token[2], self.text)

    def expect_op(self, op):
        token = self.current
        if token[0] != "op" or token[1] != op:
            raise self.error(f"Expected '{op}'")
        return self.advance()

    # Value helpers

    def _as_form(self, value):
        if isinstance(value, Polynomial):
            return DifferentialForm.from_function(value)
        return value

    def add(self, a, b, token):
        if isinstance(a, Polynomial) and isinstance(b, Polynomial):
            return a + b
        a = self._as_form(a)
        b = self._as_form(b)
        if a.degree != b.degree:
            if a.is_zero():
                return b
            if b.is_zero():
                return a
            raise self.error(
                f"Cannot add forms of degree {a.degree} and {b.degree}", token
            )
        return a + b

    def multiply(self, a, b):
        if isinstance(a, Polynomial) and isinstance(b, Polynomial):
            return a * b
        if isinstance(a, Polynomial):
            return b.scale(a)
        if isinstance(b, Polynomial):
            return a.scale(b)
        return wedge(a, b)

    # Grammar

    def parse(self):
        value = self.expression()
        if self.current[0] != "end":
            raise self.error(f"Unexpected '{self.current[1]}'")
        return value

    def expression(self):
        value = self.signed_term()
        while self.current[0] == "op" and self.current[1] in "+-":
            token = self.advance()
            term = self.signed_term()
            if token[1] == "-":
                term = -term
            value = self.add(value, term, token)
        return value

    def signed_term(self):
        negative = False
        while self.current[0] == "op" and self.current[1] in "+-":
            if self.advance()[1] == "-":
                negative = not negative
        value = self.term()
        return -value if negative else value

    def _starts_factor(self, token):
        return token[0] in ("number", "name") or token[:2] == ("op", "(")

    def term(self):
        value = self.factor()
        while True:
            token = self.current
            if token[:2] == ("op", "*"):
                self.advance()
                value = self.multiply(value, self.factor())
            elif token[:2] == ("op", "^"):
                # An exponent would have been consumed by factor()
                if not self.forms:
                    raise self.error("Expected an exponent after '^'", self.peek())
                self.advance()
                right = self.factor()
                value = wedge(self._as_form(value), self._as_form(right))
            elif self._starts_factor(token):
                value = self.multiply(value, self.factor())
            else:
                return value

    def factor(self):
        value = self.atom()
        while self.current[:2] == ("op", "^") and self.peek()[0] == "number":
            self.advance()
            token = self.advance()
            exponent = int(token[1])
            if exponent > MAX_EXPONENT:
                raise self.error(
                    f"Exponent {exponent} exceeds the limit of {MAX_EXPONENT}",
                    token,
                    ExponentOverflowError,
                )
            if not isinstance(value, Polynomial):
                if value.degree > 0:
                    raise self.error("Only functions can be raised to a power", token)
                value = value.function
            value = value**exponent
        return value

    def atom(self):
        token = self.current
        kind, text, _ = token
        if kind == "number":
            self.advance()
            value = Fraction(int(text))
            if self.current[:2] == ("op", "/"):
                self.advance()
                denominator = self.current
                if denominator[0] != "number":
                    raise self.error("Expected an integer denominator")
                self.advance()
                if int(denominator[1]) == 0:
                    raise self.error("Division by zero", denominator)
                value = value / int(denominator[1])
            return Polynomial.constant(value, self.nvars)
        if kind == "name":
            self.advance()
            return self.resolve(text, token)
        if token[:2] == ("op", "("):
            self.advance()
            value = self.expression()
            self.expect_op(")")
            return value
        if kind == "end":
            raise self.error("Unexpected end of input")
        raise self.error(f"Unexpected '{text}'")

    def resolve(self, name, token):
        if self.forms and name.startswith("d") and name[1:] in self.names:
            return DifferentialForm.differential(self.names.index(name[1:]), self.nvars)
        indices = split_name(name, self.names)
        if indices is None:
            raise self.error(f"Unknown variable '{name}'", token, UnknownVariableError)
        value = Polynomial.one(self.nvars)
        for i in indices:
            value = value * Polynomial.variable(i, self.nvars)
        return value


def _check_names(names):
    names = list(names)
    if not names:
        raise ParseError("At least one variable name is needed")
    if len(set(names)) != len(names):
        raise ParseError(f"Variable names must be distinct: {names}")
    return names


def parse_poly(text, names):
    """Parse a polynomial in the given variables.

    Parameters
    ----------
    text : str
        The expression, e.g. "x^2 + y^2".
    names : [str]
        The variable names, in order.

    Returns
    -------
    Polynomial
    """
    names = _check_names(names)
    value = _Parser(text, names, forms=False).parse()
    logger.debug(f"parsed '{text}' -> {value}")
    return value


def parse_form(text, names):
    """Parse a differential form such as ``(x^2+y^2)*dx^dy``.

    A plain polynomial parses to a 0-form.
    """
    names = _check_names(names)
    value = _Parser(text, names, forms=True).parse()
    if isinstance(value, Polynomial):
        value = DifferentialForm.from_function(value)
    logger.debug(f"parsed form '{text}' -> {value}")
    return value


def format_poly(polynomial, names=None):
    return polynomial.to_string(names)


def format_form(form, names=None):
    return form.to_string(names)
