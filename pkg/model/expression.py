# expression.py: recursive-descent parser for scalar entry strings
"""
Parser for matrix entries such as "1/2*z^3 + -1/2*z".

Grammar (whitespace insignificant):

    expr     := term (('+'|'-') term)*
    term     := rational ('*' zpow)? | zpow
    zpow     := 'z' '^' integer | 'z'
    rational := integer ('/' positive-integer)?
    integer  := '-'? digits

'z' is zeta_N for the file-level conductor N.
"""

from fractions import Fraction
from typing import List, Optional, Tuple

from model.cyclotomic import Cyclotomic
from model.utils.errors import ExpressionSyntaxError

_SYMBOLS = {'+', '-', '*', '/', '^', 'z'}
_DIGITS = frozenset('0123456789')


class ExpressionParser:
    """Parse one entry string into a Cyclotomic of the given conductor."""

    def __init__(self, text: str, conductor: int, path: Optional[str] = None):
        self.text = text
        self.conductor = conductor
        self.path = path
        self.tokens = self._tokenize(text)
        self.position = 0

    def _error(self, message: str, column: Optional[int] = None):
        if column is None:
            column = self._peek()[1]
        raise ExpressionSyntaxError(message, line=1, column=column, path=self.path)

    def _tokenize(self, text: str) -> List[Tuple[str, int]]:
        tokens = []
        i = 0
        while i < len(text):
            ch = text[i]
            if ch.isspace():
                i += 1
            elif ch in _DIGITS:
                start = i
                while i < len(text) and text[i] in _DIGITS:
                    i += 1
                tokens.append((text[start:i], start + 1))
            elif ch in _SYMBOLS:
                tokens.append((ch, i + 1))
                i += 1
            else:
                raise ExpressionSyntaxError(f"Unexpected character '{ch}'", line=1, column=i + 1, path=self.path)
        tokens.append(('', len(text) + 1))  # end marker
        return tokens

    def _peek(self) -> Tuple[str, int]:
        return self.tokens[self.position]

    def _advance(self) -> Tuple[str, int]:
        token = self.tokens[self.position]
        if token[0]:
            self.position += 1
        return token

    def _expect(self, symbol: str):
        token, column = self._peek()
        if token != symbol:
            self._error(f"Expected '{symbol}', found {token or 'end of input'!r}", column)
        self._advance()

    def parse(self) -> Cyclotomic:
        if len(self.tokens) == 1:
            self._error("Empty expression", 1)
        terms = [self._term()]
        while self._peek()[0] in ('+', '-'):
            sign = -1 if self._advance()[0] == '-' else 1
            coefficient, exponent = self._term()
            terms.append((sign * coefficient, exponent))
        token, column = self._peek()
        if token:
            self._error(f"Unexpected {token!r}", column)
        return Cyclotomic.canonicalize(self.conductor, terms)

    def _term(self) -> Tuple[Fraction, int]:
        if self._peek()[0] == 'z':
            return Fraction(1), self._zpow()
        coefficient = self._rational()
        if self._peek()[0] == '*':
            self._advance()
            return coefficient, self._zpow()
        return coefficient, 0

    def _zpow(self) -> int:
        self._expect('z')
        if self._peek()[0] == '^':
            self._advance()
            return self._integer()
        return 1

    def _rational(self) -> Fraction:
        numerator = self._integer()
        if self._peek()[0] == '/':
            self._advance()
            token, column = self._peek()
            if not _is_digits(token):
                self._error(f"Expected a positive integer denominator, found {token or 'end of input'!r}", column)
            self._advance()
            denominator = self._to_int(token, column)
            if denominator == 0:
                self._error("Denominator must be positive", column)
            return Fraction(numerator, denominator)
        return Fraction(numerator)

    def _integer(self) -> int:
        sign = 1
        if self._peek()[0] == '-':
            self._advance()
            sign = -1
        token, column = self._peek()
        if not _is_digits(token):
            self._error(f"Expected an integer, found {token or 'end of input'!r}", column)
        self._advance()
        return sign * self._to_int(token, column)

    def _to_int(self, token: str, column: int) -> int:
        try:
            return int(token)
        except ValueError:
            # int() caps the number of digits it converts
            self._error(f"Integer literal of {len(token)} digits is too long", column)


def _is_digits(token: str) -> bool:
    return bool(token) and all(ch in _DIGITS for ch in token)


def parse_expression(text: str, conductor: int, path: Optional[str] = None) -> Cyclotomic:
    """Parse an entry string; raises ExpressionSyntaxError with a 1-based column."""
    if not isinstance(text, str):
        raise ExpressionSyntaxError(f"Entry must be a string, got {type(text).__name__}", path=path)
    return ExpressionParser(text, conductor, path).parse()
