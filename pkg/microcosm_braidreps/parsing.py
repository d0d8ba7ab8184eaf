"""
Text input: Laurent polynomials in q, v, t and braid words.

Polynomial text is tokenized first so that unknown symbols and stray characters are reported
with their position; the validated text is then handed to sympy with q bound to v^2.

"""
import re
from tokenize import TokenError

from sympy import QQ, Poly, Symbol, cancel
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations
from sympy.polys.polyerrors import BasePolynomialError

from microcosm_braidreps.braids import BraidWord
from microcosm_braidreps.errors import ParseError
from microcosm_braidreps.ring import VARIABLES, LaurentPolynomial


SYMBOLS = ("q",) + VARIABLES

_TOKEN = re.compile(r"\s*(?:(?P<number>\d+)|(?P<name>[A-Za-z_]\w*)|(?P<operator>\*\*|[-+*/^()]))")
_WORD_TOKEN = re.compile(r"\S+")

_GENERATORS = tuple(Symbol(name) for name in VARIABLES)
_LOCALS = dict(zip(VARIABLES, _GENERATORS), q=_GENERATORS[0] ** 2)
_TRANSFORMATIONS = standard_transformations + (convert_xor,)


def _tokenize(text):
    position = 0
    tokens = []
    while position < len(text):
        if not text[position:].strip():
            break
        match = _TOKEN.match(text, position)
        if match is None:
            offending = position + len(text[position:]) - len(text[position:].lstrip())
            raise ParseError("unexpected character {!r}".format(text[offending]), text, offending)
        name = match.group("name")
        if name is not None and name not in SYMBOLS:
            raise ParseError("unknown symbol {!r}".format(name), text, match.start("name"))
        tokens.append(match.group(match.lastgroup))
        position = match.end()
    return tokens


def parse_poly(text):
    """
    Parse e.g. "1 + q + q^2", "v^-1 + v" or "-1" into a Laurent polynomial (q means v^2).

    :raises `ParseError` for unknown symbols, malformed expressions or non-Laurent results

    """
    if not _tokenize(text):
        raise ParseError("empty polynomial", text, 0)
    # leading whitespace would read as an indent
    indent = len(text) - len(text.lstrip())
    try:
        expression = parse_expr(text.strip(), local_dict=dict(_LOCALS), transformations=_TRANSFORMATIONS)
    except (SyntaxError, TokenError, TypeError) as error:
        offset = getattr(error, "offset", None)
        position = len(text) if offset is None else indent + max(offset - 1, 0)
        raise ParseError("malformed expression", text, position)

    try:
        numerator, denominator = cancel(expression).as_numer_denom()
        denominator = Poly(denominator, *_GENERATORS, domain=QQ)
        numerator = Poly(numerator, *_GENERATORS, domain=QQ)
    except (BasePolynomialError, AttributeError, ValueError, TypeError):
        raise ParseError("not a Laurent polynomial in {}".format(", ".join(SYMBOLS)), text, 0)

    denominator_terms = denominator.as_dict()
    if len(denominator_terms) != 1:
        raise ParseError("denominator {} is not a monomial".format(denominator.as_expr()), text, 0)
    [(shift, divisor)] = denominator_terms.items()
    divisor = QQ.from_sympy(divisor)
    return LaurentPolynomial({
        tuple(power - offset for power, offset in zip(exponent, shift)): QQ.from_sympy(coefficient) / divisor
        for exponent, coefficient in numerator.as_dict().items()
    })


def parse_poly_list(text):
    """
    Comma-separated polynomials, e.g. a lambda vector "1, 1, q".

    """
    values = []
    offset = 0
    for piece in text.split(","):
        try:
            values.append(parse_poly(piece))
        except ParseError as error:
            raise ParseError(error.message, text, offset + error.position)
        offset += len(piece) + 1
    return values


def parse_word(text, strands=None):
    """
    Whitespace-separated nonzero integers: "1 2 -1" is sigma_1 sigma_2 sigma_1^-1.

    Without `strands` the word lives on the fewest strands that hold its letters.

    """
    letters = []
    for match in _WORD_TOKEN.finditer(text):
        token = match.group()
        if not re.fullmatch(r"[-+]?\d+", token):
            raise ParseError("braid letters are nonzero integers, got {!r}".format(token), text, match.start())
        letter = int(token)
        if letter == 0:
            raise ParseError("braid letters are nonzero", text, match.start())
        letters.append(letter)
    if strands is None:
        strands = max([abs(letter) for letter in letters] + [1]) + 1
    return BraidWord(strands, letters)
