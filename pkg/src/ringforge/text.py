"""Bracket-aware text helpers used by element and spec parsers."""

from .errors import ParseError

_OPEN = "([{"
_CLOSE = ")]}"


def split_top(text, sep):
    """Split ``text`` on ``sep`` occurrences that sit outside any brackets."""
    parts, depth, start = [], 0, 0
    i = 0
    while i < len(text):
        ch = text[i]
        if ch in _OPEN:
            depth += 1
        elif ch in _CLOSE:
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced brackets in {text!r}")
        elif depth == 0 and text.startswith(sep, i):
            parts.append(text[start:i])
            i += len(sep)
            start = i
            continue
        i += 1
    if depth != 0:
        raise ParseError(f"unbalanced brackets in {text!r}")
    parts.append(text[start:])
    return parts


def strip_wrapping(text, open_ch="(", close_ch=")"):
    """Remove one pair of brackets if they enclose the whole string."""
    text = text.strip()
    if not (text.startswith(open_ch) and text.endswith(close_ch)):
        return None
    depth = 0
    for i, ch in enumerate(text):
        if ch in _OPEN:
            depth += 1
        elif ch in _CLOSE:
            depth -= 1
            if depth == 0 and i != len(text) - 1:
                return None
    return text[1:-1]


def poly_terms(text, var):
    """Parse ``c0 + c1*x + x^2`` into ``{exponent: [coefficient text or None]}``.

    A ``None`` coefficient stands for the identity.
    """
    text = text.strip()
    if not text:
        raise ParseError("empty polynomial")
    terms = {}
    for raw in split_top(text, "+"):
        term = raw.strip()
        if not term:
            raise ParseError(f"empty term in {text!r}")
        pieces = split_top(term, "*")
        tail = pieces[-1].strip()
        exponent = _monomial_exponent(tail, var)
        if exponent is None:
            coef, exponent = term, 0
        elif len(pieces) == 1:
            coef = None
        else:
            coef = "*".join(pieces[:-1]).strip()
        terms.setdefault(exponent, []).append(coef)
    return terms


def _monomial_exponent(tail, var):
    if tail == var:
        return 1
    if tail.startswith(var + "^"):
        digits = tail[len(var) + 1:]
        if digits.isdigit():
            return int(digits)
        raise ParseError(f"bad exponent in {tail!r}")
    return None
