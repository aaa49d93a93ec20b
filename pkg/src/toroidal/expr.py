"""Tiny recursive-descent parser for arithmetic expressions.

Values only need ``+ - * /`` and integer powers; atoms are supplied by the
caller, so the same grammar parses scalars, Laurent polynomials and
quantum-torus elements.
"""
import re

__all__ = ["ParseError", "parse_expression"]

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\*\*|[-+*/^()]))")


class ParseError(ValueError):
    pass


def tokenize(text):
    tokens, pos = [], 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError("bad character at %d in %r" % (pos, text))
        tokens.append(m.group(1) or m.group(2) or m.group(3))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return tokens


def parse_expression(text, atoms, const):
    """Evaluate ``text`` with ``atoms[name]`` for symbols and ``const(int)``."""
    tokens = tokenize(text)
    if not tokens:
        raise ParseError("empty expression")
    i = 0

    def peek():
        return tokens[i] if i < len(tokens) else None

    def take():
        nonlocal i
        if i >= len(tokens):
            raise ParseError("unexpected end of %r" % text)
        i += 1
        return tokens[i - 1]

    def integer():
        sign = 1
        while peek() in ("-", "+"):
            if take() == "-":
                sign = -sign
        if peek() == "(":
            take()
            v = integer()
            if take() != ")":
                raise ParseError("expected ')' in exponent")
            return sign * v
        t = take()
        if not t.isdigit():
            raise ParseError("expected integer exponent, got %r" % t)
        return sign * int(t)

    def atom():
        t = take()
        if t == "(":
            v = expr()
            if take() != ")":
                raise ParseError("expected ')'")
        elif t.isdigit():
            v = const(int(t))
        elif t in atoms:
            v = atoms[t]
        else:
            raise ParseError("unknown symbol %r" % t)
        if peek() in ("^", "**"):
            take()
            v = v ** integer()
        return v

    def unary():
        if peek() == "-":
            take()
            return -unary()
        if peek() == "+":
            take()
            return unary()
        return atom()

    def term():
        v = unary()
        while peek() in ("*", "/"):
            if take() == "*":
                v = v * unary()
            else:
                v = v / unary()
        return v

    def expr():
        v = term()
        while peek() in ("+", "-"):
            if take() == "+":
                v = v + term()
            else:
                v = v - term()
        return v

    value = expr()
    if i != len(tokens):
        raise ParseError("trailing input in %r" % text)
    return value
