"""Plain-text grammars for states, operator words, matrices and weights.

States look like ``1/2 * E[1,3](-1) E[1,4](-1) |0> + h[1](-2) |0>``; words
like ``E[3,2](1) T E[4,2](1) T``.  Matrices and weights are JSON arrays, with
rational entries written as strings "p/q" or plain integers.  Parsers report
syntax errors with line and column; printing is canonical, so parse and
print round-trip.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction

from . import affine

_ZERO = Fraction(0)

_TOKEN_RE = re.compile(
    r"""
    (?P<gen>[Eh]\[\s*\d+\s*(?:,\s*\d+\s*)?\])
  | (?P<mode>\(\s*-?\d+\s*\))
  | (?P<vac>\|0>)
  | (?P<T>T(?![\w\[]))
  | (?P<num>-?\d+(?:/\d+)?)
  | (?P<star>\*)
  | (?P<plus>\+)
  | (?P<minus>-)
  | (?P<ws>\s+)
  | (?P<bad>.)
    """,
    re.VERBOSE,
)


class StateSyntaxError(ValueError):
    def __init__(self, message, text, pos):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.column = col


class UnknownGeneratorError(ValueError):
    pass


def _tokenize(text):
    out = []
    for m in _TOKEN_RE.finditer(text):
        kind = m.lastgroup
        if kind == "ws":
            continue
        if kind == "bad":
            raise StateSyntaxError(f"unexpected character {m.group()!r}", text, m.start())
        out.append((kind, m.group(), m.start()))
    return out


def _resolve_generator(alg, token, text, pos):
    inner = token[token.index("[") + 1 : -1]
    parts = [int(p) for p in inner.split(",")]
    if token[0] == "h":
        if len(parts) != 1:
            raise StateSyntaxError("h takes a single index", text, pos)
        key = ("h", parts[0])
    else:
        if len(parts) != 2:
            raise StateSyntaxError("E takes two indices", text, pos)
        key = ("E", parts[0], parts[1])
    if key not in alg.index:
        raise UnknownGeneratorError(f"{token} is not a generator of {alg.name}")
    return alg.index[key]


def parse_word(text, alg):
    """Operator word: generator modes and T, applied right to left."""
    word = []
    toks = _tokenize(text)
    i = 0
    while i < len(toks):
        kind, val, pos = toks[i]
        if kind == "T":
            word.append(affine.T_TOKEN)
            i += 1
        elif kind == "gen":
            if i + 1 >= len(toks) or toks[i + 1][0] != "mode":
                raise StateSyntaxError("generator needs a mode, e.g. E[1,2](0)", text, pos)
            idx = _resolve_generator(alg, val, text, pos)
            m = int(toks[i + 1][1].strip("() \t"))
            word.append((idx, m))
            i += 2
        else:
            raise StateSyntaxError(f"unexpected token {val!r} in word", text, pos)
    return word


def parse_state(text, alg, level=Fraction(1)):
    """Linear combination of mode monomials applied to the vacuum."""
    toks = _tokenize(text)
    if not toks:
        raise StateSyntaxError("empty state", text, 0)
    result = affine.State(alg, Fraction(level), {})
    i = 0
    first = True
    while i < len(toks):
        sign = Fraction(1)
        if not first:
            kind, val, pos = toks[i]
            if kind == "plus":
                i += 1
            elif kind == "minus":
                sign = Fraction(-1)
                i += 1
            else:
                raise StateSyntaxError("expected '+' or '-' between terms", text, pos)
        elif toks[i][0] == "minus":
            sign = Fraction(-1)
            i += 1
        first = False
        coef = sign
        if i < len(toks) and toks[i][0] == "num":
            coef *= Fraction(toks[i][1])
            i += 1
            if i < len(toks) and toks[i][0] == "star":
                i += 1
        pairs = []
        while i < len(toks) and toks[i][0] == "gen":
            kind, val, pos = toks[i]
            if i + 1 >= len(toks) or toks[i + 1][0] != "mode":
                raise StateSyntaxError("generator needs a mode, e.g. E[1,2](-1)", text, pos)
            idx = _resolve_generator(alg, val, text, pos)
            m = int(toks[i + 1][1].strip("() \t"))
            pairs.append((idx, m))
            i += 2
        if i >= len(toks) or toks[i][0] != "vac":
            pos = toks[i][2] if i < len(toks) else len(text)
            raise StateSyntaxError("term must end in |0>", text, pos)
        i += 1
        result = result + affine.monomial_state(alg, pairs, level).scale(coef)
    return result


def print_state(state):
    """Canonical text form; parse_state(print_state(s)) == s."""
    alg = state.algebra
    if state.is_zero():
        return "0 * |0>"
    parts = []
    for mono in sorted(state.terms):
        c = state.terms[mono]
        body = " ".join(f"{alg.label(x)}({m})" for m, x in mono)
        term = f"{c} * {body} |0>" if body else f"{c} * |0>"
        parts.append(term)
    return " + ".join(parts)


def print_word(word, alg):
    parts = []
    for tok in word:
        if tok == affine.T_TOKEN:
            parts.append("T")
        else:
            idx, m = tok
            parts.append(f"{alg.label(idx)}({m})")
    return " ".join(parts)


def parse_matrix(text):
    """JSON array of arrays; entries integers or rational strings "p/q"."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StateSyntaxError(f"invalid JSON: {exc.msg}", text, exc.pos) from exc
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise ValueError("matrix must be an array of arrays")
    return [[Fraction(str(x)) for x in row] for row in data]


def print_matrix(m):
    return json.dumps([[str(x) for x in row] for row in m])


def parse_weight(text):
    """JSON array of integers."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StateSyntaxError(f"invalid JSON: {exc.msg}", text, exc.pos) from exc
    if not isinstance(data, list) or not all(isinstance(x, int) for x in data):
        raise ValueError("weight must be an array of integers")
    return data


def print_weight(w):
    return json.dumps(list(w))
