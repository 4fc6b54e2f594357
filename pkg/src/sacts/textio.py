"""Plain-text formats.

Monoid file::

    monoid <n> <identity>
    [labels <name> ...]
    <n rows of n indices>

Act file (the monoid path is relative to the act file)::

    act <m> <monoid-file>
    [labels <name> ...]
    <m rows of n indices>

Whitespace-separated decimal integers; ``#`` starts a comment.  Inline
objects: ``hom <m> : i0 i1 ...``, ``cong 0 0 1``, subacts as member lists.
"""

from __future__ import annotations

import os
import re
from typing import Iterator

from .congruences import Congruence, make_congruence
from .core import FiniteAct, FiniteMonoid, validate_act, validate_monoid
from .errors import ParseError, ValidationError
from .morphisms import ActHom, make_hom


def _tokens(text: str) -> Iterator[tuple[str, int, int]]:
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0]
        for m in re.finditer(r"\S+", line):
            yield m.group(), lineno, m.start() + 1


class _Reader:
    def __init__(self, text, path):
        self.toks = list(_tokens(text))
        self.i = 0
        self.path = path

    def error(self, msg, tok=None):
        if tok is None:
            tok = self.toks[self.i] if self.i < len(self.toks) else None
        if tok is None:
            return ParseError(msg + " (unexpected end of file)", self.path)
        return ParseError(msg, self.path, tok[1], tok[2])

    def peek(self):
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def word(self, what):
        if self.i >= len(self.toks):
            raise self.error(f"expected {what}")
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def keyword(self, kw):
        tok = self.word(f"'{kw}'")
        if tok[0] != kw:
            raise self.error(f"expected '{kw}', found {tok[0]!r}", tok)

    def int(self, what, lo=0, hi=None):
        tok = self.word(what)
        if not re.fullmatch(r"\d+", tok[0]):
            raise self.error(f"expected {what} (a non-negative integer), found {tok[0]!r}", tok)
        v = int(tok[0])
        if v < lo or (hi is not None and v >= hi):
            bound = f"{lo}..{hi - 1}" if hi is not None else f">= {lo}"
            raise self.error(f"{what} {v} out of range {bound}", tok)
        return v

    def labels(self, count):
        if self.peek() != "labels":
            return None
        self.i += 1
        return tuple(self.word("label")[0] for _ in range(count))

    def rows(self, nrows, ncols, bound, what):
        return [[self.int(f"{what} entry", 0, bound) for _ in range(ncols)] for _ in range(nrows)]

    def end(self):
        if self.i < len(self.toks):
            raise self.error(f"trailing input {self.toks[self.i][0]!r}")


def _validated(fn, reader, *args):
    try:
        return fn(*args)
    except ValidationError as exc:
        raise ParseError(str(exc), reader.path) from exc


def parse_monoid(text: str, path=None) -> FiniteMonoid:
    r = _Reader(text, path)
    r.keyword("monoid")
    n = r.int("monoid size", 1)
    e = r.int("identity", 0, n)
    labels = r.labels(n)
    table = r.rows(n, n, n, "table")
    r.end()
    return _validated(validate_monoid, r, table, e, labels)


def load_monoid(path) -> FiniteMonoid:
    with open(path) as fh:
        return parse_monoid(fh.read(), str(path))


def parse_act(text: str, path=None, monoid: FiniteMonoid | None = None) -> FiniteAct:
    r = _Reader(text, path)
    r.keyword("act")
    m = r.int("act size", 1)
    ref = r.word("monoid file")
    if monoid is None:
        base = os.path.dirname(path) if path else "."
        mpath = os.path.join(base, ref[0])
        try:
            monoid = load_monoid(mpath)
        except OSError as exc:
            raise r.error(f"cannot read monoid file {mpath}: {exc.strerror}", ref) from None
    labels = r.labels(m)
    rows = r.rows(m, monoid.size, m, "action")
    r.end()
    return _validated(validate_act, r, monoid, rows, labels)


def load_act(path) -> FiniteAct:
    with open(path) as fh:
        return parse_act(fh.read(), str(path))


def load_any(path):
    """A monoid or an act, depending on the header keyword."""
    with open(path) as fh:
        text = fh.read()
    first = next(_tokens(text), None)
    if first is None:
        raise ParseError("empty file", str(path))
    if first[0] == "monoid":
        return parse_monoid(text, str(path))
    if first[0] == "act":
        return parse_act(text, str(path))
    raise ParseError(f"expected 'monoid' or 'act', found {first[0]!r}", str(path), first[1], first[2])


def format_monoid(M: FiniteMonoid) -> str:
    lines = [f"monoid {M.size} {M.identity}"]
    if M.labels:
        lines.append("labels " + " ".join(M.labels))
    lines += [" ".join(map(str, row)) for row in M.table]
    return "\n".join(lines) + "\n"


def format_act(A: FiniteAct, monoid_file: str = "monoid.txt") -> str:
    lines = [f"act {A.size} {monoid_file}"]
    if A.labels:
        lines.append("labels " + " ".join(A.labels))
    lines += [" ".join(map(str, row)) for row in A.action]
    return "\n".join(lines) + "\n"


def parse_hom(text: str, source: FiniteAct, target: FiniteAct | None = None) -> ActHom:
    """``hom <m> : i0 ...``, ``i0 i1 ...`` or ``a:b`` pairs such as ``2:1 1:0 0:0``."""
    target = source if target is None else target
    s = text.strip()
    if s.startswith("hom"):
        m = re.fullmatch(r"hom\s+(\d+)\s*:\s*(.*)", s)
        if not m:
            raise ParseError(f"bad hom literal {text!r}")
        if int(m.group(1)) != source.size:
            raise ParseError(f"hom declares {m.group(1)} entries, source has {source.size}")
        s = m.group(2)
    if ":" in s:
        mapping = [None] * source.size
        for part in s.split():
            a, _, b = part.partition(":")
            if not (a.isdigit() and b.isdigit()):
                raise ParseError(f"bad pair {part!r} in hom {text!r}")
            a, b = int(a), int(b)
            if not 0 <= a < source.size:
                raise ParseError(f"{a} is not in the source carrier")
            mapping[a] = b
        if None in mapping:
            raise ParseError(f"hom {text!r} leaves element {mapping.index(None)} unmapped")
    else:
        parts = s.split()
        if not all(p.isdigit() for p in parts):
            raise ParseError(f"bad hom {text!r}")
        mapping = [int(p) for p in parts]
    return make_hom(source, target, mapping)


def format_hom(f: ActHom) -> str:
    return f"hom {len(f.map)} : " + " ".join(map(str, f.map))


def parse_congruence(text: str, act: FiniteAct) -> Congruence:
    parts = text.split()
    if parts and parts[0] == "cong":
        parts = parts[1:]
    if not all(p.isdigit() for p in parts):
        raise ParseError(f"bad congruence {text!r}")
    return make_congruence(act, [int(p) for p in parts])


def format_congruence(rho: Congruence) -> str:
    return "cong " + " ".join(map(str, rho.labels))


def format_subact(B) -> str:
    return " ".join(map(str, B.members))
