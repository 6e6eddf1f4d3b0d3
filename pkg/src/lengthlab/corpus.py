"""The corpus language: one group per line.

::

    # comment
    group NAME = EXPR [with automorphism AUT] [expect KEY=VALUE {, KEY=VALUE}] [tags WORD ...]

``EXPR`` is a constructor call (``symmetric(5)``, ``wreath(alternating(5), cyclic(2))``,
``psl2(GF(32))``, ``perm_group("(0 1 2)", "(0 1)")``); ``AUT`` is ``frobenius()``,
``frobenius(k)``, ``perm("(1 4)(2 3)")`` or ``inner("(0 1)(2 3)")``. ``VALUE`` is an
integer or a bracketed integer list.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

from . import constructions as C
from .coprime import CoprimeAction, make_action
from .errors import CorpusSyntaxError, LengthLabError
from .group import PermGroup
from .perm import Permutation

_TOKEN = re.compile(
    r"""(?P<ws>[ \t]+)|(?P<comment>\#.*)|(?P<str>"[^"\n]*")|(?P<int>\d+)|
        (?P<name>[A-Za-z_][A-Za-z0-9_.\-]*)|(?P<punct>[()\[\],=])""",
    re.VERBOSE,
)

KEYWORDS = {"group", "with", "automorphism", "expect", "tags"}

# name -> (min args, max args, argument kinds); kinds: int, group, field, str
CONSTRUCTORS = {
    "cyclic": (1, 1, "int"),
    "symmetric": (1, 1, "int"),
    "alternating": (1, 1, "int"),
    "dihedral": (1, 1, "int"),
    "direct": (2, None, "group"),
    "wreath": (2, 2, "group"),
    "psl2": (1, 1, "field"),
    "agl1": (1, 1, "field"),
    "gl2_vectors": (1, 1, "field"),
    "sl2_vectors": (1, 1, "field"),
    "perm_group": (0, None, "str"),
}
AUTOMORPHISMS = {
    "frobenius": (0, 1, "int"),
    "perm": (1, 1, "str"),
    "inner": (1, 1, "str"),
}
FIELD_GROUPS = {"psl2": "psl2", "agl1": "agl1", "gl2_vectors": "gl2", "sl2_vectors": "sl2"}

EXPECT_KEYS = {
    "order", "radical", "fitting", "fstar", "layer", "components", "h", "hstar", "lambda",
    "fixed", "coprime", "depth", "chief",
}


@dataclass
class Call:
    name: str
    args: list
    line: int
    column: int

    def __str__(self):
        return f"{self.name}({', '.join(_fmt(a) for a in self.args)})"


def _fmt(a):
    return f'"{a}"' if isinstance(a, str) else str(a)


@dataclass
class CorpusEntry:
    name: str
    construction: Call
    action: Call | None = None
    expected: dict = field(default_factory=dict)
    tags: list[str] = field(default_factory=list)
    line: int = 0

    @property
    def expect_coprime(self) -> bool | None:
        v = self.expected.get("coprime")
        return None if v is None else bool(v)


class _Tokens:
    def __init__(self, text: str, line: int, source: str):
        self.line = line
        self.source = source
        self.toks = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None:
                raise CorpusSyntaxError(f"unexpected character {text[pos]!r}", line, pos + 1, source)
            kind = m.lastgroup
            if kind not in ("ws", "comment"):
                self.toks.append((kind, m.group(), pos + 1))
            pos = m.end()
        self.i = 0
        self.end_col = len(text) + 1

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None, self.end_col)

    def next(self):
        tok = self.peek()
        self.i += 1
        return tok

    def error(self, msg, col=None):
        return CorpusSyntaxError(msg, self.line, col if col is not None else self.peek()[2], self.source)

    def expect(self, value, what=None):
        kind, text, col = self.next()
        if text != value:
            raise CorpusSyntaxError(f"expected {what or repr(value)}, found {text or 'end of line'!r}",
                                    self.line, col, self.source)
        return col

    def at(self, value):
        return self.peek()[1] == value


def _parse_value(t: _Tokens):
    kind, text, col = t.next()
    if kind == "int":
        return int(text)
    if kind == "str":
        return text[1:-1]
    if kind == "name":
        if t.at("("):
            return _parse_call(t, text, col)
        raise t.error(f"expected a call, found bare name {text!r}", col)
    raise t.error(f"expected an argument, found {text or 'end of line'!r}", col)


def _parse_call(t: _Tokens, name, col) -> Call:
    t.expect("(")
    args = []
    if not t.at(")"):
        args.append(_parse_value(t))
        while t.at(","):
            t.next()
            args.append(_parse_value(t))
    t.expect(")", "',' or ')'")
    return Call(name, args, t.line, col)


def _check_field_arg(t, call, a):
    if isinstance(a, int):
        return
    if isinstance(a, Call) and a.name == "GF":
        if not (1 <= len(a.args) <= 2) or not isinstance(a.args[0], int) or (
                len(a.args) == 2 and not isinstance(a.args[1], str)):
            raise CorpusSyntaxError("GF expects GF(q) or GF(q, \"polynomial\")", a.line, a.column, t.source)
        return
    raise CorpusSyntaxError(f"{call.name} expects a field size or GF(...)", call.line, call.column, t.source)


def _check_call(t: _Tokens, call: Call, table: dict, what: str):
    if call.name not in table:
        raise CorpusSyntaxError(f"unknown {what} {call.name!r}", call.line, call.column, t.source)
    lo, hi, kind = table[call.name]
    n = len(call.args)
    if n < lo or (hi is not None and n > hi):
        want = str(lo) if lo == hi else (f"at least {lo}" if hi is None else f"{lo} to {hi}")
        raise CorpusSyntaxError(f"{call.name} takes {want} argument(s), got {n}", call.line, call.column,
                                t.source)
    for a in call.args:
        if kind == "int" and not isinstance(a, int):
            raise CorpusSyntaxError(f"{call.name} expects integer arguments", call.line, call.column, t.source)
        if kind == "str" and not isinstance(a, str):
            raise CorpusSyntaxError(f"{call.name} expects quoted cycle strings", call.line, call.column, t.source)
        if kind == "group":
            if not isinstance(a, Call):
                raise CorpusSyntaxError(f"{call.name} expects group expressions", call.line, call.column, t.source)
            _check_call(t, a, CONSTRUCTORS, "constructor")
        if kind == "field":
            _check_field_arg(t, call, a)


def _parse_line(text: str, line: int, source: str) -> CorpusEntry | None:
    t = _Tokens(text, line, source)
    if t.peek()[0] is None:
        return None
    t.expect("group", "'group'")
    kind, name, col = t.next()
    if kind != "name" or name in KEYWORDS:
        raise t.error("expected a group name", col)
    t.expect("=")
    kind, cname, col = t.next()
    if kind != "name" or not t.at("("):
        raise t.error("expected a constructor call", col)
    construction = _parse_call(t, cname, col)
    _check_call(t, construction, CONSTRUCTORS, "constructor")
    entry = CorpusEntry(name, construction, line=line)
    if t.at("with"):
        t.next()
        t.expect("automorphism")
        kind, aname, col = t.next()
        if kind != "name" or not t.at("("):
            raise t.error("expected an automorphism call", col)
        entry.action = _parse_call(t, aname, col)
        _check_call(t, entry.action, AUTOMORPHISMS, "automorphism")
        if entry.action.name == "frobenius" and construction.name not in FIELD_GROUPS:
            raise CorpusSyntaxError(f"frobenius needs a field group, not {construction.name}",
                                    entry.action.line, entry.action.column, source)
    if t.at("expect"):
        t.next()
        while True:
            kind, key, col = t.next()
            if kind != "name" or key not in EXPECT_KEYS:
                raise t.error(f"unknown expectation key {key or 'end of line'!r}", col)
            t.expect("=")
            if t.at("["):
                t.next()
                vals = []
                while not t.at("]"):
                    k2, v, c2 = t.next()
                    if k2 != "int":
                        raise t.error("expected an integer in the list", c2)
                    vals.append(int(v))
                    if t.at(","):
                        t.next()
                t.expect("]")
                entry.expected[key] = vals
            else:
                k2, v, c2 = t.next()
                if k2 != "int":
                    raise t.error("expected an integer value", c2)
                entry.expected[key] = int(v)
            if not t.at(","):
                break
            t.next()
    if t.at("tags"):
        t.next()
        while t.peek()[0] is not None:
            kind, word, col = t.next()
            if kind not in ("name", "int"):
                raise t.error("tags must be words", col)
            entry.tags.append(word)
    if t.peek()[0] is not None:
        raise t.error(f"unexpected {t.peek()[1]!r}")
    return entry


def parse_corpus(text: str, source: str = "<corpus>") -> list[CorpusEntry]:
    entries = []
    names = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        entry = _parse_line(raw, lineno, source)
        if entry is None:
            continue
        if entry.name in names:
            raise CorpusSyntaxError(f"duplicate group name {entry.name!r}", lineno, 1, source)
        names.add(entry.name)
        entries.append(entry)
    return entries


def load_corpus(path) -> list[CorpusEntry]:
    path = Path(path)
    return parse_corpus(path.read_text(encoding="utf-8"), str(path))


# -- elaboration ------------------------------------------------------------------


def _field(a):
    if isinstance(a, int):
        return C.field(a)
    return C.field(a.args[0], a.args[1] if len(a.args) > 1 else None)


def build_group(call: Call) -> PermGroup:
    n, args = call.name, call.args
    if n in ("cyclic", "symmetric", "alternating", "dihedral"):
        return getattr(C, n)(args[0])
    if n == "direct":
        G = build_group(args[0])
        for a in args[1:]:
            G = C.direct_product(G, build_group(a))
        return G
    if n == "wreath":
        return C.wreath_product(build_group(args[0]), build_group(args[1]))
    if n in FIELD_GROUPS:
        return getattr(C, n)(_field(args[0]))
    if n == "perm_group":
        perms = [Permutation.parse(s) for s in args]
        deg = max((len(p) for p in perms), default=1)
        return PermGroup([p.extended(deg) for p in perms], deg)
    raise LengthLabError(f"unknown constructor {n}")


def build_action(entry: CorpusEntry, G: PermGroup) -> CoprimeAction:
    call = entry.action
    if call.name == "frobenius":
        F = _field(entry.construction.args[0])
        power = call.args[0] if call.args else 1
        phi = C.frobenius_automorphism(F, FIELD_GROUPS[entry.construction.name], power)
        ambient = C.extend_by(G, phi)
        return make_action(ambient, G.generators, [phi] if not phi.is_identity() else [],
                           require_coprime=False, name=entry.name)
    if call.name == "perm":
        phi = Permutation.parse(call.args[0], G.degree)
        ambient = C.extend_by(G, phi)
        return make_action(ambient, G.generators, [phi] if not phi.is_identity() else [],
                           require_coprime=False, name=entry.name)
    x = Permutation.parse(call.args[0], G.degree)
    ambient, Gc, a = C.inner_extension(G, x)
    return make_action(ambient, Gc.generators, [a] if not a.is_identity() else [],
                       require_coprime=False, name=entry.name)


def elaborate(entry: CorpusEntry) -> tuple[PermGroup, CoprimeAction | None]:
    """Construct the entry's group (and action, if any).

    With an action, the returned group is the action's ``G`` so invariants are
    cached in one place.
    """
    G = build_group(entry.construction)
    G.name = entry.name
    if entry.action is None:
        return G, None
    act = build_action(entry, G)
    return act.g_part, act
