"""Line-oriented ``.hyp`` structure files: parse and render.

A file is a sequence of blocks::

    structure hyperfield K2
      elements 0 1
      zero 0
      one 1
      add 0 0 = { 0 }
      ...
      mul 1 1 = 1
    end
    structure hvspace V over K2
      vectors v00 v10 v01 v11
      theta v00
      vadd v10 v01 = { v11 }
      act 1 v10 = { v10 }
      ...
    end
    structure hypergroup H
      elements 0 1
      op 0 0 = { 0 }
      ...
    end

``#`` starts a comment. Every table cell must be listed exactly once.
Parsing checks shape, totality and non-emptiness only; axioms are the
checkers' business. :func:`render` writes the same format back, and
``parse(render(f))`` reproduces ``f``; comment lines directly before a
block (or at the top of the file) are kept.
"""

from dataclasses import dataclass, field
from typing import Optional

from .core import Carrier, HyperTable, MulTable, members
from .errors import StructureError

HYPERFIELD = "hyperfield"
HVSPACE = "hvspace"
HYPERGROUP = "hypergroup"


class ParseError(StructureError):
    def __init__(self, line: int, col: int, message: str):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col
        self.message = message


@dataclass
class FieldBlock:
    name: str
    carrier: Carrier
    add: HyperTable
    mul: MulTable
    zero: int
    one: int
    comments: list = field(default_factory=list)
    kind: str = HYPERFIELD


@dataclass
class SpaceBlock:
    name: str
    field_name: str
    scalars: Carrier
    vectors: Carrier
    vadd: HyperTable
    action: tuple  # action[a][x] -> mask
    theta: int
    comments: list = field(default_factory=list)
    kind: str = HVSPACE


@dataclass
class GroupBlock:
    name: str
    carrier: Carrier
    op: HyperTable
    comments: list = field(default_factory=list)
    kind: str = HYPERGROUP


@dataclass
class StructureFile:
    blocks: list = field(default_factory=list)
    header: list = field(default_factory=list)
    trailer: list = field(default_factory=list)

    def get(self, name: str):
        for b in self.blocks:
            if b.name == name:
                return b
        raise KeyError(name)

    @property
    def names(self) -> list:
        return [b.name for b in self.blocks]


# ---------------------------------------------------------------------------
# tokenizer


@dataclass
class _Tok:
    text: str
    line: int
    col: int


def _tokens(line: str, lineno: int) -> list:
    cut = line.find("#")
    if cut >= 0:
        line = line[:cut]
    out = []
    i, n = 0, len(line)
    while i < n:
        if line[i].isspace():
            i += 1
            continue
        if line[i] in "{}=":
            out.append(_Tok(line[i], lineno, i + 1))
            i += 1
            continue
        j = i
        while j < n and not line[j].isspace() and line[j] not in "{}=":
            j += 1
        out.append(_Tok(line[i:j], lineno, i + 1))
        i = j
    return out


# ---------------------------------------------------------------------------
# parser


class _Block:
    """Accumulates one block's directives before tables are assembled."""

    def __init__(self, kind, name, head: _Tok, over: Optional[_Tok]):
        self.kind = kind
        self.name = name
        self.head = head
        self.over = over
        self.elements = None  # (names, token)
        self.vectors = None
        self.scalars = {}  # single-element directives: zero/one/theta
        self.cells = {}  # (table, i, j) -> value
        self.field = None  # resolved FieldBlock for hvspace


_TABLES = {
    HYPERFIELD: {"add": "set", "mul": "elem"},
    HVSPACE: {"vadd": "set", "act": "set"},
    HYPERGROUP: {"op": "set"},
}
_SINGLES = {HYPERFIELD: ("zero", "one"), HVSPACE: ("theta",), HYPERGROUP: ()}


def _err(tok: _Tok, msg: str):
    return ParseError(tok.line, tok.col, msg)


def _declare(toks, what):
    names = [t.text for t in toks[1:]]
    if not names:
        raise _err(toks[0], f"{what} needs at least one name")
    seen = set()
    for t in toks[1:]:
        if t.text in "{}=":
            raise _err(t, f"syntax error: unexpected {t.text!r}")
        if t.text in seen:
            raise _err(t, f"duplicate name {t.text!r}")
        seen.add(t.text)
    return Carrier(tuple(names))


def _resolve(carrier: Carrier, tok: _Tok, what: str) -> int:
    if tok.text not in carrier.names:
        raise _err(tok, f"unresolved reference: {what} {tok.text!r} is not declared")
    return carrier.names.index(tok.text)


def _parse_set(toks, start, carrier, what):
    if start >= len(toks) or toks[start].text != "{":
        where = toks[start] if start < len(toks) else toks[-1]
        raise _err(where, "syntax error: expected '{'")
    mask = 0
    i = start + 1
    while i < len(toks) and toks[i].text != "}":
        t = toks[i]
        if t.text in "{=":
            raise _err(t, f"syntax error: unexpected {t.text!r}")
        idx = _resolve(carrier, t, what)
        mask |= 1 << idx
        i += 1
    if i >= len(toks):
        raise _err(toks[-1], "syntax error: missing '}'")
    if i + 1 < len(toks):
        raise _err(toks[i + 1], "syntax error: trailing tokens after '}'")
    if not mask:
        raise _err(toks[start], "empty set literal: hyperoperation values must be non-empty")
    return mask


def _cell(block: _Block, toks):
    table = toks[0].text
    kind = _TABLES[block.kind][table]
    if block.kind == HVSPACE:
        if block.vectors is None:
            raise _err(toks[0], "syntax error: 'vectors' must come before table cells")
        left = block.field.carrier if table == "act" else block.vectors[0]
        right, target = block.vectors[0], block.vectors[0]
        left_what = "scalar" if table == "act" else "vector"
    else:
        if block.elements is None:
            raise _err(toks[0], "syntax error: 'elements' must come before table cells")
        left = right = target = block.elements[0]
        left_what = "element"
    if len(toks) < 5 or toks[3].text != "=":
        raise _err(toks[min(3, len(toks) - 1)], f"syntax error: expected '{table} x y = ...'")
    for t in toks[1:3]:
        if t.text in "{}=":
            raise _err(t, f"syntax error: unexpected {t.text!r}")
    i = _resolve(left, toks[1], left_what)
    j = _resolve(right, toks[2], "vector" if block.kind == HVSPACE else "element")
    key = (table, i, j)
    if key in block.cells:
        raise _err(toks[0], f"duplicate cell: {table} {toks[1].text} {toks[2].text} is already defined")
    if kind == "set":
        block.cells[key] = _parse_set(toks, 4, target, "vector" if block.kind == HVSPACE else "element")
    else:
        if len(toks) != 5 or toks[4].text in "{}=":
            raise _err(toks[4], f"syntax error: '{table}' takes a single element")
        block.cells[key] = _resolve(target, toks[4], "element")


def _finish(block: _Block, end_tok: _Tok, comments):
    for d in _SINGLES[block.kind]:
        if d not in block.scalars:
            raise _err(end_tok, f"missing '{d}' in {block.kind} {block.name!r}")
    if block.kind == HVSPACE:
        if block.vectors is None:
            raise _err(end_tok, f"missing 'vectors' in hvspace {block.name!r}")
        V, F = block.vectors[0], block.field.carrier
        _require_cells(block, end_tok, "vadd", V, V)
        _require_cells(block, end_tok, "act", F, V)
        vadd = HyperTable(V, tuple(tuple(block.cells[("vadd", i, j)] for j in range(V.size))
                                   for i in range(V.size)))
        action = tuple(tuple(block.cells[("act", a, x)] for x in range(V.size)) for a in range(F.size))
        return SpaceBlock(block.name, block.field.name, F, V, vadd, action, block.scalars["theta"], comments)
    if block.elements is None:
        raise _err(end_tok, f"missing 'elements' in {block.kind} {block.name!r}")
    X = block.elements[0]
    n = X.size
    if block.kind == HYPERGROUP:
        _require_cells(block, end_tok, "op", X, X)
        op = HyperTable(X, tuple(tuple(block.cells[("op", i, j)] for j in range(n)) for i in range(n)))
        return GroupBlock(block.name, X, op, comments)
    _require_cells(block, end_tok, "add", X, X)
    _require_cells(block, end_tok, "mul", X, X)
    add = HyperTable(X, tuple(tuple(block.cells[("add", i, j)] for j in range(n)) for i in range(n)))
    mul = MulTable(X, tuple(tuple(block.cells[("mul", i, j)] for j in range(n)) for i in range(n)))
    return FieldBlock(block.name, X, add, mul, block.scalars["zero"], block.scalars["one"], comments)


def _require_cells(block, end_tok, table, left: Carrier, right: Carrier):
    for i in range(left.size):
        for j in range(right.size):
            if (table, i, j) not in block.cells:
                raise _err(end_tok, f"missing cell: {table} {left.names[i]} {right.names[j]} "
                                    f"in {block.kind} {block.name!r}")


def parse(text: str) -> StructureFile:
    """Parse ``.hyp`` text into resolved blocks, or raise :class:`ParseError`."""
    out = StructureFile()
    current: Optional[_Block] = None
    pending = []  # comment lines waiting for the next block
    seen_block = False
    fields = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if current is None and stripped.startswith("#"):
            pending.append(stripped)
            continue
        toks = _tokens(raw, lineno)
        if not toks:
            continue
        word = toks[0]
        if current is None:
            if word.text != "structure":
                raise _err(word, f"syntax error: expected 'structure', got {word.text!r}")
            if not seen_block:
                out.header, pending = pending, []
                seen_block = True
            current = _open_block(toks, fields, out)
            comments, pending = pending, []
            continue
        if word.text == "end":
            if len(toks) > 1:
                raise _err(toks[1], "syntax error: trailing tokens after 'end'")
            blk = _finish(current, word, comments)
            out.blocks.append(blk)
            if blk.kind == HYPERFIELD:
                fields[blk.name] = blk
            current = None
            continue
        _directive(current, toks)
    if current is not None:
        raise ParseError(current.head.line, current.head.col,
                         f"syntax error: block {current.name!r} is not closed with 'end'")
    if not seen_block:
        out.header, pending = pending, []
    out.trailer = pending
    return out


def _open_block(toks, fields, out) -> _Block:
    if len(toks) < 3:
        raise _err(toks[-1], "syntax error: expected 'structure <kind> <name>'")
    kind_tok, name_tok = toks[1], toks[2]
    if kind_tok.text not in _TABLES:
        raise _err(kind_tok, f"syntax error: unknown structure kind {kind_tok.text!r} "
                             f"(expected hyperfield, hvspace or hypergroup)")
    if name_tok.text in "{}=":
        raise _err(name_tok, "syntax error: expected a structure name")
    if name_tok.text in out.names:
        raise _err(name_tok, f"duplicate structure name {name_tok.text!r}")
    over = None
    if kind_tok.text == HVSPACE:
        if len(toks) != 5 or toks[3].text != "over":
            raise _err(toks[min(3, len(toks) - 1)], "syntax error: expected 'structure hvspace <name> over <field>'")
        over = toks[4]
    elif len(toks) > 3:
        raise _err(toks[3], "syntax error: trailing tokens after structure name")
    block = _Block(kind_tok.text, name_tok.text, toks[0], over)
    if over is not None:
        if over.text not in fields:
            raise _err(over, f"unresolved reference: hyperfield {over.text!r} is not declared above")
        block.field = fields[over.text]
    return block


def _directive(block: _Block, toks):
    word = toks[0]
    if word.text in ("elements", "vectors"):
        expected = "vectors" if block.kind == HVSPACE else "elements"
        if word.text != expected:
            raise _err(word, f"syntax error: {block.kind} blocks declare '{expected}'")
        if block.elements is not None or block.vectors is not None:
            raise _err(word, f"duplicate '{word.text}' declaration")
        carrier = (_declare(toks, word.text), word)
        if block.kind == HVSPACE:
            block.vectors = carrier
        else:
            block.elements = carrier
        return
    if word.text in _SINGLES[block.kind]:
        if word.text in block.scalars:
            raise _err(word, f"duplicate '{word.text}' declaration")
        if len(toks) != 2:
            raise _err(toks[-1], f"syntax error: '{word.text}' takes exactly one name")
        decl = block.vectors if block.kind == HVSPACE else block.elements
        if decl is None:
            raise _err(word, f"syntax error: declare the carrier before '{word.text}'")
        block.scalars[word.text] = _resolve(decl[0], toks[1], "vector" if block.kind == HVSPACE else "element")
        return
    if word.text in _TABLES[block.kind]:
        _cell(block, toks)
        return
    raise _err(word, f"syntax error: unknown directive {word.text!r} in {block.kind} block")


# ---------------------------------------------------------------------------
# renderer


def _set(carrier: Carrier, mask) -> str:
    return "{ " + " ".join(carrier.names[i] for i in members(mask)) + " }"


def render_block(b) -> str:
    lines = list(b.comments)
    if b.kind == HYPERFIELD:
        X = b.carrier
        lines.append(f"structure hyperfield {b.name}")
        lines.append("  elements " + " ".join(X.names))
        lines.append(f"  zero {X.names[b.zero]}")
        lines.append(f"  one {X.names[b.one]}")
        for i in range(X.size):
            for j in range(X.size):
                lines.append(f"  add {X.names[i]} {X.names[j]} = {_set(X, b.add.cells[i][j])}")
        for i in range(X.size):
            for j in range(X.size):
                lines.append(f"  mul {X.names[i]} {X.names[j]} = {X.names[b.mul.cells[i][j]]}")
    elif b.kind == HVSPACE:
        V = b.vectors
        lines.append(f"structure hvspace {b.name} over {b.field_name}")
        lines.append("  vectors " + " ".join(V.names))
        lines.append(f"  theta {V.names[b.theta]}")
        for i in range(V.size):
            for j in range(V.size):
                lines.append(f"  vadd {V.names[i]} {V.names[j]} = {_set(V, b.vadd.cells[i][j])}")
        for a in range(b.scalars.size):
            for x in range(V.size):
                lines.append(f"  act {b.scalars.names[a]} {V.names[x]} = {_set(V, b.action[a][x])}")
    else:
        X = b.carrier
        lines.append(f"structure hypergroup {b.name}")
        lines.append("  elements " + " ".join(X.names))
        for i in range(X.size):
            for j in range(X.size):
                lines.append(f"  op {X.names[i]} {X.names[j]} = {_set(X, b.op.cells[i][j])}")
    lines.append("end")
    return "\n".join(lines) + "\n"


def render(sf: StructureFile) -> str:
    parts = ["".join(line + "\n" for line in sf.header)]
    parts.extend(render_block(b) for b in sf.blocks)
    parts.append("".join(line + "\n" for line in sf.trailer))
    return "".join(parts)


# ---------------------------------------------------------------------------
# building blocks from in-memory structures


def field_block(name: str, F) -> FieldBlock:
    return FieldBlock(name, F.carrier, F.add, F.mul, F.zero, F.one)


def space_block(name: str, field_name: str, space) -> SpaceBlock:
    return SpaceBlock(name, field_name, space.field.carrier, space.vectors, space.vadd,
                      space.action, space.theta)


def group_block(name: str, table: HyperTable) -> GroupBlock:
    return GroupBlock(name, table.carrier, table)


def census_file(kind: str, order: int, entries) -> StructureFile:
    """Census export: manifest line, then one block per entry."""
    sf = StructureFile(header=[f"# census kind={kind} order={order} count={len(entries)}"])
    for e in entries:
        if e.mul is None:
            sf.blocks.append(GroupBlock(e.name, e.add.carrier, e.add))
        else:
            sf.blocks.append(FieldBlock(e.name, e.add.carrier, e.add, e.mul, e.zero, e.one))
    return sf
