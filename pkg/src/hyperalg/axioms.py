"""Axiom checkers for hypergroups, hyperrings, hyperfields and hypervector spaces.

Checkers never raise on a semantic failure. They return a report listing
every axiom examined, in a fixed order, with the lexicographically first
witness for each failure. The ``make_*`` helpers wrap a checker and raise
:class:`~hyperalg.errors.AxiomError` instead, for callers that just want a
validated object.
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional

from .core import Carrier, HyperTable, Mask, MulTable, _ext, members, singleton
from .errors import AxiomError, StructureError

EQUAL = "equal"
INCLUSIVE = "inclusive"
DISTRIBUTIVE_MODES = (EQUAL, INCLUSIVE)


@dataclass(frozen=True)
class AxiomResult:
    axiom: str
    ok: bool
    witness: Optional[tuple] = None
    detail: str = ""

    def __str__(self):
        if self.ok:
            return f"{self.axiom}: ok"
        return f"{self.axiom}: violated at {self.witness} {self.detail}".rstrip()


@dataclass
class Report:
    kind: str
    results: list = field(default_factory=list)
    structure: object = None

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    @property
    def failures(self) -> list:
        return [r for r in self.results if not r.ok]

    @property
    def first_failure(self) -> Optional[AxiomResult]:
        for r in self.results:
            if not r.ok:
                return r
        return None

    def add(self, axiom, ok, witness=None, detail=""):
        self.results.append(AxiomResult(axiom, ok, witness, detail))
        return ok


@dataclass
class HypergroupReport(Report):
    is_semihypergroup: bool = False
    is_commutative: bool = False
    zeros: Mask = 0
    zero: Optional[int] = None
    inverse: Optional[tuple] = None
    reversible: bool = False
    zero_ambiguous: bool = False

    @property
    def is_hypergroup(self) -> bool:
        return self.ok


# ---------------------------------------------------------------------------
# hypergroups


def check_hypergroupoid(table) -> Report:
    """Every cell of ``table`` (a HyperTable or a square nested list of masks) is non-empty."""
    cells = table.cells if hasattr(table, "cells") else table
    report = Report("hypergroupoid")
    n = len(cells)
    for i, row in enumerate(cells):
        if len(row) != n:
            report.add("square", False, (i,), f"row {i} has {len(row)} cells, expected {n}")
            return report
    report.add("square", True)
    for i in range(n):
        for j in range(n):
            m = cells[i][j]
            if not m:
                report.add("non-empty", False, (i, j), "empty cell")
                return report
            if m >> n:
                report.add("in-range", False, (i, j), "index outside carrier")
                return report
    report.add("non-empty", True)
    return report


def associativity_witness(cells, n):
    """First (x, y, z, lhs, rhs) with (x#y)#z != x#(y#z), or None."""
    for x in range(n):
        row_x = cells[x]
        for y in range(n):
            xy = row_x[y]
            for z in range(n):
                lhs = 0
                for u in members(xy):
                    lhs |= cells[u][z]
                rhs = 0
                for v in members(cells[y][z]):
                    rhs |= row_x[v]
                if lhs != rhs:
                    return (x, y, z, lhs, rhs)
    return None


def check_semihypergroup(table: HyperTable) -> Report:
    report = Report("semihypergroup")
    w = associativity_witness(table.cells, table.size)
    if w is None:
        report.add("associativity", True)
    else:
        x, y, z, lhs, rhs = w
        c = table.carrier
        report.add(
            "associativity", False, (x, y, z),
            f"(x#y)#z = {c.format_subset(lhs)} but x#(y#z) = {c.format_subset(rhs)}",
        )
    return report


def inverse_map(cells, n, e):
    """Inverse map relative to candidate zero ``e``, or the first element lacking a unique one.

    Returns ``(inverse_tuple, None)`` or ``(None, a)``.
    """
    bit = 1 << e
    inv = []
    for a in range(n):
        found = -1
        for b in range(n):
            if cells[a][b] & bit and cells[b][a] & bit:
                if found >= 0:
                    return None, a
                found = b
        if found < 0:
            return None, a
        inv.append(found)
    return tuple(inv), None


def reversibility_witness(cells, n, inv):
    """First (a, b, c) with a in b#c but b not in a#(-c)."""
    for b in range(n):
        for c in range(n):
            bc = cells[b][c]
            nc = inv[c]
            for a in members(bc):
                if not cells[a][nc] >> b & 1:
                    return (a, b, c)
    return None


def check_hypergroup(table: HyperTable) -> HypergroupReport:
    cells, n = table.cells, table.size
    rep = HypergroupReport("hypergroup")
    rep.is_commutative = table.is_commutative()
    semi = check_semihypergroup(table)
    rep.results.extend(semi.results)
    rep.is_semihypergroup = semi.ok

    inverses = {}
    blockers = []
    for e in range(n):
        inv, bad = inverse_map(cells, n, e)
        if inv is None:
            blockers.append((e, bad))
        else:
            inverses[e] = inv
            rep.zeros |= singleton(e)
    if not inverses:
        rep.add("zero", False, tuple(blockers), "no element has unique two-sided inverses for every a")
        return rep
    rep.add("zero", True)
    rep.zero_ambiguous = len(inverses) > 1

    first_witness = None
    for e, inv in inverses.items():
        w = reversibility_witness(cells, n, inv)
        if w is None:
            rep.zero, rep.inverse, rep.reversible = e, inv, True
            break
        if first_witness is None:
            first_witness = (e, w)
    if rep.reversible:
        rep.add("reversibility", True)
    else:
        e, (a, b, c) = first_witness
        rep.zero, rep.inverse = e, inverses[e]
        rep.add("reversibility", False, (a, b, c), f"a in b#c but b not in a#(-c) (zero {e})")
    return rep


# ---------------------------------------------------------------------------
# hyperrings and hyperfields


@dataclass(frozen=True)
class Hyperfield:
    carrier: Carrier
    add: HyperTable
    mul: MulTable
    zero: int
    one: int
    neg: tuple
    inv: tuple  # inv[zero] is None

    @property
    def order(self) -> int:
        return self.carrier.size

    @property
    def names(self):
        return self.carrier.names

    def is_field(self) -> bool:
        """True when every sum is a singleton (a classical field)."""
        return all(m & (m - 1) == 0 for row in self.add.cells for m in row)


def _distributivity_witness(add, mul, n, mode, side):
    cells, mc = add.cells, mul.cells
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if side == "left":
                    lhs = mul.image(a, cells[b][c])
                    rhs = cells[mc[a][b]][mc[a][c]]
                else:
                    lhs = mul.image_right(cells[b][c], a)
                    rhs = cells[mc[b][a]][mc[c][a]]
                ok = lhs == rhs if mode == EQUAL else lhs & ~rhs == 0
                if not ok:
                    return (a, b, c, lhs, rhs)
    return None


def check_hyperring(add: HyperTable, mul: MulTable, zero: int, distributive: str = EQUAL) -> Report:
    if distributive not in DISTRIBUTIVE_MODES:
        raise ValueError(f"distributive must be one of {DISTRIBUTIVE_MODES}")
    if add.carrier != mul.carrier:
        raise StructureError("addition and multiplication are over different carriers")
    n = add.size
    c = add.carrier
    report = Report("hyperring")
    hg = check_hypergroup(add)
    first = hg.first_failure
    report.add("additive-hypergroup", hg.ok,
               None if first is None else (first.axiom,) + tuple(first.witness or ()),
               "" if first is None else first.detail)
    comm_w = next(((i, j) for i in range(n) for j in range(i + 1, n)
                   if add.cells[i][j] != add.cells[j][i]), None)
    report.add("additive-commutative", comm_w is None, comm_w)
    report.add("additive-zero", bool(hg.zeros >> zero & 1) and (not hg.ok or hg.zero == zero),
               None if hg.zeros >> zero & 1 else (zero,),
               f"zeros of the addition are {c.format_subset(hg.zeros)}")
    mc = mul.cells
    assoc_w = next(((a, b, d) for a in range(n) for b in range(n) for d in range(n)
                    if mc[mc[a][b]][d] != mc[a][mc[b][d]]), None)
    report.add("mul-associative", assoc_w is None, assoc_w)
    for side in ("left", "right"):
        w = _distributivity_witness(add, mul, n, distributive, side)
        if w is None:
            report.add(f"distributive-{side}", True)
        else:
            a, b, d, lhs, rhs = w
            report.add(f"distributive-{side}", False, (a, b, d),
                       f"{c.format_subset(lhs)} vs {c.format_subset(rhs)} ({distributive})")
    absorb_w = next((a for a in range(n) if mc[a][zero] != zero or mc[zero][a] != zero), None)
    report.add("zero-absorbing", absorb_w is None, None if absorb_w is None else (absorb_w,))
    report.structure = hg
    return report


def check_hyperfield(add: HyperTable, mul: MulTable, zero: int, one: int,
                     distributive: str = EQUAL) -> Report:
    """Validate a hyperfield; on success ``report.structure`` is the :class:`Hyperfield`."""
    n = add.size
    mc = mul.cells
    report = Report("hyperfield")
    ring = check_hyperring(add, mul, zero, distributive)
    first = ring.first_failure
    report.add("(i) hyperring", ring.ok,
               None if first is None else (first.axiom,) + tuple(first.witness or ()),
               "" if first is None else first.detail)
    report.add("nontrivial", n == 1 or one != zero, (one,) if n > 1 and one == zero else None,
               "1 must differ from 0 when the carrier has more than one element")
    ident_w = next((a for a in range(n) if mc[a][one] != a), None)
    report.add("(ii) identity", ident_w is None, None if ident_w is None else (ident_w,))
    inv = []
    inv_w = None
    for a in range(n):
        if a == zero:
            inv.append(None)
            continue
        b = next((b for b in range(n) if mc[a][b] == one), None)
        if b is None and inv_w is None:
            inv_w = a
        inv.append(b)
    report.add("(iii) inverse", inv_w is None, None if inv_w is None else (inv_w,))
    comm_w = next(((a, b) for a in range(n) for b in range(a + 1, n) if mc[a][b] != mc[b][a]), None)
    report.add("(iv) mul-commutative", comm_w is None, comm_w)
    if report.ok:
        hg = ring.structure
        report.structure = Hyperfield(add.carrier, add, mul, zero, one, hg.inverse, tuple(inv))
    return report


def make_hyperfield(add, mul, zero, one, distributive=EQUAL) -> Hyperfield:
    report = check_hyperfield(add, mul, zero, one, distributive)
    if not report.ok:
        raise AxiomError(report)
    return report.structure


# ---------------------------------------------------------------------------
# hypervector spaces


@dataclass(frozen=True, eq=False)
class HyperVectorSpace:
    field: Hyperfield
    vectors: Carrier
    vadd: HyperTable
    action: tuple  # action[a][alpha] -> mask over vectors
    theta: int
    vneg: tuple
    strong_right: bool
    strong_left: bool
    coords: Optional[tuple] = None  # coordinate tuples, set by product_space

    @property
    def good(self) -> bool:
        return self.strong_left and self.strong_right

    @property
    def size(self) -> int:
        return self.vectors.size

    @property
    def theta_mask(self) -> Mask:
        return 1 << self.theta

    def add(self, a_mask: Mask, b_mask: Mask) -> Mask:
        return _ext(self.vadd.cells, a_mask, b_mask)

    def act(self, a: int, mask: Mask) -> Mask:
        """``a * S`` for a subset S of vectors."""
        row = self.action[a]
        out = 0
        for v in members(mask):
            out |= row[v]
        return out

    @cached_property
    def lines(self) -> tuple:
        """``lines[v]`` is the union of ``a * v`` over all scalars a."""
        out = []
        for v in range(self.size):
            m = 0
            for row in self.action:
                m |= row[v]
            out.append(m)
        return tuple(out)

    @cached_property
    def nonzero_lines(self) -> tuple:
        z = self.field.zero
        out = []
        for v in range(self.size):
            m = 0
            for a, row in enumerate(self.action):
                if a != z:
                    m |= row[v]
            out.append(m)
        return tuple(out)

    def fmt(self, mask: Mask) -> str:
        return self.vectors.format_subset(mask)

    def names_of(self, vecs) -> tuple:
        return tuple(self.vectors.names[v] for v in vecs)


def check_hypervectorspace(field_: Hyperfield, vectors: Carrier, vadd: HyperTable,
                           action, theta: int) -> Report:
    """Validate a hypervector space; on success ``report.structure`` is the space.

    Axioms (i) and (ii) are checked as inclusions; whether equality also
    holds decides the strong right / strong left flags.
    """
    F = field_
    nf, nv = F.order, vectors.size
    report = Report("hvspace")
    if vadd.carrier != vectors:
        raise StructureError("vector addition is over a different carrier")
    action = tuple(tuple(row) for row in action)
    shape_w = None
    if len(action) != nf or any(len(row) != nv for row in action):
        shape_w = ("shape",)
    else:
        shape_w = next(((a, v) for a in range(nf) for v in range(nv)
                        if not action[a][v] or action[a][v] >> nv), None)
    report.add("action-nonempty", shape_w is None, shape_w,
               "scalar action values must be non-empty subsets of V")
    if shape_w is not None:
        return report

    hg = check_hypergroup(vadd)
    first = hg.first_failure
    report.add("vadd-hypergroup", hg.ok,
               None if first is None else (first.axiom,) + tuple(first.witness or ()),
               "" if first is None else first.detail)
    comm_w = next(((i, j) for i in range(nv) for j in range(i + 1, nv)
                   if vadd.cells[i][j] != vadd.cells[j][i]), None)
    report.add("vadd-commutative", comm_w is None, comm_w)
    report.add("theta-zero", hg.ok and hg.zero == theta,
               None if hg.ok and hg.zero == theta else (theta,),
               f"zero vector of (V,#) is {vectors.names[hg.zero] if hg.zero is not None else None}")
    if not report.ok:
        return report

    cells = vadd.cells
    fadd, mc = F.add.cells, F.mul.cells

    def act(a, mask):
        row = action[a]
        out = 0
        for v in members(mask):
            out |= row[v]
        return out

    # (i) a*(x#y) vs a*x # a*y
    strong_right = True
    w1 = None
    for a in range(nf):
        row = action[a]
        for x in range(nv):
            for y in range(nv):
                lhs = act(a, cells[x][y])
                rhs = _ext(cells, row[x], row[y])
                if lhs & ~rhs:
                    if w1 is None:
                        w1 = (a, x, y)
                elif lhs != rhs:
                    strong_right = False
    report.add("(i) a*(x#y) <= a*x # a*y", w1 is None, w1)

    # (ii) (a+b)*x vs a*x # b*x
    strong_left = True
    w2 = None
    for a in range(nf):
        for b in range(nf):
            ab = fadd[a][b]
            for x in range(nv):
                lhs = 0
                for c in members(ab):
                    lhs |= action[c][x]
                rhs = _ext(cells, action[a][x], action[b][x])
                if lhs & ~rhs:
                    if w2 is None:
                        w2 = (a, b, x)
                elif lhs != rhs:
                    strong_left = False
    report.add("(ii) (a+b)*x <= a*x # b*x", w2 is None, w2)

    w3 = next(((a, b, x) for a in range(nf) for b in range(nf) for x in range(nv)
               if action[mc[a][b]][x] != act(a, action[b][x])), None)
    report.add("(iii) (a.b)*x = a*(b*x)", w3 is None, w3)

    w4 = next((("one", x) for x in range(nv) if action[F.one][x] != 1 << x), None)
    if w4 is None:
        w4 = next((("zero", x) for x in range(nv) if action[F.zero][x] != 1 << theta), None)
    report.add("(iv) 1*x = {x}, 0*x = {theta}", w4 is None, w4)

    if report.ok:
        report.structure = HyperVectorSpace(
            F, vectors, vadd, action, theta, hg.inverse,
            strong_right and w1 is None, strong_left and w2 is None,
        )
    return report


def make_space(field_, vectors, vadd, action, theta, coords=None) -> HyperVectorSpace:
    report = check_hypervectorspace(field_, vectors, vadd, action, theta)
    if not report.ok:
        raise AxiomError(report)
    space = report.structure
    if coords is not None:
        object.__setattr__(space, "coords", tuple(coords))
    return space


def class_witnesses(space: HyperVectorSpace) -> dict:
    """First instances where equality fails in axioms (i) and (ii), if any."""
    cells = space.vadd.cells
    F, nv = space.field, space.size
    rng = range(F.order)

    def left_side(a, b, x):
        out = 0
        for c in members(F.add.cells[a][b]):
            out |= space.action[c][x]
        return out

    right = next(((a, x, y) for a in rng for x in range(nv) for y in range(nv)
                  if space.act(a, cells[x][y]) != _ext(cells, space.action[a][x], space.action[a][y])),
                 None)
    left = next(((a, b, x) for a in rng for b in rng for x in range(nv)
                 if left_side(a, b, x) != _ext(cells, space.action[a][x], space.action[b][x])),
                None)
    return {"strong_right": right, "strong_left": left}


# ---------------------------------------------------------------------------
# subspaces


@dataclass(frozen=True)
class SubspaceReport:
    ok: bool
    witness: Optional[tuple]
    two_condition_ok: bool
    two_condition_witness: Optional[tuple]

    @property
    def criteria_agree(self) -> bool:
        return self.ok == self.two_condition_ok


def _three_condition(space, W):
    if not W:
        return ("empty",)
    cells = space.vadd.cells
    ws = members(W)
    for x in ws:
        row = cells[x]
        for y in ws:
            if row[y] & ~W:
                return ("vadd", x, y)
    for a in range(space.field.order):
        row = space.action[a]
        for x in ws:
            if row[x] & ~W:
                return ("act", a, x)
    return None


def _two_condition(space, W):
    if not W:
        return ("empty",)
    ws = members(W)
    nf = space.field.order
    cells = space.vadd.cells
    for a in range(nf):
        for x in ws:
            ax = space.action[a][x]
            for b in range(nf):
                for y in ws:
                    if _ext(cells, ax, space.action[b][y]) & ~W:
                        return ("comb", a, x, b, y)
    return None


def check_subspace(space: HyperVectorSpace, W: Mask) -> SubspaceReport:
    """Non-empty, closed under # and under every scalar action.

    The equivalent two-condition criterion (closure of a*x # b*y) is
    evaluated as well so that callers can confirm the two agree.
    """
    space.vectors.check_mask(W)
    w3 = _three_condition(space, W)
    w2 = _two_condition(space, W)
    return SubspaceReport(w3 is None, w3, w2 is None, w2)


def is_subspace(space: HyperVectorSpace, W: Mask) -> bool:
    return _three_condition(space, W) is None


def four_property_subspace(space: HyperVectorSpace, W: Mask) -> bool:
    """Closure under # and *, contains theta, contains every inverse."""
    if not W or not W >> space.theta & 1:
        return False
    if any(not W >> space.vneg[x] & 1 for x in members(W)):
        return False
    w = _three_condition(space, W)
    return w is None
