"""Executable statements of the hypergroup and hypervector-space theorems.

Each property is a predicate over a finite, explicitly enumerated
quantifier domain. A sweep reports the first instance (in enumeration
order) where the predicate is false. Since the predicate is a pure function
of the structure and the instance, :func:`replay` reproduces any verdict
from its witness.

Property ids and what they assert:

====== =====================================================================
R2.5   -(-a) = a in a hypergroup
R2.6   0 # a = {a} in a commutative hypergroup
R2.7   exactly one element e makes (X, #) a hypergroup with zero e (that is,
       inverses and reversibility both hold relative to e), when # is commutative
R3.7i  k * theta = {theta}
R3.7ii k * x = {theta} implies k = 0 or x = theta
R3.7iii -x lies in (-1) * x
T4.2   the four-property subspace definition agrees with the three-condition test
T4.3   the two-condition test agrees with the three-condition test
T4.5   U cap W is a subspace
T4.6   the intersection of any family of subspaces is a subspace
T4.8   U # W is a subspace
T4.10  U # W is the smallest subspace containing U and W
T4.11  span(S) is the smallest subspace containing S (strong left)
R5.3   a single non-null vector is independent
R5.4   a set containing theta is dependent
T5.6   a set is dependent iff one member is a combination of the others
T5.7   non-null vectors are dependent iff one is a combination of the earlier ones
T5.8   a dependent generating set has a generating proper subset (strong left)
T5.9   no proper subset of an independent generating set generates
T5.10  m <= n and indep + (n - m) generators still generate (strong left)
T6.2   non-null vectors have exactly one representation in a basis (strong left)
T6.3   an independent set extends to a basis (strong left)
T6.4   a maximal independent set is a basis
T6.5   dim(U # W) = dim U + dim W - dim(U cap W) (strong left)
====== =====================================================================
"""

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, permutations
from typing import Callable, Optional

from .axioms import (
    HyperVectorSpace, check_hypergroup, check_subspace, four_property_subspace, is_subspace,
)
from .census import reversible_zeros
from .core import HyperTable, members
from .errors import PreconditionError, TheoremViolation
from .hlinalg import (
    _span0, delete_redundant, dimension, exchange, express_as_combination, extend_to_basis,
    in_combination_of, is_basis, is_dependent, representations, subspace_closure,
)

PASS = "PASS"
FAIL = "FAIL"
SKIP = "SKIP"
COUNTEREXAMPLE = "THEOREM-COUNTEREXAMPLE"

MAX_HARNESS_VECTORS = 12
MAX_LIST = 3
MAX_BASIS = 4
NOT_STRONG_LEFT = "not-strongly-left-distributive"
NOT_COMMUTATIVE = "not-commutative"


@dataclass(frozen=True)
class PropertyVerdict:
    property_id: str
    structure_id: str
    status: str
    witness: Optional[tuple] = None
    skipped_reason: Optional[str] = None
    checked: int = 0
    detail: str = ""
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.status == PASS

    @property
    def failed(self) -> bool:
        return self.status == FAIL

    def render(self, fmt: str = "text") -> str:
        if fmt == "machine":
            extra = {PASS: self.note, SKIP: self.skipped_reason or "", FAIL: self.detail}[self.status]
            return "\t".join([self.property_id, self.structure_id, self.status, str(self.checked), extra])
        head = f"{self.property_id} {self.structure_id} {self.status}"
        if self.status == SKIP:
            return f"{head} reason={self.skipped_reason}"
        if self.status == FAIL:
            return f"{head} {COUNTEREXAMPLE} checked={self.checked} witness={self.detail}"
        return f"{head} checked={self.checked}" + (f" {self.note}" if self.note else "")


@dataclass(frozen=True)
class Property:
    pid: str
    target: str  # "hypergroup" or "space"
    suite: str
    domain: Callable
    holds: Callable
    show: Callable
    requires: Optional[Callable] = None
    note: Optional[Callable] = None


# ---------------------------------------------------------------------------
# contexts: the structure plus lazily computed quantifier domains


class HypergroupContext:
    def __init__(self, table: HyperTable):
        self.table = table
        self.report = check_hypergroup(table)
        if not self.report.ok:
            raise PreconditionError("verify_hypergroup_laws needs a validated hypergroup",
                                    witness=self.report.first_failure)
        self.n = table.size

    @cached_property
    def full_zeros(self) -> tuple:
        return tuple(reversible_zeros(self.table.cells, self.n))

    def name(self, a) -> str:
        return self.table.carrier.names[a]


class SpaceContext:
    def __init__(self, space: HyperVectorSpace):
        if space.size > MAX_HARNESS_VECTORS:
            raise PreconditionError(
                f"theorem harness is limited to |V| <= {MAX_HARNESS_VECTORS}, got {space.size}")
        self.space = space
        self.n = space.size
        self.full = space.vectors.full

    def name(self, v) -> str:
        return self.space.vectors.names[v]

    def names(self, vecs) -> str:
        return "(" + ",".join(self.name(v) for v in vecs) + ")"

    def fmt(self, mask) -> str:
        return "{" + ",".join(self.name(v) for v in members(mask)) + "}"

    @cached_property
    def subspaces(self) -> tuple:
        return tuple(W for W in range(1, 1 << self.n) if is_subspace(self.space, W))

    @cached_property
    def pairs(self) -> tuple:
        return tuple((U, W) for U in self.subspaces for W in self.subspaces)

    @cached_property
    def nonnull(self) -> tuple:
        return tuple(v for v in range(self.n) if v != self.space.theta)

    def sets(self, lo, hi):
        for k in range(lo, min(hi, self.n) + 1):
            yield from combinations(range(self.n), k)

    @cached_property
    def spanning_sets(self) -> tuple:
        return tuple(s for s in self.sets(1, MAX_LIST) if _span0(self.space, s) == self.full)

    @cached_property
    def independent_sets(self) -> tuple:
        """Every independent set, smallest first, grown one vector at a time."""
        out = [()]
        layer = [()]
        while layer:
            nxt = []
            for s in layer:
                start = s[-1] + 1 if s else 0
                for v in range(start, self.n):
                    cand = s + (v,)
                    if is_dependent(self.space, cand) is None:
                        nxt.append(cand)
            out.extend(nxt)
            layer = nxt
        return tuple(out)

    @cached_property
    def bases(self) -> tuple:
        return tuple(s for s in self.independent_sets
                     if len(s) <= MAX_BASIS and _span0(self.space, s) == self.full)

    @cached_property
    def intersection_families(self) -> tuple:
        """Families whose intersections cover every family's intersection.

        Any finite family intersects down through pairwise steps, so closing
        the subspace list under pairwise intersection reaches every value.
        """
        seen = {W: (W,) for W in self.subspaces}
        frontier = list(seen)
        while frontier:
            new = []
            for A in frontier:
                for B in list(seen):
                    C = A & B
                    if C not in seen:
                        seen[C] = tuple(sorted(set(seen[A]) | set(seen[B])))
                        new.append(C)
            frontier = new
        return tuple(seen[W] for W in sorted(seen))


def _needs_strong_left(ctx):
    return None if ctx.space.strong_left else NOT_STRONG_LEFT


def _needs_commutative(ctx):
    return None if ctx.report.is_commutative else NOT_COMMUTATIVE


# ---------------------------------------------------------------------------
# hypergroup laws


def _r25(ctx, a):
    inv = ctx.report.inverse
    return inv[inv[a]] == a


def _r26(ctx, a):
    z = ctx.report.zero
    return ctx.table.cells[z][a] == 1 << a and ctx.table.cells[a][z] == 1 << a


def _r27(ctx, _w):
    return len(ctx.full_zeros) == 1


def _r27_note(ctx):
    # elements satisfying only the unique-inverse clause may be more numerous
    return f"inverse_clause_zeros={len(members(ctx.report.zeros))}"


# ---------------------------------------------------------------------------
# space laws


def _r37i(ctx, k):
    s = ctx.space
    return s.act(k, s.theta_mask) == s.theta_mask


def _r37ii(ctx, w):
    k, x = w
    s = ctx.space
    return s.action[k][x] != s.theta_mask or k == s.field.zero or x == s.theta


def _r37iii(ctx, x):
    s = ctx.space
    minus_one = s.field.neg[s.field.one]
    return bool(s.action[minus_one][x] >> s.vneg[x] & 1)


def _t42(ctx, W):
    return four_property_subspace(ctx.space, W) == is_subspace(ctx.space, W)


def _t43(ctx, W):
    return check_subspace(ctx.space, W).criteria_agree


def _t45(ctx, w):
    U, W = w
    return is_subspace(ctx.space, U & W)


def _t46(ctx, family):
    acc = ctx.full
    for W in family:
        acc &= W
    return is_subspace(ctx.space, acc)


def _t48(ctx, w):
    U, W = w
    return is_subspace(ctx.space, ctx.space.add(U, W))


def _t410(ctx, w):
    U, W = w
    return ctx.space.add(U, W) == subspace_closure(ctx.space, U | W)


def _t411(ctx, S):
    mask = 0
    for v in S:
        mask |= 1 << v
    return _span0(ctx.space, S) == subspace_closure(ctx.space, mask)


# ---------------------------------------------------------------------------
# dependence theorems


def _r53(ctx, x):
    return is_dependent(ctx.space, [x]) is None


def _r54(ctx, S):
    return is_dependent(ctx.space, list(S)) is not None


def _t56(ctx, S):
    dep = is_dependent(ctx.space, list(S)) is not None
    some = any(express_as_combination(ctx.space, list(S), i) is not None for i in range(len(S)))
    return dep == some


def _t57(ctx, seq):
    dep = is_dependent(ctx.space, list(seq)) is not None
    some = any(in_combination_of(ctx.space, seq[k], list(seq[:k])) is not None
               for k in range(1, len(seq)))
    return dep == some


def _t58(ctx, S):
    try:
        kept = delete_redundant(ctx.space, list(S))
    except TheoremViolation:
        return False
    return len(kept) < len(S) and set(kept) <= set(S) and _span0(ctx.space, kept) == ctx.full


def _t59(ctx, S):
    return all(_span0(ctx.space, sub) != ctx.full
               for k in range(len(S)) for sub in combinations(S, k))


def _t510(ctx, w):
    gens, indep = w
    try:
        out = exchange(ctx.space, list(gens), list(indep))
    except TheoremViolation:
        return False
    rest = out[len(indep):]
    return (len(indep) <= len(gens) and tuple(out[:len(indep)]) == tuple(indep)
            and len(rest) == len(gens) - len(indep) and set(rest) <= set(gens)
            and _span0(ctx.space, out) == ctx.full)


def _t510_domain(ctx):
    for gens in ctx.spanning_sets:
        for indep in ctx.independent_sets:
            if len(indep) <= MAX_LIST:
                yield (gens, indep)


# ---------------------------------------------------------------------------
# basis theorems


def _t62(ctx, w):
    B, x = w
    return len(representations(ctx.space, B, x)) == 1


def _t62_note(ctx):
    counts = sorted({len(representations(ctx.space, B, ctx.space.theta)) for B in ctx.bases})
    return "theta_representations=" + ",".join(map(str, counts)) if counts else ""


def _t63(ctx, S):
    B = extend_to_basis(ctx.space, list(S))
    return tuple(B.vectors[:len(S)]) == tuple(S) and is_basis(ctx.space, B.vectors)


def _t64_domain(ctx):
    indep = set(ctx.independent_sets)
    for s in ctx.independent_sets:
        if not any(tuple(sorted(s + (v,))) in indep for v in range(ctx.n) if v not in s):
            yield s


def _t64(ctx, S):
    return is_basis(ctx.space, list(S))


def _t65(ctx, w):
    U, W = w
    s = ctx.space
    d = lambda X: dimension(s, within=X)
    return d(s.add(U, W)) == d(U) + d(W) - d(U & W)


# ---------------------------------------------------------------------------
# registry


def _pair_show(ctx, w):
    return f"U={ctx.fmt(w[0])};W={ctx.fmt(w[1])}"


PROPERTIES = (
    Property("R2.5", "hypergroup", "laws", lambda c: range(c.n), _r25, lambda c, a: f"a={c.name(a)}"),
    Property("R2.6", "hypergroup", "laws", lambda c: range(c.n), _r26, lambda c, a: f"a={c.name(a)}",
             requires=_needs_commutative),
    Property("R2.7", "hypergroup", "laws", lambda c: [("zeros",)], _r27,
             lambda c, _w: "zeros={" + ",".join(c.name(z) for z in c.full_zeros) + "}",
             requires=_needs_commutative, note=_r27_note),

    Property("R3.7i", "space", "laws", lambda c: range(c.space.field.order), _r37i,
             lambda c, k: f"k={c.space.field.names[k]}"),
    Property("R3.7ii", "space", "laws",
             lambda c: ((k, x) for k in range(c.space.field.order) for x in range(c.n)), _r37ii,
             lambda c, w: f"k={c.space.field.names[w[0]]};x={c.name(w[1])}"),
    Property("R3.7iii", "space", "laws", lambda c: range(c.n), _r37iii, lambda c, x: f"x={c.name(x)}"),
    Property("T4.2", "space", "laws", lambda c: range(1 << c.n), _t42, lambda c, W: f"W={c.fmt(W)}"),
    Property("T4.3", "space", "laws", lambda c: range(1 << c.n), _t43, lambda c, W: f"W={c.fmt(W)}"),
    Property("T4.5", "space", "laws", lambda c: c.pairs, _t45, _pair_show),
    Property("T4.6", "space", "laws", lambda c: c.intersection_families, _t46,
             lambda c, f: "family=" + "|".join(c.fmt(W) for W in f)),
    Property("T4.8", "space", "laws", lambda c: c.pairs, _t48, _pair_show),
    Property("T4.10", "space", "laws", lambda c: c.pairs, _t410, _pair_show),
    Property("T4.11", "space", "laws", lambda c: c.sets(1, MAX_LIST), _t411,
             lambda c, S: f"S={c.names(S)}", requires=_needs_strong_left),

    Property("R5.3", "space", "linalg", lambda c: c.nonnull, _r53, lambda c, x: f"x={c.name(x)}"),
    Property("R5.4", "space", "linalg",
             lambda c: (S for S in c.sets(1, MAX_LIST) if c.space.theta in S), _r54,
             lambda c, S: f"S={c.names(S)}"),
    Property("T5.6", "space", "linalg", lambda c: c.sets(2, MAX_LIST), _t56, lambda c, S: f"S={c.names(S)}"),
    Property("T5.7", "space", "linalg",
             lambda c: (p for k in range(2, MAX_LIST + 1) for p in permutations(c.nonnull, k)), _t57,
             lambda c, S: f"seq={c.names(S)}"),
    Property("T5.8", "space", "linalg",
             lambda c: (S for S in c.spanning_sets if is_dependent(c.space, list(S)) is not None), _t58,
             lambda c, S: f"gens={c.names(S)}", requires=_needs_strong_left),
    Property("T5.9", "space", "linalg", lambda c: c.bases, _t59, lambda c, S: f"S={c.names(S)}"),
    Property("T5.10", "space", "linalg", _t510_domain, _t510,
             lambda c, w: f"gens={c.names(w[0])};indep={c.names(w[1])}", requires=_needs_strong_left),

    Property("T6.2", "space", "basis",
             lambda c: ((B, x) for B in c.bases for x in c.nonnull), _t62,
             lambda c, w: f"basis={c.names(w[0])};x={c.name(w[1])}", requires=_needs_strong_left,
             note=_t62_note),
    Property("T6.3", "space", "basis",
             lambda c: (S for S in c.independent_sets if len(S) <= MAX_LIST), _t63,
             lambda c, S: f"indep={c.names(S)}", requires=_needs_strong_left),
    Property("T6.4", "space", "basis", _t64_domain, _t64, lambda c, S: f"S={c.names(S)}"),
    Property("T6.5", "space", "basis", lambda c: c.pairs, _t65, _pair_show, requires=_needs_strong_left),
)

BY_ID = {p.pid: p for p in PROPERTIES}
SUITES = ("laws", "linalg", "basis")


def _context(prop, structure):
    if isinstance(structure, (HypergroupContext, SpaceContext)):
        return structure
    if prop.target == "hypergroup":
        return HypergroupContext(structure)
    return SpaceContext(structure)


def run_property(prop: Property, ctx, structure_id: str) -> PropertyVerdict:
    reason = prop.requires(ctx) if prop.requires else None
    if reason:
        return PropertyVerdict(prop.pid, structure_id, SKIP, skipped_reason=reason)
    checked = 0
    for w in prop.domain(ctx):
        checked += 1
        if not prop.holds(ctx, w):
            return PropertyVerdict(prop.pid, structure_id, FAIL, witness=w, checked=checked,
                                   detail=prop.show(ctx, w))
    note = prop.note(ctx) if prop.note else ""
    return PropertyVerdict(prop.pid, structure_id, PASS, checked=checked, note=note)


def replay(property_id: str, structure, witness) -> bool:
    """Re-evaluate one property instance; True when the property holds there."""
    prop = BY_ID[property_id]
    return prop.holds(_context(prop, structure), witness)


def _sweep(target, suite, structure, structure_id):
    props = [p for p in PROPERTIES if p.target == target and p.suite == suite]
    ctx = _context(props[0], structure)
    return [run_property(p, ctx, structure_id) for p in props]


def verify_hypergroup_laws(table: HyperTable, structure_id: str = "H") -> list:
    return _sweep("hypergroup", "laws", table, structure_id)


def verify_space_laws(space: HyperVectorSpace, structure_id: str = "V") -> list:
    return _sweep("space", "laws", space, structure_id)


def verify_linalg_theorems(space: HyperVectorSpace, structure_id: str = "V") -> list:
    return _sweep("space", "linalg", space, structure_id)


def verify_basis_theorems(space: HyperVectorSpace, structure_id: str = "V") -> list:
    return _sweep("space", "basis", space, structure_id)


def verify_space(space: HyperVectorSpace, structure_id: str = "V", suites=SUITES) -> list:
    """All requested space suites sharing one context (so domains are computed once)."""
    ctx = SpaceContext(space)
    return [run_property(p, ctx, structure_id)
            for s in suites for p in PROPERTIES if p.target == "space" and p.suite == s]
