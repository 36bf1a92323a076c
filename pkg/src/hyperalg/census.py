"""Exhaustive census of small hypergroups and hyperfields, up to relabeling.

Search space reductions:

* the zero is placed at index 0 (any structure can be relabeled that way);
* commutative search enumerates only cells with ``i <= j``;
* commutative search forces ``0 # a = {a}``, which every commutative
  hypergroup satisfies. Non-commutative search does not use this;
* partial associativity is checked on every node: a triple is tested as
  soon as all cells it touches are assigned;
* at most one ``b`` per row may have ``0`` in ``a # b`` (and ``b # a``).

Results are deduplicated by canonical form: the lexicographically least
cell tuple over relabelings that send a zero to index 0. Subtrees can be
searched by several worker processes; results are merged and sorted, so the
output does not depend on the worker count.
"""

import hashlib
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations, product

from .axioms import EQUAL, check_hyperfield, check_hypergroup, inverse_map, reversibility_witness
from .core import Carrier, HyperTable, MulTable, members
from .errors import BudgetExceeded, StructureError

COMMUTATIVE_HYPERGROUP = "commutative-hypergroup"
HYPERGROUP = "hypergroup"
HYPERFIELD = "hyperfield"
KINDS = (COMMUTATIVE_HYPERGROUP, HYPERGROUP, HYPERFIELD)

MAX_ORDER = {COMMUTATIVE_HYPERGROUP: 4, HYPERGROUP: 4, HYPERFIELD: 3}
DEFAULT_BUDGET = 5e7

_PREFIX = {COMMUTATIVE_HYPERGROUP: "CH", HYPERGROUP: "H", HYPERFIELD: "HF"}


@dataclass(frozen=True)
class CensusEntry:
    kind: str
    order: int
    key: tuple
    add: HyperTable
    mul: MulTable = None
    zero: int = 0
    one: int = 0

    @property
    def canonical_form(self) -> str:
        body = ",".join(map(str, self.key))
        return f"{self.kind}:{self.order}:{body}"

    @property
    def id(self) -> str:
        return hashlib.sha256(self.canonical_form.encode()).hexdigest()[:12]

    @property
    def name(self) -> str:
        return f"{_PREFIX[self.kind]}{self.order}_{self.id}"


# ---------------------------------------------------------------------------
# canonical forms


def _relabel_mask(mask, perm):
    out = 0
    for i in members(mask):
        out |= 1 << perm[i]
    return out


def hypergroup_key(cells, n, zeros) -> tuple:
    """Least row-major cell tuple over relabelings sending some element of ``zeros`` to 0."""
    best = None
    for perm in permutations(range(n)):
        if not any(perm[z] == 0 for z in zeros):
            continue
        inv = [0] * n
        for i, p in enumerate(perm):
            inv[p] = i
        key = tuple(_relabel_mask(cells[inv[i]][inv[j]], perm) for i in range(n) for j in range(n))
        if best is None or key < best:
            best = key
    return best


def hyperfield_key(add_cells, mul_cells, zero, one, n) -> tuple:
    """Least (add cells, mul cells, one) over relabelings sending ``zero`` to 0."""
    best = None
    for perm in permutations(range(n)):
        if perm[zero] != 0:
            continue
        inv = [0] * n
        for i, p in enumerate(perm):
            inv[p] = i
        key = (tuple(_relabel_mask(add_cells[inv[i]][inv[j]], perm) for i in range(n) for j in range(n))
               + tuple(perm[mul_cells[inv[i]][inv[j]]] for i in range(n) for j in range(n))
               + (perm[one],))
        if best is None or key < best:
            best = key
    return best


def reversible_zeros(cells, n) -> list:
    """Elements that act as a zero for which reversibility holds."""
    out = []
    for e in range(n):
        inv, _ = inverse_map(cells, n, e)
        if inv is not None and reversibility_witness(cells, n, inv) is None:
            out.append(e)
    return out


def entry_from_key(kind, n, key) -> CensusEntry:
    carrier = Carrier.of_size(n)
    rows = tuple(tuple(key[i * n:(i + 1) * n]) for i in range(n))
    add = HyperTable(carrier, rows)
    if kind != HYPERFIELD:
        return CensusEntry(kind, n, key, add)
    m = key[n * n:2 * n * n]
    mul = MulTable(carrier, tuple(tuple(m[i * n:(i + 1) * n]) for i in range(n)))
    return CensusEntry(kind, n, key, add, mul, 0, key[-1])


def canonical_entry(kind, add: HyperTable, mul=None, zero=0, one=0) -> CensusEntry:
    """Canonicalize an already validated structure."""
    n = add.size
    if kind == HYPERFIELD:
        key = hyperfield_key(add.cells, mul.cells, zero, one, n)
    else:
        key = hypergroup_key(add.cells, n, reversible_zeros(add.cells, n))
    return entry_from_key(kind, n, key)


# ---------------------------------------------------------------------------
# budget


def _free_cells(kind, n):
    if kind == COMMUTATIVE_HYPERGROUP:
        return [(i, j) for i in range(1, n) for j in range(i, n)]
    if kind == HYPERGROUP:
        return [(i, j) for i in range(n) for j in range(n)]
    raise ValueError(kind)


def estimated_cost(kind, n) -> float:
    if kind == HYPERFIELD:
        add_cells = len(_free_cells(COMMUTATIVE_HYPERGROUP, n))
        mul_cells = sum(1 for i in range(2, n) for j in range(i, n))
        return float((2 ** n - 1) ** add_cells * max(n, 1) ** mul_cells)
    return float((2 ** n - 1) ** len(_free_cells(kind, n)))


def resolve_budget(budget=None) -> float:
    if budget is not None:
        return float(budget)
    env = os.environ.get("HYPERALG_BUDGET")
    return float(env) if env else DEFAULT_BUDGET


def check_budget(kind, n, budget=None):
    if kind not in KINDS:
        raise StructureError(f"unknown census kind {kind!r}")
    if n < 1:
        raise StructureError("order must be at least 1")
    limit = resolve_budget(budget)
    cost = estimated_cost(kind, n)
    overridden = budget is not None or os.environ.get("HYPERALG_BUDGET")
    if cost > limit or (n > MAX_ORDER[kind] and not overridden):
        raise BudgetExceeded(cost, limit)
    return cost


# ---------------------------------------------------------------------------
# search


def _partial_ok(cells, n):
    """No fully determined triple violates associativity."""
    for x in range(n):
        row_x = cells[x]
        for y in range(n):
            xy = row_x[y]
            if not xy:
                continue
            for z in range(n):
                yz = cells[y][z]
                if not yz:
                    continue
                lhs = 0
                for u in members(xy):
                    c = cells[u][z]
                    if not c:
                        lhs = -1
                        break
                    lhs |= c
                if lhs < 0:
                    continue
                rhs = 0
                for v in members(yz):
                    c = row_x[v]
                    if not c:
                        rhs = -1
                        break
                    rhs |= c
                if rhs >= 0 and lhs != rhs:
                    return False
    return True


def _inverse_ok(cells, n, a):
    count = 0
    for b in range(n):
        if cells[a][b] & 1 and cells[b][a] & 1:
            count += 1
            if count > 1:
                return False
    return True


def _hypergroup_keys(kind, n, first_value=None):
    commutative = kind == COMMUTATIVE_HYPERGROUP
    cells = [[0] * n for _ in range(n)]
    if commutative:
        for a in range(n):
            cells[0][a] = cells[a][0] = 1 << a
    free = _free_cells(kind, n)
    options = range(1, 1 << n)
    found = set()

    def leaf():
        if not inverse_map(cells, n, 0)[0]:
            return
        table = HyperTable(Carrier.of_size(n), cells)
        rep = check_hypergroup(table)
        if not rep.ok or (commutative and not rep.is_commutative):
            return
        zeros = reversible_zeros(table.cells, n)
        if 0 not in zeros:
            return
        found.add(hypergroup_key(table.cells, n, zeros))

    def walk(k):
        if k == len(free):
            leaf()
            return
        i, j = free[k]
        vals = options if (k or first_value is None) else (first_value,)
        for m in vals:
            cells[i][j] = m
            if commutative:
                cells[j][i] = m
            if _inverse_ok(cells, n, i) and _inverse_ok(cells, n, j) and _partial_ok(cells, n):
                walk(k + 1)
        cells[i][j] = 0
        if commutative:
            cells[j][i] = 0

    if free:
        walk(0)
    else:
        leaf()
    return found


def _hyperfield_keys(n, first_value=None):
    carrier = Carrier.of_size(n)
    if n == 1:
        rep = check_hyperfield(HyperTable(carrier, ((1,),)), MulTable(carrier, ((0,),)), 0, 0)
        return {hyperfield_key(((1,),), ((0,),), 0, 0, 1)} if rep.ok else set()
    found = set()
    add_free = _free_cells(COMMUTATIVE_HYPERGROUP, n)
    mul_free = [(i, j) for i in range(2, n) for j in range(i, n)]
    add_choices = list(product(range(1, 1 << n), repeat=len(add_free)))
    if first_value is not None:
        add_choices = [c for c in add_choices if c[0] == first_value]
    for add_vals in add_choices:
        cells = [[0] * n for _ in range(n)]
        for a in range(n):
            cells[0][a] = cells[a][0] = 1 << a
        for (i, j), m in zip(add_free, add_vals):
            cells[i][j] = cells[j][i] = m
        if not _partial_ok(cells, n):
            continue
        add = HyperTable(carrier, cells)
        for mul_vals in product(range(n), repeat=len(mul_free)):
            mc = [[0] * n for _ in range(n)]
            for a in range(n):
                mc[1][a] = mc[a][1] = a
            mc[0] = [0] * n
            for a in range(n):
                mc[a][0] = 0
            for (i, j), v in zip(mul_free, mul_vals):
                mc[i][j] = mc[j][i] = v
            mul = MulTable(carrier, mc)
            if check_hyperfield(add, mul, 0, 1, EQUAL).ok:
                found.add(hyperfield_key(add.cells, mul.cells, 0, 1, n))
    return found


def _subtree(args):
    kind, n, first_value = args
    if kind == HYPERFIELD:
        return _hyperfield_keys(n, first_value)
    return _hypergroup_keys(kind, n, first_value)


def _first_cell_values(kind, n):
    if kind == HYPERFIELD:
        return list(range(1, 1 << n)) if n > 1 else [None]
    return list(range(1, 1 << n)) if _free_cells(kind, n) else [None]


def enumerate_structures(kind, order, commutative=False, jobs=1, budget=None) -> list:
    """Every structure of ``kind`` and ``order`` up to relabeling, sorted by canonical key.

    ``kind`` is one of ``commutative-hypergroup``, ``hypergroup`` or
    ``hyperfield``; ``hypergroup`` with ``commutative=True`` means the
    commutative kind. Raises :class:`BudgetExceeded` past the budget.
    """
    if kind == HYPERGROUP and commutative:
        kind = COMMUTATIVE_HYPERGROUP
    check_budget(kind, order, budget)
    tasks = [(kind, order, v) for v in _first_cell_values(kind, order)]
    keys = set()
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_subtree, tasks):
                keys |= part
    else:
        for t in tasks:
            keys |= _subtree(t)
    return [entry_from_key(kind, order, k) for k in sorted(keys)]
