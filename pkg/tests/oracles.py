"""Slow, independent reference implementations used as test oracles.

Nothing here imports the search or linear-algebra code under test; sets are
Python frozensets and every quantifier is enumerated in full.
"""

from itertools import permutations, product


def subsets(n):
    """All non-empty subsets of range(n) as frozensets."""
    return [frozenset(i for i in range(n) if m >> i & 1) for m in range(1, 1 << n)]


def ext(op, A, B):
    out = set()
    for a in A:
        for b in B:
            out |= op[a][b]
    return frozenset(out)


def is_hypergroup_with_zero(op, n, z):
    """Associativity, unique two-sided inverses w.r.t. z, and reversibility."""
    for x, y, w in product(range(n), repeat=3):
        if ext(op, op[x][y], {w}) != ext(op, {x}, op[y][w]):
            return False
    inv = {}
    for a in range(n):
        bs = [b for b in range(n) if z in op[a][b] and z in op[b][a]]
        if len(bs) != 1:
            return False
        inv[a] = bs[0]
    for a, b, c in product(range(n), repeat=3):
        if a in op[b][c] and b not in op[a][inv[c]]:
            return False
    return True


def hypergroup_zeros(op, n):
    return [z for z in range(n) if is_hypergroup_with_zero(op, n, z)]


def canonical(op, n, zeros):
    """Least row-major tuple of bitmasks over relabelings sending a zero to 0."""
    best = None
    for perm in permutations(range(n)):
        if not any(perm[z] == 0 for z in zeros):
            continue
        inv = {p: i for i, p in enumerate(perm)}
        key = tuple(sum(1 << perm[e] for e in op[inv[i]][inv[j]]) for i in range(n) for j in range(n))
        if best is None or key < best:
            best = key
    return best


def brute_commutative_census(n):
    """Canonical keys of every commutative hypergroup of order n.

    Enumerates every symmetric table (cells i <= j chosen freely), which is
    exactly the set of commutative tables.
    """
    subs = subsets(n)
    cells = [(i, j) for i in range(n) for j in range(i, n)]
    keys = set()
    for choice in product(subs, repeat=len(cells)):
        op = [[None] * n for _ in range(n)]
        for (i, j), s in zip(cells, choice):
            op[i][j] = op[j][i] = s
        zs = hypergroup_zeros(op, n)
        if zs:
            keys.add(canonical(op, n, zs))
    return keys


def brute_full_census(n, commutative_only):
    """Same, but over all n*n tables (only feasible for n <= 2)."""
    subs = subsets(n)
    keys = set()
    count = 0
    for choice in product(subs, repeat=n * n):
        count += 1
        op = [list(choice[i * n:(i + 1) * n]) for i in range(n)]
        if commutative_only and any(op[i][j] != op[j][i] for i in range(n) for j in range(n)):
            continue
        zs = hypergroup_zeros(op, n)
        if zs:
            keys.add(canonical(op, n, zs))
    return keys, count


# ---------------------------------------------------------------------------
# classical linear algebra over GF(p)


def rank_mod_p(rows, p):
    """Rank by Gaussian elimination over GF(p)."""
    m = [list(r) for r in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((r for r in range(rank, len(m)) if m[r][c] % p), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][c], p - 2, p)
        m[rank] = [(x * inv) % p for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][c] % p:
                f = m[r][c]
                m[r] = [(x - f * y) % p for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank


def classical_span(vectors, p, n):
    """All GF(p) combinations of the given coordinate tuples."""
    out = {tuple([0] * n)}
    for coeffs in product(range(p), repeat=len(vectors)):
        v = [0] * n
        for c, vec in zip(coeffs, vectors):
            v = [(x + c * y) % p for x, y in zip(v, vec)]
        out.add(tuple(v))
    return out


def classical_dependent(vectors, p):
    return rank_mod_p(vectors, p) < len(vectors)


# ---------------------------------------------------------------------------
# hyper-linear algebra by exhaustive coefficient enumeration


def space_sets(space):
    """(vadd, action) of a space as frozenset tables."""
    n = space.size
    to_set = lambda m: frozenset(i for i in range(n) if m >> i & 1)
    vadd = [[to_set(space.vadd.cells[i][j]) for j in range(n)] for i in range(n)]
    action = [[to_set(space.action[a][x]) for x in range(n)] for a in range(space.field.order)]
    return vadd, action


def combination(vadd, action, coeffs, vecs):
    acc = action[coeffs[0]][vecs[0]]
    for c, v in zip(coeffs[1:], vecs[1:]):
        acc = ext(vadd, acc, action[c][v])
    return acc


def brute_span(space, vecs):
    vadd, action = space_sets(space)
    out = set()
    for coeffs in product(range(space.field.order), repeat=len(vecs)):
        out |= combination(vadd, action, coeffs, vecs)
    return frozenset(out)


def brute_dependent(space, vecs):
    vadd, action = space_sets(space)
    zero = space.field.zero
    for coeffs in product(range(space.field.order), repeat=len(vecs)):
        if any(c != zero for c in coeffs) and space.theta in combination(vadd, action, coeffs, vecs):
            return coeffs
    return None


def brute_representations(space, basis, alpha):
    vadd, action = space_sets(space)
    return [c for c in product(range(space.field.order), repeat=len(basis))
            if alpha in combination(vadd, action, c, basis)]


def brute_subspaces(space):
    """Every subset closed under # and every scalar action (non-empty)."""
    vadd, action = space_sets(space)
    n = space.size
    out = []
    for W in subsets(n):
        if all(vadd[x][y] <= W for x in W for y in W) and all(row[x] <= W for row in action for x in W):
            out.append(W)
    return out


def to_mask(S):
    return sum(1 << i for i in S)


def members_of(mask):
    return {i for i in range(mask.bit_length()) if mask >> i & 1}


def is_hyperfield(add, mul, n, one):
    """Naive check with 0 as zero: hyperring (equality distributivity) plus field axioms.

    Cheap clauses go first; the result does not depend on the order.
    """
    r = range(n)
    if n > 1 and one == 0:
        return False
    if any(mul[a][0] != 0 or mul[0][a] != 0 for a in r):
        return False
    if any(mul[a][one] != a for a in r):
        return False
    if any(mul[a][b] != mul[b][a] for a in r for b in r):
        return False
    if any(not any(mul[a][b] == one for b in r) for a in r if a != 0):
        return False
    if any(mul[mul[a][b]][c] != mul[a][mul[b][c]] for a in r for b in r for c in r):
        return False
    for a, b, c in product(r, repeat=3):
        if frozenset(mul[a][x] for x in add[b][c]) != add[mul[a][b]][mul[a][c]]:
            return False
        if frozenset(mul[x][a] for x in add[b][c]) != add[mul[b][a]][mul[c][a]]:
            return False
    if any(add[i][j] != add[j][i] for i in r for j in r):
        return False
    return is_hypergroup_with_zero(add, n, 0)


def hyperfield_canonical(add, mul, n, one):
    best = None
    for perm in permutations(range(n)):
        if perm[0] != 0:
            continue
        inv = {p: i for i, p in enumerate(perm)}
        key = (tuple(sum(1 << perm[e] for e in add[inv[i]][inv[j]]) for i in range(n) for j in range(n))
               + tuple(perm[mul[inv[i]][inv[j]]] for i in range(n) for j in range(n)) + (perm[one],))
        if best is None or key < best:
            best = key
    return best


def brute_hyperfield_census(n):
    """Every hyperfield of order n: each commutative hypergroup (zero at 0) times every
    multiplication table and choice of one."""
    keys = set()
    for hkey in (brute_commutative_census(n) if n > 1 else {(1,)}):
        add = [[frozenset(e for e in range(n) if hkey[i * n + j] >> e & 1) for j in range(n)]
               for i in range(n)]
        for cells in product(range(n), repeat=n * n):
            mul = [list(cells[i * n:(i + 1) * n]) for i in range(n)]
            for one in range(n):
                if is_hyperfield(add, mul, n, one):
                    keys.add(hyperfield_canonical(add, mul, n, one))
    return keys
