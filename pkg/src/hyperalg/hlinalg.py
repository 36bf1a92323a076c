"""Linear combinations, spans, dependence, bases and dimension.

Vectors are indices into ``space.vectors``; subsets of vectors are masks;
coefficient tuples are tuples of scalar indices. Every search walks the
coefficient space in lexicographic order of scalar indices, so witnesses
are deterministic.

Searches do not enumerate ``F**n`` blindly. Because ``#`` is associative
and its set extension distributes over union, the union of
``c1*v1 # ... # cn*vn`` over every choice of the remaining coefficients
is the sum of the per-vector "lines" ``U_a a*v``. That gives an exact
feasibility test for a coefficient prefix, so the lexicographically first
solution is found without backtracking beyond one level.

Operations whose correctness rests on strong left distributivity check it
and raise :class:`~hyperalg.errors.HypothesisError` unless called with
``strict=False``. With ``strict=False`` they compute the definitional
object (union of combinations, independent covering set, its size) on any
space, without the guarantees that hypothesis brings.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .axioms import HyperVectorSpace, is_subspace
from .core import Mask, _ext, members
from .errors import HypothesisError, PreconditionError, TheoremViolation


@dataclass(frozen=True)
class DependenceWitness:
    coeffs: tuple
    vectors: tuple


@dataclass(frozen=True)
class Basis:
    vectors: tuple

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def __len__(self):
        return len(self.vectors)


def require_strong_left(space: HyperVectorSpace, what: str, strict: bool = True) -> None:
    if strict and not space.strong_left:
        raise HypothesisError(
            f"{what} needs a strongly left distributive space; this one is not "
            f"(use subspace_closure, or strict=False / --allow-weak for the definitional computation)"
        )


def _check_vecs(space, vecs):
    n = space.size
    for v in vecs:
        if not 0 <= v < n:
            raise PreconditionError(f"vector index {v} out of range")


def linear_combination(space: HyperVectorSpace, coeffs: Sequence[int], vecs: Sequence[int]) -> Mask:
    """``c1*v1 # c2*v2 # ... # cn*vn``."""
    if len(coeffs) != len(vecs) or not vecs:
        raise ValueError("coeffs and vecs must have the same non-zero length")
    _check_vecs(space, vecs)
    nf = space.field.order
    if any(not 0 <= c < nf for c in coeffs):
        raise PreconditionError("scalar index out of range")
    cells = space.vadd.cells
    acc = space.action[coeffs[0]][vecs[0]]
    for c, v in zip(coeffs[1:], vecs[1:]):
        acc = _ext(cells, acc, space.action[c][v])
    return acc


def _fold_lines(space, vecs, lines) -> Mask:
    cells = space.vadd.cells
    acc = space.theta_mask
    for v in vecs:
        acc = _ext(cells, acc, lines[v])
    return acc


class _Search:
    """Exact-pruned walk over coefficient tuples for a fixed vector list."""

    def __init__(self, space, vecs, need_nonzero):
        self.space = space
        self.vecs = tuple(vecs)
        self.need_nonzero = need_nonzero
        cells = space.vadd.cells
        k = len(self.vecs)
        theta = space.theta_mask
        suffix_all = [theta] * (k + 1)
        suffix_nz = [0] * (k + 1)
        for j in range(k - 1, -1, -1):
            v = self.vecs[j]
            suffix_all[j] = _ext(cells, space.lines[v], suffix_all[j + 1])
            nz = _ext(cells, space.nonzero_lines[v], suffix_all[j + 1]) if space.nonzero_lines[v] else 0
            suffix_nz[j] = nz | suffix_nz[j + 1]
        self.suffix_all = suffix_all
        self.suffix_nz = suffix_nz

    def _reachable(self, prefix, j, nz):
        rest = self.suffix_all[j] if (nz or not self.need_nonzero) else self.suffix_nz[j]
        if not rest:
            return 0
        if prefix is None:
            return rest
        return _ext(self.space.vadd.cells, prefix, rest)

    def possible(self, target) -> bool:
        return bool(self._reachable(None, 0, False) >> target & 1)

    def solutions(self, target, first_only=False):
        space = self.space
        cells = space.vadd.cells
        zero = space.field.zero
        nf = space.field.order
        k = len(self.vecs)
        out = []

        def walk(prefix, j, nz, chosen):
            if j == k:
                out.append(tuple(chosen))
                return True
            v = self.vecs[j]
            for a in range(nf):
                part = space.action[a][v]
                nxt = part if prefix is None else _ext(cells, prefix, part)
                nz2 = nz or a != zero
                if self._reachable(nxt, j + 1, nz2) >> target & 1:
                    chosen.append(a)
                    done = walk(nxt, j + 1, nz2, chosen)
                    chosen.pop()
                    if done and first_only:
                        return True
            return False

        if k and self.possible(target):
            walk(None, 0, False, [])
        return out


def span(space: HyperVectorSpace, vecs: Sequence[int], strict: bool = True) -> Mask:
    """Union of every linear combination of ``vecs`` (the hyperlinear span).

    Only in a strongly left distributive space is this guaranteed to be a
    subspace (and the smallest one containing ``vecs``).
    """
    require_strong_left(space, "span", strict)
    if not vecs:
        raise ValueError("span needs at least one vector")
    _check_vecs(space, vecs)
    return _fold_lines(space, vecs, space.lines)


def _span0(space, vecs) -> Mask:
    # span with the empty list allowed ({theta})
    return _fold_lines(space, vecs, space.lines)


def subspace_closure(space: HyperVectorSpace, S: Mask) -> Mask:
    """Smallest subset containing ``S`` and theta closed under # and every scalar action."""
    space.vectors.check_mask(S)
    cells = space.vadd.cells
    W = S | space.theta_mask
    for _ in range(space.size + 1):
        new = W
        ws = members(W)
        for x in ws:
            row = cells[x]
            for y in ws:
                new |= row[y]
        for row in space.action:
            for x in ws:
                new |= row[x]
        if new == W:
            return W
        W = new
    raise AssertionError("closure did not stabilise")  # unreachable: W grows each round


def is_dependent(space: HyperVectorSpace, vecs: Sequence[int]) -> Optional[DependenceWitness]:
    """Lexicographically first non-zero coefficient tuple whose combination contains theta."""
    if not vecs:
        raise ValueError("is_dependent needs at least one vector")
    _check_vecs(space, vecs)
    found = _Search(space, vecs, True).solutions(space.theta, first_only=True)
    return DependenceWitness(found[0], tuple(vecs)) if found else None


def is_independent(space, vecs) -> bool:
    return not vecs or is_dependent(space, vecs) is None


def set_is_dependent(space: HyperVectorSpace, S: Mask) -> bool:
    """Set-level dependence: some non-empty subset of ``S`` is dependent (brute force)."""
    elems = members(S)
    return any(
        is_dependent(space, sub) is not None
        for k in range(1, len(elems) + 1)
        for sub in combinations(elems, k)
    )


def combinations_reaching(space, target: int, vecs: Sequence[int], first_only=False) -> list:
    """Coefficient tuples ``c`` (lexicographic) with ``target`` in LC(c, vecs)."""
    _check_vecs(space, vecs)
    return _Search(space, vecs, False).solutions(target, first_only=first_only)


def in_combination_of(space, target: int, vecs: Sequence[int]) -> Optional[tuple]:
    """First coefficient tuple expressing ``target`` from ``vecs`` or None.

    The empty list expresses exactly theta (empty tuple).
    """
    if not vecs:
        return () if target == space.theta else None
    found = combinations_reaching(space, target, vecs, first_only=True)
    return found[0] if found else None


def express_as_combination(space: HyperVectorSpace, vecs: Sequence[int], i: int) -> Optional[tuple]:
    """Coefficients over ``vecs`` minus position ``i`` whose combination contains ``vecs[i]``."""
    if len(vecs) < 2:
        raise ValueError("express_as_combination needs at least two vectors")
    if not 0 <= i < len(vecs):
        raise ValueError(f"position {i} out of range")
    rest = list(vecs[:i]) + list(vecs[i + 1:])
    return in_combination_of(space, vecs[i], rest)


def _require_subspace(space, W, name):
    if not is_subspace(space, W):
        raise PreconditionError(f"{name} = {space.fmt(W)} is not a subspace")


def sum_subspaces(space: HyperVectorSpace, W1: Mask, W2: Mask) -> Mask:
    """``W1 # W2``: union of ``x # y`` over x in W1, y in W2."""
    _require_subspace(space, W1, "W1")
    _require_subspace(space, W2, "W2")
    return space.add(W1, W2)


def is_direct_sum(space: HyperVectorSpace, W1: Mask, W2: Mask) -> bool:
    _require_subspace(space, W1, "W1")
    _require_subspace(space, W2, "W2")
    return W1 & W2 == space.theta_mask


def delete_redundant(space: HyperVectorSpace, gens: Sequence[int], strict: bool = True) -> list:
    """Drop vectors expressible from the others until the list is independent.

    At each step the lowest position that is expressible from the rest *and*
    whose removal keeps the span is dropped. In a strongly left distributive
    space every expressible position qualifies; if none does there, that
    contradicts the deletion theorem and :class:`TheoremViolation` is raised.
    An independent input comes back unchanged.
    """
    require_strong_left(space, "delete_redundant", strict)
    current = list(gens)
    _check_vecs(space, current)
    if not current:
        return current
    target = _span0(space, current)
    while len(current) > 1 and is_dependent(space, current) is not None:
        expressible = [i for i in range(len(current)) if express_as_combination(space, current, i) is not None]
        keep = next((i for i in expressible
                     if _span0(space, current[:i] + current[i + 1:]) == target), None)
        if keep is None:
            if space.strong_left:
                raise TheoremViolation("no removable generator in a dependent spanning list",
                                       witness=tuple(current))
            break
        del current[keep]
    if len(current) == 1 and current[0] == space.theta and target == space.theta_mask:
        # {theta} is spanned by the empty list
        return []
    return current


def extend_to_basis(space: HyperVectorSpace, indep: Sequence[int] = (), within: Optional[Mask] = None,
                    strict: bool = True) -> Basis:
    """Greedily append the lowest-index vector outside the current span.

    ``within`` restricts the construction to a subspace (default: all of V).
    """
    require_strong_left(space, "extend_to_basis", strict)
    target = space.vectors.full if within is None else within
    if within is not None:
        _require_subspace(space, within, "within")
    current = list(indep)
    _check_vecs(space, current)
    for v in current:
        if not target >> v & 1:
            raise PreconditionError(f"vector {space.vectors.names[v]} lies outside the target subspace")
    if current:
        w = is_dependent(space, current)
        if w is not None:
            raise PreconditionError("initial vectors are dependent", witness=w)
    while True:
        missing = target & ~_span0(space, current)
        if not missing:
            return Basis(tuple(current))
        current.append(members(missing)[0])


def dimension(space: HyperVectorSpace, within: Optional[Mask] = None, strict: bool = True) -> int:
    """Size of the greedy basis; the zero space has dimension 0."""
    return extend_to_basis(space, (), within=within, strict=strict).dim


def is_basis(space, vecs, within: Optional[Mask] = None) -> bool:
    target = space.vectors.full if within is None else within
    return is_independent(space, vecs) and _span0(space, vecs) & target == target


def representations(space: HyperVectorSpace, basis, alpha: int, strict: bool = True) -> list:
    """Every coefficient tuple c (lexicographic) with ``alpha`` in LC(c, basis)."""
    require_strong_left(space, "representations", strict)
    vecs = tuple(basis)
    if not vecs:
        return [()] if alpha == space.theta else []
    return combinations_reaching(space, alpha, vecs)


def exchange(space: HyperVectorSpace, gens: Sequence[int], indep: Sequence[int],
             strict: bool = True) -> list:
    """``indep`` followed by ``len(gens) - len(indep)`` of the generators, still spanning V.

    Generator subsets are tried in lexicographic order of positions.
    """
    require_strong_left(space, "exchange", strict)
    gens, indep = list(gens), list(indep)
    _check_vecs(space, gens + indep)
    full = space.vectors.full
    if _span0(space, gens) != full:
        raise PreconditionError("gens do not span V")
    w = is_dependent(space, indep) if indep else None
    if w is not None:
        raise PreconditionError("indep is dependent", witness=w)
    if len(indep) > len(gens):
        raise TheoremViolation(
            f"independent list of size {len(indep)} exceeds spanning list of size {len(gens)}",
            witness=(tuple(gens), tuple(indep)),
        )
    for pos in combinations(range(len(gens)), len(gens) - len(indep)):
        cand = indep + [gens[p] for p in pos]
        if _span0(space, cand) == full:
            return cand
    raise TheoremViolation("no exchange of generators spans V", witness=(tuple(gens), tuple(indep)))
