"""Carriers, set-valued operation tables and their set extension.

Subsets of a carrier are plain ``int`` bit masks: bit ``i`` set means index
``i`` is a member. Equality is therefore extensional and O(1).
"""

from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Iterable, Sequence

from .errors import StructureError

Mask = int


@lru_cache(maxsize=1 << 16)
def members(mask: Mask) -> tuple[int, ...]:
    """Indices present in ``mask``, ascending."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def mask_of(indices: Iterable[int]) -> Mask:
    m = 0
    for i in indices:
        if i < 0:
            raise StructureError(f"negative index {i}")
        m |= 1 << i
    return m


def singleton(i: int) -> Mask:
    return 1 << i


def full_mask(n: int) -> Mask:
    return (1 << n) - 1


def popcount(mask: Mask) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Carrier:
    """Ordered finite set of named elements; labels are presentation only."""

    names: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        if not self.names:
            raise StructureError("carrier must be non-empty")
        if len(set(self.names)) != len(self.names):
            raise StructureError(f"duplicate element names in {self.names}")

    @classmethod
    def of_size(cls, n: int) -> "Carrier":
        return cls(tuple(str(i) for i in range(n)))

    @property
    def size(self) -> int:
        return len(self.names)

    @property
    def full(self) -> Mask:
        return full_mask(self.size)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise StructureError(f"unknown element {name!r}") from None

    def check_mask(self, mask: Mask) -> None:
        if mask < 0 or mask >> self.size:
            raise StructureError(f"subset {mask:#b} has indices outside carrier of size {self.size}")

    def format_subset(self, mask: Mask) -> str:
        inner = " ".join(self.names[i] for i in members(mask))
        return "{ " + inner + " }" if inner else "{ }"


@dataclass(frozen=True)
class HyperTable:
    """n x n table whose cells are non-empty subsets (masks) of the carrier."""

    carrier: Carrier
    cells: tuple[tuple[Mask, ...], ...]

    def __post_init__(self):
        cells = tuple(tuple(row) for row in self.cells)
        object.__setattr__(self, "cells", cells)
        n = self.carrier.size
        if len(cells) != n or any(len(row) != n for row in cells):
            raise StructureError(f"hyperoperation table must be {n}x{n}")
        limit = 1 << n
        for i, row in enumerate(cells):
            for j, m in enumerate(row):
                if m <= 0:
                    raise StructureError(f"cell ({i},{j}) is empty; hyperoperation values must be non-empty")
                if m >= limit:
                    raise StructureError(f"cell ({i},{j}) references an index >= {n}")

    @classmethod
    def from_function(cls, carrier: Carrier, fn) -> "HyperTable":
        """Build from ``fn(i, j) -> iterable of indices``."""
        n = carrier.size
        return cls(carrier, tuple(tuple(mask_of(fn(i, j)) for j in range(n)) for i in range(n)))

    @property
    def size(self) -> int:
        return self.carrier.size

    def __call__(self, a: int, b: int) -> Mask:
        return self.cells[a][b]

    def is_commutative(self) -> bool:
        n = self.size
        return all(self.cells[i][j] == self.cells[j][i] for i in range(n) for j in range(i + 1, n))

    def replace(self, a: int, b: int, mask: Mask) -> "HyperTable":
        rows = [list(r) for r in self.cells]
        rows[a][b] = mask
        return HyperTable(self.carrier, tuple(tuple(r) for r in rows))


@dataclass(frozen=True)
class MulTable:
    """n x n table of single indices (an ordinary binary operation)."""

    carrier: Carrier
    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        cells = tuple(tuple(row) for row in self.cells)
        object.__setattr__(self, "cells", cells)
        n = self.carrier.size
        if len(cells) != n or any(len(row) != n for row in cells):
            raise StructureError(f"multiplication table must be {n}x{n}")
        for i, row in enumerate(cells):
            for j, v in enumerate(row):
                if not 0 <= v < n:
                    raise StructureError(f"multiplication cell ({i},{j}) = {v} out of range")

    @classmethod
    def from_function(cls, carrier: Carrier, fn) -> "MulTable":
        n = carrier.size
        return cls(carrier, tuple(tuple(fn(i, j) for j in range(n)) for i in range(n)))

    @property
    def size(self) -> int:
        return self.carrier.size

    def __call__(self, a: int, b: int) -> int:
        return self.cells[a][b]

    def image(self, a: int, mask: Mask) -> Mask:
        """``a . S`` as a subset."""
        row = self.cells[a]
        out = 0
        for b in members(mask):
            out |= 1 << row[b]
        return out

    def image_right(self, mask: Mask, b: int) -> Mask:
        out = 0
        for a in members(mask):
            out |= 1 << self.cells[a][b]
        return out


def _ext(cells, a_mask: Mask, b_mask: Mask) -> Mask:
    # unchecked hot path shared by the other modules
    out = 0
    bs = members(b_mask)
    for a in members(a_mask):
        row = cells[a]
        for b in bs:
            out |= row[b]
    return out


def extend_op(table: HyperTable, a_mask: Mask, b_mask: Mask) -> Mask:
    """Union of ``table[a][b]`` over ``a in A`` and ``b in B``."""
    if not a_mask or not b_mask:
        raise ValueError("extend_op needs non-empty operands")
    table.carrier.check_mask(a_mask)
    table.carrier.check_mask(b_mask)
    return _ext(table.cells, a_mask, b_mask)


def fold_op(table: HyperTable, parts: Sequence[Mask]) -> Mask:
    """Left fold of :func:`extend_op` over ``parts``.

    Only meaningful as an n-ary sum when the table is associative; callers
    are expected to have checked that already.
    """
    if not parts:
        raise ValueError("fold_op needs at least one part")
    for p in parts:
        if not p:
            raise ValueError("fold_op parts must be non-empty")
        table.carrier.check_mask(p)
    cells = table.cells
    return reduce(lambda acc, p: _ext(cells, acc, p), parts[1:], parts[0])
