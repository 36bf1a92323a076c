"""Built-in hyperfields, componentwise product spaces and coordinate subspaces."""

import re
from itertools import product

from .axioms import Hyperfield, HyperVectorSpace, make_hyperfield, make_space
from .core import Carrier, HyperTable, Mask, MulTable, mask_of
from .errors import PreconditionError, StructureError

MAX_PRODUCT_VECTORS = 343


def krasner_k2() -> Hyperfield:
    """{0, 1} with 1 + 1 = {0, 1} and ordinary multiplication."""
    c = Carrier(("0", "1"))
    add = HyperTable.from_function(c, lambda a, b: {0, 1} if a == b == 1 else {a | b})
    mul = MulTable.from_function(c, lambda a, b: a * b)
    return make_hyperfield(add, mul, 0, 1)


def sign_hyperfield() -> Hyperfield:
    """{0, 1, -1}: x + x = {x}, x + (-x) = everything, sign multiplication."""
    c = Carrier(("0", "1", "-1"))
    sign = (0, 1, -1)

    def add(a, b):
        if a == 0 or b == 0:
            return {a + b}
        return {a} if a == b else {0, 1, 2}

    mul = MulTable.from_function(c, lambda a, b: sign.index(sign[a] * sign[b]))
    return make_hyperfield(HyperTable.from_function(c, add), mul, 0, 1)


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


def prime_field(p: int) -> Hyperfield:
    """GF(p) with singleton sums."""
    if not _is_prime(p) or p > 7:
        raise StructureError(f"GFp needs a prime p <= 7, got {p}")
    c = Carrier.of_size(p)
    add = HyperTable.from_function(c, lambda a, b: {(a + b) % p})
    mul = MulTable.from_function(c, lambda a, b: (a * b) % p)
    return make_hyperfield(add, mul, 0, 1 if p > 1 else 0)


_GF = re.compile(r"^GF(?:p)?\(?(\d+)\)?$")


def builtin_hyperfield(name: str) -> Hyperfield:
    """``K2``, ``S3``, ``GFp(p)`` (also spelled ``GFp`` + digits or ``GF3``)."""
    if name == "K2":
        return krasner_k2()
    if name == "S3":
        return sign_hyperfield()
    m = _GF.match(name)
    if m:
        return prime_field(int(m.group(1)))
    raise StructureError(f"unknown built-in hyperfield {name!r} (choose K2, S3 or GFp(p))")


BUILTIN_NAMES = ("K2", "S3", "GF2", "GF3", "GF5", "GF7")


def vector_label(field: Hyperfield, coords) -> str:
    return "(" + ",".join(field.names[c] for c in coords) + ")"


def product_space(field: Hyperfield, n: int) -> HyperVectorSpace:
    """F^n with componentwise # and ``a * (x1..xn) = {(a.x1, ..., a.xn)}``.

    Vector index = sum of ``x_i * |F|**i``: the first coordinate varies fastest.
    """
    q = field.order
    if n < 1 or n > 3 or q ** n > MAX_PRODUCT_VECTORS:
        raise PreconditionError(f"product space F^{n} with |F|={q} is outside the size guard "
                                f"(1 <= n <= 3, |F|^n <= {MAX_PRODUCT_VECTORS})")
    coords = [tuple(reversed(t)) for t in product(range(q), repeat=n)]
    index = {c: i for i, c in enumerate(coords)}
    vectors = Carrier(tuple(vector_label(field, c) for c in coords))
    fadd, fmul = field.add.cells, field.mul.cells

    def vadd(i, j):
        x, y = coords[i], coords[j]
        choices = [[k for k in range(q) if fadd[x[t]][y[t]] >> k & 1] for t in range(n)]
        return (index[z] for z in product(*choices))

    table = HyperTable.from_function(vectors, vadd)
    action = tuple(
        tuple(1 << index[tuple(fmul[a][x] for x in coords[v])] for v in range(len(coords)))
        for a in range(q)
    )
    theta = index[(field.zero,) * n]
    return make_space(field, vectors, table, action, theta, coords=coords)


def coordinate_subspace(space: HyperVectorSpace, coords_kept) -> Mask:
    """Vectors of a product space that vanish outside ``coords_kept``."""
    if space.coords is None:
        raise PreconditionError("coordinate_subspace needs a space built by product_space")
    keep = set(coords_kept)
    n = len(space.coords[0])
    if any(not 0 <= k < n for k in keep):
        raise PreconditionError(f"coordinate positions must lie in [0, {n})")
    zero = space.field.zero
    return mask_of(i for i, c in enumerate(space.coords)
                   if all(c[t] == zero for t in range(n) if t not in keep))


def vector_index(space: HyperVectorSpace, coords) -> int:
    """Index of the product-space vector with the given coordinates."""
    if space.coords is None:
        raise PreconditionError("vector_index needs a space built by product_space")
    return space.coords.index(tuple(coords))


def scalar_space(field: Hyperfield) -> HyperVectorSpace:
    """F as a space over itself: ``a * x = {a.x}``."""
    return product_space(field, 1)

