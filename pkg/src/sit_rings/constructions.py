"""Ring constructors.

Every constructor produces a validated :class:`~sit_rings.ring.FiniteRing`
with canonical labels and element order. Coordinate rings (matrices,
residue polynomials, group rings) enumerate coordinate tuples in
lexicographic order, first coordinate slowest.
"""

import itertools
import logging
from collections.abc import Callable
from collections.abc import Iterable

import numpy as np

from .config import check_construction
from .exceptions import InvalidModulus
from .exceptions import InvalidPattern
from .exceptions import InvalidRing
from .exceptions import NonCommutativeBase
from .exceptions import SpecError
from .expressions import Corner
from .expressions import GroupRing
from .expressions import GroupTable
from .expressions import Matrix
from .expressions import PolyQuot
from .expressions import Product
from .expressions import Quotient
from .expressions import RingExpr
from .expressions import Subring
from .expressions import ZMod
from .ring import FiniteRing
from .ring import ensure_valid


logger = logging.getLogger(__name__)

type RowProduct = Callable[[np.ndarray, np.ndarray], np.ndarray]


# --- labels ---


def pair_label(left: str, right: str) -> str:
    return f"({left}, {right})"


def matrix_label(rows: Iterable[Iterable[str]]) -> str:
    return "[[" + "],[".join(",".join(row) for row in rows) + "]]"


def _term(coefficient: str, monomial: str, unit: bool) -> str:
    if not monomial:
        return coefficient
    if unit:
        return monomial
    if not coefficient.isdigit():
        coefficient = f"({coefficient})"
    return f"{coefficient}{monomial}"


def combination_label(
    base: FiniteRing,
    coords: Iterable[int],
    monomials: Iterable[str],
) -> str:
    """Label of ``sum(c_i * m_i)`` dropping zero terms and unit factors."""
    terms = [
        _term(base.labels[c], monomial, c == base.one)
        for c, monomial in zip(coords, monomials, strict=True)
        if c != base.zero
    ]
    return "+".join(terms) if terms else base.labels[base.zero]


# --- helpers ---


def _coordinate_grid(q: int, width: int) -> np.ndarray:
    grid = np.array(
        list(itertools.product(range(q), repeat=width)), dtype=np.int64
    )
    return grid.reshape(q**width, width)


def _coordinate_ring(
    base: FiniteRing,
    width: int,
    multiply: RowProduct,
    labels: Callable[[np.ndarray], str],
    one: np.ndarray,
    provenance: RingExpr,
) -> FiniteRing:
    q = base.order
    check_construction(q**width, provenance.describe())
    coords = _coordinate_grid(q, width)
    weights = q ** np.arange(width - 1, -1, -1, dtype=np.int64)
    n = len(coords)
    add = np.empty((n, n), dtype=np.int64)
    mul = np.empty((n, n), dtype=np.int64)
    for a in range(n):
        add[a] = base.add_table[coords[a][None, :], coords] @ weights
        mul[a] = multiply(coords[a], coords) @ weights
    zero = np.full(width, base.zero)
    ring = FiniteRing(
        labels=tuple(labels(c) for c in coords),
        add_table=add,
        mul_table=mul,
        zero=int(zero @ weights),
        one=int(one @ weights),
        provenance=provenance,
    )
    return ensure_valid(ring)


def _require_commutative(base: FiniteRing, what: str) -> None:
    if not base.is_commutative:
        raise NonCommutativeBase(
            f"{what} needs a commutative base ring, got {base.describe()}",
            context={"base": base.describe()},
        )


# --- constructors ---


def zmod(n: int) -> FiniteRing:
    """The integers modulo ``n`` (``n = 1`` gives the zero ring)."""
    if n < 1:
        raise InvalidRing(f"modulus must be >= 1, got {n}", context={"n": n})
    check_construction(n, f"Z{n}")
    residues = np.arange(n)
    ring = FiniteRing(
        labels=tuple(str(i) for i in range(n)),
        add_table=np.add.outer(residues, residues) % n,
        mul_table=np.multiply.outer(residues, residues) % n,
        zero=0,
        one=1 % n,
        provenance=ZMod(n),
    )
    return ensure_valid(ring)


def pair_ring(
    left: FiniteRing,
    right: FiniteRing,
    pairs: np.ndarray,
    *,
    provenance: RingExpr,
) -> FiniteRing:
    """The ring carried by a closed set of pairs inside ``left x right``.

    Pairs are sorted lexicographically; the identity is ``(1, 1)``.

    :raises InvalidRing: If the pairs are not closed under the
        componentwise operations.
    """
    pairs = np.unique(np.asarray(pairs, dtype=np.int64).reshape(-1, 2), axis=0)
    check_construction(len(pairs), provenance.describe())
    width = right.order
    x, y = pairs[:, 0], pairs[:, 1]
    codes = x * width + y

    def encode(first: np.ndarray, second: np.ndarray) -> np.ndarray:
        values = np.asarray(first * width + second)
        position = np.searchsorted(codes, values).clip(0, len(codes) - 1)
        if not (codes[position] == values).all():
            raise InvalidRing(
                "pairs are not closed under the ring operations",
                context={"ring": provenance.describe()},
            )
        return position

    ring = FiniteRing(
        labels=tuple(
            pair_label(left.labels[a], right.labels[b]) for a, b in pairs
        ),
        add_table=encode(
            left.add_table[x[:, None], x[None, :]],
            right.add_table[y[:, None], y[None, :]],
        ),
        mul_table=encode(
            left.mul_table[x[:, None], x[None, :]],
            right.mul_table[y[:, None], y[None, :]],
        ),
        zero=int(encode(np.array(left.zero), np.array(right.zero))),
        one=int(encode(np.array(left.one), np.array(right.one))),
        provenance=provenance,
    )
    return ensure_valid(ring)


def direct_product(left: FiniteRing, right: FiniteRing) -> FiniteRing:
    """Componentwise product; element ``(a, b)`` has index
    ``a * |right| + b``."""
    check_construction(left.order * right.order, "direct product")
    pairs = np.array(
        list(itertools.product(range(left.order), range(right.order)))
    )
    return pair_ring(
        left,
        right,
        pairs,
        provenance=Product(left.provenance, right.provenance),
    )


def upper_triangular_mask(n: int) -> tuple[tuple[bool, ...], ...]:
    return tuple(tuple(i <= j for j in range(n)) for i in range(n))


def full_mask(n: int) -> tuple[tuple[bool, ...], ...]:
    return tuple(tuple(True for _ in range(n)) for _ in range(n))


def positions_mask(
    n: int, positions: Iterable[tuple[int, int]]
) -> tuple[tuple[bool, ...], ...]:
    """Mask allowing the given 1-based ``(row, column)`` positions.

    :raises InvalidPattern: If a position lies outside the ``n x n`` grid.
    """
    allowed: set[tuple[int, int]] = set()
    for i, j in positions:
        if not (1 <= i <= n and 1 <= j <= n):
            raise InvalidPattern(
                f"position ({i}, {j}) is outside a {n}x{n} pattern",
                context={"size": n, "position": (i, j)},
            )
        allowed.add((i - 1, j - 1))
    return tuple(tuple((i, j) in allowed for j in range(n)) for i in range(n))


def check_pattern(n: int, pattern: tuple[tuple[bool, ...], ...]) -> None:
    """Validate a structural matrix pattern.

    :raises InvalidPattern: If the mask is not ``n x n``, misses a diagonal
        position, or is not closed under matrix multiplication.
    """
    mask = np.array(pattern, dtype=bool)
    if n < 1 or mask.shape != (n, n):
        raise InvalidPattern(
            f"pattern must be a {n}x{n} mask", context={"size": n}
        )
    if not mask.diagonal().all():
        raise InvalidPattern(
            "pattern must contain the diagonal",
            context={"pattern": pattern},
        )
    reach = (mask.astype(np.int64) @ mask.astype(np.int64)) > 0
    gaps = np.argwhere(reach & ~mask)
    if gaps.size:
        i, j = (int(v) + 1 for v in gaps[0])
        raise InvalidPattern(
            f"pattern is not closed: products reach position ({i}, {j})",
            context={"pattern": pattern, "position": (i, j)},
        )


def matrix_ring(
    base: FiniteRing,
    n: int,
    pattern: tuple[tuple[bool, ...], ...] | None = None,
) -> FiniteRing:
    """Matrices over ``base`` supported on ``pattern`` (all positions by
    default).

    Coordinates are the allowed positions in row-major order.
    """
    pattern = full_mask(n) if pattern is None else pattern
    check_pattern(n, pattern)
    rows, cols = np.nonzero(np.array(pattern, dtype=bool))
    width = len(rows)

    def embed(coords: np.ndarray) -> np.ndarray:
        full = np.full((len(coords), n, n), base.zero, dtype=np.int64)
        full[:, rows, cols] = coords
        return full

    def multiply(a: np.ndarray, others: np.ndarray) -> np.ndarray:
        left = embed(a[None, :])[0]
        right = embed(others)
        acc = np.full(right.shape, base.zero, dtype=np.int64)
        for k in range(n):
            term = base.mul_table[
                left[:, k][None, :, None], right[:, k, :][:, None, :]
            ]
            acc = base.add_table[acc, term]
        return acc[:, rows, cols]

    def label(coords: np.ndarray) -> str:
        full = embed(coords[None, :])[0]
        return matrix_label(
            (base.labels[v] for v in row) for row in full
        )

    identity = np.where(rows == cols, base.one, base.zero)
    return _coordinate_ring(
        base,
        width,
        multiply,
        label,
        identity,
        Matrix(base.provenance, n, pattern),
    )


def poly_quotient(
    base: FiniteRing,
    modulus: Iterable[int],
    variable: str = "x",
) -> FiniteRing:
    """The residue ring ``base[x]/(modulus)``.

    ``modulus`` lists integer coefficients ``c_0 .. c_d`` (read as
    multiples of the identity) and must be monic of degree ``d >= 1``.
    Elements are coefficient tuples ``(a_0, .., a_{d-1})``.
    """
    coefficients = tuple(int(c) for c in modulus)
    if len(coefficients) < 2 or coefficients[-1] != 1:
        raise InvalidModulus(
            "modulus must be monic of degree at least 1",
            context={"modulus": coefficients},
        )
    _require_commutative(base, "poly_quotient")
    d = len(coefficients) - 1
    reduction = [base.integer(c) for c in coefficients[:-1]]
    add, mul, neg = base.add_table, base.mul_table, base.neg

    def multiply(a: np.ndarray, others: np.ndarray) -> np.ndarray:
        conv = np.full((len(others), 2 * d - 1), base.zero, dtype=np.int64)
        for i in range(d):
            for j in range(d):
                conv[:, i + j] = add[conv[:, i + j], mul[a[i], others[:, j]]]
        for k in range(2 * d - 2, d - 1, -1):
            lead = conv[:, k]
            for m, c in enumerate(reduction):
                conv[:, k - d + m] = add[conv[:, k - d + m], neg[mul[lead, c]]]
        return conv[:, :d]

    monomials = ["", variable] + [f"{variable}^{k}" for k in range(2, d)]
    identity = np.full(d, base.zero)
    identity[0] = base.one
    return _coordinate_ring(
        base,
        d,
        multiply,
        lambda coords: combination_label(base, coords, monomials[:d]),
        identity,
        PolyQuot(base.provenance, coefficients, variable),
    )


def cyclic_group(n: int) -> GroupTable:
    """The cyclic group ``C_n`` with elements ``1, x, x^2, ..``."""
    names = ["1", "x"] + [f"x^{k}" for k in range(2, n)]
    return GroupTable(
        name=f"C{n}",
        elements=tuple(names[:n]),
        table=tuple(tuple((i + j) % n for j in range(n)) for i in range(n)),
    )


def group_ring(base: FiniteRing, group: GroupTable) -> FiniteRing:
    """The group ring ``base[group]``; coordinates follow ``group.elements``."""
    _require_commutative(base, "group_ring")
    g = group.order
    table = np.array(group.table, dtype=np.int64)
    add, mul = base.add_table, base.mul_table

    def multiply(a: np.ndarray, others: np.ndarray) -> np.ndarray:
        acc = np.full(others.shape, base.zero, dtype=np.int64)
        for i in range(g):
            for j in range(g):
                target = table[i, j]
                acc[:, target] = add[acc[:, target], mul[a[i], others[:, j]]]
        return acc

    monomials = [
        "" if k == group.identity else name
        for k, name in enumerate(group.elements)
    ]
    identity = np.full(g, base.zero)
    identity[group.identity] = base.one
    return _coordinate_ring(
        base,
        g,
        multiply,
        lambda coords: combination_label(base, coords, monomials),
        identity,
        GroupRing(base.provenance, group),
    )


def build(expr: RingExpr) -> FiniteRing:
    """Rebuild a ring from its expression.

    :raises SpecError: For amalgam expressions, which are built from
        homomorphism data by :mod:`sit_rings.amalgam`.
    """
    from .subobjects import corner_ring
    from .subobjects import ideal_generated
    from .subobjects import quotient_ring

    match expr:
        case ZMod(n=n):
            return zmod(n)
        case Product(left=left, right=right):
            return direct_product(build(left), build(right))
        case Matrix(base=base, size=size, pattern=pattern):
            return matrix_ring(build(base), size, pattern)
        case PolyQuot(base=base, modulus=modulus, variable=variable):
            return poly_quotient(build(base), modulus, variable)
        case GroupRing(base=base, group=group):
            return group_ring(build(base), group)
        case Quotient(base=base, generators=generators):
            ring = build(base)
            ideal = ideal_generated(ring, [ring.index(g) for g in generators])
            return quotient_ring(ring, ideal, generators=generators)[0]
        case Corner(base=base, idempotent=idempotent):
            ring = build(base)
            return corner_ring(ring, ring.index(idempotent))
        case Subring(ambient=ambient, members=members):
            ring = build(ambient)
            return ring.restrict(
                (ring.index(m) for m in members), provenance=expr
            )
    raise SpecError(
        f"cannot rebuild {expr.describe()} from its expression alone",
        context={"expr": expr},
    )
