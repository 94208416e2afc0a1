"""Ring expressions: the provenance record of every constructed ring.

A :data:`RingExpr` is an immutable tree describing how a ring was built.
Rebuilding the same expression always yields the same labels and tables.
"""

from dataclasses import dataclass
from functools import cached_property

from .exceptions import InvalidGroupTable


@dataclass(frozen=True)
class GroupTable:
    """Multiplication table of a finite group.

    ``table[i][j]`` is the index of ``elements[i] * elements[j]``.
    """

    name: str
    elements: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        problems = self.problems()
        if problems:
            raise InvalidGroupTable(
                f"{self.name} is not a group: {problems[0]}",
                context={"group": self.name, "problems": problems},
            )

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def identity(self) -> int:
        return next(
            e
            for e in range(self.order)
            if all(
                self.table[e][g] == g and self.table[g][e] == g
                for g in range(self.order)
            )
        )

    def problems(self) -> list[str]:
        n = self.order
        if n == 0:
            return ["group is empty"]
        if len(set(self.elements)) != n:
            return ["element names are not distinct"]
        if len(self.table) != n or any(len(row) != n for row in self.table):
            return [f"table is not {n}x{n}"]
        if any(not 0 <= v < n for row in self.table for v in row):
            return ["table entry out of range"]
        t = self.table
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if t[t[a][b]][c] != t[a][t[b][c]]:
                        return [f"not associative at ({a}, {b}, {c})"]
        identities = [
            e
            for e in range(n)
            if all(t[e][g] == g and t[g][e] == g for g in range(n))
        ]
        if not identities:
            return ["no identity element"]
        e = identities[0]
        for a in range(n):
            if not any(t[a][b] == e and t[b][a] == e for b in range(n)):
                return [f"element {self.elements[a]} has no inverse"]
        return []


def _wrap(text: str) -> str:
    return f"({text})" if " " in text else text


@dataclass(frozen=True)
class ZMod:
    n: int

    def describe(self) -> str:
        return f"Z{self.n}"


@dataclass(frozen=True)
class Product:
    left: "RingExpr"
    right: "RingExpr"

    def describe(self) -> str:
        return f"{_wrap(self.left.describe())} x {_wrap(self.right.describe())}"


@dataclass(frozen=True)
class Matrix:
    base: "RingExpr"
    size: int
    pattern: tuple[tuple[bool, ...], ...]

    def describe(self) -> str:
        n = self.size
        inner = self.base.describe()
        if all(all(row) for row in self.pattern):
            return f"M{n}({inner})"
        if all(
            self.pattern[i][j] == (i <= j) for i in range(n) for j in range(n)
        ):
            return f"T{n}({inner})"
        bits = ",".join(
            "".join("1" if cell else "0" for cell in row)
            for row in self.pattern
        )
        return f"M{n}({inner})[{bits}]"


@dataclass(frozen=True)
class PolyQuot:
    base: "RingExpr"
    modulus: tuple[int, ...]
    variable: str = "x"

    def describe(self) -> str:
        terms = []
        for degree in range(len(self.modulus) - 1, -1, -1):
            c = self.modulus[degree]
            if c == 0:
                continue
            if degree == 0:
                terms.append(str(c))
                continue
            power = self.variable
            if degree > 1:
                power = f"{self.variable}^{degree}"
            terms.append(power if c == 1 else f"{c}{power}")
        poly = "+".join(terms)
        return f"{self.base.describe()}[{self.variable}]/({poly})"


@dataclass(frozen=True)
class GroupRing:
    base: "RingExpr"
    group: GroupTable

    def describe(self) -> str:
        return f"{self.base.describe()}[{self.group.name}]"


@dataclass(frozen=True)
class Quotient:
    base: "RingExpr"
    generators: tuple[str, ...]

    def describe(self) -> str:
        return f"{self.base.describe()}/({', '.join(self.generators)})"


@dataclass(frozen=True)
class Corner:
    base: "RingExpr"
    idempotent: str

    def describe(self) -> str:
        e = self.idempotent
        return f"{e}.{_wrap(self.base.describe())}.{e}"


@dataclass(frozen=True)
class Subring:
    """A subring given by its member labels inside an ambient ring."""

    ambient: "RingExpr"
    note: str
    members: tuple[str, ...]

    def describe(self) -> str:
        return f"{self.note} in {self.ambient.describe()}"


@dataclass(frozen=True)
class Amalgam:
    source: "RingExpr"
    target: "RingExpr"
    images: tuple[str, ...]
    ideal: tuple[str, ...]

    def describe(self) -> str:
        return (
            f"{self.source.describe()} >< {self.target.describe()}"
            f" along |J|={len(self.ideal)}"
        )


@dataclass(frozen=True)
class BiAmalgam:
    source: "RingExpr"
    first_target: "RingExpr"
    first_images: tuple[str, ...]
    first_ideal: tuple[str, ...]
    second_target: "RingExpr"
    second_images: tuple[str, ...]
    second_ideal: tuple[str, ...]

    def describe(self) -> str:
        return (
            f"{self.first_target.describe()}"
            f" ><_{self.source.describe()} "
            f"{self.second_target.describe()}"
            f" along |J|={len(self.first_ideal)},"
            f" |J'|={len(self.second_ideal)}"
        )


type RingExpr = (
    ZMod
    | Product
    | Matrix
    | PolyQuot
    | GroupRing
    | Quotient
    | Corner
    | Subring
    | Amalgam
    | BiAmalgam
)
