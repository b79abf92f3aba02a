"""Group-expression grammar: atoms combined with "x" into direct sums.

    EXPR := TERM ("x" TERM)*
    TERM := "Q8" | "Z" INT | "E2^" INT | "D" INT | "S" INT | "A" INT
    INT  := decimal >= 1

Case-insensitive and whitespace-tolerant. "Dn" is the dihedral group of
order 2n (n >= 3 here; spell the degenerate cases as "Z2" and "Z2 x Z2"),
"Sn"/"An" act on n points. Direct sums fold left-associatively, matching
the element-index layout of :func:`soclekit.groups.direct_sum`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .config import effective_order_cap
from .errors import ExprSyntaxError, OrderCapExceeded
from .groups import (GroupTable, direct_sum, from_generators, make_cyclic,
                     make_elementary_abelian_2, make_quaternion)

__all__ = [
    "Cyclic", "Quaternion", "ElemAbelian2", "Dihedral", "Symmetric",
    "Alternating", "DirectSum", "parse_group_expr", "render_expr",
    "predicted_order", "build_from_expr",
]


@dataclass(frozen=True)
class Cyclic:
    n: int


@dataclass(frozen=True)
class Quaternion:
    pass


@dataclass(frozen=True)
class ElemAbelian2:
    r: int


@dataclass(frozen=True)
class Dihedral:
    n: int


@dataclass(frozen=True)
class Symmetric:
    n: int


@dataclass(frozen=True)
class Alternating:
    n: int


@dataclass(frozen=True)
class DirectSum:
    left: "GroupExpr"
    right: "GroupExpr"


GroupExpr = Cyclic | Quaternion | ElemAbelian2 | Dihedral | Symmetric | Alternating | DirectSum


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def read_int(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ExprSyntaxError("expected an integer", start)
        value = int(self.text[start:self.pos])
        if value < 1:
            raise ExprSyntaxError("expected an integer >= 1", start)
        return value


def parse_group_expr(text: str) -> GroupExpr:
    """Parse a group expression; syntax errors carry the byte offset."""
    sc = _Scanner(text)
    expr = _parse_term(sc)
    while not sc.at_end():
        if sc.peek().lower() != "x":
            raise ExprSyntaxError(f"expected 'x' separator, got {sc.peek()!r}",
                                  sc.pos)
        sc.pos += 1
        expr = DirectSum(expr, _parse_term(sc))
    return expr


def _parse_term(sc: _Scanner) -> GroupExpr:
    sc.skip_ws()
    if sc.pos >= len(sc.text):
        raise ExprSyntaxError("expected a group term", sc.pos)
    start = sc.pos
    head = sc.peek().lower()
    if head == "q":
        if sc.text[sc.pos:sc.pos + 2].lower() != "q8":
            raise ExprSyntaxError("expected 'Q8'", start)
        sc.pos += 2
        return Quaternion()
    if head == "e":
        if sc.text[sc.pos:sc.pos + 3].lower() != "e2^":
            raise ExprSyntaxError("expected 'E2^'", start)
        sc.pos += 3
        return ElemAbelian2(sc.read_int())
    if head == "z":
        sc.pos += 1
        return Cyclic(sc.read_int())
    if head == "d":
        sc.pos += 1
        n = sc.read_int()
        if n < 3:
            raise ExprSyntaxError(
                "dihedral parameter must be >= 3 (use Z2 / Z2 x Z2 below that)",
                start)
        return Dihedral(n)
    if head == "s":
        sc.pos += 1
        return Symmetric(sc.read_int())
    if head == "a":
        sc.pos += 1
        return Alternating(sc.read_int())
    raise ExprSyntaxError(f"unexpected character {sc.peek()!r}", start)


def render_expr(expr: GroupExpr) -> str:
    """Canonical text for an expression; parseable back to an equal tree."""
    match expr:
        case Cyclic(n):
            return f"Z{n}"
        case Quaternion():
            return "Q8"
        case ElemAbelian2(r):
            return f"E2^{r}"
        case Dihedral(n):
            return f"D{n}"
        case Symmetric(n):
            return f"S{n}"
        case Alternating(n):
            return f"A{n}"
        case DirectSum(left, right):
            return f"{render_expr(left)} x {render_expr(right)}"
    raise TypeError(f"not a group expression: {expr!r}")


def predicted_order(expr: GroupExpr) -> int:
    match expr:
        case Cyclic(n):
            return n
        case Quaternion():
            return 8
        case ElemAbelian2(r):
            return 1 << r
        case Dihedral(n):
            return 2 * n
        case Symmetric(n):
            return math.factorial(n)
        case Alternating(n):
            return max(1, math.factorial(n) // 2)
        case DirectSum(left, right):
            return predicted_order(left) * predicted_order(right)
    raise TypeError(f"not a group expression: {expr!r}")


def _dihedral_generators(n: int) -> list[tuple[int, ...]]:
    rotation = tuple((i + 1) % n for i in range(n))
    reflection = tuple((n - i) % n for i in range(n))
    return [rotation, reflection]


def _symmetric_generators(n: int) -> list[tuple[int, ...]]:
    if n < 2:
        return []
    swap = (1, 0) + tuple(range(2, n))
    if n == 2:
        return [swap]
    cycle = tuple((i + 1) % n for i in range(n))
    return [swap, cycle]


def _alternating_generators(n: int) -> list[tuple[int, ...]]:
    # 3-cycles (i, i+1, i+2) generate the alternating group
    gens = []
    for i in range(n - 2):
        p = list(range(n))
        p[i], p[i + 1], p[i + 2] = p[i + 1], p[i + 2], p[i]
        gens.append(tuple(p))
    return gens


def build_from_expr(expr: GroupExpr, *, cap: int | None = None) -> GroupTable:
    """Construct the group named by an expression tree.

    The predicted order is checked against the order cap before any
    construction starts.
    """
    limit = effective_order_cap(cap)
    predicted = predicted_order(expr)
    if predicted > limit:
        raise OrderCapExceeded(
            f"predicted order {predicted} exceeds the order cap {limit}")
    return _build(expr, limit)


def _build(expr: GroupExpr, limit: int) -> GroupTable:
    match expr:
        case Cyclic(n):
            return make_cyclic(n)
        case Quaternion():
            return make_quaternion()
        case ElemAbelian2(r):
            return make_elementary_abelian_2(r)
        case Dihedral(n):
            return from_generators(_dihedral_generators(n), n, cap=limit)
        case Symmetric(n):
            return from_generators(_symmetric_generators(n), n, cap=limit)
        case Alternating(n):
            return from_generators(_alternating_generators(n), n, cap=limit)
        case DirectSum(left, right):
            return direct_sum(_build(left, limit), _build(right, limit),
                              cap=limit)
    raise TypeError(f"not a group expression: {expr!r}")
