"""Finite groups as Cayley tables with 0-based element indices.

The identity always sits at index 0, which removes an identity parameter
from every downstream operation; file loaders reject tables that violate
this. Tables are immutable after construction and all operations here are
pure functions, so groups are safe to share across concurrent tasks.
"""

from __future__ import annotations

import json
from typing import Iterable, Sequence

import numpy as np

from . import _core
from .arith import is_prime
from .config import DEFAULT_E2_RANK_CAP, effective_order_cap
from .errors import OrderCapExceeded, TableValidationError

__all__ = [
    "GroupTable",
    "Subgroup",
    "make_cyclic",
    "make_quaternion",
    "make_elementary_abelian_2",
    "direct_sum",
    "from_generators",
    "validate_table",
    "element_order",
    "is_abelian",
    "trivial_subgroup",
    "whole_subgroup",
    "load_group",
    "save_group",
]


class GroupTable:
    """A finite group: ``table[a][b]`` is the element index of a*b.

    Constructors in this module produce correct tables and skip the O(n^3)
    associativity validation; untrusted input goes through
    :func:`validate_table`, which always runs the full check.
    """

    __slots__ = ("order", "table", "labels", "inverse", "embeddings",
                 "_hash", "_elem_orders", "_abelian", "_gens", "_conj_maps")

    def __init__(self, table: Sequence[Sequence[int]],
                 labels: Sequence[str] | None = None):
        rows = tuple(tuple(int(v) for v in row) for row in table)
        n = len(rows)
        if n == 0:
            raise ValueError("a group has at least the identity element")
        if any(len(row) != n for row in rows):
            raise ValueError("multiplication table must be square")
        self.order = n
        self.table = rows
        if labels is None:
            self.labels = tuple(str(i) for i in range(n))
        else:
            self.labels = tuple(str(s) for s in labels)
            if len(self.labels) != n:
                raise ValueError(f"expected {n} labels, got {len(self.labels)}")
        inverse = []
        for x in range(n):
            row = rows[x]
            for y in range(n):
                if row[y] == 0 and rows[y][x] == 0:
                    inverse.append(y)
                    break
            else:
                raise TableValidationError("missing-inverse", [x])
        self.inverse = tuple(inverse)
        self.embeddings: tuple[Subgroup, Subgroup] | None = None
        self._hash = hash(rows)
        self._elem_orders: tuple[int, ...] | None = None
        self._abelian: bool | None = None
        self._gens: tuple[int, ...] | None = None
        self._conj_maps: tuple[tuple[int, ...], ...] | None = None

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def conj(self, g: int, x: int) -> int:
        """g * x * g^-1."""
        return self.table[self.table[g][x]][self.inverse[g]]

    def element_orders(self) -> tuple[int, ...]:
        if self._elem_orders is None:
            orders = []
            for x in range(self.order):
                m, y = 1, x
                while y != 0:
                    y = self.table[y][x]
                    m += 1
                orders.append(m)
            self._elem_orders = tuple(orders)
        return self._elem_orders

    def prime_order_elements(self) -> tuple[int, ...]:
        orders = self.element_orders()
        return tuple(x for x in range(self.order) if is_prime(orders[x]))

    def generators(self) -> tuple[int, ...]:
        """A small generating set (greedy chain, at most log2(n) long)."""
        if self._gens is None:
            gens: list[int] = []
            mask = 1
            for x in range(1, self.order):
                if not (mask >> x) & 1:
                    mask, _ = _core.extend_mask(self.table, mask, tuple(gens), x)
                    gens.append(x)
            self._gens = tuple(gens)
        return self._gens

    def conjugation_maps(self) -> tuple[tuple[int, ...], ...]:
        """Conjugation permutations x -> g x g^-1 for each generator g."""
        if self._conj_maps is None:
            self._conj_maps = tuple(
                tuple(self.conj(g, x) for x in range(self.order))
                for g in self.generators())
        return self._conj_maps

    def to_dict(self) -> dict:
        return {"order": self.order,
                "labels": list(self.labels),
                "table": [list(row) for row in self.table]}

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, GroupTable):
            return NotImplemented
        return self._hash == other._hash and self.table == other.table

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"GroupTable(order={self.order})"


class Subgroup:
    """A subset of a parent group's elements, closed under product/inverse.

    Stored as a bit mask over parent element indices; equality is bit
    equality (plus matching parent order), so identical subgroups compare
    equal across independently built copies of the same group.
    """

    __slots__ = ("parent", "mask")

    def __init__(self, parent: GroupTable, mask: int):
        self.parent = parent
        self.mask = mask

    @classmethod
    def from_members(cls, parent: GroupTable,
                     members: Iterable[int]) -> "Subgroup":
        """Checked constructor: verifies identity, range, and closure."""
        mask = 0
        for x in members:
            if not 0 <= x < parent.order:
                raise ValueError(f"element index {x} out of range")
            mask |= 1 << x
        mask |= 1
        mem = tuple(_core.iter_bits(mask))
        table = parent.table
        for a in mem:
            row = table[a]
            for b in mem:
                if not (mask >> row[b]) & 1:
                    raise ValueError(
                        f"set is not closed: {a}*{b} = {row[b]} escapes")
        return cls(parent, mask)

    @property
    def order(self) -> int:
        return self.mask.bit_count()

    def members(self) -> tuple[int, ...]:
        return tuple(_core.iter_bits(self.mask))

    def __contains__(self, x: int) -> bool:
        return bool((self.mask >> x) & 1)

    @property
    def is_trivial(self) -> bool:
        return self.mask == 1

    @property
    def is_whole(self) -> bool:
        return self.order == self.parent.order

    @property
    def is_proper(self) -> bool:
        return not self.is_whole

    def to_indices(self) -> list[int]:
        """Serialized form: ascending member indices."""
        return list(self.members())

    def __eq__(self, other):
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.parent.order == other.parent.order and self.mask == other.mask

    def __hash__(self):
        return hash((self.parent.order, self.mask))

    def __repr__(self):
        mem = self.members()
        shown = ",".join(map(str, mem[:12])) + (",..." if len(mem) > 12 else "")
        return f"Subgroup(order={self.order}, members=[{shown}])"


def trivial_subgroup(G: GroupTable) -> Subgroup:
    return Subgroup(G, 1)


def whole_subgroup(G: GroupTable) -> Subgroup:
    return Subgroup(G, (1 << G.order) - 1)


def element_order(G: GroupTable, x: int) -> int:
    """Smallest m >= 1 with x^m = identity; divides the group order."""
    if not 0 <= x < G.order:
        raise ValueError(f"element index {x} out of range for order {G.order}")
    return G.element_orders()[x]


def is_abelian(G: GroupTable) -> bool:
    if G._abelian is None:
        t = G.table
        G._abelian = all(t[a][b] == t[b][a]
                         for a in range(G.order) for b in range(a + 1, G.order))
    return G._abelian


def make_cyclic(n: int) -> GroupTable:
    """The cyclic group Z_n under addition mod n."""
    if n < 1:
        raise ValueError(f"cyclic group order must be >= 1, got {n}")
    rows = [[(a + b) % n for b in range(n)] for a in range(n)]
    return GroupTable(rows, [str(i) for i in range(n)])


# Unit products for the quaternion group: _Q8_UNIT[u1][u2] = (sign_flip, unit)
# with units indexed 1, i, j, k = 0..3.
_Q8_UNIT = (
    ((0, 0), (0, 1), (0, 2), (0, 3)),
    ((0, 1), (1, 0), (0, 3), (1, 2)),
    ((0, 2), (1, 3), (1, 0), (0, 1)),
    ((0, 3), (0, 2), (1, 1), (1, 0)),
)

_Q8_LABELS = ("1", "-1", "i", "-i", "j", "-j", "k", "-k")


def make_quaternion() -> GroupTable:
    """The quaternion group of order 8 with labels 1, -1, i, -i, j, -j, k, -k.

    Element index 2u + s encodes (sign s, unit u); the single involution is
    -1 at index 1.
    """
    rows = []
    for a in range(8):
        s1, u1 = a & 1, a >> 1
        row = []
        for b in range(8):
            s2, u2 = b & 1, b >> 1
            flip, u = _Q8_UNIT[u1][u2]
            row.append(2 * u + (s1 ^ s2 ^ flip))
        rows.append(row)
    return GroupTable(rows, _Q8_LABELS)


def make_elementary_abelian_2(r: int, *, rank_cap: int | None = None) -> GroupTable:
    """(Z2)^r; the element index is the r-bit vector itself."""
    if r < 0:
        raise ValueError(f"rank must be >= 0, got {r}")
    cap = DEFAULT_E2_RANK_CAP if rank_cap is None else rank_cap
    if r > cap:
        raise OrderCapExceeded(f"rank {r} exceeds the rank cap {cap}")
    n = 1 << r
    rows = [[a ^ b for b in range(n)] for a in range(n)]
    labels = [format(x, f"0{r}b") for x in range(n)] if r else ["0"]
    return GroupTable(rows, labels)


def direct_sum(G: GroupTable, H: GroupTable, *,
               cap: int | None = None) -> GroupTable:
    """G (+) H with element index g*|H| + h and labels "(gLabel,hLabel)".

    The index layout is part of the external contract so that embedded
    subgroups are reproducible across runs. The two canonical embeddings
    are recorded on the result as ``embeddings = (left, right)``.
    """
    n, m = G.order, H.order
    limit = effective_order_cap(cap)
    if n * m > limit:
        raise OrderCapExceeded(
            f"direct sum order {n * m} exceeds the order cap {limit}")
    gt, ht = G.table, H.table
    rows = []
    for a in range(n * m):
        g1, h1 = divmod(a, m)
        grow, hrow = gt[g1], ht[h1]
        rows.append([grow[b // m] * m + hrow[b % m] for b in range(n * m)])
    labels = [f"({G.labels[a // m]},{H.labels[a % m]})" for a in range(n * m)]
    out = GroupTable(rows, labels)
    left = 0
    for g in range(n):
        left |= 1 << (g * m)
    right = (1 << m) - 1
    out.embeddings = (Subgroup(out, left), Subgroup(out, right))
    return out


def _cycle_label(perm: tuple[int, ...]) -> str:
    seen = [False] * len(perm)
    parts = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        nxt = perm[start]
        while nxt != start:
            cyc.append(nxt)
            seen[nxt] = True
            nxt = perm[nxt]
        parts.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(parts) or "()"


def from_generators(perms: Sequence[Sequence[int]], degree: int, *,
                    cap: int | None = None) -> GroupTable:
    """Close permutation generators on {0..degree-1} into a Cayley table.

    Product convention: (a*b)(i) = b[a[i]], i.e. apply a first. Labels are
    cycle notations; the identity comes first.
    """
    if degree < 1:
        raise ValueError(f"degree must be >= 1, got {degree}")
    gens = []
    for p in perms:
        t = tuple(int(v) for v in p)
        if len(t) != degree or sorted(t) != list(range(degree)):
            raise ValueError(f"not a permutation of 0..{degree - 1}: {p}")
        gens.append(t)
    limit = effective_order_cap(cap)
    ident = tuple(range(degree))
    elems = [ident]
    index = {ident: 0}
    i = 0
    while i < len(elems):
        base = elems[i]
        i += 1
        for g in gens:
            prod = tuple(g[base[j]] for j in range(degree))
            if prod not in index:
                if len(elems) >= limit:
                    raise OrderCapExceeded(
                        f"generated group exceeds the order cap {limit}")
                index[prod] = len(elems)
                elems.append(prod)
    n = len(elems)
    rows = [[index[tuple(b[a[j]] for j in range(degree))] for b in elems]
            for a in elems]
    return GroupTable(rows, [_cycle_label(p) for p in elems])


def validate_table(candidate, labels: Sequence[str] | None = None) -> GroupTable:
    """Validate a raw n x n index array against all four group axioms.

    Raises :class:`TableValidationError` with a distinct code per axiom;
    used on every file load (file input is untrusted, constructors are
    correct by construction).
    """
    try:
        arr = np.asarray(candidate, dtype=np.int64)
    except (TypeError, ValueError):
        raise TableValidationError("malformed", []) from None
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise TableValidationError("malformed", list(arr.shape))
    n = arr.shape[0]
    if arr.min() < 0 or arr.max() >= n:
        bad = np.argwhere((arr < 0) | (arr >= n))[0]
        raise TableValidationError("malformed", [int(v) for v in bad])
    ref = np.arange(n)
    for axis, tag in ((1, "row"), (0, "col")):
        ok = (np.sort(arr, axis=axis) == (ref[None, :] if axis == 1 else ref[:, None])).all(axis=axis)
        if not ok.all():
            raise TableValidationError(
                "not-latin-square", [tag, int(np.argmin(ok))])
    if not (arr[0] == ref).all() or not (arr[:, 0] == ref).all():
        bad = int(np.argmax(arr[0] != ref)) if not (arr[0] == ref).all() \
            else int(np.argmax(arr[:, 0] != ref))
        raise TableValidationError("identity-law", [bad])
    zero = arr == 0
    twosided = zero & zero.T
    if not twosided.any(axis=1).all():
        raise TableValidationError(
            "missing-inverse", [int(np.argmin(twosided.any(axis=1)))])
    for a in range(n):
        lhs = arr[arr[a]]          # lhs[b, c] = (a*b)*c
        rhs = arr[a][arr]          # rhs[b, c] = a*(b*c)
        if not (lhs == rhs).all():
            b, c = (int(v) for v in np.argwhere(lhs != rhs)[0])
            raise TableValidationError("associativity", [a, b, c])
    return GroupTable(arr.tolist(), labels)


def save_group(G: GroupTable, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(G.to_dict(), fh, indent=1, sort_keys=True)
        fh.write("\n")


def load_group(path) -> GroupTable:
    """Load and fully validate a Cayley-table JSON file.

    Schema: ``{"order": n, "labels": [n strings], "table": [n rows]}`` with
    the identity at index 0.
    """
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict) or "table" not in data:
        raise TableValidationError("malformed", ["table"])
    table = data["table"]
    labels = data.get("labels")
    order = data.get("order")
    if order is not None and (not isinstance(table, list) or len(table) != order):
        raise TableValidationError("malformed", ["order"])
    if labels is not None and (not isinstance(labels, list)
                               or len(labels) != len(table)):
        raise TableValidationError("malformed", ["labels"])
    return validate_table(table, labels)
