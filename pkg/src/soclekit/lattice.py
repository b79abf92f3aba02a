"""Subgroup enumeration and the normality/minimality/essentiality predicates.

``all_subgroups`` is the oracle everything else leans on: it enumerates the
complete lattice by cyclic-seeded join closure. Output lists are sorted by
(order, mask value) so results are deterministic across runs and kernel
lanes.
"""

from __future__ import annotations

from functools import lru_cache

from . import _core
from .config import effective_lattice_cap
from .errors import LatticeCapExceeded
from .groups import GroupTable, Subgroup, whole_subgroup

__all__ = [
    "generated_subgroup",
    "all_subgroups",
    "meet",
    "join",
    "is_normal",
    "minimal_normal_subgroups",
    "is_essential_definitional",
    "is_essential_fast",
    "proper_essential_subgroups",
]


@lru_cache(maxsize=8)
def _subgroup_masks(G: GroupTable) -> tuple[int, ...]:
    return tuple(_core.all_subgroup_masks(G.table))


def _guard(G: GroupTable, cap: int | None) -> None:
    limit = effective_lattice_cap(cap)
    if G.order > limit:
        raise LatticeCapExceeded(
            f"group order {G.order} exceeds the enumeration cap {limit}; "
            "use the fast paths or pass an explicit cap")


def generated_subgroup(G: GroupTable, seed) -> Subgroup:
    """Smallest subgroup of G containing the seed elements."""
    seed = tuple(seed)
    for x in seed:
        if not 0 <= x < G.order:
            raise ValueError(f"element index {x} out of range")
    return Subgroup(G, _core.closure_mask(G.table, seed))


def all_subgroups(G: GroupTable, cap: int | None = None) -> list[Subgroup]:
    """The complete subgroup list of G, sorted by (order, bit pattern)."""
    _guard(G, cap)
    return [Subgroup(G, m) for m in _subgroup_masks(G)]


def _check_same_parent(A: Subgroup, B: Subgroup) -> None:
    if A.parent is not B.parent and A.parent != B.parent:
        raise ValueError("subgroups have different parent groups")


def meet(A: Subgroup, B: Subgroup) -> Subgroup:
    """Intersection; always a subgroup."""
    _check_same_parent(A, B)
    return Subgroup(A.parent, A.mask & B.mask)


def join(A: Subgroup, B: Subgroup) -> Subgroup:
    """Smallest subgroup containing both."""
    _check_same_parent(A, B)
    return Subgroup(A.parent,
                    _core.closure_mask(A.parent.table,
                                       tuple(_core.iter_bits(A.mask | B.mask))))


def is_normal(G: GroupTable, S: Subgroup) -> bool:
    """True iff g s g^-1 lies in S for all g in G, s in S.

    Checked via conjugation by a generating set, which is equivalent:
    conjugation maps compose, and closure under a bijection of a finite set
    implies closure under its inverse.
    """
    return _core.perm_closed_filter(G.conjugation_maps(), (S.mask,))[0]


def minimal_normal_subgroups(G: GroupTable, cap: int | None = None) -> list[Subgroup]:
    """Nontrivial normal subgroups containing no smaller nontrivial normal.

    Every nontrivial normal subgroup of a finite group contains a minimal
    one, so sweeping the normal list in ascending size and keeping those
    with no previously kept subgroup inside is exact.
    """
    masks = [m for m in _subgroup_masks(G) if m != 1] if G.order > 1 else []
    _guard(G, cap)
    flags = _core.perm_closed_filter(G.conjugation_maps(), masks)
    mins: list[int] = []
    for m, normal in zip(masks, flags):
        if normal and not any(m & lower == lower for lower in mins):
            mins.append(m)
    return [Subgroup(G, m) for m in mins]


def _nontrivial_masks(G: GroupTable) -> list[int]:
    return [m for m in _subgroup_masks(G) if m != 1]


def is_essential_definitional(G: GroupTable, E: Subgroup,
                              cap: int | None = None) -> bool:
    """Oracle essentiality test, straight from the definition.

    A proper nontrivial subgroup E is proper essential iff it meets every
    nontrivial subgroup nontrivially. Checks against all nontrivial
    subgroups even though cyclic ones would suffice; the shortcut lives in
    :func:`is_essential_fast` and is tested against this oracle, never
    merged into it.
    """
    if E.mask == 1 or E.is_whole:
        return False
    _guard(G, cap)
    emask = E.mask
    for m in _nontrivial_masks(G):
        if emask & m == 1:
            return False
    return True


def is_essential_fast(G: GroupTable, E: Subgroup) -> bool:
    """Lattice-free essentiality test: E contains every prime-order element.

    Any nontrivial subgroup contains an element of prime order, and a
    prime-order cyclic subgroup meets E nontrivially only by inclusion, so
    this agrees with the definitional test on finite groups (enforced by
    test, not assumed).
    """
    if E.mask == 1 or E.is_whole:
        return False
    emask = E.mask
    return all((emask >> x) & 1 for x in G.prime_order_elements())


def proper_essential_subgroups(G: GroupTable,
                               cap: int | None = None) -> list[Subgroup]:
    """All proper nontrivial subgroups passing the definitional test."""
    _guard(G, cap)
    masks = _subgroup_masks(G)
    nontrivial = [m for m in masks if m != 1]
    full = (1 << G.order) - 1
    out = []
    for e in masks:
        if e == 1 or e == full:
            continue
        for m in nontrivial:
            if e & m == 1:
                break
        else:
            out.append(Subgroup(G, e))
    return out
