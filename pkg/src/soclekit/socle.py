"""Socle, prime socle, and the intersection of proper essential subgroups.

Each quantity has two routes: a brute-force oracle built on the full
subgroup lattice, and a lattice-free fast path (generated-by-prime-order
elements, or the structural formula for Hamiltonian groups). The routes are
kept strictly separate so the oracle can validate the fast path.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _core
from .arith import is_prime
from .groups import GroupTable, Subgroup, whole_subgroup
from .hamiltonian import decompose_hamiltonian
from .invariants import abelian_invariants
from .lattice import minimal_normal_subgroups, proper_essential_subgroups

__all__ = [
    "SocleReport",
    "prime_socle",
    "socle_bruteforce",
    "delta_definitional",
    "delta_fast",
    "socle_hamiltonian_fast",
]


@dataclass
class SocleReport:
    """Socle plus provenance: which method produced it, and its structure.

    ``invariants`` is present only when the socle is abelian (always, for
    the groups this toolkit targets; honest None for exotic inputs).
    """

    socle: Subgroup
    minimal_normals: list[Subgroup]
    method: str  # "brute" | "hamiltonian-fast"
    invariants: tuple[int, ...] | None

    def to_dict(self) -> dict:
        return {
            "socle": self.socle.to_indices(),
            "order": self.socle.order,
            "method": self.method,
            "invariants": list(self.invariants) if self.invariants is not None else None,
            "minimal_normals": [s.to_indices() for s in self.minimal_normals],
        }


def _subgroup_is_abelian(S: Subgroup) -> bool:
    mem = S.members()
    t = S.parent.table
    return all(t[a][b] == t[b][a] for i, a in enumerate(mem) for b in mem[i + 1:])


def _invariants_or_none(S: Subgroup):
    return abelian_invariants(S) if _subgroup_is_abelian(S) else None


def prime_socle(G: GroupTable) -> Subgroup:
    """Subgroup generated by all elements of prime order."""
    return Subgroup(G, _core.closure_mask(G.table, G.prime_order_elements()))


def _prime_socle_within(S: Subgroup) -> Subgroup:
    orders = S.parent.element_orders()
    seed = tuple(x for x in S.members() if is_prime(orders[x]))
    return Subgroup(S.parent, _core.closure_mask(S.parent.table, seed))


def socle_bruteforce(G: GroupTable, cap: int | None = None) -> SocleReport:
    """Join of all minimal normal subgroups, from the full lattice oracle.

    The empty join (trivial G) is the trivial subgroup.
    """
    mins = minimal_normal_subgroups(G, cap)
    seed: list[int] = []
    for s in mins:
        seed.extend(s.members())
    socle = Subgroup(G, _core.closure_mask(G.table, tuple(seed)))
    return SocleReport(socle, mins, "brute", _invariants_or_none(socle))


def delta_definitional(G: GroupTable, cap: int | None = None) -> Subgroup:
    """Intersection of all proper essential subgroups; G itself if none."""
    essentials = proper_essential_subgroups(G, cap)
    if not essentials:
        return whole_subgroup(G)
    mask = (1 << G.order) - 1
    for e in essentials:
        mask &= e.mask
    return Subgroup(G, mask)


def delta_fast(G: GroupTable) -> Subgroup:
    """Lattice-free route to the essential-subgroup intersection.

    If the prime socle P is proper, P is itself proper essential (every
    nontrivial subgroup contains a prime-order element) and equals the
    intersection of all proper essential subgroups; if P is the whole
    group, no proper essential subgroup exists and the intersection
    defaults to G. The branch equivalence is enforced by tests against
    :func:`delta_definitional`, not assumed.
    """
    P = prime_socle(G)
    if not P.is_whole:
        return P
    return whole_subgroup(G)


def socle_hamiltonian_fast(G: GroupTable) -> SocleReport:
    """Structural socle of a Hamiltonian group, without lattice enumeration.

    With G split internally as Q8 (+) B (+) D, the socle is generated by
    the unique involution of the quaternion part, all of B, and the prime
    socle of D; its invariants are [2] plus those of B plus those of the
    prime socle of D. Must match :func:`socle_bruteforce` bit-exactly
    whenever the oracle is feasible (that agreement is the point of the
    toolkit's verification suite).

    Minimal normal subgroups come for free here: in a group where every
    subgroup is normal they are exactly the prime-order cyclic subgroups.
    """
    decomp = decompose_hamiltonian(G)
    orders = G.element_orders()
    z = next(x for x in decomp.q8_part.members() if orders[x] == 2)
    pd = _prime_socle_within(decomp.d_part)
    seed = (z,) + decomp.b_part.members() + pd.members()
    socle = Subgroup(G, _core.closure_mask(G.table, seed))
    invariants = tuple(sorted(
        (2,) + abelian_invariants(decomp.b_part) + abelian_invariants(pd)))
    seen: set[int] = set()
    mins: list[Subgroup] = []
    for x in G.prime_order_elements():
        m = _core.closure_mask(G.table, (x,))
        if m not in seen:
            seen.add(m)
            mins.append(Subgroup(G, m))
    mins.sort(key=lambda s: (s.order, s.mask))
    return SocleReport(socle, mins, "hamiltonian-fast", invariants)
