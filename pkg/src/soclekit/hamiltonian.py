"""Dedekind/Hamiltonian recognition and the Q8 (+) B (+) D decomposition.

A Dedekind group has every subgroup normal; the non-abelian ones split as
an internal direct sum of a quaternion group of order 8, an elementary
abelian 2-group B, and an abelian group D of odd-order elements. The
decomposition here is constructive and self-certifying: the internal
direct-sum witness is always re-verified before a result is returned,
rather than trusted from the construction.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _core
from .arith import prime_factors
from .errors import DecompositionError, NotClosedError, NotHamiltonianError
from .groups import GroupTable, Subgroup, is_abelian
from .invariants import abelian_invariants

__all__ = [
    "HamiltonianDecomposition",
    "is_dedekind",
    "is_hamiltonian",
    "recognize_q8",
    "primary_part",
    "find_q8",
    "complement_in_elementary_abelian",
    "decompose_hamiltonian",
]


@dataclass(frozen=True)
class HamiltonianDecomposition:
    """Internal subgroups witnessing G = Q8 (+) B (+) D."""

    q8_part: Subgroup
    b_part: Subgroup
    d_part: Subgroup

    @property
    def b_rank(self) -> int:
        return self.b_part.order.bit_length() - 1

    def to_dict(self) -> dict:
        return {
            "q8": self.q8_part.to_indices(),
            "b": self.b_part.to_indices(),
            "b_rank": self.b_rank,
            "d": self.d_part.to_indices(),
            "d_invariants": list(abelian_invariants(self.d_part)),
        }


def is_dedekind(G: GroupTable) -> bool:
    """True iff every subgroup is normal.

    It suffices to check the cyclic subgroups, and for each of those to
    conjugate just the generator by a generating set of G (conjugation is a
    homomorphism, so powers follow). Agreement with the all-subgroups
    oracle is property-tested, not assumed.
    """
    table = G.table
    gens = G.generators()
    for x in range(1, G.order):
        cyc = _core.closure_mask(table, (x,))
        for g in gens:
            if not (cyc >> G.conj(g, x)) & 1:
                return False
    return True


def is_hamiltonian(G: GroupTable) -> bool:
    """Non-abelian Dedekind."""
    return not is_abelian(G) and is_dedekind(G)


def _involution_count(orders) -> int:
    return sum(1 for m in orders if m == 2)


def recognize_q8(A) -> bool:
    """Order 8, non-abelian, exactly one element of order 2.

    The involution count is what separates the quaternion group from the
    dihedral group of order 8 (which has five).
    """
    if isinstance(A, GroupTable):
        if A.order != 8 or is_abelian(A):
            return False
        return _involution_count(A.element_orders()) == 1
    if isinstance(A, Subgroup):
        mem = A.members()
        if len(mem) != 8:
            return False
        t = A.parent.table
        if all(t[a][b] == t[b][a] for i, a in enumerate(mem) for b in mem[i + 1:]):
            return False
        orders = A.parent.element_orders()
        return _involution_count(orders[x] for x in mem) == 1
    raise TypeError(f"expected GroupTable or Subgroup, got {type(A).__name__}")


def primary_part(G: GroupTable, p: int) -> Subgroup:
    """The subgroup of all elements of p-power order.

    This element set is only guaranteed to be product-closed for nilpotent
    groups (Dedekind groups are); a :class:`NotClosedError` with a witness
    pair signals input outside that guarantee, e.g. p = 2 in a symmetric
    group.
    """
    orders = G.element_orders()
    mem = [x for x in range(G.order) if _p_power(orders[x], p)]
    mask = 0
    for x in mem:
        mask |= 1 << x
    t = G.table
    for a in mem:
        row = t[a]
        for b in mem:
            if not (mask >> row[b]) & 1:
                raise NotClosedError(
                    f"{p}-power-order elements are not product-closed", (a, b))
    return Subgroup(G, mask)


def _p_power(m: int, p: int) -> bool:
    while m % p == 0:
        m //= p
    return m == 1


def odd_part(G: GroupTable) -> Subgroup:
    """Join of the primary parts over the odd primes dividing |G|."""
    seed: list[int] = []
    for p in sorted(prime_factors(G.order)):
        if p != 2:
            seed.extend(primary_part(G, p).members())
    return Subgroup(G, _core.closure_mask(G.table, tuple(seed)))


def find_q8(P2: Subgroup) -> Subgroup:
    """Locate a quaternion subgroup inside the 2-part of a Hamiltonian group.

    Takes the lexicographically smallest non-commuting pair (x, y) by
    element index, for reproducible output; any such pair works (both
    elements then have order 4 and satisfy the quaternion relations), and
    that pair-independence is property-tested.
    """
    G = P2.parent
    t = G.table
    mem = P2.members()
    pair = None
    for i, x in enumerate(mem):
        for y in mem[i + 1:]:
            if t[x][y] != t[y][x]:
                pair = (x, y)
                break
        if pair:
            break
    if pair is None:
        raise NotHamiltonianError(
            "the 2-primary part is abelian; no quaternion subgroup exists")
    Q = Subgroup(G, _core.closure_mask(t, pair))
    if Q.order != 8 or not recognize_q8(Q):
        raise DecompositionError("q8-recognizer",
                                 f"pair {pair} generated order {Q.order}")
    return Q


def complement_in_elementary_abelian(Omega: Subgroup, z: int) -> Subgroup:
    """A complement C of <z> in an elementary abelian 2-group Omega.

    Treats Omega as a GF(2) vector space and extends {z} to a basis by
    greedy scan in element-index order (deterministic); C is the span of
    the added vectors, so C intersects <z> trivially and <C, z> = Omega.
    """
    G = Omega.parent
    orders = G.element_orders()
    mem = Omega.members()
    if any(orders[x] > 2 for x in mem):
        raise ValueError("subgroup is not elementary abelian of exponent 2")
    if z not in Omega or z == 0:
        raise ValueError(f"element {z} is not a nontrivial member of the subgroup")
    t = G.table
    span = (1 << 0) | (1 << z)
    comp = 1
    for x in mem:
        if (span >> x) & 1:
            continue
        new_span = span
        m = span
        while m:
            low = m & -m
            new_span |= 1 << t[low.bit_length() - 1][x]
            m ^= low
        new_comp = comp
        m = comp
        while m:
            low = m & -m
            new_comp |= 1 << t[low.bit_length() - 1][x]
            m ^= low
        span, comp = new_span, new_comp
    return Subgroup(G, comp)


def _commute_elementwise(G: GroupTable, A: Subgroup, B: Subgroup) -> bool:
    t = G.table
    return all(t[a][b] == t[b][a] for a in A.members() for b in B.members())


def decompose_hamiltonian(G: GroupTable) -> HamiltonianDecomposition:
    """Split a Hamiltonian group into internal parts (Q8, B, D).

    D is the odd part, Q8 is generated by a non-commuting pair of the
    2-part, and B complements the unique involution of Q8 inside the
    exponent-2 elements of the 2-part. All internal direct-sum invariants
    are verified before returning; failures raise
    :class:`DecompositionError` naming the invariant.
    """
    if not is_hamiltonian(G):
        raise NotHamiltonianError("group is not Hamiltonian")
    orders = G.element_orders()
    D = odd_part(G)
    if any(orders[x] % 2 == 0 for x in D.members()):
        raise DecompositionError("odd-part", "even-order element in D")
    odd_mask = 0
    for x in range(G.order):
        if orders[x] % 2 == 1:
            odd_mask |= 1 << x
    if D.mask != odd_mask:
        raise DecompositionError(
            "odd-part", "join of odd primary parts != odd-order element set")
    P2 = primary_part(G, 2)
    Q = find_q8(P2)
    omega_mask = 1
    for x in P2.members():
        if orders[x] == 2:
            omega_mask |= 1 << x
    Omega = Subgroup.from_members(G, _core.iter_bits(omega_mask))
    z_candidates = [x for x in Q.members() if orders[x] == 2]
    if len(z_candidates) != 1:
        raise DecompositionError("q8-involution",
                                 f"found {len(z_candidates)} involutions")
    B = complement_in_elementary_abelian(Omega, z_candidates[0])
    _verify_decomposition(G, Q, B, D)
    return HamiltonianDecomposition(Q, B, D)


def _verify_decomposition(G: GroupTable, Q: Subgroup, B: Subgroup,
                          D: Subgroup) -> None:
    orders = G.element_orders()
    if not recognize_q8(Q):
        raise DecompositionError("q8-part")
    if any(orders[x] > 2 for x in B.members()):
        raise DecompositionError("b-part", "element of order > 2")
    dmem = D.members()
    t = G.table
    if any(orders[x] % 2 == 0 for x in dmem):
        raise DecompositionError("d-part", "even-order element")
    if not all(t[a][b] == t[b][a] for i, a in enumerate(dmem) for b in dmem[i + 1:]):
        raise DecompositionError("d-part", "not abelian")
    for name, X, Y in (("q8xb", Q, B), ("q8xd", Q, D), ("bxd", B, D)):
        if not _commute_elementwise(G, X, Y):
            raise DecompositionError("commutation", name)
    if Q.order * B.order * D.order != G.order:
        raise DecompositionError("order-product")
    for name, part, others in (
            ("q8", Q, (B, D)), ("b", B, (Q, D)), ("d", D, (Q, B))):
        rest = _core.closure_mask(
            t, tuple(_core.iter_bits(others[0].mask | others[1].mask)))
        if part.mask & rest != 1:
            raise DecompositionError("trivial-intersection", name)
