"""Isomorphism invariants for finite abelian groups.

The classification is by elementary divisors (prime powers), computed by
order counting: the sizes of the kernels of x -> x^(p^k) determine the
number of cyclic factors of each prime-power order exactly. No normal-form
matrix machinery is needed at Cayley-table scale.
"""

from __future__ import annotations

from .arith import prime_factors
from .groups import GroupTable, Subgroup, is_abelian

__all__ = ["abelian_invariants", "is_isomorphic_abelian"]


def _member_orders(A) -> list[int]:
    if isinstance(A, GroupTable):
        return list(A.element_orders())
    if isinstance(A, Subgroup):
        parent_orders = A.parent.element_orders()
        return [parent_orders[x] for x in A.members()]
    raise TypeError(f"expected GroupTable or Subgroup, got {type(A).__name__}")


def _is_abelian_input(A) -> bool:
    if isinstance(A, GroupTable):
        return is_abelian(A)
    mem = A.members()
    t = A.parent.table
    return all(t[a][b] == t[b][a] for i, a in enumerate(mem) for b in mem[i + 1:])


def _exact_log(count: int, p: int) -> int:
    k = 0
    while count > 1:
        count //= p
        k += 1
    return k


def abelian_invariants(A) -> tuple[int, ...]:
    """Elementary divisors of a finite abelian group, sorted ascending.

    Accepts a GroupTable or a Subgroup (orders of subgroup members agree
    with their orders in the parent). For each prime p let
    c_k = log_p |{x : x^(p^k) = 1}|; the group has
    (c_k - c_{k-1}) - (c_{k+1} - c_k) cyclic factors of order exactly p^k.
    """
    if not _is_abelian_input(A):
        raise ValueError("abelian invariants are defined for abelian groups only")
    orders = _member_orders(A)
    size = len(orders)
    divisors: list[int] = []
    for p, e in sorted(prime_factors(size).items()) if size > 1 else []:
        c = [0]
        for k in range(1, e + 1):
            pk = p ** k
            c.append(_exact_log(sum(1 for m in orders if pk % m == 0), p))
            if c[-1] == c[-2] and k > 1:
                break
        c.append(c[-1])
        for k in range(1, len(c) - 1):
            mult = (c[k] - c[k - 1]) - (c[k + 1] - c[k])
            divisors.extend([p ** k] * mult)
    return tuple(sorted(divisors))


def is_isomorphic_abelian(A, B) -> bool:
    """Decidable isomorphism for finite abelian groups."""
    return sorted(abelian_invariants(A)) == sorted(abelian_invariants(B))
