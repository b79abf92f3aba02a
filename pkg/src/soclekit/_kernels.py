"""Pure-Python lattice kernels operating on bit-mask subgroups.

A subgroup of a group of order n is an n-bit integer mask: bit x is set iff
element x belongs. The compiled twin in ``_speedups`` implements the same
four entry points with identical outputs; ``soclekit._core`` picks one lane
at import time, so everything above this layer is implementation-agnostic.

All kernels take the multiplication table as an indexable of indexables
(``table[a][b]`` is the index of the product a*b) with the identity at
index 0.
"""

from __future__ import annotations

IMPLEMENTATION = "pure"


def iter_bits(mask: int):
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def closure_mask(table, seed) -> int:
    """Mask of the subgroup generated by the ``seed`` element indices.

    Worklist closure under products; inverses come for free in a finite
    group. Cost is O(|result|^2) table lookups, which is fine for one-off
    calls (enumeration uses the incremental ``extend_mask`` instead).
    """
    mask = 1
    elems = [0]
    work = []
    for x in sorted(set(seed)):
        if not (mask >> x) & 1:
            mask |= 1 << x
            elems.append(x)
            work.append(x)
    while work:
        x = work.pop()
        row = table[x]
        for y in tuple(elems):
            for z in (row[y], table[y][x]):
                if not (mask >> z) & 1:
                    mask |= 1 << z
                    elems.append(z)
                    work.append(z)
    return mask


def extend_mask(table, smask: int, gens, x: int) -> tuple[int, int]:
    """Grow subgroup S (mask ``smask``, generated by ``gens``) by element x.

    Returns ``(jmask, coset)`` where jmask is the mask of <S, x> and coset
    is the mask of the right coset S*x. The join is a union of right cosets
    of S, found by walking the coset graph under right multiplication by
    the generators; each new coset costs |S| products, so the whole call is
    O(|<S, x>|) table lookups.

    ``gens`` must actually generate S; callers maintain that invariant.
    """
    selems = tuple(iter_bits(smask))
    coset = 0
    for s in selems:
        coset |= 1 << table[s][x]
    jmask = smask | coset
    reps = [x]
    allgens = tuple(gens) + (x,)
    ri = 0
    while ri < len(reps):
        row = table[reps[ri]]
        ri += 1
        for t in allgens:
            y = row[t]
            if not (jmask >> y) & 1:
                reps.append(y)
                c = 0
                for s in selems:
                    c |= 1 << table[s][y]
                jmask |= c
    return jmask, coset


def all_subgroup_masks(table) -> list[int]:
    """All subgroup masks of the group, sorted by (size, mask value).

    Every subgroup is a join of cyclic subgroups, so joining each known
    subgroup with each adjoinable element until a fixpoint enumerates the
    complete lattice. Two prunings keep this tractable without losing
    completeness:

    - elements of the same right coset S*x yield the same join <S, x>
      (x' = s*x implies x = s^-1 * x' inside <S, x'>), so only one element
      per coset is tried;
    - each join is computed incrementally via ``extend_mask`` rather than
      by re-closing the union from scratch.
    """
    n = len(table)
    full = (1 << n) - 1
    masks = [1]
    genlists = [()]
    seen = {1: 0}
    i = 0
    while i < len(masks):
        smask = masks[i]
        gens = genlists[i]
        i += 1
        if smask == full:
            continue
        tried = smask
        for x in range(n):
            if (tried >> x) & 1:
                continue
            jmask, coset = extend_mask(table, smask, gens, x)
            tried |= coset
            if jmask not in seen:
                seen[jmask] = len(masks)
                masks.append(jmask)
                genlists.append(gens + (x,))
    masks.sort(key=lambda m: (m.bit_count(), m))
    return masks


def perm_closed_filter(perms, masks) -> list[bool]:
    """For each mask, whether its element set is closed under every perm.

    With ``perms`` the conjugation maps of a generating set, this is a bulk
    normality filter over a subgroup list.
    """
    out = []
    for mask in masks:
        ok = True
        for perm in perms:
            m = mask
            while m:
                low = m & -m
                if not (mask >> perm[low.bit_length() - 1]) & 1:
                    ok = False
                    break
                m ^= low
            if not ok:
                break
        out.append(ok)
    return out
