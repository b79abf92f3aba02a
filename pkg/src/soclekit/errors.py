"""Exception types shared across the toolkit."""

from __future__ import annotations


class SocleKitError(Exception):
    """Base class for all soclekit domain errors."""


class OrderCapExceeded(SocleKitError):
    """A construction would produce a group larger than the order cap."""


class LatticeCapExceeded(SocleKitError):
    """Full subgroup enumeration was requested above the enumeration cap.

    Callers catching this should fall back to the fast (lattice-free) paths
    or retry with an explicit cap override.
    """


class TableValidationError(SocleKitError):
    """A raw multiplication table violates one of the group axioms.

    ``code`` is one of ``"malformed"``, ``"not-latin-square"``,
    ``"identity-law"``, ``"missing-inverse"``, ``"associativity"``;
    ``witness`` pins down an offending entry (for associativity, the
    triple ``[a, b, c]`` with ``(a*b)*c != a*(b*c)``).
    """

    def __init__(self, code: str, witness: list):
        super().__init__(f"{code}: witness {witness}")
        self.code = code
        self.witness = witness

    def to_dict(self) -> dict:
        return {"error": self.code, "witness": self.witness}


class NotClosedError(SocleKitError):
    """An element set expected to be product-closed is not.

    ``witness`` is a pair ``(a, b)`` whose product escapes the set.
    """

    def __init__(self, message: str, witness: tuple[int, int]):
        super().__init__(f"{message}: witness {witness}")
        self.witness = witness


class NotHamiltonianError(SocleKitError):
    """A Hamiltonian-only operation was applied to a non-Hamiltonian group."""


class DecompositionError(SocleKitError):
    """An internal direct-sum invariant failed during decomposition.

    ``invariant`` names the failed check.
    """

    def __init__(self, invariant: str, detail: str = ""):
        super().__init__(f"decomposition invariant failed: {invariant}"
                         + (f" ({detail})" if detail else ""))
        self.invariant = invariant


class ExprSyntaxError(SocleKitError):
    """Group-expression parse failure, with the byte offset of the error."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset
