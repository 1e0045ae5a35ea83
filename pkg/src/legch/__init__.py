"""Linearized Legendrian contact homology over GF(2).

The package computes the algebraic invariants that a Chekanov-Eliashberg
differential graded algebra carries once an augmentation is chosen:
linearized (co)homology, the induced A-infinity structure on the cochain
complex, cup and Massey products, the transferred minimal model, order-n
linearized cohomology via the truncated bar complex, a Poincare-style
duality certificate, and mirror-comparison fingerprints.

Everything is exact arithmetic over GF(2); there are no tolerances.
"""


class ContractError(Exception):
    """Bad input: malformed file, invalid DGA, out-of-range argument."""


class InternalConsistencyError(Exception):
    """A mathematical identity that must hold was violated (a bug trap)."""


__all__ = ["ContractError", "InternalConsistencyError"]
__version__ = "0.1.0"
