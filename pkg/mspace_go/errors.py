"""
Exception hierarchy for mspace-go.

Errors caused by bad input also derive from ValueError so callers can treat
them like any other validation failure. Structural outcomes (a metric that is
not positive definite, a summand that will not split) derive only from
MSpaceGoError.
"""

from typing import Any, Optional


class MSpaceGoError(Exception):
    """Base class for every error raised by mspace-go."""


# ============================================================================
# Input errors
# ============================================================================


class InvalidType(MSpaceGoError, ValueError):
    """(family, rank) is not an admissible simple type."""


class NotARoot(MSpaceGoError, ValueError):
    """A coefficient vector is not an element of the root system."""


class ProportionalRoots(MSpaceGoError, ValueError):
    """A root string was requested through β = ±α."""


class IndexOutOfRange(MSpaceGoError, ValueError):
    """A 1-based index (simple root, painted node, summand) is out of range."""


class EmptyPainted(MSpaceGoError, ValueError):
    """A painted diagram with no painted node (K = G)."""


class NotATRoot(MSpaceGoError, ValueError):
    """A coordinate vector is not a t-root of the flag manifold."""


class AlgebraMismatch(MSpaceGoError, ValueError):
    """Two algebra elements belong to different algebras."""


class NonOrthogonalBasis(MSpaceGoError, ValueError):
    """A projection basis is not pairwise B-orthogonal."""


class ZeroVector(MSpaceGoError, ValueError):
    """A check that needs a non-zero vector received zero."""


class ShapeMismatch(MSpaceGoError, ValueError):
    """A metric spec does not match the decomposition of the M-space."""


class OutOfSubspace(MSpaceGoError, ValueError):
    """A vector has components outside the subspace an operator acts on."""


class NotEigenvectors(MSpaceGoError, ValueError):
    """Vectors passed as eigenvectors of the metric operator are not."""


class EqualEigenvalues(MSpaceGoError, ValueError):
    """Two eigenvectors share the same eigenvalue where distinct ones are needed."""


class BadChain(MSpaceGoError, ValueError):
    """An intermediate subalgebra chain k₁ ⊂ h ⊂ g is malformed."""


# ============================================================================
# Structural outcomes
# ============================================================================


class NotReducible(MSpaceGoError):
    """A summand could not be split into two equivalent Ad(K₁)-modules."""


class NotPositiveDefinite(MSpaceGoError):
    """A metric spec fails the leading principal minor test."""


class NotSelfAdjoint(MSpaceGoError):
    """A compiled metric operator is not symmetric for the Killing form."""


class NotEquivariant(MSpaceGoError):
    """
    A metric operator does not commute with ad(k₁).

    Attributes:
        pair: (k, x) labels of the first violating k₁ generator and n vector
    """

    def __init__(self, message: str, pair: Optional[tuple[Any, Any]] = None):
        super().__init__(message)
        self.pair = pair


class NotApplicable(MSpaceGoError):
    """
    A theorem's hypotheses do not hold for the given M-space.

    Attributes:
        explanation: which hypothesis failed
    """

    def __init__(self, explanation: str):
        super().__init__(explanation)
        self.explanation = explanation
