"""Mod-6 residue classes of prime candidates.

Every prime p with |p| > 3 satisfies p % 6 == 1 or p % 6 == 5: the other four
residues are divisible by 2 or 3.  We call residue-1 integers the *alpha*
class (6n+1 for integer n) and residue-5 integers the *beta* class (6n-1).
The integer n is the "generator index" of the candidate; it is the native
coordinate of the sieve.

All public values are kept within signed 64-bit range.  Lifting operations
(index -> candidate value) raise OverflowError instead of silently producing
values a downstream consumer could not hold in an int64.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable

INT64_MIN = -(1 << 63)
INT64_MAX = (1 << 63) - 1


class ResidueClass(enum.Enum):
    ALPHA = "alpha"            # value % 6 == 1, i.e. value = 6n+1
    BETA = "beta"              # value % 6 == 5, i.e. value = 6n-1
    NON_CANDIDATE = "non-candidate"


@dataclass(frozen=True)
class CandidateRow:
    """Both candidates lifted from one index, with primality of |value|."""

    n: int
    beta_value: int
    beta_is_prime: bool
    alpha_value: int
    alpha_is_prime: bool


def _check_int64(value: int, what: str) -> int:
    if not INT64_MIN <= value <= INT64_MAX:
        raise OverflowError(f"{what} {value} exceeds signed 64-bit range")
    return value


def classify(x: int) -> ResidueClass:
    """Residue class of x.

    Uses the nonnegative residue, so negatives classify by the same rule:
    -5 % 6 == 1, hence -5 is alpha.
    """
    r = x % 6
    if r == 1:
        return ResidueClass.ALPHA
    if r == 5:
        return ResidueClass.BETA
    return ResidueClass.NON_CANDIDATE


def alpha_value(n: int) -> int:
    """Lift index n to its alpha candidate 6n+1."""
    return _check_int64(6 * n + 1, "alpha candidate")


def beta_value(n: int) -> int:
    """Lift index n to its beta candidate 6n-1."""
    return _check_int64(6 * n - 1, "beta candidate")


def generator_of(x: int) -> tuple[ResidueClass, int]:
    """Invert the lift: return (class, n) with x == 6n+1 or x == 6n-1.

    Raises ValueError for non-candidates (x % 6 not in {1, 5}).
    """
    cls = classify(x)
    if cls is ResidueClass.ALPHA:
        return cls, (x - 1) // 6
    if cls is ResidueClass.BETA:
        return cls, (x + 1) // 6
    raise ValueError(f"{x} is not a 6n±1 candidate (x % 6 == {x % 6})")


def class_product(c1: ResidueClass, c2: ResidueClass) -> ResidueClass:
    """Class of a product of two candidates: alpha is the identity, beta*beta=alpha.

    Mirrors integer arithmetic mod 6: 1*1=1, 5*5=25==1, 1*5=5.
    """
    if ResidueClass.NON_CANDIDATE in (c1, c2):
        raise ValueError("class_product is defined on alpha/beta only")
    if c1 is c2:
        return ResidueClass.ALPHA
    return ResidueClass.BETA


def candidate_row(n: int, primality: Callable[[int], bool]) -> CandidateRow:
    """Build the (6n-1, 6n+1) row for index n.

    `primality` is consulted with absolute values, so a negative candidate is
    flagged prime exactly when its mirror image is (-31 counts as prime, -25
    does not).
    """
    beta = beta_value(n)
    alpha = alpha_value(n)
    return CandidateRow(
        n=n,
        beta_value=beta,
        beta_is_prime=primality(abs(beta)),
        alpha_value=alpha,
        alpha_is_prime=primality(abs(alpha)),
    )
