"""Closed-form diameter of Y(n,m) and the extremal vertices realizing it.

The diameter splits into four cases on (n, m).  For m <= n it is
floor(n(m+1)/2).  For n = 1 <= m it is a sum of two binomials in m.  For
1 < n <= m it equals the distance from one of two explicit all-ones-style
dyoke vertices to zero: d0 when the gap m - n is even or n is small,
otherwise d0 + n - ceil((m+1)/2).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import comb

from .core import DomainError, GraphParams, Vertex, complete_vertex


class CaseTag(Enum):
    M_LE_N = "m<=n"
    N_IS_ONE = "n=1<=m"
    EVEN_GAP_OR_SMALL_N = "even-gap-or-small-n"
    ODD_GAP_LARGE_N = "odd-gap-large-n"


@dataclass(frozen=True)
class DiameterCase:
    """The diameter value together with the case that produced it."""

    tag: CaseTag
    value: int


def diameter_formula(n: int, m: int) -> DiameterCase:
    """Exact diameter of Y(n,m) with the selecting case.

    The m = n boundary is consistent: the first and third cases both give
    floor(n(n+1)/2) there.  For n = 1 and m <= 1 the first two cases
    overlap and agree; the m <= n tag is reported.
    """
    if n < 1 or m < 0:
        raise DomainError(f"need n >= 1 and m >= 0, got n={n}, m={m}")
    if m <= n:
        return DiameterCase(CaseTag.M_LE_N, n * (m + 1) // 2)
    if n == 1:
        value = comb(-(-m // 2) + 1, 2) + comb(m // 2 + 1, 2)
        return DiameterCase(CaseTag.N_IS_ONE, value)
    if (m - n) % 2 == 0 or n <= (m + 2) // 2:
        return DiameterCase(CaseTag.EVEN_GAP_OR_SMALL_N, d0(n, m))
    return DiameterCase(CaseTag.ODD_GAP_LARGE_N, d0(n, m) + n - (m + 2) // 2)


def d0(n: int, m: int) -> int:
    """Distance from u0(n,m) to zero: C(floor((m+n)/2)+1, 2) + C(ceil((m-n)/2)+1, 2)."""
    _require_range(n, m)
    return comb((m + n) // 2 + 1, 2) + comb(-(-(m - n) // 2) + 1, 2)


def d1(n: int, m: int) -> int:
    """Distance from u1(n,m) to zero, defined for 1 < n < m with m - n odd."""
    _require_odd_gap(n, m)
    return comb(-(-(m + n) // 2) + 1, 2) + comb((m - n) // 2 + 1, 2) - (m + 2) // 2


def d_max(n: int, m: int) -> int:
    """The larger of the two extremal distances: d0, or max(d0, d1) for odd gap."""
    _require_range(n, m)
    if (m - n) % 2 == 0:
        return d0(n, m)
    return max(d0(n, m), d1(n, m))


def u0_vertex(n: int, m: int) -> Vertex:
    """The all-ones extremal dyoke vertex.

    Middle entries are all 1, the left bucket is -floor((m-n)/2) mod n and
    the right bucket follows from the sum condition.
    """
    _require_range(n, m)
    prefix = [(-((m - n) // 2)) % n] + [1] * m
    return complete_vertex(prefix, GraphParams.dyoke(n, m))


def u1_vertex(n: int, m: int) -> Vertex:
    """The odd-gap extremal vertex: like u0 but with a single 0 at index ceil((m+1)/2)."""
    _require_odd_gap(n, m)
    prefix = [(-((m - n) // 2)) % n] + [1] * m
    prefix[(m + 2) // 2] = 0
    return complete_vertex(prefix, GraphParams.dyoke(n, m))


def lower_bound_witness(n: int, m: int) -> Vertex:
    """A dyoke vertex at distance >= floor(n(m+1)/2) from zero.

    Both buckets are floor(n/2); for odd n one middle entry, at index
    floor((m+1)/2), is raised to 1 so the sum condition holds.  Odd n with
    m = 0 leaves no middle slot and is out of domain (that instance is a
    plain cycle anyway).
    """
    if n < 1 or m < 0:
        raise DomainError(f"need n >= 1 and m >= 0, got n={n}, m={m}")
    if n % 2 == 1 and m == 0:
        raise DomainError("odd n with m = 0 has no middle entry to balance the buckets")
    prefix = [n // 2] + [0] * m
    if n % 2 == 1:
        prefix[(m + 1) // 2] = 1
    return complete_vertex(prefix, GraphParams.dyoke(n, m))


def _require_range(n: int, m: int):
    if not 1 < n <= m:
        raise DomainError(f"need 1 < n <= m, got n={n}, m={m}")


def _require_odd_gap(n: int, m: int):
    if not (1 < n < m and (m - n) % 2 == 1):
        raise DomainError(f"need 1 < n < m with m - n odd, got n={n}, m={m}")
