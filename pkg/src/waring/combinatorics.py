"""Multi-index machinery underlying symmetric tensor storage.

An exponent vector p = (p1, ..., pn) of degree k = sum(p) labels one
monomial class of an order-k symmetric tensor over C^n.  An index tuple
j = (j1, ..., jk) with entries in {1, ..., n} addresses one dense entry;
its class is the multiplicity vector of the values it contains.  Both are
represented as plain int tuples.

All counts are validated against the signed 64-bit range so that a silent
wraparound can never corrupt downstream bilinear forms.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .errors import ArithmeticOverflowError, ValidationError

_INT64_MAX = 2**63 - 1


def _check_int64(value: int, what: str) -> int:
    if value > _INT64_MAX:
        raise ArithmeticOverflowError(f"{what} = {value} exceeds the signed 64-bit range")
    return value


def as_exponent(p) -> tuple[int, ...]:
    """Validate and normalize an exponent vector to an int tuple."""
    exps = tuple(int(e) for e in p)
    if not exps:
        raise ValidationError("exponent vector must have at least one entry")
    if any(e < 0 for e in exps):
        raise ValidationError(f"exponent vector {exps} has a negative entry")
    return exps


def degree(p) -> int:
    """Total degree |p| of an exponent vector."""
    return sum(as_exponent(p))


def sym_dimension(k: int, n: int) -> int:
    """Dimension C(n+k-1, k) of the space of order-k symmetric tensors over C^n."""
    if k < 0:
        raise ValidationError("order k must be >= 0")
    if n < 1:
        raise ValidationError("dimension n must be >= 1")
    return _check_int64(math.comb(n + k - 1, k), f"sym_dimension({k}, {n})")


def multinomial(p) -> int:
    """Multinomial coefficient k!/(p1! ... pn!) for an exponent vector p.

    Equals the number of distinct index tuples in the class of p.  Computed
    as a product of binomials over prefix sums, which stays integral at
    every step.
    """
    exps = as_exponent(p)
    total = 0
    result = 1
    for e in exps:
        total += e
        result *= math.comb(total, e)
    return _check_int64(result, f"multinomial({exps})")


@lru_cache(maxsize=None)
def _enumerate_cached(k: int, n: int) -> tuple[tuple[int, ...], ...]:
    if n == 1:
        return ((k,),)
    out = []
    for first in range(k, -1, -1):
        for rest in _enumerate_cached(k - first, n - 1):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_exponents(k: int, n: int) -> list[tuple[int, ...]]:
    """All exponent vectors of degree k in n variables, in graded-lex order.

    Graded-lex on a fixed degree reduces to descending lexicographic order,
    so (2,0) precedes (1,1) precedes (0,2).
    """
    if k < 0:
        raise ValidationError("order k must be >= 0")
    if n < 1:
        raise ValidationError("dimension n must be >= 1")
    return list(_enumerate_cached(k, n))


def index_to_exponent(indices, n: int) -> tuple[int, ...]:
    """Multiplicity vector of a 1-based index tuple: p[i-1] = count of value i.

    Invariant under permutations of the tuple.
    """
    if n < 1:
        raise ValidationError("dimension n must be >= 1")
    counts = [0] * n
    for idx in indices:
        i = int(idx)
        if not 1 <= i <= n:
            raise ValidationError(f"index {i} outside 1..{n}")
        counts[i - 1] += 1
    return tuple(counts)
