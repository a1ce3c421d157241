"""
Schur module dimensions and Euler characteristics on G/B for SL(n).
"""

import itertools
import logging
from typing import Tuple

from geometry.weight_lattice import (
    RootSystemA, Weight, from_l_coordinates, is_dominant, rho, to_l_coordinates,
)

logger = logging.getLogger(__name__)

# h^0(G/B, mu) for dominant mu
DimValue = int
# chi(G/B, mu), any sign
EulerValue = int


def _require_dominant(rs: RootSystemA, mu: Weight):
    if mu.rank != rs.rank:
        raise ValueError(f"Weight of rank {mu.rank} used with SL({rs.n})")
    if not is_dominant(mu):
        raise ValueError(f"Weight {mu} is not dominant")


def weyl_dim(rs: RootSystemA, mu: Weight) -> DimValue:
    """Weyl dimension formula: prod_{i<j} (a_i + ... + a_{j-1} + j - i) / (j - i)."""
    _require_dominant(rs, mu)
    num = 1
    den = 1
    for i in range(1, rs.n + 1):
        partial = 0
        for j in range(i + 1, rs.n + 1):
            partial += mu.coeffs[j - 2]
            num *= partial + j - i
            den *= j - i
    quotient, remainder = divmod(num, den)
    if remainder:
        raise ArithmeticError(f"Non-integral Weyl dimension for {mu}: {num}/{den}")
    return quotient


def _sort_descending_with_sign(values: Tuple[int, ...]) -> Tuple[Tuple[int, ...], int]:
    """Sort strictly descending; the sign is the parity of the inversion count."""
    inversions = 0
    for a, b in itertools.combinations(values, 2):
        if a < b:
            inversions += 1
    return tuple(sorted(values, reverse=True)), (-1) ** inversions


def euler_char(rs: RootSystemA, mu: Weight) -> EulerValue:
    """chi(G/B, mu) via dot-action dominantization of mu + rho."""
    if mu.rank != rs.rank:
        raise ValueError(f"Weight of rank {mu.rank} used with SL({rs.n})")
    shifted = to_l_coordinates(mu + rho(rs))
    if len(set(shifted)) < len(shifted):
        return 0
    ordered, sign = _sort_descending_with_sign(shifted)
    dominant = from_l_coordinates(ordered) - rho(rs)
    return sign * weyl_dim(rs, dominant)


def _interlacing_rows(row: Tuple[int, ...]):
    ranges = [range(row[k + 1], row[k] + 1) for k in range(len(row) - 1)]
    return itertools.product(*ranges)


def _count_patterns(row: Tuple[int, ...]) -> int:
    if len(row) <= 1:
        return 1
    return sum(_count_patterns(tuple(below)) for below in _interlacing_rows(row))


def gt_pattern_count(rs: RootSystemA, mu: Weight) -> DimValue:
    """
    Count Gelfand-Tsetlin patterns with top row the partition of mu.
    Brute force; only meant as an oracle for weyl_dim on small inputs.
    """
    _require_dominant(rs, mu)
    return _count_patterns(to_l_coordinates(mu))
