"""
Weight lattice arithmetic for SL(n) (type A_{n-1}).

Weights are stored in the fundamental-weight basis; positive roots are stored
as index pairs (i, j) standing for L_i - L_j.
"""

import logging
from dataclasses import dataclass
from typing import List, Set, Tuple

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RootSystemA:
    """Root system of SL(n); the rank is n - 1."""
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"SL(n) needs n >= 2, got {self.n}")

    @property
    def rank(self) -> int:
        return self.n - 1

    @property
    def num_positive_roots(self) -> int:
        return self.n * (self.n - 1) // 2

    def positive_roots(self) -> List["PositiveRoot"]:
        return [PositiveRoot(i, j, self.n)
                for i in range(1, self.n + 1)
                for j in range(i + 1, self.n + 1)]

    def simple_root(self, k: int) -> "PositiveRoot":
        if not 1 <= k <= self.rank:
            raise ValueError(f"Simple root index {k} out of range 1..{self.rank}")
        return PositiveRoot(k, k + 1, self.n)

    def simple_roots(self) -> List["PositiveRoot"]:
        return [self.simple_root(k) for k in range(1, self.n)]

    def zero(self) -> "Weight":
        return Weight((0,) * self.rank)

    def fundamental_weight(self, k: int) -> "Weight":
        if not 1 <= k <= self.rank:
            raise ValueError(f"Fundamental weight index {k} out of range 1..{self.rank}")
        coeffs = [0] * self.rank
        coeffs[k - 1] = 1
        return Weight(tuple(coeffs))

    def weight(self, *coeffs: int) -> "Weight":
        """Build a weight from its omega-coefficients, padding with zeros."""
        if len(coeffs) > self.rank:
            raise ValueError(f"Too many coefficients for SL({self.n}): {coeffs}")
        return Weight(tuple(coeffs) + (0,) * (self.rank - len(coeffs)))


@dataclass(frozen=True)
class Weight:
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @property
    def rank(self) -> int:
        return len(self.coeffs)

    def _check_rank(self, other: "Weight"):
        if self.rank != other.rank:
            raise ValueError(f"Rank mismatch: {self.rank} vs {other.rank}")

    def __add__(self, other: "Weight") -> "Weight":
        self._check_rank(other)
        return Weight(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Weight") -> "Weight":
        self._check_rank(other)
        return Weight(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coeffs))

    def __mul__(self, k: int) -> "Weight":
        return Weight(tuple(k * a for a in self.coeffs))

    __rmul__ = __mul__

    def __getitem__(self, k: int) -> int:
        """Coefficient of omega_k, 1-based."""
        return self.coeffs[k - 1]

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coeffs)

    def __str__(self) -> str:
        terms = []
        for k, a in enumerate(self.coeffs, start=1):
            if a == 0:
                continue
            if a == 1:
                terms.append(f"w{k}")
            elif a == -1:
                terms.append(f"-w{k}")
            else:
                terms.append(f"{a}w{k}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")


@dataclass(frozen=True)
class PositiveRoot:
    """L_i - L_j with 1 <= i < j <= n."""
    i: int
    j: int
    n: int

    def __post_init__(self):
        if not 1 <= self.i < self.j <= self.n:
            raise ValueError(f"Not a positive root of SL({self.n}): L{self.i} - L{self.j}")

    @property
    def is_simple(self) -> bool:
        return self.j == self.i + 1

    def __str__(self) -> str:
        return f"L{self.i}-L{self.j}"


def _check_same_system(mu: Weight, beta: PositiveRoot):
    if mu.rank != beta.n - 1:
        raise ValueError(f"Weight of rank {mu.rank} paired with a root of SL({beta.n})")


def pairing(mu: Weight, beta: PositiveRoot) -> int:
    """<mu, beta^vee> = a_i + ... + a_{j-1} for beta = L_i - L_j."""
    _check_same_system(mu, beta)
    return sum(mu.coeffs[beta.i - 1:beta.j - 1])


def support(beta: PositiveRoot) -> Set[int]:
    return set(range(beta.i, beta.j))


def root_as_weight(beta: PositiveRoot) -> Weight:
    """Omega-coordinates of beta: the k-th coefficient is <beta, alpha_k^vee>."""
    coeffs = []
    for k in range(1, beta.n):
        c = 0
        if beta.i == k:
            c += 1
        if beta.i == k + 1:
            c -= 1
        if beta.j == k:
            c -= 1
        if beta.j == k + 1:
            c += 1
        coeffs.append(c)
    return Weight(tuple(coeffs))


def rho(rs: RootSystemA) -> Weight:
    return Weight((1,) * rs.rank)


def is_dominant(mu: Weight) -> bool:
    return all(a >= 0 for a in mu.coeffs)


def _require_simple(alpha: PositiveRoot):
    if not alpha.is_simple:
        raise ValueError(f"{alpha} is not a simple root")


def simple_reflection(mu: Weight, alpha: PositiveRoot) -> Weight:
    """s_alpha(mu) = mu - <mu, alpha^vee> alpha."""
    _require_simple(alpha)
    return mu - pairing(mu, alpha) * root_as_weight(alpha)


def dot_reflection(mu: Weight, alpha: PositiveRoot) -> Weight:
    """s_alpha . mu = mu - (<mu, alpha^vee> + 1) alpha."""
    _require_simple(alpha)
    return mu - (pairing(mu, alpha) + 1) * root_as_weight(alpha)


def to_l_coordinates(mu: Weight) -> Tuple[int, ...]:
    """Representative (b_1, ..., b_n) with b_i - b_{i+1} = a_i and b_n = 0."""
    b = [0]
    for a in reversed(mu.coeffs):
        b.append(b[-1] + a)
    return tuple(reversed(b))


def from_l_coordinates(b: Tuple[int, ...]) -> Weight:
    """Partition-style coordinates (b_1 >= ... >= b_n) to fundamental-weight coefficients b_k - b_{k+1}."""
    if len(b) < 2:
        raise ValueError("Need at least two L-coordinates")
    return Weight(tuple(b[k] - b[k + 1] for k in range(len(b) - 1)))
