"""
Homogeneous spaces G/P for SL(n) with a possibly non-reduced stabilizer P.

P is encoded by a parabolic function f on the simple roots with values in
N u {inf}. Line bundles on G/P are weights in the sublattice of X(T) spanned by
p^f(i) * omega_i for f(i) < inf (omega-basis identification throughout).
Every ample line bundle on G/P is very ample; reports surface that as an
annotation, it is never computed here.
"""

import logging
import math
from dataclasses import dataclass
from typing import Dict, List, Sequence, Union

from sympy import isprime

from geometry.weight_lattice import (
    PositiveRoot, RootSystemA, Weight, pairing, root_as_weight, support,
)

logger = logging.getLogger(__name__)

INF = math.inf

FValue = Union[int, float]


def parse_f_values(text: str) -> List[FValue]:
    """Parse '1,0,inf,inf' into parabolic function values."""
    values: List[FValue] = []
    for token in text.split(","):
        token = token.strip().lower()
        if token in ("inf", "infinity", "oo"):
            values.append(INF)
        else:
            try:
                values.append(int(token))
            except ValueError:
                raise ValueError(f"Not a parabolic function value: '{token}'")
    return values


def format_f_value(v: FValue) -> str:
    """Inverse of parse_f_values for a single value."""
    return "inf" if v == INF else str(int(v))


@dataclass(frozen=True)
class ParabolicFunction:
    """
    f: simple roots -> N u {inf}, with f(k) stored at values[k - 1].

    f(k) = inf puts the whole root group U_{-alpha_k} in P; a finite value r puts
    only its r-th Frobenius kernel there (r = 0: nothing).
    """
    values: tuple
    p: int

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if not isprime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")
        if len(self.values) < 1:
            raise ValueError("A parabolic function needs at least one simple root")
        for v in self.values:
            if v != INF and (not isinstance(v, int) or v < 0):
                raise ValueError(f"Parabolic function values must be natural numbers or inf, got {v}")

    @classmethod
    def twisted_flag(cls, n: int, p: int) -> "ParabolicFunction":
        """f(1) = 1, f(2) = 0, f(i) = inf for 3 <= i <= n - 1."""
        if n < 3:
            raise ValueError(f"The twisted flag function needs n >= 3, got {n}")
        return cls((1, 0) + (INF,) * (n - 3), p)

    @classmethod
    def constant(cls, n: int, p: int, r: int) -> "ParabolicFunction":
        return cls((r,) * (n - 1), p)

    @property
    def n(self) -> int:
        return len(self.values) + 1

    @property
    def root_system(self) -> RootSystemA:
        return RootSystemA(self.n)

    def __call__(self, k: int) -> FValue:
        return self.values[k - 1]

    def finite_indices(self) -> List[int]:
        return [k for k in range(1, self.n) if self(k) != INF]

    def is_trivial(self) -> bool:
        return not self.finite_indices()

    def describe(self) -> str:
        return ",".join(format_f_value(v) for v in self.values)


def extend_f(f: ParabolicFunction, beta: PositiveRoot) -> FValue:
    """f(beta) = min of f over the support of beta."""
    if beta.n != f.n:
        raise ValueError(f"Root of SL({beta.n}) used with a function on SL({f.n})")
    return min(f(k) for k in support(beta))


def gp_dimension(f: ParabolicFunction) -> int:
    """
    dim G/P = #{beta > 0 : f(beta) < inf}.

    Non-reducedness of P does not change the dimension, so this agrees with
    dim G/P_red. For the twisted flag function it is 2n - 3.
    """
    return sum(1 for beta in f.root_system.positive_roots() if extend_f(f, beta) != INF)


def picard_basis(f: ParabolicFunction) -> Dict[int, Weight]:
    """Generators p^f(k) * omega_k of Pic(G/P), keyed by k, for every finite f(k)."""
    rs = f.root_system
    return {k: (f.p ** f(k)) * rs.fundamental_weight(k) for k in f.finite_indices()}


def picard_number(f: ParabolicFunction) -> int:
    """Rank of Pic(G/P): one generator per simple root with f finite."""
    return len(f.finite_indices())


def lattice_violations(f: ParabolicFunction, weight: Weight) -> List[str]:
    """Reasons a weight is not in Pic(G/P); empty when it is."""
    problems = []
    if weight.rank != f.n - 1:
        return [f"weight of rank {weight.rank} on SL({f.n})"]
    for k in range(1, f.n):
        a = weight[k]
        if f(k) == INF:
            if a != 0:
                problems.append(f"coefficient {a} of w{k} must vanish (f({k}) = inf)")
        elif a % (f.p ** f(k)) != 0:
            problems.append(f"coefficient {a} of w{k} not divisible by {f.p}^{f(k)}")
    return problems


@dataclass(frozen=True)
class GPLineBundle:
    weight: Weight
    parent: ParabolicFunction

    def __post_init__(self):
        problems = lattice_violations(self.parent, self.weight)
        if problems:
            raise ValueError(f"{self.weight} is not in Pic(G/P): " + "; ".join(problems))

    def __add__(self, other: "GPLineBundle") -> "GPLineBundle":
        return GPLineBundle(self.weight + other.weight, self.parent)

    def __sub__(self, other: "GPLineBundle") -> "GPLineBundle":
        return GPLineBundle(self.weight - other.weight, self.parent)

    def __neg__(self) -> "GPLineBundle":
        return GPLineBundle(-self.weight, self.parent)

    def __mul__(self, k: int) -> "GPLineBundle":
        return GPLineBundle(k * self.weight, self.parent)

    __rmul__ = __mul__

    def divide(self, d: int) -> "GPLineBundle":
        if any(a % d for a in self.weight.coeffs):
            raise ValueError(f"{self.weight} is not divisible by {d}")
        return GPLineBundle(Weight(tuple(a // d for a in self.weight.coeffs)), self.parent)


def anticanonical(f: ParabolicFunction) -> GPLineBundle:
    """-K_X = sum over positive roots beta with f(beta) < inf of p^f(beta) * beta."""
    if f.is_trivial():
        raise ValueError("f is infinite everywhere; G/P is a point")
    rs = f.root_system
    total = rs.zero()
    for beta in rs.positive_roots():
        r = extend_f(f, beta)
        if r != INF:
            total = total + (f.p ** r) * root_as_weight(beta)
    # raises if the sum left the Picard lattice
    return GPLineBundle(total, f)


def is_ample(L: GPLineBundle) -> bool:
    """Ample (hence very ample) iff every coefficient at f(i) < inf is positive."""
    problems = lattice_violations(L.parent, L.weight)
    if problems:
        raise ValueError("; ".join(problems))
    return all(L.weight[k] > 0 for k in L.parent.finite_indices())


def is_fano(f: ParabolicFunction) -> bool:
    # for the twisted flag function this holds iff p < n
    return is_ample(anticanonical(f))


def divisibility(L: GPLineBundle) -> int:
    """Largest d with L / d still in Pic(G/P)."""
    f = L.parent
    d = 0
    for k in f.finite_indices():
        d = math.gcd(d, L.weight[k] // (f.p ** f(k)))
    if d == 0:
        raise ValueError("The zero bundle has no divisibility")
    return d


def fiber_degree(L: GPLineBundle, alpha: PositiveRoot) -> int:
    """Degree on the P^1 fibers of G/P -> G/Q cut out by a simple root with f = 1."""
    if not alpha.is_simple:
        raise ValueError(f"{alpha} is not simple")
    f = L.parent
    if f(alpha.i) != 1:
        raise ValueError(f"fiber_degree needs f({alpha.i}) = 1, got {format_f_value(f(alpha.i))}")
    value = pairing(L.weight, alpha)
    if value % f.p:
        raise ValueError(f"<{L.weight}, {alpha}^vee> = {value} is not a multiple of p = {f.p}")
    return value // f.p


def parse_weight(text: str, rs: RootSystemA) -> Weight:
    """Parse a comma-separated list of omega-coefficients."""
    try:
        coeffs = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise ValueError(f"Malformed weight '{text}'")
    if len(coeffs) != rs.rank:
        raise ValueError(f"SL({rs.n}) weights need {rs.rank} coefficients, got {len(coeffs)}")
    return Weight(tuple(coeffs))


def bundle_from_coefficients(f: ParabolicFunction, coeffs: Sequence[int]) -> GPLineBundle:
    return GPLineBundle(f.root_system.weight(*coeffs), f)
