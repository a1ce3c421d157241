"""
Rule-based cohomology of line bundles on G/B and on the twisted flag varieties G/P.

Only three rules are known to the engine on G/B:

    R1  Kempf vanishing      dominant weights: H^0 = Schur module, H^i = 0 for i > 0
    R2  wall vanishing       <mu, alpha^vee> = -1 for a simple alpha: everything vanishes
    R3  Andersen shift       H^i(mu) = H^{i+1}(s_beta . mu) when <mu, beta^vee> = s p^m - 1, 0 < s < p

R3 is applied once (in either direction) on top of R1/R2. Anything else is
"unknown", which is a legitimate answer and never an error.
"""

import logging
from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import comb
from typing import Dict, List, Optional, Tuple

from sympy import isprime

from geometry.gp_geometry import (
    GPLineBundle, ParabolicFunction, anticanonical, divisibility, fiber_degree,
    gp_dimension, is_ample, is_fano, picard_number,
)
from geometry.report import RuleFiring, VerificationReport
from geometry.schur_calculus import euler_char, weyl_dim
from geometry.weight_lattice import (
    PositiveRoot, RootSystemA, Weight, dot_reflection, is_dominant, pairing,
    root_as_weight,
)

logger = logging.getLogger(__name__)

# Rule anchors: the rule applied, then the sentence of the source argument it reproduces.
ANCHOR_KEMPF = r'Kempf vanishing: "have cohomology concentrated in degree zero"'
ANCHOR_WALL = r'wall vanishing, <mu, alpha^vee> = -1: "no cohomology in any degree"'
ANCHOR_ANDERSEN = r'Andersen shift, H^i(mu) = H^{i+1}(s_beta . mu): "of the form $sp^m-1$"'
ANCHOR_WEYL = r'Weyl dimension formula: "are given by the Weyl dimension formula"'
ANCHOR_LES = r'P^1-bundle pushforward: "$0\rightarrow k(\lambda-p\alpha)\rightarrow M\rightarrow k(\lambda)\rightarrow 0$"'
ANCHOR_FOUR_TERM = r'four-term sequence: "we have an exact sequence of $G$-modules"'
ANCHOR_EULER = r'Euler additivity: "$\chi(X,\mu)=\chi(G/B,\mu)+\chi(G/B,\mu-p\alpha)$"'
ANCHOR_STEINBERG = r'Steinberg tensor product: "has dimension $\binom{n}{2}n=\binom{p+2}{2}(p+2)$"'
ANCHOR_SOCLE = r'socle argument: "because $\lambda>\lambda-\alpha$ in the partial ordering"'
ANCHOR_OCCURRENCE = r'occurrence argument: "the weight $\mu$ occurs"'
ANCHOR_CONE_TERMINAL = r'cone criterion: "is $\text{\bf Q}$-linearly equivalent to $a(-K_X)$ for some $0<a<1$"'
ANCHOR_CONE_CM = r'cone criterion: "Cohen-Macaulay if and only if $H^i(X,mA)=0$ for all $0<i<\dim(X)$"'
ANCHOR_NO_LIFT = r'no lift: "does not lift to characteristic"'
ANCHOR_ANTICANONICAL = r'anticanonical class: "The anticanonical bundle of $X=G/P$ is given by"'
ANCHOR_AMPLE = r'ampleness: "the coefficient of $\omega_i$ is positive"'
ANCHOR_DIMENSION = r'dim G/P = #{beta > 0 : f(beta) < inf}: "dimension $2n-3$ and Picard number 2"'
ANCHOR_PICARD = r'Picard lattice: "The Picard group $\Pic(G/P)$ can be identified with a subgroup"'
ANCHOR_FIBER = r'fiber degree: "is $\langle \lambda,\alpha^{\vee}\rangle/p$"'


@dataclass(frozen=True)
class Entry:
    """What is known about h^i: an interval [lower, upper], upper None meaning unbounded."""
    lower: int = 0
    upper: Optional[int] = None

    @classmethod
    def exact(cls, d: int) -> "Entry":
        return cls(d, d)

    @classmethod
    def zero(cls) -> "Entry":
        return cls(0, 0)

    @classmethod
    def unknown(cls) -> "Entry":
        return cls(0, None)

    @property
    def is_exact(self) -> bool:
        return self.upper is not None and self.lower == self.upper

    @property
    def is_zero(self) -> bool:
        return self.upper == 0

    @property
    def kind(self) -> str:
        if self.is_zero:
            return "zero"
        if self.is_exact:
            return "exact"
        if self.lower > 0:
            return "lower_bound"
        if self.upper is not None:
            return "upper_bound"
        return "unknown"

    def intersect(self, other: "Entry") -> "Entry":
        lower = max(self.lower, other.lower)
        upper = _min_upper(self.upper, other.upper)
        if upper is not None and lower > upper:
            raise ValueError(f"Inconsistent cohomology bounds: [{lower}, {upper}]")
        return Entry(lower, upper)

    def to_dict(self) -> Dict:
        out = {"kind": self.kind, "lower": self.lower}
        out["upper"] = "inf" if self.upper is None else self.upper
        return out

    def __str__(self) -> str:
        if self.is_exact:
            return str(self.lower)
        return f"[{self.lower}, {'inf' if self.upper is None else self.upper}]"


def _min_upper(a: Optional[int], b: Optional[int]) -> Optional[int]:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


@dataclass
class CohomologyProfile:
    dimension: int
    entries: Dict[int, Entry] = field(default_factory=dict)
    certificate: List[RuleFiring] = field(default_factory=list)
    euler: Optional[int] = None

    def entry(self, i: int) -> Entry:
        if i < 0 or i > self.dimension:
            return Entry.zero()
        return self.entries.get(i, Entry.unknown())

    def degrees(self) -> range:
        return range(0, self.dimension + 1)

    @property
    def is_resolved(self) -> bool:
        return all(self.entry(i).is_exact for i in self.degrees())

    @property
    def is_all_zero(self) -> bool:
        return all(self.entry(i).is_zero for i in self.degrees())

    def alternating_sum(self) -> Optional[int]:
        if not self.is_resolved:
            return None
        return sum((-1) ** i * self.entry(i).lower for i in self.degrees())

    def concentrated_in(self) -> Optional[int]:
        """The unique degree carrying nonzero exact cohomology, if that is what the profile says."""
        if not self.is_resolved:
            return None
        nonzero = [i for i in self.degrees() if self.entry(i).lower != 0]
        return nonzero[0] if len(nonzero) == 1 else None

    def shifted(self, offset: int, firing: RuleFiring) -> "CohomologyProfile":
        """Profile with entry(i) = self.entry(i - offset)."""
        entries = {}
        for i in self.degrees():
            target = i + offset
            if 0 <= target <= self.dimension:
                entries[target] = self.entry(i)
            elif not self.entry(i).is_zero:
                raise ValueError(f"Shift by {offset} pushes nonzero h^{i} out of range")
        euler = None if self.euler is None else (-1) ** offset * self.euler
        return CohomologyProfile(self.dimension, entries, self.certificate + [firing], euler)

    def refine(self, degree: int, lower: Optional[int] = None, upper: Optional[int] = None,
               firing: Optional[RuleFiring] = None) -> "CohomologyProfile":
        bound = Entry(lower if lower is not None else 0, upper)
        entries = dict(self.entries)
        entries[degree] = self.entry(degree).intersect(bound)
        certificate = self.certificate + ([firing] if firing else [])
        refined = replace(self, entries=entries, certificate=certificate)
        return _tighten_with_euler(refined)

    def to_dict(self) -> Dict:
        return {
            "dimension": self.dimension,
            "entries": {str(i): self.entry(i).to_dict() for i in self.degrees()},
            "euler": self.euler,
            "certificate": [c.to_dict() for c in self.certificate],
        }

    def summary(self) -> str:
        return ", ".join(f"h{i}={self.entry(i)}" for i in self.degrees() if not self.entry(i).is_zero) or "all zero"


def _all_exact(dimension: int, dims: Dict[int, int], firing: RuleFiring) -> CohomologyProfile:
    entries = {i: Entry.exact(dims.get(i, 0)) for i in range(dimension + 1)}
    euler = sum((-1) ** i * d for i, d in dims.items())
    return CohomologyProfile(dimension, entries, [firing], euler)


def _andersen_form(value: int, p: int) -> Optional[Tuple[int, int]]:
    """(s, m) with value = s p^m - 1 and 0 < s < p, or None."""
    x = value + 1
    if x <= 0:
        return None
    m = 0
    while x % p == 0:
        x //= p
        m += 1
    if 0 < x < p:
        return x, m
    return None


def _resolve_direct(rs: RootSystemA, mu: Weight) -> Optional[CohomologyProfile]:
    dimension = rs.num_positive_roots
    if is_dominant(mu):
        d = weyl_dim(rs, mu)
        return _all_exact(dimension, {0: d}, RuleFiring("R1", ANCHOR_KEMPF, f"{mu} dominant, h^0 = {d}"))
    for alpha in rs.simple_roots():
        if pairing(mu, alpha) == -1:
            return _all_exact(dimension, {}, RuleFiring(
                "R2", ANCHOR_WALL, f"<{mu}, alpha_{alpha.i}^vee> = -1"))
    return None


def gb_profile(rs: RootSystemA, p: int, mu: Weight) -> CohomologyProfile:
    """Cohomology of the line bundle mu on G/B in characteristic p, as far as R1-R3 decide it."""
    direct = _resolve_direct(rs, mu)
    if direct is not None:
        logger.debug(f"gb_profile({mu}) resolved by {direct.certificate[-1].rule}")
        return direct

    for beta in rs.simple_roots():
        value = pairing(mu, beta)
        reflected = dot_reflection(mu, beta)

        # s_beta . mu satisfies the hypothesis: H^i(reflected) = H^{i+1}(mu)
        form = _andersen_form(-value - 2, p)
        if form is not None:
            base = _resolve_direct(rs, reflected)
            if base is not None:
                s, m = form
                firing = RuleFiring("R3", ANCHOR_ANDERSEN,
                                    f"<{reflected}, alpha_{beta.i}^vee> = {s}*{p}^{m} - 1; "
                                    f"H^i({reflected}) = H^(i+1)({mu})")
                return base.shifted(1, firing)

        # mu itself satisfies it: H^i(mu) = H^{i+1}(reflected)
        form = _andersen_form(value, p)
        if form is not None:
            base = _resolve_direct(rs, reflected)
            if base is not None:
                s, m = form
                firing = RuleFiring("R3", ANCHOR_ANDERSEN,
                                    f"<{mu}, alpha_{beta.i}^vee> = {s}*{p}^{m} - 1; "
                                    f"H^i({mu}) = H^(i+1)({reflected})")
                return base.shifted(-1, firing)

    logger.debug(f"gb_profile({mu}) unresolved at p = {p}")
    return CohomologyProfile(rs.num_positive_roots, {}, [
        RuleFiring("none", "no rule applies", f"{mu} at p = {p}")])


def _interval_shift(entry: Entry, c: int, sign: int) -> Entry:
    """Image of entry under h -> c + sign * h, clipped at zero."""
    if sign > 0:
        lower = c + entry.lower
        upper = None if entry.upper is None else c + entry.upper
    else:
        if entry.upper is None:
            lower = 0
        else:
            lower = c - entry.upper
        upper = c - entry.lower
    return Entry(max(lower, 0), upper)


def _tighten_with_euler(profile: CohomologyProfile) -> CohomologyProfile:
    """Use the exact Euler characteristic to pin or narrow up to two open degrees."""
    if profile.euler is None:
        return profile
    entries = {i: profile.entry(i) for i in profile.degrees()}
    changed = True
    while changed:
        changed = False
        open_degrees = [i for i in profile.degrees() if not entries[i].is_exact]
        rest = profile.euler - sum((-1) ** i * entries[i].lower
                                   for i in profile.degrees() if entries[i].is_exact)
        if not open_degrees:
            if rest != 0:
                raise ValueError(f"Exact entries disagree with chi = {profile.euler}")
            break
        if len(open_degrees) == 1:
            i = open_degrees[0]
            entries[i] = entries[i].intersect(Entry.exact((-1) ** i * rest))
            changed = True
        elif len(open_degrees) == 2:
            i, j = open_degrees
            si, sj = (-1) ** i, (-1) ** j
            # si*h_i + sj*h_j = rest
            new_j = entries[j].intersect(_interval_shift(entries[i], sj * rest, -si * sj))
            new_i = entries[i].intersect(_interval_shift(new_j, si * rest, -si * sj))
            if (new_i, new_j) != (entries[i], entries[j]):
                entries[i], entries[j] = new_i, new_j
                changed = True
    return replace(profile, entries=entries)


def gp_profile(f: ParabolicFunction, L: GPLineBundle, alpha: PositiveRoot) -> CohomologyProfile:
    """
    Cohomology of L on G/P through the rank-2 bundle on G/B, when L has degree 1
    on the P^1-fibers over G/Q: splice gb_profile(lambda - p alpha) and gb_profile(lambda)
    along ... -> H^i(lambda - p alpha) -> H^i(G/P, L) -> H^i(lambda) -> H^{i+1}(lambda - p alpha) -> ...
    """
    degree = fiber_degree(L, alpha)
    if degree != 1:
        raise ValueError(f"Only fiber degree 1 is supported, got {degree}")
    rs = f.root_system
    lam = L.weight
    sub_weight = lam - f.p * root_as_weight(alpha)
    quot = gb_profile(rs, f.p, lam)
    sub = gb_profile(rs, f.p, sub_weight)
    dim_x = gp_dimension(f)

    entries = {}
    for i in range(dim_x + 1):
        a_i, b_i = sub.entry(i), quot.entry(i)
        b_prev, a_next = quot.entry(i - 1), sub.entry(i + 1)
        # h^i = (a_i - rank d_{i-1}) + (b_i - rank d_i) with rank d_i <= min(b_i, a_{i+1})
        lower = 0
        if b_prev.upper is not None:
            lower += max(0, a_i.lower - b_prev.upper)
        if a_next.upper is not None:
            lower += max(0, b_i.lower - a_next.upper)
        upper = None
        if a_i.upper is not None and b_i.upper is not None:
            upper = a_i.upper + b_i.upper
        entries[i] = Entry(lower, upper)

    certificate = [RuleFiring("LES", ANCHOR_LES,
                              f"lambda = {lam}, lambda - p alpha = {sub_weight}")]
    certificate += [RuleFiring(c.rule, c.anchor, f"[lambda] {c.detail}") for c in quot.certificate]
    certificate += [RuleFiring(c.rule, c.anchor, f"[lambda - p alpha] {c.detail}") for c in sub.certificate]

    if quot.concentrated_in() == 0 and sub.concentrated_in() == 1:
        certificate.append(RuleFiring(
            "four-term", ANCHOR_FOUR_TERM,
            f"h^1 - h^0 = {sub.entry(1).lower} - {quot.entry(0).lower}; h^i = 0 for i >= 2"))

    euler = euler_char(rs, lam) + euler_char(rs, sub_weight)
    for side in (quot, sub):
        if side.euler is not None and side.alternating_sum() is not None and side.euler != side.alternating_sum():
            raise ValueError("G/B profile disagrees with its own Euler characteristic")
    if quot.euler is not None and sub.euler is not None and quot.euler + sub.euler != euler:
        raise ValueError(f"Rule profiles give chi = {quot.euler + sub.euler}, Weyl character gives {euler}")
    certificate.append(RuleFiring("chi", ANCHOR_EULER, f"chi = {euler}"))

    profile = CohomologyProfile(dim_x, entries, certificate, euler)
    return _tighten_with_euler(profile)


@dataclass(frozen=True)
class SteinbergDatum:
    """L(p w_a + w_b) = Lambda^a(V)^[1] (x) Lambda^b(V) for SL(n)."""
    a: int
    b: int
    n: int


def steinberg_datum(rs: RootSystemA, p: int, lam: Weight) -> SteinbergDatum:
    nonzero = {k: c for k, c in enumerate(lam.coeffs, start=1) if c != 0}
    if len(nonzero) == 1:
        (k, c), = nonzero.items()
        if c == p + 1:
            raise ValueError(f"{lam} = p w{k} + w{k}: twisted and untwisted factors coincide")
    if len(nonzero) == 2:
        twisted = [k for k, c in nonzero.items() if c == p]
        plain = [k for k, c in nonzero.items() if c == 1]
        if len(twisted) == 1 and len(plain) == 1:
            return SteinbergDatum(twisted[0], plain[0], rs.n)
    raise ValueError(f"{lam} is not of the form p w_a + w_b with a != b")


def steinberg_dim(d: SteinbergDatum) -> int:
    if d.a == d.b:
        raise ValueError("Steinberg datum needs a != b")
    return comb(d.n, d.a) * comb(d.n, d.b)


@dataclass(frozen=True)
class H1Bound:
    value: int
    certificate: List[RuleFiring]


def socle_h1_bound(rs: RootSystemA, p: int, lam: Weight, alpha: PositiveRoot) -> H1Bound:
    """
    phi: H^0(lambda) -> H^0(lambda - alpha) kills the socle L(lambda), so
    h^1 >= h^0(lambda - alpha) - (h^0(lambda) - dim L(lambda)).
    """
    if not alpha.is_simple:
        raise ValueError(f"{alpha} is not simple")
    # lambda - (lambda - alpha) = alpha >= 0, so lambda does not occur in H^0(lambda - alpha)
    datum = steinberg_datum(rs, p, lam)
    lower = lam - root_as_weight(alpha)
    h0_lam, h0_lower = weyl_dim(rs, lam), weyl_dim(rs, lower)
    simple = steinberg_dim(datum)
    bound = h0_lower - (h0_lam - simple)
    return H1Bound(bound, [
        RuleFiring("steinberg", ANCHOR_STEINBERG, f"dim L({lam}) = {simple}"),
        RuleFiring("socle", ANCHOR_SOCLE, f"h^1 >= {h0_lower} - ({h0_lam} - {simple}) = {bound}"),
    ])


def occurrence_h1_bound(rs: RootSystemA, mu: Weight, alpha: PositiveRoot) -> H1Bound:
    """The mu-weight line of H^0(mu) dies under phi: h^1 >= h^0(mu - alpha) - (h^0(mu) - 1)."""
    if not alpha.is_simple:
        raise ValueError(f"{alpha} is not simple")
    lower = mu - root_as_weight(alpha)
    h0_mu, h0_lower = weyl_dim(rs, mu), weyl_dim(rs, lower)
    bound = h0_lower - (h0_mu - 1)
    return H1Bound(bound, [RuleFiring("occurrence", ANCHOR_OCCURRENCE,
                                      f"h^1 >= {h0_lower} - ({h0_mu} - 1) = {bound}")])


@dataclass(frozen=True)
class ConeVerdict:
    cone_dimension: int
    a: Optional[Fraction]
    is_terminal: bool
    is_canonical: bool
    is_klt: bool
    is_cm: Optional[bool]
    no_lift: bool
    nonvanishing_degrees: Tuple[int, ...]
    notes: Tuple[str, ...] = ()

    def to_dict(self) -> Dict:
        return {
            "cone_dimension": self.cone_dimension,
            "a": None if self.a is None else str(self.a),
            "is_terminal": self.is_terminal,
            "is_canonical": self.is_canonical,
            "is_klt": self.is_klt,
            "is_cm": "undetermined" if self.is_cm is None else self.is_cm,
            "no_lift": self.no_lift,
            "nonvanishing_degrees": list(self.nonvanishing_degrees),
            "notes": list(self.notes),
        }


def _proportionality(weight: Weight, target: Weight) -> Optional[Fraction]:
    """a with weight = a * target, if it exists."""
    a = None
    for w, t in zip(weight.coeffs, target.coeffs):
        if t == 0:
            if w != 0:
                return None
            continue
        ratio = Fraction(w, t)
        if a is None:
            a = ratio
        elif a != ratio:
            return None
    return a


def cone_report(f: ParabolicFunction, A: GPLineBundle, profile: CohomologyProfile) -> ConeVerdict:
    """Singularity verdicts for the affine cone Spec (+)_m H^0(X, mA)."""
    if not is_ample(A):
        raise ValueError(f"{A.weight} is not ample on G/P")
    dim_x = gp_dimension(f)
    a = _proportionality(A.weight, anticanonical(f).weight)
    nonvanishing = tuple(i for i in range(1, dim_x) if profile.entry(i).lower >= 1)
    notes = []
    if a == 1:
        notes.append("A = -K_X: the cone is canonical but not terminal; "
                     "with H^1(X, -K_X) != 0 it is canonical and not Cohen-Macaulay")
    if a is None:
        notes.append("A is not a rational multiple of -K_X; the cone is not Q-Gorenstein")
    return ConeVerdict(
        cone_dimension=dim_x + 1,
        a=a,
        is_terminal=a is not None and 0 < a < 1,
        is_canonical=a is not None and 0 < a <= 1,
        is_klt=a is not None and a > 0,
        is_cm=False if nonvanishing else None,
        no_lift=profile.euler is not None and profile.euler < 0,
        nonvanishing_degrees=nonvanishing,
        notes=tuple(notes),
    )


def _require_prime(p: int, minimum: int):
    if not isprime(p) or p < minimum:
        raise ValueError(f"Need a prime p >= {minimum}, got {p}")


def _check_homogeneous_space(report: VerificationReport, f: ParabolicFunction, dim_expected: int):
    rs = f.root_system
    report.check("dim_X", gp_dimension(f), dim_expected, ANCHOR_DIMENSION)
    report.check("picard_number", picard_number(f), 2, ANCHOR_PICARD)
    minus_k = anticanonical(f)
    report.check("minus_K", minus_k.weight.coeffs, rs.weight(2 * f.p, f.n - f.p).coeffs, ANCHOR_ANTICANONICAL)
    report.require("fano", is_fano(f), ANCHOR_AMPLE)
    return minus_k


def verify_thm_2_1(p: int) -> VerificationReport:
    """Fano (2p+1)-fold with -K_X = 2A and H^1(X, A) != 0."""
    _require_prime(p, 3)
    n = p + 2
    f = ParabolicFunction.twisted_flag(n, p)
    rs = f.root_system
    report = VerificationReport("thm21", {"p": p, "n": n, "f": f.describe()})
    logger.info(f"Verifying the half-anticanonical family at p = {p} (SL({n}))")

    minus_k = _check_homogeneous_space(report, f, 2 * p + 1)
    report.check("divisibility", divisibility(minus_k), 2, ANCHOR_PICARD)
    A = minus_k.divide(2)
    report.check("A", A.weight.coeffs, rs.weight(p, 1).coeffs, ANCHOR_PICARD)
    report.require("A_ample", is_ample(A), ANCHOR_AMPLE)

    alpha = rs.simple_root(1)
    alpha_w = root_as_weight(alpha)
    report.check("fiber_degree", fiber_degree(A, alpha), 1, ANCHOR_FIBER)
    lam = A.weight
    lower = lam - alpha_w
    report.check("andersen_pairing", pairing(lower, alpha), p - 2, ANCHOR_ANDERSEN)
    report.check("andersen_reflection", dot_reflection(lower, alpha), lam - p * alpha_w, ANCHOR_ANDERSEN)

    h0_lam = weyl_dim(rs, lam)
    h0_lower = weyl_dim(rs, lower)
    report.check("h0_lambda", h0_lam, comb(2 * p + 2, p) * (p + 1), ANCHOR_WEYL)
    report.check("h0_lambda_minus_alpha", h0_lower, comb(2 * p + 1, p) * (p + 2) * (p - 1) // 2, ANCHOR_WEYL)
    report.check("ratio", Fraction(h0_lower, h0_lam),
                 Fraction((p - 1) * (p + 2) ** 2, 4 * (p + 1) ** 2), ANCHOR_WEYL)

    profile = gp_profile(f, A, alpha)
    report.certify(profile.certificate)
    report.require("higher_vanishing", all(profile.entry(i).is_zero for i in range(2, profile.dimension + 1)),
                   ANCHOR_FOUR_TERM)
    report.check("chi", profile.euler, h0_lam - h0_lower, ANCHOR_EULER)
    report.check("chi_negative", profile.euler < 0, p >= 5, ANCHOR_EULER)
    report.record("h1_lower_bound_from_chi", profile.entry(1).lower, ANCHOR_FOUR_TERM)

    datum = steinberg_datum(rs, p, lam)
    report.check("steinberg_dim", steinberg_dim(datum), comb(n, 2) * n, ANCHOR_STEINBERG)
    bound = socle_h1_bound(rs, p, lam, alpha)
    report.certify(bound.certificate)
    report.record("h1_lower_bound_from_socle", bound.value, ANCHOR_SOCLE)
    profile = profile.refine(1, lower=max(bound.value, 0), firing=bound.certificate[-1])

    h1 = profile.entry(1)
    report.record("h1", str(h1), ANCHOR_SOCLE)
    report.record("h0", str(profile.entry(0)), ANCHOR_FOUR_TERM)
    report.record("h1_lower_bound", h1.lower, ANCHOR_SOCLE)
    report.require("h1_positive", h1.lower >= 1, ANCHOR_SOCLE)

    cone = cone_report(f, A, profile)
    report.check("cone_dimension", cone.cone_dimension, 2 * p + 2, ANCHOR_CONE_TERMINAL)
    report.check("cone_a", cone.a, Fraction(1, 2), ANCHOR_CONE_TERMINAL)
    report.require("cone_terminal", cone.is_terminal, ANCHOR_CONE_TERMINAL)
    report.check("cone_cohen_macaulay", cone.is_cm, False, ANCHOR_CONE_CM)
    report.check("no_lift", cone.no_lift, p >= 5, ANCHOR_NO_LIFT)
    report.notes.extend(cone.notes)

    # same X, polarised by -K_X = 2A: cohomology of -K_X is not computed here
    boundary = cone_report(f, minus_k, CohomologyProfile(profile.dimension))
    report.check("anticanonical_cone_a", boundary.a, 1, ANCHOR_CONE_TERMINAL)
    report.check("anticanonical_cone_terminal", boundary.is_terminal, False, ANCHOR_CONE_TERMINAL)
    report.require("anticanonical_cone_canonical", boundary.is_canonical, ANCHOR_CONE_TERMINAL)
    report.notes.extend(boundary.notes)

    report.artifacts["profile"] = profile.summary()
    report.notes.append("A is very ample: every ample line bundle on G/P is very ample")
    report.notes.append("H^2(X, O) = 0 by the cell decomposition of G/P (cited, not computed)")
    if cone.no_lift:
        report.notes.append("chi(X, A) < 0: X does not lift to characteristic zero")
    return report


def verify_thm_3_1(p: int) -> VerificationReport:
    """Fano variety with a very ample A and H^1(X, K_X + A) != 0."""
    _require_prime(p, 2)
    if p == 2:
        return _verify_adjoint_char2()
    n = p + 1
    f = ParabolicFunction.twisted_flag(n, p)
    rs = f.root_system
    report = VerificationReport("thm31", {"p": p, "n": n, "f": f.describe()})
    logger.info(f"Verifying the adjoint family at p = {p} (SL({n}))")

    minus_k = _check_homogeneous_space(report, f, 2 * p - 1)
    report.check("divisibility", divisibility(minus_k), 1, ANCHOR_PICARD)
    A = GPLineBundle(rs.weight(3 * p, 1), f)
    report.require("A_ample", is_ample(A), ANCHOR_AMPLE)
    mu_bundle = A - minus_k
    mu = mu_bundle.weight
    report.check("mu", mu, p * rs.fundamental_weight(1), ANCHOR_ANTICANONICAL)

    alpha = rs.simple_root(1)
    lower = mu - root_as_weight(alpha)
    report.check("fiber_degree", fiber_degree(mu_bundle, alpha), 1, ANCHOR_FIBER)
    report.check("andersen_pairing", pairing(lower, alpha), p - 2, ANCHOR_ANDERSEN)

    h0_mu = weyl_dim(rs, mu)
    h0_lower = weyl_dim(rs, lower)
    report.check("h0_mu", h0_mu, comb(2 * p, p), ANCHOR_WEYL)
    report.check("h0_mu_minus_alpha", h0_lower, comb(2 * p - 1, p - 1) * (p - 1), ANCHOR_WEYL)
    report.check("ratio", Fraction(h0_lower, h0_mu), Fraction(p - 1, 2), ANCHOR_WEYL)

    profile = gp_profile(f, mu_bundle, alpha)
    report.certify(profile.certificate)
    report.require("higher_vanishing", all(profile.entry(i).is_zero for i in range(2, profile.dimension + 1)),
                   ANCHOR_FOUR_TERM)
    report.check("chi", profile.euler, h0_mu - h0_lower, ANCHOR_EULER)
    report.check("chi_negative", profile.euler < 0, p >= 5, ANCHOR_EULER)

    if p == 3:
        bound = occurrence_h1_bound(rs, mu, alpha)
        report.certify(bound.certificate)
        report.record("h1_lower_bound_from_occurrence", bound.value, ANCHOR_OCCURRENCE)
        profile = profile.refine(1, lower=max(bound.value, 0), firing=bound.certificate[-1])

    h1 = profile.entry(1)
    report.record("h1", str(h1), ANCHOR_FOUR_TERM)
    report.record("h1_lower_bound", h1.lower, ANCHOR_FOUR_TERM)
    report.require("h1_positive", h1.lower >= 1, ANCHOR_FOUR_TERM)
    report.artifacts["profile"] = profile.summary()
    report.notes.append("A is very ample: every ample line bundle on G/P is very ample")
    return report


def _verify_adjoint_char2() -> VerificationReport:
    p, n = 2, 4
    f = ParabolicFunction.twisted_flag(n, p)
    rs = f.root_system
    report = VerificationReport("thm31", {"p": p, "n": n, "f": f.describe()})
    logger.info("Verifying the adjoint family at p = 2 (SL(4))")

    minus_k = _check_homogeneous_space(report, f, 5)
    A = GPLineBundle(rs.weight(6, 1), f)
    report.require("A_ample", is_ample(A), ANCHOR_AMPLE)
    mu_bundle = A - minus_k
    mu = mu_bundle.weight
    report.check("mu", mu, rs.weight(2, -1), ANCHOR_ANTICANONICAL)

    alpha = rs.simple_root(1)
    sub_weight = mu - p * root_as_weight(alpha)
    report.check("fiber_degree", fiber_degree(mu_bundle, alpha), 1, ANCHOR_FIBER)
    report.check("wall_pairing", pairing(mu, rs.simple_root(2)), -1, ANCHOR_WALL)
    report.check("euler_mu", euler_char(rs, mu), 0, ANCHOR_EULER)
    report.check("euler_mu_minus_p_alpha", euler_char(rs, sub_weight), -1, ANCHOR_EULER)
    report.check("andersen_reflection", dot_reflection(rs.zero(), alpha), sub_weight, ANCHOR_ANDERSEN)

    profile = gp_profile(f, mu_bundle, alpha)
    report.certify(profile.certificate)
    report.check("h0", profile.entry(0), Entry.zero(), ANCHOR_WALL)
    report.check("chi", profile.euler, -1, ANCHOR_EULER)
    report.check("h1", profile.entry(1), Entry.exact(1), ANCHOR_ANDERSEN)
    report.require("higher_vanishing", all(profile.entry(i).is_zero for i in range(2, profile.dimension + 1)),
                   ANCHOR_ANDERSEN)
    report.record("h1_lower_bound", profile.entry(1).lower, ANCHOR_ANDERSEN)
    report.require("h1_positive", profile.entry(1).lower >= 1, ANCHOR_ANDERSEN)
    report.artifacts["profile"] = profile.summary()
    report.notes.append("A is very ample: every ample line bundle on G/P is very ample")
    return report
