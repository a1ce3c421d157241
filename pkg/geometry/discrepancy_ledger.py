"""
Formal divisor bookkeeping for equivariant blow-ups and Z/p quotients.

Divisors are names with parentage; nothing here knows about intersection
numbers. The torus pipeline at the bottom replays the resolution of
(G_m)^3/(Z/2) over F_2 from the chart computations and reads off the
discrepancies of the quotient.
"""

import itertools
import logging
import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from sympy import isprime

from geometry.charp_fixed_schemes import (
    ChartAction, RamificationType, RatFp, SwanVerdict, artin_number,
    blowup_chart, cartier_test, different_coefficient, fixed_scheme_generators,
    is_sigma_stable, monomial_locus_codim, parse_poly, projective_point,
    swan_classify, torus_inversion_chart, translate_chart,
)
from geometry.report import VerificationReport

logger = logging.getLogger(__name__)

# Rule anchors: the rule applied, then the sentence of the source argument it reproduces.
ANCHOR_BLOWUP_K = r'point blow-up in a threefold: "$K_{Y_1}=\pi^*K_{Y_0}+2E$"'
ANCHOR_PULLBACK = r'pullback of E: "$\pi^*E=E_0+\sum_{j=1}^7 E_i$"'
ANCHOR_HURWITZ = r'ramification divisor: "$K_{Y_2}=f^*K_{Y_2/G}+E_0+2\sum_{j=1}^7 E_j$"'
ANCHOR_TERMINAL = r'discrepancies: "if the {\it discrepancy }$a_i$ is positive"'
ANCHOR_FOGARTY = r'Fogarty: "with fixed point locus nonempty and of codimension at least 3"'
ANCHOR_CARTIER = r'Kiraly-Lutkebohmert: "If the fixed point {\it scheme }$X^G$ is a Cartier divisor in $X$"'
ANCHOR_FIXED = r'fixed-point scheme: "the fixed point scheme $(U_1)^G$ is defined by the equations"'
ANCHOR_ARTIN = r'Artin number: "i(\sigma)&=\inf_{a\in O_L} v_L(\sigma(a)-a)"'
ANCHOR_SWAN = r'Swan number: "we have $s(\sigma)>0$, and either $i(\sigma)=s(\sigma)+1$"'
ANCHOR_TRANSLATION = r'translation: "by $y_i=x_i+1$ for $i=1,2,3$"'
ANCHOR_SYMMETRY = r'GL(3, F_2) symmetry: "it permutes these 7 points transitively"'
ANCHOR_DUAL_GRAPH = r'dual graph: "the dual graph of the resolution $Y_2/G\rightarrow X$ is a star"'
ANCHOR_YASUDA_KLT = r'Jordan-block quotient: "is klt if $n(n-1)/2\geq p$"'
ANCHOR_YASUDA_TERMINAL = r'Jordan-block quotient: "is terminal if $n(n-1)/2>p$"'
ANCHOR_YASUDA_FIXED = r'Jordan-block fixed space: "because the fixed point set $V^G$ has dimension 1"'

_NAME_PARTS = re.compile(r"(\d+)")


def _natural_key(name: str):
    return [int(part) if part.isdigit() else part for part in _NAME_PARTS.split(name)]


@dataclass(frozen=True)
class DivisorExpression:
    """base + sum coeffs[E] * E; base is a pulled-back canonical class symbol or None."""
    base: Optional[str]
    coeffs: Dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "coeffs", {k: int(v) for k, v in self.coeffs.items() if v})

    def _base_with(self, other: "DivisorExpression") -> Optional[str]:
        if self.base and other.base and self.base != other.base:
            raise ValueError(f"Cannot combine {self.base} with {other.base}")
        return self.base or other.base

    def __add__(self, other: "DivisorExpression") -> "DivisorExpression":
        coeffs = dict(self.coeffs)
        for k, v in other.coeffs.items():
            coeffs[k] = coeffs.get(k, 0) + v
        return DivisorExpression(self._base_with(other), coeffs)

    def __mul__(self, k: int) -> "DivisorExpression":
        if self.base is not None and k != 1:
            raise ValueError("Only pure exceptional combinations can be scaled")
        return DivisorExpression(self.base, {n: k * v for n, v in self.coeffs.items()})

    __rmul__ = __mul__

    def coefficient(self, name: str) -> int:
        return self.coeffs.get(name, 0)

    def drop(self, name: str) -> "DivisorExpression":
        return DivisorExpression(self.base, {k: v for k, v in self.coeffs.items() if k != name})

    def exceptional(self) -> List[str]:
        return sorted(self.coeffs, key=_natural_key)

    def to_dict(self) -> Dict:
        return {"base": self.base, "coeffs": {k: self.coeffs[k] for k in self.exceptional()}}

    def __str__(self):
        parts = [self.base] if self.base else []
        for name in self.exceptional():
            c = self.coeffs[name]
            if c == 1:
                parts.append(name)
            elif c == -1:
                parts.append(f"-{name}")
            else:
                parts.append(f"{c}{name}")
        return " + ".join(parts).replace("+ -", "- ") or "0"


def substitute(expr: DivisorExpression, relations: Mapping[str, DivisorExpression],
               order: Optional[Sequence[str]] = None) -> DivisorExpression:
    """Rewrite every divisor that has a pullback relation, until none is left."""
    names = list(order) if order is not None else sorted(relations, key=_natural_key)
    result = expr
    for _ in range(len(relations) + 1):
        pending = [n for n in names if result.coefficient(n)]
        if not pending:
            return result
        for name in pending:
            c = result.coefficient(name)
            result = result.drop(name) + c * relations[name]
    raise ValueError("Pullback relations do not form a tree")


def blowup_canonical(K: DivisorExpression, center_codim: int, new_divisor: Union[str, Sequence[str]],
                     relations: Optional[Mapping[str, DivisorExpression]] = None) -> DivisorExpression:
    """K of the blow-up along disjoint smooth centers of codimension center_codim."""
    if center_codim < 2:
        raise ValueError(f"Blowing up a center of codimension {center_codim} changes nothing")
    new = [new_divisor] if isinstance(new_divisor, str) else list(new_divisor)
    pulled = substitute(K, relations or {})
    return pulled + DivisorExpression(None, {e: center_codim - 1 for e in new})


@dataclass(frozen=True)
class RamificationDatum:
    divisor: str
    i: int
    kind: RamificationType
    p: int

    def __post_init__(self):
        if self.kind == RamificationType.AMBIGUOUS:
            raise ValueError(f"Ramification along {self.divisor} is undecided")
        if self.i < 1:
            raise ValueError(f"Artin number along {self.divisor} must be >= 1, got {self.i}")

    @classmethod
    def from_verdict(cls, divisor: str, verdict: SwanVerdict, p: int) -> "RamificationDatum":
        return cls(divisor, verdict.i, verdict.kind, p)

    @property
    def e(self) -> int:
        return self.p if self.kind == RamificationType.WILD else 1

    @property
    def different(self) -> int:
        return (self.p - 1) * self.i

    def to_dict(self) -> Dict:
        return {"divisor": self.divisor, "i": self.i, "type": self.kind.value,
                "e": self.e, "different": self.different}


def downstairs_name(name: str) -> str:
    """E_j upstairs maps to F_j downstairs."""
    return "F" + name[1:] if name.startswith("E") else f"{name}/G"


def quotient_descend(K_up: DivisorExpression, ram: Sequence[RamificationDatum], p: int,
                     base: str = "pi*K_X") -> DivisorExpression:
    """a_j = (b_j - d_j) / e_j for every exceptional divisor upstairs."""
    data = {r.divisor: r for r in ram}
    coeffs = {}
    for name in K_up.exceptional():
        if name not in data:
            raise ValueError(f"No ramification datum for {name}")
        r = data[name]
        if r.p != p:
            raise ValueError(f"Datum for {name} is for p = {r.p}, not {p}")
        b = K_up.coefficient(name)
        a, remainder = divmod(b - r.different, r.e)
        if remainder:
            raise ValueError(f"Non-integral discrepancy ({b} - {r.different})/{r.e} along {name}")
        coeffs[downstairs_name(name)] = a
    return DivisorExpression(base, coeffs)


def pullback_quotient(K_down: DivisorExpression, ram: Sequence[RamificationDatum],
                      base: str) -> DivisorExpression:
    """f^*K_down + different: b_j = e_j a_j + d_j."""
    coeffs = {}
    for r in ram:
        coeffs[r.divisor] = r.e * K_down.coefficient(downstairs_name(r.divisor)) + r.different
    return DivisorExpression(base, coeffs)


class SingularityClass(Enum):
    TERMINAL = "terminal"
    CANONICAL = "canonical"
    KLT = "klt"
    NONE = "none"


def classify_singularity(K_down: DivisorExpression,
                         exceptional: Optional[Sequence[str]] = None) -> SingularityClass:
    """
    Terminal / canonical / klt from the discrepancies. Pass the full list of
    exceptional names when some of them may carry discrepancy 0.
    """
    names = list(exceptional) if exceptional is not None else K_down.exceptional()
    if not names:
        logger.warning("No exceptional divisors: terminal vacuously")
        return SingularityClass.TERMINAL
    lowest = min(K_down.coefficient(n) for n in names)
    if lowest > 0:
        return SingularityClass.TERMINAL
    if lowest >= 0:
        return SingularityClass.CANONICAL
    if lowest > -1:
        return SingularityClass.KLT
    return SingularityClass.NONE


class CMVerdict(Enum):
    NOT_CM = "not Cohen-Macaulay"
    NOT_DISPROVED = "Cohen-Macaulay not disproved"


def fogarty_cm_test(fixed_locus_codim: int) -> CMVerdict:
    if fixed_locus_codim < 0:
        raise ValueError(f"Codimension must be non-negative, got {fixed_locus_codim}")
    return CMVerdict.NOT_CM if fixed_locus_codim >= 3 else CMVerdict.NOT_DISPROVED


@dataclass(frozen=True)
class YasudaVerdict:
    p: int
    n: int
    klt: bool
    terminal: bool
    cm: CMVerdict
    in_window: bool
    notes: Tuple[str, ...] = ()

    def to_dict(self) -> Dict:
        return {"p": self.p, "n": self.n, "klt": self.klt, "terminal": self.terminal,
                "cm": self.cm.value, "in_window": self.in_window, "notes": list(self.notes)}


def yasuda_classify(p: int, n: int) -> YasudaVerdict:
    """V/G for the n-dimensional Jordan-block representation of Z/p."""
    if n < 2:
        raise ValueError(f"Need n >= 2, got {n}")
    pairs = n * (n - 1) // 2
    notes = ["whether failing n(n-1)/2 >= p forces non-klt is open (it would follow from resolution)"]
    in_window = pairs > p >= n >= 4
    if not in_window:
        notes.append(f"outside the range n(n-1)/2 > p >= n >= 4 (n(n-1)/2 = {pairs})")
    if n > p:
        notes.append(f"no indecomposable representation of Z/{p} of dimension {n}")
    return YasudaVerdict(p, n, pairs >= p, pairs > p, fogarty_cm_test(n - 1), in_window, tuple(notes))


class ResolutionLedger:
    """Canonical class, pullback relations and parentage through a sequence of blow-ups."""

    def __init__(self, base: str = "Y0", dimension: int = 3):
        self.base = base
        self.dimension = dimension
        self.canonical = DivisorExpression(f"pi*K_{base}")
        self.parents: Dict[str, Optional[str]] = {}
        self.history: List[DivisorExpression] = [self.canonical]

    def blow_up(self, center_codim: int, new_divisors: Sequence[str], on: Optional[str] = None,
                strict_transform: Optional[str] = None) -> DivisorExpression:
        """
        Blow up disjoint centers, all lying on the exceptional divisor `on` if given.

        pi^*E = E' + sum of the new divisors, where E' is `strict_transform`. When
        the strict transform keeps the name `on`, the new divisors inherit the
        coefficient of `on` directly.
        """
        clash = [e for e in new_divisors if e in self.parents]
        if clash:
            raise ValueError(f"Divisor names already used: {clash}")
        relations = {}
        inherited = DivisorExpression(None)
        if on is not None:
            if on not in self.parents:
                raise ValueError(f"{on} is not an exceptional divisor of the ledger")
            strict = strict_transform or on
            if strict != on:
                relations[on] = DivisorExpression(None, {strict: 1, **{e: 1 for e in new_divisors}})
                self.parents[strict] = self.parents.pop(on)
                for child, parent in self.parents.items():
                    if parent == on:
                        self.parents[child] = strict
            else:
                inherited = DivisorExpression(None, {e: self.canonical.coefficient(on) for e in new_divisors})
        for e in new_divisors:
            self.parents[e] = strict_transform or on
        self.canonical = blowup_canonical(self.canonical, center_codim, new_divisors, relations) + inherited
        self.history.append(self.canonical)
        logger.debug(f"K after blow-up: {self.canonical}")
        return self.canonical

    def exceptional(self) -> List[str]:
        return sorted(self.parents, key=_natural_key)

    def history_summary(self) -> str:
        return "\n".join(f"after blow-up {k}: K = {K}" for k, K in enumerate(self.history[1:], start=1))


@dataclass(frozen=True)
class DualGraph:
    vertices: Tuple[str, ...]
    edges: Tuple[Tuple[str, str], ...]

    def degree(self, v: str) -> int:
        return sum(1 for e in self.edges if v in e)

    def is_star(self) -> bool:
        if len(self.vertices) < 2:
            return False
        centers = [v for v in self.vertices if self.degree(v) == len(self.vertices) - 1]
        return len(self.edges) == len(self.vertices) - 1 and bool(centers)

    def to_dot(self, name: str = "resolution") -> str:
        lines = [f"graph {name} {{"]
        lines += [f"  {v};" for v in self.vertices]
        lines += [f"  {a} -- {b};" for a, b in self.edges]
        lines.append("}")
        return "\n".join(lines) + "\n"


def dual_graph(ledger: ResolutionLedger, downstairs: bool = True) -> DualGraph:
    """
    One vertex per exceptional divisor, one edge from each divisor to the one it
    was blown up on. With downstairs=True the names are those on the quotient (E_j -> F_j).
    """
    rename = downstairs_name if downstairs else (lambda n: n)
    vertices = tuple(rename(v) for v in ledger.exceptional())
    edges = tuple((rename(parent), rename(child))
                  for child in ledger.exceptional()
                  for parent in [ledger.parents[child]] if parent is not None)
    return DualGraph(vertices, edges)


# The (G_m)^3 / (Z/2) pipeline over F_2

P = 2
Y0_NAMES = ("y1", "y2", "y3")
# the F_2-points of the exceptional plane
SEVEN_POINTS = tuple(sorted({projective_point(v, P) for v in itertools.product(range(P), repeat=3) if any(v)},
                            reverse=True))


def _rat(text_num: str, text_den: str, c: ChartAction) -> RatFp:
    return RatFp(parse_poly(text_num, c.coords, c.p), parse_poly(text_den, c.coords, c.p))


def first_blowup_chart(y0: ChartAction, k: int) -> ChartAction:
    """Chart w_k = 1 of the blow-up of Y0 at the origin."""
    pivot = Y0_NAMES[k]
    names = {x: "w" + x[1:] for x in Y0_NAMES if x != pivot}
    return blowup_chart(y0, Y0_NAMES, pivot, names, name=f"U{k + 1}")


def _second_blowup_at(first: Sequence[ChartAction], point: Tuple[int, ...]) -> Tuple[ChartAction, str]:
    """Chart of Y2 over one of the seven points where the pivot is the first blow-up's exceptional coordinate."""
    k = next(j for j, v in enumerate(point) if v)
    chart = first[k]
    pivot = Y0_NAMES[k]
    # point on E in chart U_k: y_k = 0, w_j = point_j / point_k
    local = tuple(0 if x == pivot else point[int(x[1:]) - 1] for x in chart.coords)
    moved = translate_chart(chart, local, name=f"{chart.name}@{point}") if any(local) else chart
    rename = {x: "v" + x[1:] for x in moved.coords if x != pivot}
    return blowup_chart(moved, moved.coords, pivot, rename, name=f"Y2[{point}]"), pivot


def verify_torus_quotient(all_charts: bool = False) -> VerificationReport:
    """(G_m)^3/(Z/2), sigma(x) = 1/x over F_2: terminal and not Cohen-Macaulay."""
    report = VerificationReport("dim3", {"p": P, "n": 3, "all_charts": all_charts})
    logger.info("Replaying the equivariant resolution of (G_m)^3/(Z/2)")

    torus = torus_inversion_chart(P)
    report.require("torus_involution", torus.has_order_dividing_p(), ANCHOR_FIXED)
    y0 = translate_chart(torus, (1, 1, 1), Y0_NAMES, name="Y0")
    report.require("Y0_action", all(y0.sigma[y] == _rat(y, f"1 + {y}", y0) for y in Y0_NAMES),
                   ANCHOR_TRANSLATION)
    gens0 = fixed_scheme_generators(y0)
    report.check("Y0_fixed_ideal", [str(g) for g in gens0], [f"{y}^2" for y in Y0_NAMES], ANCHOR_FIXED)
    codim = monomial_locus_codim(gens0)
    report.check("fixed_locus_codim", codim, 3, ANCHOR_FOGARTY)
    cm = fogarty_cm_test(codim)
    report.check("fogarty", cm, CMVerdict.NOT_CM, ANCHOR_FOGARTY)

    # first blow-up
    first = [first_blowup_chart(y0, k) for k in range(3)]
    u1 = first[0]
    report.require("U1_action", u1.sigma["w2"] == _rat("w2*y1 + w2", "y1*w2 + 1", u1)
                   and u1.sigma["w3"] == _rat("w3*y1 + w3", "y1*w3 + 1", u1), ANCHOR_FIXED)
    gens1 = fixed_scheme_generators(u1)
    expected1 = [parse_poly(t, u1.coords, P) for t in ("y1^2", "y1*w2^2 + y1*w2", "y1*w3^2 + y1*w3")]
    report.check("U1_fixed_ideal", [str(g) for g in gens1], [str(g) for g in expected1], ANCHOR_FIXED)
    report.require("U1_sigma_stable", is_sigma_stable(u1, gens1), ANCHOR_FIXED)
    verdict1 = cartier_test(gens1, u1.units, ["y1"])
    report.check("U1_cartier", verdict1.is_principal, False, ANCHOR_CARTIER)
    report.check("U1_failure_points", len(verdict1.failure_points), 4, ANCHOR_CARTIER)
    report.check("E_multiplicity", artin_number(u1, "y1"), 1, ANCHOR_ARTIN)

    projective = set()
    for k, chart in enumerate(first):
        verdict = cartier_test(fixed_scheme_generators(chart), chart.units, [Y0_NAMES[k]])
        for pt in verdict.failure_points:
            values = tuple(1 if j == k else pt["w" + str(j + 1)] for j in range(3))
            projective.add(projective_point(values, P))
    report.check("failure_points_global", sorted(projective), sorted(SEVEN_POINTS), ANCHOR_CARTIER)

    # second blow-up at [1:0:0], charts v1 = 1 and v2 = 1
    v1_chart = blowup_chart(u1, u1.coords, "y1", {"w2": "v2", "w3": "v3"}, name="V1")
    report.require("V1_action", v1_chart.sigma["v2"] == _rat("v2*y1^2 + v2", "y1^2*v2 + 1", v1_chart),
                   ANCHOR_FIXED)
    gens_v1 = fixed_scheme_generators(v1_chart)
    report.require("V1_sigma_stable", is_sigma_stable(v1_chart, gens_v1), ANCHOR_FIXED)
    cartier_v1 = cartier_test(gens_v1, v1_chart.units)
    report.check("V1_fixed_divisor", str(cartier_v1.generator) if cartier_v1.is_principal else None,
                 "y1^2", ANCHOR_CARTIER)

    v2_chart = blowup_chart(u1, u1.coords, "w2", {"y1": "v1", "w3": "v3"},
                            extra_units=["w2 + 1"], name="V2")
    report.require("V2_action",
                   v2_chart.sigma["w2"] == _rat("w2^2*v1 + w2", "w2^2*v1 + 1", v2_chart)
                   and v2_chart.sigma["v1"] == _rat("w2^2*v1^2 + v1", "w2^2*v1^2 + 1", v2_chart)
                   and v2_chart.sigma["v3"] == _rat("w2^2*v1*v3 + v3", "w2^2*v1*v3 + 1", v2_chart),
                   ANCHOR_FIXED)
    gens_v2 = fixed_scheme_generators(v2_chart)
    report.require("V2_sigma_stable", is_sigma_stable(v2_chart, gens_v2), ANCHOR_FIXED)
    cartier_v2 = cartier_test(gens_v2, v2_chart.units)
    report.check("V2_fixed_divisor", str(cartier_v2.generator) if cartier_v2.is_principal else None,
                 "v1*w2^2", ANCHOR_CARTIER)

    i_e1 = artin_number(v1_chart, "y1")
    i_e0 = artin_number(v2_chart, "v1")
    report.check("artin_E0", i_e0, 1, ANCHOR_ARTIN)
    report.check("artin_E1", i_e1, 2, ANCHOR_ARTIN)
    report.check("artin_E1_other_chart", artin_number(v2_chart, "w2"), i_e1, ANCHOR_ARTIN)
    report.check("artin_matches_cartier",
                 (cartier_v1.multiplicity("y1"), cartier_v2.multiplicity("v1"), cartier_v2.multiplicity("w2")),
                 (i_e1, i_e0, i_e1), ANCHOR_CARTIER)

    swan_e0 = swan_classify(v2_chart, "v1", i_e0)
    swan_e1 = swan_classify(v1_chart, "y1", i_e1)
    report.check("type_E0", swan_e0.kind, RamificationType.FIERCE, ANCHOR_SWAN)
    report.check("type_E1", swan_e1.kind, RamificationType.WILD, ANCHOR_SWAN)

    # the seven points
    names = [f"E{j}" for j in range(1, 8)]
    per_point: List[SwanVerdict] = []
    if all_charts:
        for point in SEVEN_POINTS:
            chart, pivot = _second_blowup_at(first, point)
            per_point.append(swan_classify(chart, pivot))
    else:
        per_point = [swan_e1] * 7
        report.notes.append("E2..E7 are replicated from E1 by symmetry; pass --all-charts to recompute them")
    report.record("seven_point_mode", "recomputed" if all_charts else "symmetry", ANCHOR_SYMMETRY)
    report.check("artin_numbers", [i_e0] + [v.i for v in per_point], [1] + [2] * 7, ANCHOR_ARTIN)
    report.check("ramification_types", [swan_e0.kind.value] + [v.kind.value for v in per_point],
                 ["fierce"] + ["wild"] * 7, ANCHOR_SWAN)

    ram = [RamificationDatum.from_verdict("E0", swan_e0, P)]
    ram += [RamificationDatum.from_verdict(e, v, P) for e, v in zip(names, per_point)]
    report.check("differents", [r.different for r in ram], [different_coefficient(P, 1)] + [different_coefficient(P, 2)] * 7,
                 ANCHOR_HURWITZ)

    # global fixed divisor: chart coordinate -> divisor name, multiplicities must agree
    fixed_divisor = assemble_fixed_divisor(
        [(cartier_v1, {"y1": "E1"}), (cartier_v2, {"v1": "E0", "w2": "E1"})], names)
    report.check("global_fixed_divisor", str(fixed_divisor), str(DivisorExpression(None, {"E0": 1, **{e: 2 for e in names}})),
                 ANCHOR_CARTIER)
    report.notes.append("the fixed-point scheme of Y2 is Cartier, so Y2/G is smooth and resolves X")

    # canonical class bookkeeping
    ledger = ResolutionLedger("Y0", 3)
    k_y1 = ledger.blow_up(3, ["E"])
    report.check("K_Y1", str(k_y1), "pi*K_Y0 + 2E", ANCHOR_BLOWUP_K)
    k_y2 = ledger.blow_up(3, names, on="E", strict_transform="E0")
    report.check("K_Y2", k_y2.coeffs, {"E0": 2, **{e: 4 for e in names}}, ANCHOR_PULLBACK)
    k_down = quotient_descend(k_y2, ram, P)
    discrepancies = [k_down.coefficient(downstairs_name(e)) for e in ledger.exceptional()]
    report.check("discrepancies", discrepancies, [1] * 8, ANCHOR_HURWITZ)
    report.check("K_Y2_over_G", str(k_down), "pi*K_X + F0 + " + " + ".join(f"F{j}" for j in range(1, 8)),
                 ANCHOR_HURWITZ)
    report.check("round_trip", pullback_quotient(k_down, ram, k_y2.base), k_y2, ANCHOR_HURWITZ)
    verdict = classify_singularity(k_down, [downstairs_name(e) for e in ledger.exceptional()])
    report.check("singularity", verdict, SingularityClass.TERMINAL, ANCHOR_TERMINAL)

    graph = dual_graph(ledger)
    report.check("dual_graph_vertices", len(graph.vertices), 8, ANCHOR_DUAL_GRAPH)
    report.require("dual_graph_star", graph.is_star() and graph.degree("F0") == 7, ANCHOR_DUAL_GRAPH)
    report.artifacts["dual_graph"] = graph.to_dot()
    report.artifacts["K_Y2"] = str(k_y2)
    report.artifacts["canonical_history"] = ledger.history_summary()
    report.artifacts["charts"] = "; ".join(
        f"{c.name}: " + ", ".join(f"sigma({x}) = {r}" for x, r in c.describe().items())
        for c in (y0, u1, v1_chart, v2_chart))
    report.notes.append("K_Y0 = f^*K_{Y0/G}: the quotient map is etale in codimension 1 on Y0")
    return report


def assemble_fixed_divisor(charts: Sequence[Tuple[object, Mapping[str, str]]],
                           replicate: Sequence[str] = ()) -> DivisorExpression:
    """
    Glue per-chart principal fixed divisors into one global expression. Each entry
    maps chart coordinates to divisor names; a divisor seen in several charts must
    carry the same multiplicity everywhere. Multiplicities of replicate[0] are
    copied to the rest of replicate.
    """
    multiplicity: Dict[str, int] = {}
    for verdict, naming in charts:
        if not verdict.is_principal:
            raise ValueError("Fixed-point scheme is not Cartier on one of the charts")
        for coord, divisor in naming.items():
            m = verdict.multiplicity(coord)
            if divisor in multiplicity and multiplicity[divisor] != m:
                raise ValueError(f"{divisor} has multiplicity {multiplicity[divisor]} and {m} on different charts")
            multiplicity[divisor] = m
    if replicate:
        head = replicate[0]
        if head not in multiplicity:
            raise ValueError(f"{head} does not appear on any chart")
        for name in replicate[1:]:
            multiplicity.setdefault(name, multiplicity[head])
    return DivisorExpression(None, multiplicity)


def verify_yasuda(p: int, n: int) -> VerificationReport:
    """Jordan-block quotients V/(Z/p)."""
    if not isprime(p):
        raise ValueError(f"p must be prime, got {p}")
    verdict = yasuda_classify(p, n)
    report = VerificationReport("yasuda", {"p": p, "n": n})
    pairs = n * (n - 1) // 2
    report.record("n(n-1)/2", pairs, ANCHOR_YASUDA_KLT)
    report.record("klt", verdict.klt, ANCHOR_YASUDA_KLT)
    report.record("terminal", verdict.terminal, ANCHOR_YASUDA_TERMINAL)
    report.record("fixed_locus_codim", n - 1, ANCHOR_YASUDA_FIXED)
    report.record("cohen_macaulay", verdict.cm, ANCHOR_FOGARTY)
    report.record("in_window", verdict.in_window, ANCHOR_YASUDA_TERMINAL)
    if verdict.in_window:
        report.require("terminal_not_cm", verdict.terminal and verdict.cm == CMVerdict.NOT_CM,
                       ANCHOR_YASUDA_TERMINAL)
    report.notes.extend(verdict.notes)
    return report
