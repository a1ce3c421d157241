"""
Exact polynomial and rational-function arithmetic over F_p, Z/p actions on affine
charts, blow-ups and translations of such charts, fixed-point ideals, Cartier
tests and Artin/Swan ramification data along coordinate divisors.

Rational functions are never reduced by a gcd: equality is cross-multiplication,
and simplification only cancels coordinate powers and declared unit factors.
"""

import itertools
import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from sympy import isprime

logger = logging.getLogger(__name__)

INF = math.inf

Exponent = Tuple[int, ...]


class PolyFp:
    """Sparse polynomial over F_p in a fixed ordered list of generators."""

    __slots__ = ("gens", "p", "terms")

    def __init__(self, gens: Sequence[str], p: int, terms: Optional[Mapping[Exponent, int]] = None):
        self.gens = tuple(gens)
        self.p = p
        clean = {}
        for exp, c in (terms or {}).items():
            if len(exp) != len(self.gens):
                raise ValueError(f"Exponent {exp} does not match generators {self.gens}")
            c %= p
            if c:
                clean[tuple(exp)] = c
        self.terms: Dict[Exponent, int] = clean

    @classmethod
    def constant(cls, c: int, gens: Sequence[str], p: int) -> "PolyFp":
        return cls(gens, p, {(0,) * len(gens): c})

    @classmethod
    def variable(cls, name: str, gens: Sequence[str], p: int) -> "PolyFp":
        gens = tuple(gens)
        if name not in gens:
            raise ValueError(f"Unknown variable '{name}' (generators {gens})")
        exp = tuple(1 if g == name else 0 for g in gens)
        return cls(gens, p, {exp: 1})

    @classmethod
    def generators(cls, gens: Sequence[str], p: int) -> List["PolyFp"]:
        return [cls.variable(g, gens, p) for g in gens]

    def _coerce(self, other: Union["PolyFp", int]) -> "PolyFp":
        if isinstance(other, int):
            return PolyFp.constant(other, self.gens, self.p)
        if isinstance(other, PolyFp):
            if other.gens != self.gens or other.p != self.p:
                raise TypeError(f"Mixing F_{self.p}[{','.join(self.gens)}] with F_{other.p}[{','.join(other.gens)}]")
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for exp, c in other.terms.items():
            terms[exp] = terms.get(exp, 0) + c
        return PolyFp(self.gens, self.p, terms)

    __radd__ = __add__

    def __neg__(self):
        return PolyFp(self.gens, self.p, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: Dict[Exponent, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return PolyFp(self.gens, self.p, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("Negative powers of a polynomial")
        result = PolyFp.constant(1, self.gens, self.p)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = PolyFp.constant(other, self.gens, self.p)
        if not isinstance(other, PolyFp):
            return NotImplemented
        return self.gens == other.gens and self.p == other.p and self.terms == other.terms

    def __hash__(self):
        return hash((self.gens, self.p, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_term(self) -> int:
        return self.terms.get((0,) * len(self.gens), 0)

    def degree(self) -> int:
        if self.is_zero():
            raise ValueError("Degree of the zero polynomial")
        return max(sum(e) for e in self.terms)

    def leading_term(self) -> Tuple[Exponent, int]:
        """Lex-largest term with respect to the generator order."""
        if self.is_zero():
            raise ValueError("Zero polynomial has no leading term")
        exp = max(self.terms)
        return exp, self.terms[exp]

    def index(self, var: str) -> int:
        try:
            return self.gens.index(var)
        except ValueError:
            raise ValueError(f"'{var}' is not one of {self.gens}")

    def ord(self, var: str) -> Union[int, float]:
        """Order of vanishing along {var = 0}; INF for the zero polynomial."""
        if self.is_zero():
            return INF
        k = self.index(var)
        return min(e[k] for e in self.terms)

    def max_exponent(self, var: str) -> int:
        k = self.index(var)
        return max((e[k] for e in self.terms), default=0)

    def monomial_content(self) -> Exponent:
        if self.is_zero():
            raise ValueError("Zero polynomial has no monomial content")
        return tuple(min(e[k] for e in self.terms) for k in range(len(self.gens)))

    def divide_monomial(self, exp: Exponent) -> "PolyFp":
        terms = {}
        for e, c in self.terms.items():
            q = tuple(a - b for a, b in zip(e, exp))
            if min(q, default=0) < 0:
                raise ValueError(f"{self} is not divisible by the monomial {exp}")
            terms[q] = c
        return PolyFp(self.gens, self.p, terms)

    def monomial(self, exp: Exponent) -> "PolyFp":
        return PolyFp(self.gens, self.p, {tuple(exp): 1})

    def divide_exact(self, other: "PolyFp") -> Optional["PolyFp"]:
        """self / other if other divides self exactly, else None."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("Division by the zero polynomial")
        lead_exp, lead_c = other.leading_term()
        inverse = pow(lead_c, -1, self.p)
        quotient = PolyFp(self.gens, self.p)
        remainder = self
        while not remainder.is_zero():
            exp, c = remainder.leading_term()
            shift = tuple(a - b for a, b in zip(exp, lead_exp))
            if min(shift) < 0:
                return None
            step = PolyFp(self.gens, self.p, {shift: c * inverse})
            quotient = quotient + step
            remainder = remainder - step * other
        return quotient

    def divides(self, other: "PolyFp") -> bool:
        return other.divide_exact(self) is not None

    def monic(self) -> "PolyFp":
        if self.is_zero():
            return self
        _, c = self.leading_term()
        return self * pow(c, -1, self.p)

    def evaluate(self, point: Mapping[str, int]) -> int:
        total = 0
        for e, c in self.terms.items():
            term = c
            for g, k in zip(self.gens, e):
                if k:
                    term *= point[g] ** k
            total += term
        return total % self.p

    def compose(self, images: Mapping[str, "PolyFp"]) -> "PolyFp":
        """Substitute a polynomial for every generator; the images share one ring."""
        target = next(iter(images.values()))
        result = PolyFp(target.gens, target.p)
        for e, c in self.terms.items():
            term = PolyFp.constant(c, target.gens, target.p)
            for g, k in zip(self.gens, e):
                if k:
                    term = term * images[g] ** k
            result = result + term
        return result

    def substitute_rational(self, images: Mapping[str, "RatFp"]) -> "RatFp":
        """f(n_1/d_1, ...) over the common denominator prod d_x^{max exponent of x}."""
        powers = {g: self.max_exponent(g) for g in self.gens}
        one = PolyFp.constant(1, self.gens, self.p)
        den = one
        for g in self.gens:
            den = den * images[g].den ** powers[g]
        num = PolyFp(self.gens, self.p)
        for e, c in self.terms.items():
            term = PolyFp.constant(c, self.gens, self.p)
            for g, k in zip(self.gens, e):
                image = images[g]
                term = term * image.num ** k * image.den ** (powers[g] - k)
            num = num + term
        return RatFp(num, den)

    def variables(self) -> List[str]:
        return [g for k, g in enumerate(self.gens) if any(e[k] for e in self.terms)]

    def _monomial_str(self, exp: Exponent) -> str:
        parts = []
        for g, k in zip(self.gens, exp):
            if k == 1:
                parts.append(g)
            elif k > 1:
                parts.append(f"{g}^{k}")
        return "*".join(parts)

    def __str__(self):
        if self.is_zero():
            return "0"
        pieces = []
        for exp in sorted(self.terms, key=lambda e: (-sum(e), tuple(-k for k in e))):
            c = self.terms[exp]
            mono = self._monomial_str(exp)
            if not mono:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(mono)
            else:
                pieces.append(f"{c}*{mono}")
        return " + ".join(pieces)

    def __repr__(self):
        return f"PolyFp({self}, p={self.p})"


def parse_poly(text: str, gens: Sequence[str], p: int) -> PolyFp:
    """Parse sums of products such as 'y1*w2^2 + y1 + 1'."""
    result = PolyFp(gens, p)
    for chunk in text.replace("-", "+-").split("+"):
        chunk = chunk.strip()
        if not chunk:
            continue
        term = PolyFp.constant(1, gens, p)
        for factor in chunk.split("*"):
            factor = factor.strip()
            sign = 1
            if factor.startswith("-"):
                sign, factor = -1, factor[1:].strip()
            base, _, power = factor.partition("^")
            k = int(power) if power else 1
            if base.isdigit():
                piece = PolyFp.constant(int(base) ** k, gens, p)
            elif base:
                piece = PolyFp.variable(base, gens, p) ** k
            else:
                piece = PolyFp.constant(1, gens, p)
            term = term * piece * sign
        result = result + term
    return result


@dataclass(frozen=True, eq=False)
class RatFp:
    num: PolyFp
    den: PolyFp

    def __post_init__(self):
        if self.den.is_zero():
            raise ZeroDivisionError("Rational function with zero denominator")
        if self.num.gens != self.den.gens or self.num.p != self.den.p:
            raise TypeError("Numerator and denominator live in different rings")

    @classmethod
    def of(cls, poly: PolyFp) -> "RatFp":
        return cls(poly, PolyFp.constant(1, poly.gens, poly.p))

    def _coerce(self, other) -> "RatFp":
        if isinstance(other, RatFp):
            return other
        if isinstance(other, (int, PolyFp)):
            return RatFp.of(self.num._coerce(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RatFp(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFp(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RatFp(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.num.is_zero():
            raise ZeroDivisionError("Division by the zero rational function")
        return RatFp(self.num * other.den, self.den * other.num)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def substitute_rational(self, images: Mapping[str, "RatFp"]) -> "RatFp":
        return self.num.substitute_rational(images) / self.den.substitute_rational(images)

    def compose(self, images: Mapping[str, PolyFp]) -> "RatFp":
        return RatFp(self.num.compose(images), self.den.compose(images))

    def __str__(self):
        if self.den == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RatFp({self})"


def strip_units(f: PolyFp, units: Iterable[PolyFp]) -> PolyFp:
    """Divide out declared unit factors as long as they divide."""
    if f.is_zero():
        return f
    units = [u for u in units if not u.is_constant()]
    changed = True
    while changed:
        changed = False
        for u in units:
            q = f.divide_exact(u)
            if q is not None:
                f, changed = q, True
    return f


def is_unit_product(f: PolyFp, units: Iterable[PolyFp]) -> bool:
    """True when f is a nonzero scalar times a product of powers of the units."""
    if f.is_zero():
        return False
    rest = strip_units(f, units)
    return rest.is_constant()


def simplify(r: RatFp, units: Sequence[PolyFp]) -> RatFp:
    """Cancel common coordinate powers and common declared units."""
    num, den = r.num, r.den
    if num.is_zero():
        return RatFp(num, PolyFp.constant(1, num.gens, num.p))
    common = tuple(min(a, b) for a, b in zip(num.monomial_content(), den.monomial_content()))
    num, den = num.divide_monomial(common), den.divide_monomial(common)
    for u in units:
        if u.is_constant():
            continue
        while True:
            qn, qd = num.divide_exact(u), den.divide_exact(u)
            if qn is None or qd is None:
                break
            num, den = qn, qd
    # scalar content goes into the numerator
    if den.is_constant():
        num, den = num * pow(den.constant_term(), -1, num.p), den * pow(den.constant_term(), -1, num.p)
    return RatFp(num, den)


@dataclass(frozen=True, eq=False)
class ChartAction:
    """A Z/p action on an affine chart, given by sigma on the coordinates."""
    coords: Tuple[str, ...]
    sigma: Dict[str, RatFp]
    units: Tuple[PolyFp, ...]
    p: int
    name: str = "chart"
    verify_order: bool = field(default=True, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(self.coords))
        object.__setattr__(self, "units", tuple(self.units))
        if not isprime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")
        if set(self.sigma) != set(self.coords):
            raise ValueError(f"sigma must be given on exactly {self.coords}, got {sorted(self.sigma)}")
        for x, image in self.sigma.items():
            if image.num.gens != self.coords or image.num.p != self.p:
                raise TypeError(f"sigma({x}) does not live in F_{self.p}[{','.join(self.coords)}]")
            if not is_unit_product(image.den, self.units):
                raise ValueError(f"Denominator of sigma({x}) = {image.den} is not a product of declared units")
        if self.verify_order and not self.has_order_dividing_p():
            raise ValueError(f"sigma^{self.p} is not the identity on chart {self.name}")

    @classmethod
    def identity(cls, coords: Sequence[str], p: int, name: str = "identity") -> "ChartAction":
        coords = tuple(coords)
        return cls(coords, {x: RatFp.of(PolyFp.variable(x, coords, p)) for x in coords}, (), p, name)

    def var(self, x: str) -> PolyFp:
        return PolyFp.variable(x, self.coords, self.p)

    def act(self, f: Union[PolyFp, RatFp]) -> RatFp:
        """sigma(f) = f(sigma(x_1), ..., sigma(x_n))."""
        return f.substitute_rational(self.sigma)

    def power(self, k: int) -> Dict[str, RatFp]:
        current = {x: RatFp.of(self.var(x)) for x in self.coords}
        for _ in range(k):
            current = {x: current[x].substitute_rational(self.sigma) for x in self.coords}
        return current

    def has_order_dividing_p(self) -> bool:
        iterate = self.power(self.p)
        return all(iterate[x] == self.var(x) for x in self.coords)

    def describe(self) -> Dict[str, str]:
        return {x: str(self.sigma[x]) for x in self.coords}

    def to_dict(self) -> Dict:
        return {
            "name": self.name,
            "p": self.p,
            "coords": list(self.coords),
            "sigma": self.describe(),
            "units": [str(u) for u in self.units],
        }


def torus_inversion_chart(p: int = 2, names: Sequence[str] = ("x1", "x2", "x3")) -> ChartAction:
    """x -> 1/x on the split torus; sigma has order 2, so this is a Z/p action only for p = 2."""
    names = tuple(names)
    one = PolyFp.constant(1, names, p)
    sigma = {x: RatFp(one, PolyFp.variable(x, names, p)) for x in names}
    units = tuple(PolyFp.variable(x, names, p) for x in names)
    return ChartAction(names, sigma, units, p, "torus")


def _translation_images(old: Sequence[str], new: Sequence[str], shift: Sequence[int], p: int) -> Dict[str, PolyFp]:
    return {x: PolyFp.variable(y, new, p) + c for x, y, c in zip(old, new, shift)}


def translate_chart(c: ChartAction, point: Sequence[int], names: Optional[Sequence[str]] = None,
                    name: Optional[str] = None) -> ChartAction:
    """Move the F_p-point `point` to the origin: x = y + point, sigma_new(y) = sigma(y + point) - point."""
    if len(point) != len(c.coords):
        raise ValueError(f"Point {tuple(point)} has the wrong number of coordinates for {c.coords}")
    names = tuple(names) if names else c.coords
    if len(names) != len(c.coords):
        raise ValueError("One new name per coordinate is required")
    forward = _translation_images(c.coords, names, point, c.p)
    sigma = {}
    for x, y, shift in zip(c.coords, names, point):
        sigma[y] = c.sigma[x].compose(forward) - shift
    units = tuple(u.compose(forward) for u in c.units)
    sigma = {y: simplify(r, units) for y, r in sigma.items()}
    logger.debug(f"Translated {c.name} by {tuple(point)}")
    return ChartAction(names, sigma, units, c.p, name or f"{c.name}+{tuple(point)}")


def _fixes_center(c: ChartAction, center: Sequence[str]) -> bool:
    idx = [c.coords.index(x) for x in center]
    for x in center:
        for exp in c.sigma[x].num.terms:
            if not any(exp[k] for k in idx):
                return False
    return True


def blowup_chart(c: ChartAction, center: Sequence[str], pivot: str,
                 names: Optional[Mapping[str, str]] = None,
                 extra_units: Sequence[str] = (), name: Optional[str] = None) -> ChartAction:
    """
    Chart of the blow-up of {x = 0 : x in center} where the pivot generates the
    exceptional ideal: x = pivot * v_x for the other center coordinates.
    extra_units are parsed in the new coordinates.
    """
    center = tuple(center)
    unknown = [x for x in center if x not in c.coords]
    if unknown:
        raise ValueError(f"Center coordinates {unknown} are not chart coordinates")
    if pivot not in center:
        raise ValueError(f"Pivot {pivot} is not in the center {center}")
    if not _fixes_center(c, center):
        raise ValueError(f"sigma does not fix the center {center} of {c.name}")
    names = dict(names or {})
    rename = {x: names.get(x, f"v_{x}") for x in center if x != pivot}
    new_coords = tuple(rename.get(x, x) for x in c.coords)
    if len(set(new_coords)) != len(new_coords):
        raise ValueError(f"Blow-up coordinate names collide: {new_coords}")

    t = PolyFp.variable(pivot, new_coords, c.p)
    images = {}
    for x in c.coords:
        if x in rename:
            images[x] = t * PolyFp.variable(rename[x], new_coords, c.p)
        else:
            images[x] = PolyFp.variable(x, new_coords, c.p)

    units = [u.compose(images) for u in c.units]
    units += [parse_poly(text, new_coords, c.p) for text in extra_units]

    pivot_image = c.sigma[pivot].compose(images)
    sigma = {}
    for x in c.coords:
        image = c.sigma[x].compose(images)
        if x in rename:
            image = image / pivot_image
        sigma[rename.get(x, x)] = simplify(image, units)
    logger.debug(f"Blew up {c.name} along {center} with pivot {pivot}")
    return ChartAction(new_coords, sigma, tuple(units), c.p, name or f"Bl({c.name}; {pivot})")


def fixed_scheme_generators(c: ChartAction) -> List[PolyFp]:
    """Numerators of sigma(x) - x, with unit factors and scalar content removed."""
    gens = []
    for x in c.coords:
        image = c.sigma[x]
        numerator = image.num - c.var(x) * image.den
        gens.append(strip_units(numerator, c.units).monic())
    return gens


def divisor_valuation(f: RatFp, t: str, allow_poles: bool = False) -> Union[int, float]:
    """Order of f along {t = 0}; INF for f = 0."""
    if f.is_zero():
        return INF
    den_order = f.den.ord(t)
    if den_order and not allow_poles:
        raise ValueError(f"Denominator {f.den} vanishes along {t} = 0")
    return f.num.ord(t) - den_order


@dataclass(frozen=True)
class Principal:
    generator: PolyFp
    exponents: Dict[str, int]
    residual: PolyFp

    @property
    def is_principal(self) -> bool:
        return True

    def multiplicity(self, t: str) -> int:
        return self.exponents.get(t, 0)

    def to_dict(self) -> Dict:
        return {"verdict": "principal", "generator": str(self.generator),
                "exponents": dict(self.exponents), "residual": str(self.residual)}


@dataclass(frozen=True)
class NotPrincipal:
    orders: Dict[str, int]
    cofactors: Tuple[PolyFp, ...]
    failure_points: Tuple[Dict[str, int], ...]

    @property
    def is_principal(self) -> bool:
        return False

    def to_dict(self) -> Dict:
        return {"verdict": "not principal", "orders": dict(self.orders),
                "cofactors": [str(g) for g in self.cofactors],
                "failure_points": [dict(pt) for pt in self.failure_points]}


CartierVerdict = Union[Principal, NotPrincipal]


def cartier_test(gens: Sequence[PolyFp], units: Sequence[PolyFp] = (),
                 divisor_coords: Optional[Sequence[str]] = None) -> CartierVerdict:
    """Is the ideal generated by gens locally principal on the chart?"""
    nonzero = [strip_units(g, units).monic() for g in gens if not g.is_zero()]
    if not nonzero:
        raise ValueError("The zero ideal is not a divisor")
    ring = nonzero[0].gens
    candidate = min(nonzero, key=lambda g: (g.degree(), str(g)))
    if all(candidate.divides(g) for g in nonzero):
        content = candidate.monomial_content()
        exponents = {x: k for x, k in zip(ring, content) if k}
        return Principal(candidate, exponents, candidate.divide_monomial(content))

    if divisor_coords is None:
        divisor_coords = [x for x in ring if min(g.ord(x) for g in nonzero) > 0]
    orders = {t: min(g.ord(t) for g in nonzero) for t in divisor_coords}
    shift = tuple(orders.get(x, 0) for x in ring)
    cofactors = tuple(g.divide_monomial(shift) for g in nonzero)

    free = [x for x in ring if x not in orders]
    p = nonzero[0].p
    points = []
    for values in itertools.product(range(p), repeat=len(free)):
        point = {t: 0 for t in orders}
        point.update(zip(free, values))
        if any(u.evaluate(point) == 0 for u in units):
            continue
        if all(g.evaluate(point) == 0 for g in cofactors):
            points.append(point)
    logger.debug(f"Ideal not principal; {len(points)} F_{p}-points where it fails")
    return NotPrincipal(orders, cofactors, tuple(points))


def projective_point(values: Sequence[int], p: int) -> Tuple[int, ...]:
    """Normalize homogeneous coordinates so the first nonzero entry is 1."""
    for v in values:
        if v % p:
            inverse = pow(v, -1, p)
            return tuple((x * inverse) % p for x in values)
    raise ValueError("All homogeneous coordinates vanish")


def monomial_locus_codim(gens: Sequence[PolyFp]) -> int:
    """Codimension of a locus cut out by pure coordinate powers."""
    variables = set()
    for g in gens:
        if g.is_zero():
            continue
        if len(g.terms) != 1 or len(g.variables()) != 1:
            raise ValueError(f"{g} is not a pure power of a coordinate")
        variables.update(g.variables())
    return len(variables)


def artin_number(c: ChartAction, t: str) -> Union[int, float]:
    """min over coordinates x of v_t(sigma(x) - x); INF when sigma is trivial."""
    if t not in c.coords:
        raise ValueError(f"{t} is not a coordinate of {c.name}")
    return min(divisor_valuation(c.sigma[x] - c.var(x), t) for x in c.coords)


def swan_upper_bound(c: ChartAction, t: str) -> Union[int, float]:
    """min over coordinates x of v_t(sigma(x)/x - 1), an upper bound for the Swan number."""
    if t not in c.coords:
        raise ValueError(f"{t} is not a coordinate of {c.name}")
    return min(divisor_valuation(c.sigma[x] / c.var(x) - 1, t, allow_poles=True) for x in c.coords)


class RamificationType(Enum):
    WILD = "wild"
    FIERCE = "fierce"
    AMBIGUOUS = "ambiguous"


@dataclass(frozen=True)
class SwanVerdict:
    kind: RamificationType
    i: int
    u: Union[int, float, None]
    s: Optional[int]
    e: Optional[int]

    def to_dict(self) -> Dict:
        return {"type": self.kind.value, "i": self.i,
                "u": "inf" if self.u == INF else self.u, "s": self.s, "e": self.e}


def classify_ramification(i: int, u: Union[int, float, None], p: int) -> SwanVerdict:
    """Decide wild/fierce from the Artin number i and the generator bound u >= s."""
    if i == INF or i < 1:
        raise ValueError(f"sigma does not fix the divisor (i = {i})")
    if i == 1:
        # s > 0 and s in {i - 1, i}
        return SwanVerdict(RamificationType.FIERCE, i, u, 1, 1)
    if u is None:
        raise ValueError("A Swan upper bound is needed when i > 1")
    if u < i - 1:
        raise ValueError(f"Swan bound u = {u} below i - 1 = {i - 1}")
    if u == i - 1:
        return SwanVerdict(RamificationType.WILD, i, u, i - 1, p)
    logger.warning(f"Ramification undecided: i = {i}, generator bound u = {u}")
    return SwanVerdict(RamificationType.AMBIGUOUS, i, u, None, None)


def swan_classify(c: ChartAction, t: str, i: Optional[int] = None) -> SwanVerdict:
    if i is None:
        i = artin_number(c, t)
    if i == INF or i < 1:
        raise ValueError(f"sigma does not fix {t} = 0 on {c.name} (i = {i})")
    # the Swan bound is only needed once i > 1
    u = swan_upper_bound(c, t) if i > 1 else None
    return classify_ramification(i, u, c.p)


def different_coefficient(p: int, i: int) -> int:
    """Coefficient of the divisor in the different: (p - 1) i."""
    if i < 1:
        raise ValueError(f"Artin number must be >= 1, got {i}")
    return (p - 1) * i


def ideal_contains(gens: Sequence[PolyFp], f: PolyFp, units: Sequence[PolyFp] = ()) -> bool:
    """Membership by exact division against a single generator; sufficient on monomial-like ideals."""
    if f.is_zero():
        return True
    f = strip_units(f, units)
    return any(not g.is_zero() and g.divides(f) for g in gens)


def is_sigma_stable(c: ChartAction, gens: Sequence[PolyFp]) -> bool:
    for g in gens:
        if g.is_zero():
            continue
        image = c.act(g)
        if not is_unit_product(image.den, c.units):
            return False
        if not ideal_contains(gens, image.num, c.units):
            return False
    return True
