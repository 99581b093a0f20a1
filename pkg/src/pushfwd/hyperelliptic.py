"""Exact Riemann-Roch oracle on hyperelliptic curves over odd prime fields.

A curve is y^2 = f(x) with f monic, squarefree, of odd degree 2g + 1, so
there is a single rational point at infinity, x has pole order 2 there and
y pole order 2g + 1, and the canonical class is (2g - 2) * infinity.  The
x-coordinate map is a degree-2 cover of the line pulling O(1) back to
2 * infinity; composing with z -> z^m realizes every even map degree 2m.

Riemann-Roch space dimensions are computed by exact linear algebra:

1. clear the allowed affine poles of a divisor D with a polynomial d(x)
   that vanishes at each support x-value, turning L(D) into the subspace
   of L(N * infinity) cut out by vanishing conditions, N = c_inf + 2*sum e;
2. L(N * infinity) has the monomial basis x^i (pole order 2i) and x^j y
   (pole order 2j + 2g + 1);
3. each vanishing condition is a coefficient of a truncated local power
   series of a basis monomial at an affected point;
4. the dimension is the nullity of the resulting matrix over F_p.

Dimensions are invariant under base field extension, so these match the
geometric values the splitting formulas refer to.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

from .errors import (
    CharacteristicTwo,
    DegreeNotMultiple,
    PointNotOnCurve,
    SingularCurve,
    WrongGenus,
)
from .expansions import (
    poly_eval,
    poly_is_squarefree,
    series_mul,
    split_point_series,
    weierstrass_point_series,
)
from .linalg import MAX_PRIME, kernel_dim_mod_p
from .splitting import (
    CohSequence,
    SplittingType,
    h0_sequence_from_callable,
    splitting_from_h0_sequence,
)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class HyperellipticCurve:
    """y^2 = f(x) over F_p, f monic squarefree of odd degree 2g + 1 >= 3."""

    __slots__ = ("prime", "coeffs", "genus", "_rr_cache")

    def __init__(self, prime: int, coeffs: Iterable[int]):
        if prime == 2:
            raise CharacteristicTwo("the model y^2 = f(x) needs an odd characteristic")
        if not _is_prime(prime):
            raise ValueError(f"field modulus must be prime, got {prime}")
        if prime >= MAX_PRIME:
            raise ValueError(f"field modulus must be below 2**31, got {prime}")
        cs = tuple(int(c) % prime for c in coeffs)
        if len(cs) < 4 or len(cs) % 2 != 0:
            raise ValueError(
                f"f(x) must have odd degree 2g+1 >= 3, got degree {len(cs) - 1}"
            )
        if cs[-1] != 1:
            raise ValueError("f(x) must be monic")
        if not poly_is_squarefree(list(cs), prime):
            raise SingularCurve("f(x) has a repeated root over F_p; the curve is singular")
        self.prime = prime
        self.coeffs = cs
        self.genus = (len(cs) - 2) // 2
        self._rr_cache: dict = {}

    def __eq__(self, other) -> bool:
        if not isinstance(other, HyperellipticCurve):
            return NotImplemented
        return self.prime == other.prime and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.prime, self.coeffs))

    def __repr__(self) -> str:
        return f"HyperellipticCurve({self.to_string()!r})"

    def rhs(self, x: int) -> int:
        """f(x) mod p."""
        return poly_eval(self.coeffs, x % self.prime, self.prime)

    def point(self, x: int, y: int) -> "CurvePoint":
        """The affine point (x, y); raises if it does not lie on the curve."""
        p = self.prime
        x, y = x % p, y % p
        if (y * y) % p != self.rhs(x):
            raise PointNotOnCurve(
                f"({x}, {y}) does not satisfy y^2 = f(x) over F_{p}"
            )
        return CurvePoint("affine", x, y)

    def validate_point(self, pt: "CurvePoint") -> None:
        if pt.kind != "affine":
            raise ValueError("only affine points can carry divisor multiplicities here")
        self.point(pt.x, pt.y)

    def affine_points(self) -> list["CurvePoint"]:
        """All F_p-rational affine points."""
        p = self.prime
        roots: dict[int, list[int]] = {}
        for y in range(p):
            roots.setdefault(y * y % p, []).append(y)
        pts = []
        for x in range(p):
            for y in roots.get(self.rhs(x), ()):
                pts.append(CurvePoint("affine", x, y))
        return pts

    def to_string(self) -> str:
        return f"p={self.prime}; f={','.join(str(c) for c in self.coeffs)}"


@dataclass(frozen=True)
class CurvePoint:
    """A point of the curve: the point at infinity or an affine (x, y)."""

    kind: str
    x: int | None = None
    y: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("affine", "infinity"):
            raise ValueError(f"kind must be 'affine' or 'infinity', got {self.kind!r}")
        if self.kind == "affine" and (self.x is None or self.y is None):
            raise ValueError("affine points need both coordinates")
        if self.kind == "infinity" and not (self.x is None and self.y is None):
            raise ValueError("the point at infinity has no coordinates")

    @classmethod
    def infinity(cls) -> "CurvePoint":
        return cls("infinity")

    def is_weierstrass(self) -> bool:
        return self.kind == "affine" and self.y == 0


@dataclass(frozen=True)
class Divisor:
    """Integer coefficient at infinity plus finitely many affine points.

    The affine part is stored canonically as ((point, multiplicity), ...)
    sorted by coordinates; zero multiplicities are dropped and support
    points are validated against the curve.
    """

    curve: HyperellipticCurve
    at_infinity: int = 0
    affine: tuple = ()

    def __post_init__(self) -> None:
        raw = self.affine.items() if isinstance(self.affine, Mapping) else self.affine
        merged: dict[CurvePoint, int] = {}
        for pt, mult in raw:
            self.curve.validate_point(pt)
            merged[pt] = merged.get(pt, 0) + int(mult)
        canonical = tuple(
            sorted(((pt, m) for pt, m in merged.items() if m != 0),
                   key=lambda item: (item[0].x, item[0].y))
        )
        object.__setattr__(self, "affine", canonical)
        object.__setattr__(self, "at_infinity", int(self.at_infinity))

    @property
    def degree(self) -> int:
        return self.at_infinity + sum(m for _, m in self.affine)

    def shift_infinity(self, amount: int) -> "Divisor":
        return Divisor(self.curve, self.at_infinity + amount, self.affine)

    def _require_same_curve(self, other: "Divisor") -> None:
        if self.curve != other.curve:
            raise ValueError("divisors live on different curves")

    def __add__(self, other: "Divisor") -> "Divisor":
        if not isinstance(other, Divisor):
            return NotImplemented
        self._require_same_curve(other)
        merged = dict(self.affine)
        for pt, m in other.affine:
            merged[pt] = merged.get(pt, 0) + m
        return Divisor(self.curve, self.at_infinity + other.at_infinity, merged)

    def __neg__(self) -> "Divisor":
        return Divisor(self.curve, -self.at_infinity,
                       tuple((pt, -m) for pt, m in self.affine))

    def __sub__(self, other: "Divisor") -> "Divisor":
        if not isinstance(other, Divisor):
            return NotImplemented
        return self + (-other)

    def __repr__(self) -> str:
        return f"Divisor({divisor_to_string(self)!r})"


@dataclass(frozen=True)
class ComposedMap:
    """The x-coordinate double cover followed by z -> z^exponent.

    Total degree 2 * exponent; the pullback of O(1) is (2*exponent) * infinity.
    """

    exponent: int

    def __post_init__(self) -> None:
        if self.exponent < 1:
            raise ValueError(f"exponent must be at least 1, got {self.exponent}")

    @property
    def degree(self) -> int:
        return 2 * self.exponent


def canonical_divisor(curve: HyperellipticCurve) -> Divisor:
    """(2g - 2) * infinity."""
    return Divisor(curve, 2 * curve.genus - 2)


def _condition_rows(x_series, y_series, count, basis, p):
    """Rows forcing the first ``count`` series coefficients of each basis
    monomial x^i y^j to vanish."""
    prec = len(x_series)
    max_i = max(i for i, _ in basis)
    xpows = [[1] + [0] * (prec - 1)]
    for _ in range(max_i):
        xpows.append(series_mul(xpows[-1], x_series, prec, p))
    cols = []
    for i, j in basis:
        s = xpows[i] if j == 0 else series_mul(xpows[i], y_series, prec, p)
        cols.append(s)
    return [[col[order] for col in cols] for order in range(count)]


def _rr_space_dim_uncached(divisor: Divisor) -> int:
    curve = divisor.curve
    p = curve.prime
    g = curve.genus

    by_x: dict[int, dict[int, int]] = {}
    for pt, mult in divisor.affine:
        by_x.setdefault(pt.x, {})[pt.y] = mult

    # Pole clearing: multiply by (x - x0)^e per support x-value.  At a
    # ramified x-value x - x0 has order 2, so e = ceil(m / 2) suffices.
    sites = []
    pole_shift = 0
    for x0 in sorted(by_x):
        ys = by_x[x0]
        ramified = curve.rhs(x0) == 0
        if ramified:
            e = max(0, (ys.get(0, 0) + 1) // 2)
        else:
            e = max(0, max(ys.values()))
        pole_shift += 2 * e
        sites.append((x0, ys, e, ramified))

    cap = divisor.at_infinity + pole_shift
    if cap < 0:
        return 0

    basis = [(i, 0) for i in range(cap // 2 + 1)]
    if cap >= 2 * g + 1:
        basis += [(j, 1) for j in range((cap - (2 * g + 1)) // 2 + 1)]

    rows: list[list[int]] = []
    for x0, ys, e, ramified in sites:
        if ramified:
            needed = 2 * e - ys.get(0, 0)
            if needed > 0:
                xs, yser = weierstrass_point_series(curve.coeffs, x0, needed + 1, p)
                rows += _condition_rows(xs, yser, needed, basis, p)
        else:
            some_y = next(iter(ys))
            for y0 in sorted({some_y, (-some_y) % p}):
                needed = e - ys.get(y0, 0)
                if needed > 0:
                    xs, yser = split_point_series(curve.coeffs, x0, y0, needed + 1, p)
                    rows += _condition_rows(xs, yser, needed, basis, p)

    if not rows:
        return len(basis)
    return kernel_dim_mod_p(np.array(rows, dtype=np.int64), p)


def rr_space_dim(divisor: Divisor) -> int:
    """dim L(D) = h0 of the line bundle O(D) on the curve.

    Results are memoized per curve; the memo is invisible to callers.
    """
    curve = divisor.curve
    key = (divisor.at_infinity, divisor.affine)
    cached = curve._rr_cache.get(key)
    if cached is None:
        cached = _rr_space_dim_uncached(divisor)
        curve._rr_cache[key] = cached
    return cached


def linearly_equivalent(d1: Divisor, d2: Divisor) -> bool:
    """Whether two divisors differ by the divisor of a function.

    Equal degrees are necessary; then D1 ~ D2 exactly when the degree-zero
    difference has a one-dimensional space of sections.
    """
    d1._require_same_curve(d2)
    if d1.degree != d2.degree:
        return False
    return rr_space_dim(d1 - d2) == 1


def h0_sequence(divisor: Divisor, cover: ComposedMap) -> CohSequence:
    """Dimensions l -> dim L(D - n*l*infinity), n = cover degree, over the
    minimal window needed to recover the direct image."""
    n = cover.degree
    return h0_sequence_from_callable(
        lambda l: rr_space_dim(divisor.shift_infinity(-n * l)), n
    )


def pushforward(divisor: Divisor, cover: ComposedMap) -> SplittingType:
    """Splitting type of the direct image of O(D) under the cover."""
    return splitting_from_h0_sequence(h0_sequence(divisor, cover))


def is_exceptional_class(divisor: Divisor, cover: ComposedMap) -> bool:
    """On a genus-1 curve: is O(D) a pullback twist of the degree-zero
    class with a section?  Requires deg D divisible by the cover degree."""
    if divisor.curve.genus != 1:
        raise WrongGenus(
            f"exceptional classes live on genus-1 curves, got genus {divisor.curve.genus}"
        )
    n = cover.degree
    q, rem = divmod(divisor.degree, n)
    if rem:
        raise DegreeNotMultiple(
            f"degree {divisor.degree} is not a multiple of the cover degree {n}"
        )
    return rr_space_dim(divisor.shift_infinity(-n * q)) == 1


def curve_from_string(text: str) -> HyperellipticCurve:
    """Parse "p=<prime>; f=<c_0>,...,<c_{2g+1}>" (coefficients low to high)."""
    prime = None
    coeffs = None
    for term in text.split(";"):
        term = term.strip()
        if not term:
            continue
        key, _, value = term.partition("=")
        key = key.strip()
        if key == "p":
            prime = int(value)
        elif key == "f":
            coeffs = [int(c) for c in value.split(",")]
        else:
            raise ValueError(f"unknown curve field {key!r}; expected 'p' and 'f'")
    if prime is None or coeffs is None:
        raise ValueError("curve text must provide both p=<prime> and f=<coeffs>")
    return HyperellipticCurve(prime, coeffs)


def divisor_from_string(curve: HyperellipticCurve, text: str) -> Divisor:
    """Parse semicolon-separated terms "inf:<c>" and "pt:<x>,<y>:<mult>"."""
    at_infinity = 0
    affine: dict[CurvePoint, int] = {}
    for term in text.split(";"):
        term = term.strip()
        if not term:
            continue
        if term.startswith("inf:"):
            at_infinity += int(term[4:])
        elif term.startswith("pt:"):
            body = term[3:]
            coords, _, mult = body.rpartition(":")
            if not coords:
                raise ValueError(f"malformed point term {term!r}; expected pt:<x>,<y>:<mult>")
            xs, _, ys = coords.partition(",")
            pt = curve.point(int(xs), int(ys))
            affine[pt] = affine.get(pt, 0) + int(mult)
        else:
            raise ValueError(
                f"unknown divisor term {term!r}; expected inf:<c> or pt:<x>,<y>:<mult>"
            )
    return Divisor(curve, at_infinity, affine)


def divisor_to_string(divisor: Divisor) -> str:
    terms = [f"inf:{divisor.at_infinity}"]
    terms += [f"pt:{pt.x},{pt.y}:{m}" for pt, m in divisor.affine]
    return "; ".join(terms)
