"""Closed-form products and shuffling ratios, evaluated in exact rationals.

Every function mirrors one of the product formulas that the counting engine
is verified against: MacMahon's boxed plane partition product, the
Cohn-Larsen-Propp dented semihexagon product, Proctor's and Ciucu's staircase
hexagon products, the quartered-hexagon closed forms, and the right-hand
sides of the shuffling theorems for the H, RS, F, Fbar, W and Wbar families.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .regions import InvalidSpec

ONE = Fraction(1)


def normalize_positions(values) -> tuple[int, ...]:
    tup = tuple(sorted(int(v) for v in values))
    if len(set(tup)) != len(tup):
        raise InvalidSpec("position sets must be strictly increasing")
    if tup and tup[0] < 1:
        raise InvalidSpec("positions must be >= 1")
    return tup


def pp(a: int, b: int, c: int) -> Fraction:
    """MacMahon's product: tilings of the hexagon a, b, c, a, b, c."""
    out = ONE
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            for k in range(1, c + 1):
                out *= Fraction(i + j + k - 1, i + j + k - 2)
    return out


def clp(positions) -> Fraction:
    """Cohn-Larsen-Propp product for a dented semihexagon, prod (s_j-s_i)/(j-i)."""
    s = normalize_positions(positions)
    out = ONE
    for i in range(len(s)):
        for j in range(i + 1, len(s)):
            out *= Fraction(s[j] - s[i], j - i)
    return out


def proctor(a: int, b: int, c: int) -> Fraction:
    """Proctor's product for the staircase-cut hexagon P(a, b, c); needs a <= b."""
    if a > b:
        raise InvalidSpec("proctor requires a <= b")
    out = ONE
    for i in range(1, a + 1):
        for j in range(1, b - a + 2):
            out *= Fraction(c + i + j - 1, i + j - 1)
        for j in range(b - a + 2, b - a + i + 1):
            out *= Fraction(2 * c + i + j - 1, i + j - 1)
    return out


def ciucu(a: int, b: int, c: int) -> Fraction:
    """Ciucu's weighted product for Pprime(a, b, c); needs a <= b."""
    if a > b:
        raise InvalidSpec("ciucu requires a <= b")
    out = Fraction(1, 2**a)
    for i in range(1, a + 1):
        out *= Fraction(2 * c + b - a + i, c + b - a + i)
    return out * proctor(a, b, c)


@lru_cache(maxsize=None)
def h2(n: int) -> int:
    """Skipping hyperfactorial: 0!2!4!... or 1!3!5!... up to (n-2)!."""
    if n < 0:
        raise InvalidSpec("h2 requires a nonnegative argument")
    if n <= 1:
        return 1
    return h2(n - 2) * factorial(n - 2)


DELTA_KINDS = ("Squares", "OddShift", "EvenShift", "WeightedTri")


def delta(positions, kind: str) -> int:
    """Pair products over an increasing position set.

    Squares      prod_{i<j} (s_j^2 - s_i^2)
    OddShift     prod_{i<j} (s_j - s_i)(s_j + s_i - 1)
    EvenShift    prod_{i<j} (s_j - s_i)(s_j + s_i - 2)
    WeightedTri  prod_{i<j} (s_j - s_i) * prod_{i<=j} (s_i + s_j - 1)
    """
    s = normalize_positions(positions)
    out = 1
    if kind == "Squares":
        for i in range(len(s)):
            for j in range(i + 1, len(s)):
                out *= s[j] ** 2 - s[i] ** 2
    elif kind == "OddShift":
        for i in range(len(s)):
            for j in range(i + 1, len(s)):
                out *= (s[j] - s[i]) * (s[j] + s[i] - 1)
    elif kind == "EvenShift":
        for i in range(len(s)):
            for j in range(i + 1, len(s)):
                out *= (s[j] - s[i]) * (s[j] + s[i] - 2)
    elif kind == "WeightedTri":
        for i in range(len(s)):
            for j in range(i + 1, len(s)):
                out *= s[j] - s[i]
        for i in range(len(s)):
            for j in range(i, len(s)):
                out *= s[i] + s[j] - 1
    else:
        raise InvalidSpec(f"unknown delta kind {kind!r}; expected one of {DELTA_KINDS}")
    return out


QUARTERED_VARIANTS = ("L-even", "L-odd", "Lbar-even", "Lbar-odd")


def quartered(variant: str, dents) -> Fraction:
    """Closed-form count of a quartered hexagon with the given base dents.

    L-even      L(2k, n):     a_1...a_k * prod(a_j-a_i) * prod_{i<j}(a_i+a_j) / h2(2k+1)
    L-odd       L(2k-1, n):   prod(a_j-a_i) * prod_{i<j}(a_i+a_j-1) / h2(2k)
    Lbar-even   Lbar(2k, n):  2^-k * prod(a_j-a_i) * prod_{i<=j}(a_i+a_j-1) / h2(2k+1)
    Lbar-odd    Lbar(2k-1,n): prod(a_j-a_i) * prod_{i<j}(a_i+a_j-2) / h2(2k)

    The value does not depend on n.  Empty dent sets are allowed for the even
    variants (the region is empty, count 1).
    """
    a = normalize_positions(dents)
    k = len(a)
    if variant == "L-even":
        num = 1
        for v in a:
            num *= v
        num *= delta(a, "Squares")  # = prod(diff) * prod(sum)
        return Fraction(num, h2(2 * k + 1))
    if variant == "L-odd":
        if k == 0:
            raise InvalidSpec("L-odd requires at least one dent")
        return Fraction(delta(a, "OddShift"), h2(2 * k))
    if variant == "Lbar-even":
        return Fraction(delta(a, "WeightedTri"), 2**k * h2(2 * k + 1))
    if variant == "Lbar-odd":
        if k == 0:
            raise InvalidSpec("Lbar-odd requires at least one dent")
        return Fraction(delta(a, "EvenShift"), h2(2 * k))
    raise InvalidSpec(
        f"unknown quartered variant {variant!r}; expected one of {QUARTERED_VARIANTS}"
    )


RATIO_FAMILIES = ("H", "RS-odd", "RS-even", "F", "Fbar", "W", "Wbar")

_DELTA_BY_FAMILY = {
    "RS-odd": "Squares",
    "RS-even": "OddShift",
    "F": "Squares",
    "Fbar": "OddShift",
    "W": "WeightedTri",
    "Wbar": "EvenShift",
}


@dataclass(frozen=True)
class RatioSpec:
    """A shuffle: two dent configurations sharing union and intersection."""

    family: str
    U: tuple[int, ...]
    D: tuple[int, ...]
    Uprime: tuple[int, ...]
    Dprime: tuple[int, ...]
    y: int

    def __post_init__(self):
        if self.family not in RATIO_FAMILIES:
            raise InvalidSpec(
                f"unknown ratio family {self.family!r}; expected one of {RATIO_FAMILIES}"
            )
        for name in ("U", "D", "Uprime", "Dprime"):
            object.__setattr__(self, name, normalize_positions(getattr(self, name)))
        if self.y < 0:
            raise InvalidSpec("y must be nonnegative")
        u, d = set(self.U), set(self.D)
        u2, d2 = set(self.Uprime), set(self.Dprime)
        if u | d != u2 | d2:
            raise InvalidSpec("shuffle requires U ∪ D == U' ∪ D'")
        if u & d != u2 & d2:
            raise InvalidSpec("shuffle requires U ∩ D == U' ∩ D'")
        if self.family == "RS-odd" and self.y % 2 == 0:
            raise InvalidSpec("RS-odd requires odd y")
        if self.family == "RS-even" and self.y % 2 == 1:
            raise InvalidSpec("RS-even requires even y")


def _h2_ratio(spec: RatioSpec) -> Fraction:
    u, d = len(spec.U), len(spec.D)
    u2, d2 = len(spec.Uprime), len(spec.Dprime)
    y = spec.y
    if spec.family in ("RS-odd", "RS-even"):
        args = (2 * u2 + y, 2 * d2 + y, 2 * u + y, 2 * d + y)
    elif spec.family in ("F", "W"):
        args = (
            2 * u2 + 2 * y + 1,
            2 * d2 + 2 * y + 1,
            2 * u + 2 * y + 1,
            2 * d + 2 * y + 1,
        )
    else:  # Fbar, Wbar
        args = (2 * u2 + 2 * y, 2 * d2 + 2 * y, 2 * u + 2 * y, 2 * d + 2 * y)
    return Fraction(h2(args[0]) * h2(args[1]), h2(args[2]) * h2(args[3]))


def shuffle_ratio(spec: RatioSpec) -> Fraction:
    """Right-hand side of the shuffling theorem for the given family."""
    if spec.family == "H":
        num = clp(spec.U) * clp(spec.D) * pp(len(spec.U), len(spec.D), spec.y)
        den = clp(spec.Uprime) * clp(spec.Dprime) * pp(
            len(spec.Uprime), len(spec.Dprime), spec.y
        )
        return num / den
    kind = _DELTA_BY_FAMILY[spec.family]
    num = delta(spec.U, kind) * delta(spec.D, kind)
    den = delta(spec.Uprime, kind) * delta(spec.Dprime, kind)
    return Fraction(num, den) * _h2_ratio(spec)
