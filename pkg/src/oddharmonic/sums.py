"""Multiple harmonic sums in four flavors, with alternating variants.

A sum is specified by an ordering (strict: k_1 < ... < k_r, star:
k_1 <= ... <= k_r), a parity (standard denominators k+1 or odd
denominators 2k+1, positions k = 0..n-1), and a composition of exponents.
Composition entries are nonzero integers; a negative entry -s stands for
the alternating exponent: its factor is (-1)**k / base(k)**s.

Evaluation runs a dynamic program over the last summation index, one row
of prefix partial sums per exponent, O(n*r) reduced-rational operations.
Rows are cached by (spec, n, exponent prefix) so sweeps that walk many
compositions at the same n share almost all the work.  The brute-force
enumerator is kept as an independent oracle.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from math import gcd
from typing import Iterable, Iterator, Union


class WorkLimitExceeded(RuntimeError):
    """Brute-force enumeration would touch too many index tuples."""


@dataclass(frozen=True)
class Composition:
    """Ordered tuple of nonzero exponents; negative means alternating."""

    indices: tuple[int, ...]

    def __post_init__(self):
        try:
            idx = tuple(operator.index(i) for i in self.indices)
        except TypeError as exc:
            raise ValueError(f"composition entries must be integers: "
                             f"{self.indices!r}") from exc
        if not idx:
            raise ValueError("composition must be nonempty")
        if any(i == 0 for i in idx):
            raise ValueError("composition entries must be nonzero")
        object.__setattr__(self, "indices", idx)

    @classmethod
    def coerce(cls, value: "CompositionLike") -> "Composition":
        if isinstance(value, Composition):
            return value
        if isinstance(value, int):
            return cls((value,))
        if isinstance(value, str):
            return cls.parse(value)
        return cls(tuple(value))

    @classmethod
    def parse(cls, text: str) -> "Composition":
        """Parse "1,2,-3": comma-separated entries, minus = alternating."""
        try:
            entries = tuple(int(tok.strip()) for tok in text.split(","))
        except ValueError as exc:
            raise ValueError(f"bad composition {text!r}: "
                             "expected comma-separated nonzero integers") from exc
        return cls(entries)

    @classmethod
    def repeat(cls, entry: int, depth: int) -> "Composition":
        return cls((entry,) * depth)

    @property
    def depth(self) -> int:
        return len(self.indices)

    @property
    def weight(self) -> int:
        return sum(abs(i) for i in self.indices)

    @property
    def all_positive(self) -> bool:
        return all(i > 0 for i in self.indices)

    def magnitudes(self) -> tuple[int, ...]:
        return tuple(abs(i) for i in self.indices)

    def __iter__(self):
        return iter(self.indices)

    def __len__(self) -> int:
        return len(self.indices)

    def __str__(self) -> str:
        return ",".join(str(i) for i in self.indices)


CompositionLike = Union[Composition, Iterable[int], str, int]


@dataclass(frozen=True)
class SumSpec:
    """Which of the four sum families to evaluate."""

    ordering: str  # "strict" | "star"
    parity: str    # "standard" | "odd"

    def __post_init__(self):
        if self.ordering not in ("strict", "star"):
            raise ValueError(f"ordering must be strict or star, got {self.ordering!r}")
        if self.parity not in ("standard", "odd"):
            raise ValueError(f"parity must be standard or odd, got {self.parity!r}")

    @property
    def star(self) -> bool:
        return self.ordering == "star"

    @property
    def odd(self) -> bool:
        return self.parity == "odd"

    def validate(self, n: int, comp: Composition) -> None:
        if n < 1:
            raise ValueError("need n >= 1")
        if comp.depth > n:
            raise ValueError(f"depth {comp.depth} exceeds n = {n}")
        if not comp.all_positive and self.parity == "standard" and comp.depth > 1:
            raise ValueError("alternating entries need odd parity or depth 1")


STRICT_STANDARD = SumSpec("strict", "standard")
STAR_STANDARD = SumSpec("star", "standard")
STRICT_ODD = SumSpec("strict", "odd")
STAR_ODD = SumSpec("star", "odd")


def _pair_add(na: int, da: int, nb: int, db: int) -> tuple[int, int]:
    # reduced na/da + nb/db, denominators positive
    g = gcd(da, db)
    if g == 1:
        return na * db + nb * da, da * db
    s = da // g
    t = na * (db // g) + nb * s
    g2 = gcd(t, g)
    if g2 == 1:
        return t, s * db
    return t // g2, s * (db // g2)


@lru_cache(maxsize=512)
def _dp_row(star: bool, odd: bool, n: int, prefix: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    """Partial sums over the first len(prefix) exponents.

    Entry m+1 holds the sum over admissible tuples with last index <= m,
    as a reduced (num, den) pair; entry 0 is the empty-range value.
    """
    if not prefix:
        return ((1, 1),) * (n + 1)
    prev = _dp_row(star, odd, n, prefix[:-1])
    entry = prefix[-1]
    s = abs(entry)
    alternating = entry < 0
    shift = 1 if star else 0
    row = [(0, 1)] * (n + 1)
    num, den = 0, 1
    for k in range(n):
        pn, pd = prev[k + shift]
        if pn:
            base = 2 * k + 1 if odd else k + 1
            d = base ** s
            g = gcd(pn, d)
            tn = pn // g
            if alternating and (k & 1):
                tn = -tn
            num, den = _pair_add(num, den, tn, pd * (d // g))
        row[k + 1] = (num, den)
    return tuple(row)


def harmonic_sum(spec: SumSpec, n: int, comp: CompositionLike) -> Fraction:
    """Exact value of the specified nested sum."""
    comp = Composition.coerce(comp)
    spec.validate(n, comp)
    row = _dp_row(spec.star, spec.odd, int(n), comp.indices)
    return Fraction(*row[n])


def harmonic_sum_brute(spec: SumSpec, n: int, comp: CompositionLike,
                       work_limit: int = 2_000_000) -> Fraction:
    """Reference oracle: direct enumeration of all index tuples.

    Independent of the dynamic program on purpose.  Raises
    WorkLimitExceeded when the tuple count would exceed work_limit.
    """
    comp = Composition.coerce(comp)
    spec.validate(n, comp)
    r = comp.depth
    count = math.comb(n + r - 1, r) if spec.star else math.comb(n, r)
    if count > work_limit:
        raise WorkLimitExceeded(f"{count} tuples exceed work limit {work_limit}")
    chooser = combinations_with_replacement if spec.star else combinations
    total = Fraction(0)
    for tup in chooser(range(n), r):
        num, den = 1, 1
        for k, entry in zip(tup, comp.indices):
            base = 2 * k + 1 if spec.odd else k + 1
            den *= base ** abs(entry)
            if entry < 0 and (k & 1):
                num = -num
        total += Fraction(num, den)
    return total


def dominates(s: CompositionLike, t: CompositionLike) -> bool:
    """Weight-and-prefix order forcing sum(s) <= sum(t) at equal depth.

    True iff weight(s) >= weight(t) and for some split 0 <= l <= r-1 the
    first l entries satisfy s_i <= t_i and the rest s_i >= t_i.
    """
    s, t = Composition.coerce(s), Composition.coerce(t)
    if not (s.all_positive and t.all_positive):
        raise ValueError("dominance order is defined for all-positive compositions")
    if s.depth != t.depth:
        raise ValueError("dominance order needs equal depth")
    if s.weight < t.weight:
        return False
    a, b = s.indices, t.indices
    r = len(a)
    for l in range(r):
        if all(a[i] <= b[i] for i in range(l)) and all(a[i] >= b[i] for i in range(l, r)):
            return True
    return False


def ones_power_bound(n: int, r: int) -> Fraction:
    """(odd harmonic number at n) ** r / r!, an upper bound for every
    depth-r all-positive odd sum at n."""
    if not 1 <= r <= n:
        raise ValueError("need 1 <= r <= n")
    h = harmonic_sum(STRICT_ODD, n, (1,))
    return h ** r / math.factorial(r)


def compositions(weight_max: int, depth_max: int | None = None) -> Iterator[tuple[int, ...]]:
    """All-positive compositions in graded-lex order (weight, depth, entries)."""
    if weight_max < 1:
        return
    for weight in range(1, weight_max + 1):
        dmax = weight if depth_max is None else min(weight, depth_max)
        for depth in range(1, dmax + 1):
            yield from _compositions_of(weight, depth)


def _compositions_of(weight: int, depth: int) -> Iterator[tuple[int, ...]]:
    if depth == 1:
        yield (weight,)
        return
    for first in range(1, weight - depth + 2):
        for rest in _compositions_of(weight - first, depth - 1):
            yield (first,) + rest


def odd_harmonic(n: int, comp: CompositionLike) -> Fraction:
    return harmonic_sum(STRICT_ODD, n, comp)


def odd_harmonic_star(n: int, comp: CompositionLike) -> Fraction:
    return harmonic_sum(STAR_ODD, n, comp)


def standard_harmonic(n: int, comp: CompositionLike) -> Fraction:
    return harmonic_sum(STRICT_STANDARD, n, comp)


def standard_harmonic_star(n: int, comp: CompositionLike) -> Fraction:
    return harmonic_sum(STAR_STANDARD, n, comp)
