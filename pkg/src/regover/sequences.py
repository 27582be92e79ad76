"""Partition-counting sequences and their independent enumeration oracles.

Series route: each sequence is the coefficient list of its generating
function (partitions 1/(q;q), regular partitions (q^l;q^l)/(q;q),
overpartitions (q^2;q^2)/(q;q)^2 = 1/phi(-q), and regular overpartitions
phi(-q^l)/phi(-q)).

Oracle route: direct descending-part recursion, deliberately memo-free and
structurally unrelated to the series pipeline, weighting each partition by
2^(number of distinct part sizes) for the overlined variants.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import arith
from .products import euler_product, phi
from .series import Ring, Series, ZZ, Zmod

ORACLE_CAP = 60

SERIES_NAMES = frozenset({"p", "pbar", "b", "A"})
POINTWISE_NAMES = frozenset({"r", "dstar", "sigma3m", "chi"})
_PARAM_NAMES = frozenset({"b", "A", "r"})


@dataclass(frozen=True)
class SequenceRef:
    """A named coefficient sequence, with its parameter where one applies.

    Names: p (partitions), pbar (overpartitions), b (regular partitions,
    parts not divisible by param), A (regular overpartitions), r (sums of
    param squares), dstar, sigma3m, chi.
    """

    name: str
    param: int | None = None

    def __post_init__(self):
        if self.name not in SERIES_NAMES | POINTWISE_NAMES:
            raise ValueError(f"unknown sequence {self.name!r}")
        if self.name in _PARAM_NAMES:
            if self.param is None:
                raise ValueError(f"sequence {self.name!r} requires a parameter")
            if self.name in ("b", "A") and self.param < 2:
                raise ValueError("regularity parameter must be >= 2")
            if self.name == "r" and self.param not in (2, 4, 6, 8):
                raise ValueError("squares count k must be one of 2, 4, 6, 8")
        elif self.param is not None:
            raise ValueError(f"sequence {self.name!r} takes no parameter")

    @property
    def is_series_backed(self) -> bool:
        return self.name in SERIES_NAMES

    def label(self) -> str:
        return self.name if self.param is None else f"{self.name}({self.param})"


# -- generating-function route ----------------------------------------------

_series_cache: dict[tuple[str, int | None, int | None], Series] = {}


def clear_caches():
    _series_cache.clear()


def sequence_series(ref: SequenceRef, ring: Ring, order: int) -> Series:
    """The sequence's generating function as a Series (series-backed refs only).

    Results are memoized per (ref, ring) keeping the longest prefix computed
    so far, so repeated verification passes share one table.
    """
    if not ref.is_series_backed:
        raise ValueError(f"sequence {ref.label()} has no generating function route")
    key = (ref.name, ref.param, ring.modulus)
    cached = _series_cache.get(key)
    if cached is not None and cached.order >= order:
        return cached.truncate(order)
    series = _build_series(ref, ring, order)
    _series_cache[key] = series
    return series


def _build_series(ref: SequenceRef, ring: Ring, order: int) -> Series:
    if ref.name == "p":
        return Series.one(ring, order) / euler_product(1, ring, order)
    if ref.name == "pbar":
        return Series.one(ring, order) / phi(-1, ring, order)
    if ref.name == "b":
        return euler_product(ref.param, ring, order) / euler_product(1, ring, order)
    # regular overpartitions: phi(-q^l) * pbar, the grouped form of
    # (q^l;q^l)^2 (q^2;q^2) / (q;q)^2 (q^2l;q^2l)
    pbar = sequence_series(SequenceRef("pbar"), ring, order)
    return phi(-1, ring, order, scale=ref.param) * pbar


def sequence_table(ref: SequenceRef, modulus: int | None, upto: int) -> list[int]:
    """Values 0..upto, as residues when modulus is given (series-backed refs)."""
    ring = ZZ if modulus is None else Zmod(modulus)
    return sequence_series(ref, ring, upto).coeffs


def sequence_value(ref: SequenceRef, n: int) -> int:
    """Exact value at n, series-backed or pointwise."""
    if ref.is_series_backed:
        return sequence_series(ref, ZZ, n)[n]
    if ref.name == "r":
        return arith.r_formula(ref.param, n)
    if ref.name == "dstar":
        return arith.d_star(n)
    if ref.name == "sigma3m":
        return arith.sigma3_minus(n)
    return arith.chi(n)


# -- enumeration-oracle route -------------------------------------------------


def oracle_partition(restriction: int | None, n: int, cap: int = ORACLE_CAP) -> int:
    """Partitions of n (weight 1), optionally into parts not divisible by
    the restriction; plain recursion over the largest part."""
    if n > cap:
        raise ValueError(f"n={n} exceeds the enumeration cap {cap}")
    if n < 0:
        raise ValueError("n must be >= 0")

    def count(remaining: int, max_part: int) -> int:
        if remaining == 0:
            return 1
        total = 0
        for part in range(min(remaining, max_part), 0, -1):
            if restriction is not None and part % restriction == 0:
                continue
            total += count(remaining - part, part)
        return total

    return count(n, n)


def oracle_regular_overpartition(restriction: int | None, n: int, cap: int = ORACLE_CAP) -> int:
    """Overpartitions of n into parts not divisible by the restriction
    (None = plain overpartitions): each partition counts with weight
    2^(number of distinct part sizes)."""
    if n > cap:
        raise ValueError(f"n={n} exceeds the enumeration cap {cap}")
    if n < 0:
        raise ValueError("n must be >= 0")

    def count(remaining: int, max_part: int) -> int:
        if remaining == 0:
            return 1
        total = 0
        for part in range(min(remaining, max_part), 0, -1):
            if restriction is not None and part % restriction == 0:
                continue
            used = part
            while used <= remaining:
                total += 2 * count(remaining - used, part - 1)
                used += part
        return total

    return count(n, n)
