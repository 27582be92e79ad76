"""Congruence/identity claim model and the finite-range verifier.

A CongruenceClaim asserts lhs(index) = rhs(index) mod m for every n in
range, optionally quantified over small primes, exponents and residues.
Quantifier values and term fields may be callables of the quantifier
environment, which is how families like index = c p^(4k+3) (p n + i) are
expressed while staying plain mutable-by-replace dataclasses.

An instance is checked iff every index of both sides lies in [1, bound];
a claim with no checkable instance reports skipped, never pass.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from .sequences import SequenceRef, sequence_table, sequence_value
from .series import Ring, Series

DEFAULT_BOUND = 2000
DEFAULT_PRIME_CAP = 20
DEFAULT_K_CAP = 1


@dataclass(frozen=True)
class Caps:
    """Finite instantiation budget for quantified claims."""

    prime_cap: int = DEFAULT_PRIME_CAP
    k_cap: int = DEFAULT_K_CAP


@dataclass(frozen=True)
class Quantifier:
    """A named finite range; values may depend on caps and on quantifiers
    bound earlier (e.g. i ranges over 1..p-1)."""

    name: str
    values: tuple | Callable[[Caps, dict], Iterable[int]]

    def enumerate(self, caps: Caps, env: dict) -> Iterable[int]:
        return self.values(caps, env) if callable(self.values) else self.values


@dataclass(frozen=True)
class Term:
    """One side of a congruence: seq(a n + b), optionally times (-1)^index.

    seq None denotes the literal constant 0.  seq/a/b may be callables of
    the quantifier environment.
    """

    seq: SequenceRef | Callable | None = None
    a: int | Callable = 1
    b: int | Callable = 0
    sign_twist: bool = False


ZERO = Term(seq=None)


@dataclass(frozen=True)
class CongruenceClaim:
    id: str
    lhs: Term
    rhs: Term
    modulus: int | Callable
    quantifiers: tuple[Quantifier, ...] = ()
    source: str = ""


@dataclass(frozen=True)
class IdentityClaim:
    """Exact or modular series identity, evaluated case by case.

    lhs/rhs are callables (ring, order, **case) -> Series; ring may be a
    callable of the case for per-case moduli.  order_cap bounds evaluation
    for sides backed by the enumeration oracle.
    """

    id: str
    lhs: Callable[..., Series]
    rhs: Callable[..., Series]
    ring: Ring | Callable[[dict], Ring]
    cases: tuple[dict, ...] = ({},)
    default_order: int = 500
    order_cap: int | None = None
    lhs_text: str = ""
    rhs_text: str = ""
    source: str = ""

    def __post_init__(self):
        if not self.cases:
            raise ValueError("identity claim needs at least one case")


@dataclass(frozen=True)
class VerificationReport:
    claim_id: str
    bound: int
    instances: int
    status: str  # "pass" | "fail" | "skipped(reason)"
    counterexample: dict | None = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    @property
    def failed(self) -> bool:
        return self.status == "fail"

    def to_json_obj(self) -> dict:
        return {
            "id": self.claim_id,
            "bound": self.bound,
            "instances": self.instances,
            "status": self.status,
            "counterexample": self.counterexample,
        }


def _resolve(value, env: dict):
    return value(env) if callable(value) else value


def _expand_quantifiers(
    quantifiers: tuple[Quantifier, ...], caps: Caps
) -> Iterator[dict]:
    def rec(i: int, env: dict) -> Iterator[dict]:
        if i == len(quantifiers):
            yield dict(env)
            return
        q = quantifiers[i]
        for v in q.enumerate(caps, env):
            env[q.name] = v
            yield from rec(i + 1, env)
        env.pop(q.name, None)

    return rec(0, {})


@dataclass(frozen=True)
class _ConcreteTerm:
    seq: SequenceRef | None
    a: int
    b: int
    sign_twist: bool

    def index(self, n: int) -> int:
        return self.a * n + self.b


def _concretize(term: Term, env: dict) -> _ConcreteTerm:
    seq = _resolve(term.seq, env)
    a = _resolve(term.a, env)
    b = _resolve(term.b, env)
    if seq is not None and a < 1:
        raise ValueError("index multiplier must be >= 1")
    return _ConcreteTerm(seq, a, b, term.sign_twist)


class _ValueSource:
    """Evaluates concrete terms mod m, memoizing series tables at the bound."""

    def __init__(self, modulus: int, bound: int):
        self.modulus = modulus
        self.bound = bound
        self._tables: dict[SequenceRef, list[int]] = {}

    def value(self, term: _ConcreteTerm, n: int) -> int:
        if term.seq is None:
            return 0
        idx = term.index(n)
        if term.seq.is_series_backed:
            table = self._tables.get(term.seq)
            if table is None:
                table = sequence_table(term.seq, self.modulus, self.bound)
                self._tables[term.seq] = table
            v = table[idx]
        else:
            v = sequence_value(term.seq, idx) % self.modulus
        if term.sign_twist and idx & 1:
            v = -v % self.modulus
        return v


def _instance_range(sides: list[_ConcreteTerm], bound: int) -> tuple[int, int]:
    """Largest n-interval where every sequence index lies in [1, bound]."""
    lo, hi = 0, bound
    for t in sides:
        if t.seq is None:
            continue
        lo = max(lo, -((t.b - 1) // t.a))  # ceil((1 - b) / a)
        hi = min(hi, (bound - t.b) // t.a)
    return lo, hi


def verify_congruence(
    claim: CongruenceClaim,
    bound: int,
    prime_cap: int = DEFAULT_PRIME_CAP,
    k_cap: int = DEFAULT_K_CAP,
) -> VerificationReport:
    """Check every quantifier instantiation of the claim for all n with all
    indices in [1, bound]; series-backed sequences are computed once at
    order = bound per modulus and reused."""
    caps = Caps(prime_cap, k_cap)
    sources: dict[int, _ValueSource] = {}
    total = 0
    for env in _expand_quantifiers(claim.quantifiers, caps):
        modulus = _resolve(claim.modulus, env)
        lhs = _concretize(claim.lhs, env)
        rhs = _concretize(claim.rhs, env)
        lo, hi = _instance_range([lhs, rhs], bound)
        if hi < lo:
            continue
        source = sources.get(modulus)
        if source is None:
            source = sources[modulus] = _ValueSource(modulus, bound)
        for n in range(lo, hi + 1):
            v1 = source.value(lhs, n)
            v2 = source.value(rhs, n)
            total += 1
            if (v1 - v2) % modulus:
                return VerificationReport(
                    claim.id,
                    bound,
                    total,
                    "fail",
                    {
                        "params": {**env, "n": n},
                        "index": lhs.index(n),
                        "lhs": v1,
                        "rhs": v2,
                    },
                )
    if total == 0:
        return VerificationReport(
            claim.id, bound, 0, "skipped(no checkable instance within bound)"
        )
    return VerificationReport(claim.id, bound, total, "pass")


def verify_identity(claim: IdentityClaim, order: int) -> VerificationReport:
    """Evaluate both series expressions of every case at the given order
    (capped by the claim's order_cap) and compare coefficientwise."""
    if order < 1:
        raise ValueError("order must be >= 1")
    eff = order if claim.order_cap is None else min(order, claim.order_cap)
    total = 0
    for case in claim.cases:
        ring = _resolve(claim.ring, case)
        lhs = claim.lhs(ring, eff, **case)
        rhs = claim.rhs(ring, eff, **case)
        top = min(lhs.order, rhs.order, eff)
        la, ra = lhs.coeffs, rhs.coeffs
        for n in range(top + 1):
            total += 1
            if la[n] != ra[n]:
                return VerificationReport(
                    claim.id,
                    eff,
                    total,
                    "fail",
                    {"params": dict(case), "index": n, "lhs": la[n], "rhs": ra[n]},
                )
    return VerificationReport(claim.id, eff, total, "pass")


def verify_claim(
    claim,
    bound: int = DEFAULT_BOUND,
    prime_cap: int = DEFAULT_PRIME_CAP,
    k_cap: int = DEFAULT_K_CAP,
    order: int | None = None,
) -> VerificationReport:
    """Dispatch on claim kind; identity claims use their default order
    unless one is given."""
    if isinstance(claim, CongruenceClaim):
        return verify_congruence(claim, bound, prime_cap, k_cap)
    return verify_identity(claim, order if order is not None else claim.default_order)


def hunt(
    ref: SequenceRef,
    modulus: int,
    max_step: int,
    bound: int,
    min_instances: int = 1,
) -> list[tuple[int, int, int]]:
    """Scan progressions a n + b (a <= max_step, b < a) where the sequence
    vanishes mod modulus for every index <= bound, reporting (a, b, count)
    for those with count >= min_instances.  Subsumed progressions are kept."""
    if modulus < 2:
        raise ValueError("modulus must be >= 2")
    if max_step < 1:
        raise ValueError("max_step must be >= 1")
    if ref.is_series_backed:
        table = sequence_table(ref, modulus, bound)
        start = 0
    else:
        start = 0 if ref.name in ("r", "chi") else 1
        table = [None] * start + [
            sequence_value(ref, idx) % modulus for idx in range(start, bound + 1)
        ]
    results = []
    for a in range(1, max_step + 1):
        for b in range(a):
            n0 = 0 if b >= start else -((b - start) // a)
            idx = a * n0 + b
            count = 0
            while idx <= bound:
                if table[idx]:
                    count = -1
                    break
                count += 1
                idx += a
            if count >= min_instances:
                results.append((a, b, count))
    return results
