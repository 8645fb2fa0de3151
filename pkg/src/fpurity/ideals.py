"""Ideal arithmetic: bracket powers, colon ideals, membership, powers,
p^e-th roots, and Groebner bases over F_p[x_1, ..., x_n].

The monomial order is grevlex in the ring's declared variable order.
Every verdict built on this module is an ideal-membership fact, so the
order choice only affects running time. All tie-breaking is by input
index and the reduced basis is canonical, which makes every operation
deterministic.

Monomial ideals are recognized at construction and stored by their unique
minimal monomial generators; most operations have a fast path for them.
Runaway instances hit explicit resource caps and raise ResourceCapExceeded
instead of spinning.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import ResourceCapExceeded, RingMismatchError
from .poly import (
    Monomial,
    PolyRing,
    SparsePolynomial,
    frobenius_image,
    grevlex_key,
    is_power_of,
    mono_div,
    mono_divides,
    mono_gcd,
    mono_lcm,
    mono_mul,
    poly_pow,
)


@dataclass(frozen=True)
class EngineLimits:
    """Resource caps that turn runaway instances into clean errors."""

    max_basis: int = 10_000
    max_reduction_steps: int = 10_000_000
    max_power_products: int = 50_000


DEFAULT_LIMITS = EngineLimits()


class _StepCounter:
    __slots__ = ("steps", "limit")

    def __init__(self, limit: int):
        self.steps = 0
        self.limit = limit

    def tick(self, n: int = 1):
        self.steps += n
        if self.steps > self.limit:
            raise ResourceCapExceeded("max_reduction_steps", f"{self.limit} steps")


def _minimal_monomials(monos: Iterable[Monomial]) -> tuple[Monomial, ...]:
    """Unique minimal generators of the monomial ideal spanned by monos."""
    ordered = sorted(set(monos), key=grevlex_key)
    kept: list[Monomial] = []
    for m in ordered:
        if not any(mono_divides(k, m) for k in kept):
            kept.append(m)
    return tuple(kept)


class Ideal:
    """An ideal of a polynomial ring, given by a finite generator list.

    Immutable value. The reduced Groebner basis is computed on first use
    and cached; a per-value lock makes the computation happen once even
    under concurrent callers.
    """

    __slots__ = ("ring", "generators", "is_monomial", "_basis", "_lock")

    def __init__(self, ring: PolyRing, generators: Iterable[SparsePolynomial]):
        gens = []
        for g in generators:
            if g.ring != ring:
                raise RingMismatchError("generator from a different ring")
            if not g.is_zero():
                gens.append(g)
        if any(g.is_constant() for g in gens):
            gens = [ring.one()]
        self.ring = ring
        monomial = bool(gens) and all(g.is_monomial() for g in gens)
        if monomial:
            minimal = _minimal_monomials(g.lead_monomial() for g in gens)
            gens = [ring.monomial(m) for m in minimal]
        self.generators = tuple(gens)
        self.is_monomial = monomial
        self._basis = None
        self._lock = threading.Lock()

    @classmethod
    def zero(cls, ring: PolyRing) -> "Ideal":
        return cls(ring, [])

    @classmethod
    def unit(cls, ring: PolyRing) -> "Ideal":
        return cls(ring, [ring.one()])

    def is_zero(self) -> bool:
        return not self.generators

    def has_constant_generator(self) -> bool:
        return bool(self.generators) and self.generators[0].is_constant()

    def is_unit(self, limits: EngineLimits = DEFAULT_LIMITS) -> bool:
        if self.has_constant_generator():
            return True
        if self.is_monomial or self.is_zero():
            return False
        basis = self.groebner(limits)
        return len(basis) == 1 and basis[0].is_constant()

    def groebner(self, limits: EngineLimits = DEFAULT_LIMITS) -> tuple[SparsePolynomial, ...]:
        """The reduced Groebner basis, cached after the first computation."""
        if self._basis is None:
            with self._lock:
                if self._basis is None:
                    if self.is_monomial or self.is_zero() or self.has_constant_generator():
                        self._basis = self.generators
                    else:
                        self._basis = tuple(_buchberger(list(self.generators), self.ring, limits))
        return self._basis

    def monomial_exponents(self) -> tuple[Monomial, ...]:
        if not self.is_monomial:
            raise ValueError("not a monomial ideal")
        return tuple(g.lead_monomial() for g in self.generators)

    def plus(self, other: "Ideal") -> "Ideal":
        self._check_ring(other)
        return Ideal(self.ring, self.generators + other.generators)

    def times(self, other: "Ideal") -> "Ideal":
        self._check_ring(other)
        if self.is_zero() or other.is_zero():
            return Ideal.zero(self.ring)
        return Ideal(self.ring, [u * v for u in self.generators for v in other.generators])

    def _check_ring(self, other: "Ideal"):
        if self.ring != other.ring:
            raise RingMismatchError("ideals over different rings")

    def __repr__(self):
        if self.is_zero():
            return "(0)"
        return "(" + ", ".join(repr(g) for g in self.generators) + ")"


# ---------------------------------------------------------------------------
# reduction and Buchberger


def _normal_form(
    f: SparsePolynomial,
    basis: Sequence[SparsePolynomial],
    counter: Optional[_StepCounter] = None,
) -> SparsePolynomial:
    """Fully reduce f modulo the listed polynomials (first divisor wins)."""
    ring = f.ring
    key = ring.key
    p = ring.p
    field = ring.field
    data = [(g.terms, g.lead_monomial(), field.inv(g.lead_coeff())) for g in basis if not g.is_zero()]
    work = dict(f.terms)
    remainder: dict[Monomial, int] = {}
    while work:
        if counter is not None:
            counter.tick()
        m = max(work, key=key)
        c = work[m]
        for gterms, glm, ginv in data:
            if mono_divides(glm, m):
                factor = (c * ginv) % p
                shift = mono_div(m, glm)
                for tm, tc in gterms.items():
                    t = mono_mul(tm, shift)
                    s = (work.get(t, 0) - factor * tc) % p
                    if s:
                        work[t] = s
                    else:
                        work.pop(t, None)
                break
        else:
            remainder[m] = c
            del work[m]
    return SparsePolynomial(ring, remainder)


def _s_poly(f: SparsePolynomial, g: SparsePolynomial) -> SparsePolynomial:
    field = f.ring.field
    lmf, lmg = f.lead_monomial(), g.lead_monomial()
    lcm = mono_lcm(lmf, lmg)
    a = f.mul_term(mono_div(lcm, lmf), field.inv(f.lead_coeff()))
    b = g.mul_term(mono_div(lcm, lmg), field.inv(g.lead_coeff()))
    return a - b


def _buchberger(
    gens: list[SparsePolynomial], ring: PolyRing, limits: EngineLimits
) -> list[SparsePolynomial]:
    """Reduced Groebner basis by Buchberger's algorithm.

    Pair selection follows the normal strategy (smallest lcm in the ring
    order), ties broken by generator index, so runs are reproducible.
    """
    counter = _StepCounter(limits.max_reduction_steps)
    basis: list[SparsePolynomial] = []
    for g in gens:
        h = _normal_form(g, basis, counter)
        if not h.is_zero():
            if h.is_constant():
                return [ring.one()]
            basis.append(h.monic())

    pairs = {
        (i, j): ring.key(mono_lcm(basis[i].lead_monomial(), basis[j].lead_monomial()))
        for i in range(len(basis))
        for j in range(i + 1, len(basis))
    }
    while pairs:
        (i, j) = min(pairs, key=lambda ij: (pairs[ij], ij))
        del pairs[(i, j)]
        lmi = basis[i].lead_monomial()
        lmj = basis[j].lead_monomial()
        if mono_lcm(lmi, lmj) == mono_mul(lmi, lmj):
            continue  # coprime leads: S-polynomial reduces to zero
        h = _normal_form(_s_poly(basis[i], basis[j]), basis, counter)
        if h.is_zero():
            continue
        if h.is_constant():
            return [ring.one()]
        basis.append(h.monic())
        if len(basis) > limits.max_basis:
            raise ResourceCapExceeded("max_basis", f"{limits.max_basis} elements")
        k = len(basis) - 1
        for i2 in range(k):
            pairs[(i2, k)] = ring.key(
                mono_lcm(basis[i2].lead_monomial(), basis[k].lead_monomial())
            )
    return _interreduce(basis, counter)


def _interreduce(
    basis: list[SparsePolynomial], counter: _StepCounter
) -> list[SparsePolynomial]:
    if not basis:
        return []
    ring = basis[0].ring
    # drop elements whose lead is divisible by another's lead
    by_lm = sorted(basis, key=lambda g: ring.key(g.lead_monomial()))
    minimal: list[SparsePolynomial] = []
    for g in by_lm:
        if not any(mono_divides(h.lead_monomial(), g.lead_monomial()) for h in minimal):
            minimal.append(g)
    # fully reduce each tail against the others
    reduced = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1 :]
        h = _normal_form(g, others, counter)
        reduced.append(h.monic())
    reduced.sort(key=lambda g: ring.key(g.lead_monomial()))
    return reduced


def groebner_basis(I: Ideal, limits: EngineLimits = DEFAULT_LIMITS) -> tuple[SparsePolynomial, ...]:
    """Reduced grevlex Groebner basis of I (cached on the ideal)."""
    return I.groebner(limits)


# ---------------------------------------------------------------------------
# membership and containment


def membership(g: SparsePolynomial, I: Ideal, limits: EngineLimits = DEFAULT_LIMITS) -> bool:
    """Decide g in I."""
    if g.ring != I.ring:
        raise RingMismatchError("polynomial and ideal over different rings")
    if g.is_zero():
        return True
    if I.is_zero():
        return False
    if I.has_constant_generator():
        return True
    if I.is_monomial:
        gens = I.monomial_exponents()
        return all(any(mono_divides(u, m) for u in gens) for m in g.terms)
    return _normal_form(g, I.groebner(limits), _StepCounter(limits.max_reduction_steps)).is_zero()


def ideal_contains(I: Ideal, J: Ideal, limits: EngineLimits = DEFAULT_LIMITS) -> bool:
    """True iff J is a subset of I (checked on J's generators)."""
    return all(membership(g, I, limits) for g in J.generators)


def ideal_equals(I: Ideal, J: Ideal, limits: EngineLimits = DEFAULT_LIMITS) -> bool:
    """Exact equality, via minimal generators or canonical reduced bases."""
    I._check_ring(J)
    if I.is_monomial and J.is_monomial:
        return sorted(I.monomial_exponents()) == sorted(J.monomial_exponents())
    if I.is_zero() or J.is_zero():
        return I.is_zero() and J.is_zero()
    return list(I.groebner(limits)) == list(J.groebner(limits))


# ---------------------------------------------------------------------------
# Frobenius bracket powers and roots


def bracket_power(I: Ideal, q: int, limits: EngineLimits = DEFAULT_LIMITS) -> Ideal:
    """The ideal generated by q-th powers of the generators, q = p^e.

    Generator-level powering is enough because the e-fold Frobenius is a
    ring endomorphism.
    """
    if not is_power_of(q, I.ring.p):
        raise ValueError(f"q={q} is not a power of p={I.ring.p}")
    return Ideal(I.ring, [frobenius_image(g, q) for g in I.generators])


def root_power(I: Ideal, q: int, limits: EngineLimits = DEFAULT_LIMITS) -> Ideal:
    """The p^e-th root: the smallest J with I contained in J^[q].

    Each generator g decomposes uniquely as  g = sum_C (g_C)^q * x^C  over
    the monomials x^C with all exponents below q, because the ring is free
    over its subring of q-th powers with that basis. Coefficients need no
    adjustment: c^q = c in F_p. The ideal generated by all g_C is the
    minimal choice.
    """
    if not is_power_of(q, I.ring.p):
        raise ValueError(f"q={q} is not a power of p={I.ring.p}")
    if q == 1 or I.is_zero():
        return I
    ring = I.ring
    pieces: list[SparsePolynomial] = []
    seen = set()
    for g in I.generators:
        buckets: dict[Monomial, dict[Monomial, int]] = {}
        for mono, c in g.terms.items():
            residue = tuple(e % q for e in mono)
            quotient = tuple(e // q for e in mono)
            buckets.setdefault(residue, {})[quotient] = c
        for residue in sorted(buckets, key=grevlex_key):
            piece = SparsePolynomial(ring, buckets[residue])
            if piece not in seen:
                seen.add(piece)
                pieces.append(piece)
    return Ideal(ring, pieces)


# ---------------------------------------------------------------------------
# ideal powers


def ideal_power(a: Ideal, N: int, limits: EngineLimits = DEFAULT_LIMITS) -> Ideal:
    """a^N, with a^0 the unit ideal.

    Principal ideals reduce to one polynomial power. Monomial ideals are
    built incrementally with minimal-generator pruning. General ideals
    enumerate the degree-N generator products from cached powers of each
    generator, deduplicated; the product count is capped. Redundant
    generators are harmless (same ideal), and basis-level pruning costs far
    more than the redundancy it removes at the degrees these powers reach.
    """
    if N < 0:
        raise ValueError(f"negative ideal power {N}")
    ring = a.ring
    if N == 0:
        return Ideal.unit(ring)
    if a.is_zero():
        return Ideal.zero(ring)
    if a.has_constant_generator():
        return Ideal.unit(ring)
    if N == 1:
        return a
    if len(a.generators) == 1:
        return Ideal(ring, [poly_pow(a.generators[0], N)])
    if a.is_monomial:
        base = a.monomial_exponents()
        cur = base
        for _ in range(N - 1):
            cur = _minimal_monomials(mono_mul(u, v) for u in cur for v in base)
        return Ideal(ring, [ring.monomial(m) for m in cur])
    r = len(a.generators)
    count = _multiset_count(r, N)
    if count > limits.max_power_products:
        raise ResourceCapExceeded(
            "max_power_products",
            f"{count} degree-{N} products of {r} generators exceed "
            f"{limits.max_power_products}; use a principal or monomial fast path "
            "or a smaller exponent",
        )
    powers: list[dict[int, SparsePolynomial]] = [
        {0: ring.one(), 1: g} for g in a.generators
    ]

    def power_of(idx: int, n: int) -> SparsePolynomial:
        cache = powers[idx]
        if n not in cache:
            cache[n] = poly_pow(a.generators[idx], n)
        return cache[n]

    kept: list[SparsePolynomial] = []
    seen = set()
    for combo in itertools.combinations_with_replacement(range(r), N):
        h = None
        for idx, reps in _run_lengths(combo):
            piece = power_of(idx, reps)
            h = piece if h is None else h * piece
        if h not in seen:
            seen.add(h)
            kept.append(h)
    return Ideal(ring, kept)


def _run_lengths(combo: tuple[int, ...]) -> list[tuple[int, int]]:
    out: list[tuple[int, int]] = []
    for idx in combo:
        if out and out[-1][0] == idx:
            out[-1] = (idx, out[-1][1] + 1)
        else:
            out.append((idx, 1))
    return out


def _multiset_count(r: int, N: int) -> int:
    import math

    return math.comb(r + N - 1, N)


# ---------------------------------------------------------------------------
# intersection and colon via elimination

_ELIM_VAR = "__e"


def _extend_ring(ring: PolyRing) -> PolyRing:
    return PolyRing(ring.field, (_ELIM_VAR,) + ring.variables, order="elim1")


def _embed(f: SparsePolynomial, ext: PolyRing, tdeg: int = 0) -> SparsePolynomial:
    return SparsePolynomial(ext, {(tdeg,) + m: c for m, c in f.terms.items()})


def _project(f: SparsePolynomial, ring: PolyRing) -> SparsePolynomial:
    return SparsePolynomial(ring, {m[1:]: c for m, c in f.terms.items()})


def intersect(J: Ideal, K: Ideal, limits: EngineLimits = DEFAULT_LIMITS) -> Ideal:
    """J intersect K."""
    J._check_ring(K)
    ring = J.ring
    if J.is_zero() or K.is_zero():
        return Ideal.zero(ring)
    if J.has_constant_generator():
        return K
    if K.has_constant_generator():
        return J
    if J.is_monomial and K.is_monomial:
        lcms = [
            mono_lcm(u, v) for u in J.monomial_exponents() for v in K.monomial_exponents()
        ]
        return Ideal(ring, [ring.monomial(m) for m in _minimal_monomials(lcms)])
    # t*J + (1-t)*K in the extended ring, then eliminate t
    ext = _extend_ring(ring)
    t = ext.var(_ELIM_VAR)
    one = ext.one()
    gens = [t * _embed(g, ext) for g in J.generators]
    gens += [(one - t) * _embed(h, ext) for h in K.generators]
    basis = _buchberger(gens, ext, limits)
    kept = [_project(b, ring) for b in basis if all(m[0] == 0 for m in b.terms)]
    return Ideal(ring, kept)


def _try_exact_div(g: SparsePolynomial, f: SparsePolynomial) -> Optional[SparsePolynomial]:
    """g / f when f divides g exactly, else None."""
    ring = g.ring
    p = ring.p
    flm = f.lead_monomial()
    finv = ring.field.inv(f.lead_coeff())
    work = dict(g.terms)
    quote: dict[Monomial, int] = {}
    while work:
        m = max(work, key=ring.key)
        if not mono_divides(flm, m):
            return None
        factor = (work[m] * finv) % p
        shift = mono_div(m, flm)
        quote[shift] = factor
        for tm, tc in f.terms.items():
            t = mono_mul(tm, shift)
            s = (work.get(t, 0) - factor * tc) % p
            if s:
                work[t] = s
            else:
                work.pop(t, None)
    return SparsePolynomial(ring, quote)


def _colon_by_poly(J: Ideal, f: SparsePolynomial, limits: EngineLimits) -> Ideal:
    """J : (f) for one nonzero f, via (J intersect (f)) / f."""
    ring = J.ring
    if f.is_constant():
        return J
    if len(J.generators) == 1:
        quotient = _try_exact_div(J.generators[0], f)
        if quotient is not None:
            return Ideal(ring, [quotient])
    if J.is_monomial and f.is_monomial():
        fm = f.lead_monomial()
        gens = [mono_div(u, mono_gcd(u, fm)) for u in J.monomial_exponents()]
        return Ideal(ring, [ring.monomial(m) for m in _minimal_monomials(gens)])
    meet = intersect(J, Ideal(ring, [f]), limits)
    out = []
    for g in meet.generators:
        quotient = _try_exact_div(g, f)
        if quotient is None:
            raise AssertionError("element of J meet (f) not divisible by f")
        out.append(quotient)
    return Ideal(ring, out)


def colon(J: Ideal, I: Ideal, limits: EngineLimits = DEFAULT_LIMITS) -> Ideal:
    """The colon ideal J : I = {g : g*I inside J}.

    Monomial against monomial uses the gcd-quotient formula; otherwise the
    standard route: intersect generator by generator, each single colon
    computed by elimination.
    """
    J._check_ring(I)
    ring = J.ring
    if I.is_zero():
        return Ideal.unit(ring)
    if J.has_constant_generator():
        return Ideal.unit(ring)
    if J.is_zero():
        return Ideal.zero(ring)  # annihilator of a nonzero ideal in a domain
    if I.has_constant_generator():
        return J
    result: Optional[Ideal] = None
    for f in I.generators:
        part = _colon_by_poly(J, f, limits)
        result = part if result is None else intersect(result, part, limits)
    return result
