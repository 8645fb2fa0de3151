"""F-pure thresholds: nu-sequences, two-sided interval bounds, and exact
rationality certificates.

nu_a(q) is the largest s with a^s escaping m^[q]. Dividing by q gives a
lower bound for the threshold of a; the matching upper bound is
(nu + mu)/q where mu is the number of generators of a (mu = 1 recovers
the familiar principal-case bound (nu + 1)/q, and the extra slack for
non-principal a is forced by the pigeonhole step of the scaling argument).

An exact value is only ever claimed with a certificate: either the
interval degenerates onto a proven-sharp exponent, or the principal
integrality pattern nu(p^e) = t(p^e - 1) pins the threshold down. Anything
less is reported as a proven lower bound or a bare interval.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .ceilarith import ceil_mul, denominator_order
from .errors import ResourceCapExceeded
from .ideals import (
    DEFAULT_LIMITS,
    EngineLimits,
    Ideal,
    bracket_power,
    ideal_contains,
    ideal_power,
    membership,
)
from .poly import poly_pow
from .purity import PairSpec, sharp_fedder, strong_fedder
from .report import ConsistencyReport

CANDIDATE_CAP = 10_000

CERT_SHARP = "sharp-fedder"
CERT_MUSTATA = "mustata-converse"

LABEL_EXACT = "exact"
LABEL_LOWER_BOUND = "lower-bound"
LABEL_INTERVAL = "interval"


@dataclass(frozen=True)
class NuRecord:
    e: int
    q: int
    nu: int
    lo: Fraction
    hi: Fraction


@dataclass(frozen=True)
class FptCertificate:
    t_star: Fraction
    e_star: int
    kind: str
    exact: bool


@dataclass
class FptEstimate:
    lo: Fraction
    hi: Fraction
    records: list[NuRecord]
    certificate: Optional[FptCertificate]
    label: str


def nu_value(
    a: Ideal, q: int, m: Ideal, limits: EngineLimits = DEFAULT_LIMITS
) -> int:
    """max{s >= 0 : a^s escapes m^[q]}, by binary search.

    The predicate a^s inside m^[q] is monotone in s, a^0 is the whole ring
    (never contained), and any s past n(q-1) is contained by pigeonhole,
    so the search space is [0, n(q-1)] and the answer is always defined
    once a sits inside m.
    """
    if a.is_zero():
        raise ValueError("nu is undefined for the zero ideal")
    if not ideal_contains(m, a, limits):
        raise ValueError("a must be contained in m, otherwise nu is infinite")
    mq = bracket_power(m, q, limits)
    principal = a.generators[0] if len(a.generators) == 1 else None

    def contained(s: int) -> bool:
        if principal is not None:
            return membership(poly_pow(principal, s), mq, limits)
        return ideal_contains(mq, ideal_power(a, s, limits), limits)

    lo = 0
    hi = a.ring.nvars * (q - 1) + 1
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if contained(mid):
            hi = mid
        else:
            lo = mid
    return lo


def fpt_bounds(
    a: Ideal, e: int, m: Ideal, limits: EngineLimits = DEFAULT_LIMITS
) -> NuRecord:
    """The interval [nu/q, (nu + mu)/q] containing the threshold at q = p^e."""
    q = a.ring.p**e
    nu = nu_value(a, q, m, limits)
    mu = len(a.generators)
    return NuRecord(e=e, q=q, nu=nu, lo=Fraction(nu, q), hi=Fraction(nu + mu, q))


def nu_table(
    a: Ideal, e_max: int, m: Ideal, limits: EngineLimits = DEFAULT_LIMITS
) -> list[NuRecord]:
    return [fpt_bounds(a, e, m, limits) for e in range(1, e_max + 1)]


def _divisors(n: int) -> list[int]:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def _candidates(lo: Fraction, hi: Fraction, p: int, e_max: int) -> list[Fraction]:
    """Rationals in [lo, hi] whose denominator divides p^e - 1, e <= e_max."""
    dens: set[int] = set()
    for e in range(1, e_max + 1):
        dens.update(_divisors(p**e - 1))
    found: set[Fraction] = set()
    for den in sorted(dens):
        k_lo = ceil_mul(lo, den)
        k_hi = (hi.numerator * den) // hi.denominator
        for k in range(max(k_lo, 1), k_hi + 1):
            found.add(Fraction(k, den))
            if len(found) > CANDIDATE_CAP:
                raise ResourceCapExceeded(
                    "fpt_candidate_cap", f"more than {CANDIDATE_CAP} candidates"
                )
    return sorted(found, reverse=True)


def fpt_estimate(
    a: Ideal, e_max: int, m: Ideal, limits: EngineLimits = DEFAULT_LIMITS
) -> FptEstimate:
    """Interval estimate of the threshold with an exactness certificate
    when one of the two finite checks lands.

    Candidates are the rationals in the intersected interval whose
    denominator divides some p^e - 1 (the only shape a certified
    threshold can have), tried from the top down:

      * principal a with candidate below 1: the integrality pattern
        nu(p^e) = t(p^e - 1) certifies the exact value;
      * otherwise a sharp purity proof at the candidate, with every higher
        candidate inconclusive, certifies a proven lower bound, exact only
        if the candidate already sits at the interval's top.
    """
    records = nu_table(a, e_max, m, limits)
    lo = max(r.lo for r in records)
    hi = min(r.hi for r in records)
    if lo > hi:
        raise AssertionError("nu intervals failed to nest; engine bug")
    p = a.ring.p
    principal = len(a.generators) == 1
    nu_by_e = {r.e: r.nu for r in records}

    def nu_at(e: int) -> int:
        if e not in nu_by_e:
            nu_by_e[e] = nu_value(a, p**e, m, limits)
        return nu_by_e[e]

    for t_star in _candidates(lo, hi, p, e_max):
        if principal and t_star < 1:
            e_star = denominator_order(t_star, p, e_cap=e_max)
            if e_star is not None and e_star <= e_max:
                # a true threshold with integral t(p^(e*) - 1) matches nu at
                # every multiple of e*; a single-exponent match can be a
                # numerical accident, so insist on all multiples up to at
                # least 2*e* before certifying
                top = max(e_max, 2 * e_star)
                exponents = range(e_star, top + 1, e_star)
                if all(
                    nu_at(e) == t_star * (p**e - 1) for e in exponents
                ):
                    return FptEstimate(
                        lo,
                        hi,
                        records,
                        FptCertificate(t_star, e_star, CERT_MUSTATA, exact=True),
                        LABEL_EXACT,
                    )
        pair = PairSpec(a.ring, Ideal.zero(a.ring), a, t_star)
        if sharp_fedder(pair, e_max, limits).proven:
            e_star = denominator_order(t_star, p, e_cap=e_max)
            exact = t_star == hi
            return FptEstimate(
                lo,
                hi,
                records,
                FptCertificate(t_star, e_star, CERT_SHARP, exact=exact),
                LABEL_EXACT if exact else LABEL_LOWER_BOUND,
            )
    return FptEstimate(lo, hi, records, None, LABEL_INTERVAL)


def threshold_consistency(
    a: Ideal,
    t_proven: Fraction,
    epsilons: list[Fraction],
    e_max: int = 4,
    limits: EngineLimits = DEFAULT_LIMITS,
) -> ConsistencyReport:
    """Sharp purity at t forces strong purity below t; verify it.

    For every epsilon the pair at t - epsilon must be provably strongly
    F-pure, searching exponents up to the first multiple of the sharp
    witness exponent where epsilon * p^e clears t. Any failure is an
    implementation bug report, not a mathematical finding.
    """
    report = ConsistencyReport(subject="sharp at t => strong below t")
    ring = a.ring
    pair = PairSpec(ring, Ideal.zero(ring), a, t_proven)
    sharp = sharp_fedder(pair, e_max, limits)
    if not sharp.proven:
        raise ValueError("t_proven must come with a sharp purity proof")
    e0 = sharp.witness_e
    for eps in epsilons:
        if eps <= 0 or eps > t_proven:
            raise ValueError(f"epsilon must lie in (0, t], got {eps}")
        if eps == t_proven:
            report.record(True, epsilon=eps, note="exponent zero pair is trivially strongly pure")
            continue
        e_need = 1
        while eps * ring.p**e_need <= t_proven:
            e_need += 1
        e_run = e0 * (-(-e_need // e0))
        strong = strong_fedder(PairSpec(ring, Ideal.zero(ring), a, t_proven - eps), e_run, limits)
        report.record(strong.proven, epsilon=eps, searched_up_to=e_run)
    return report
