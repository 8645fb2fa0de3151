"""F-purity of pairs (R, a^t), R = S/I, decided at the origin through the
ideal-theoretic splitting criterion.

For q = p^e the criterion tests whether

    a'^N * (I^[q] : I)  escapes  m^[q],      m = (x_1, ..., x_n),

with N = ceil(t(q-1)) for the sharp flavor, ceil(t*q) for the strong one,
and floor(t(q-1)) for the classic one. A sharp or strong escape at a
single e > 0 is a proof of purity (one splitting generates splittings at
all multiples of e). Containment at every tested e proves nothing, since
the criteria quantify over infinitely many q: those runs come back
inconclusive, never negative. The classic check is diagnostic per-e
evidence only.

All checks happen at the homogeneous maximal ideal, the standard
computable model for the local criterion. The defining ideal I is assumed
radical; the package does not verify that (it is expensive in general).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .ceilarith import ceil_mul, floor_mul
from .errors import RingMismatchError
from .ideals import (
    DEFAULT_LIMITS,
    EngineLimits,
    Ideal,
    bracket_power,
    ideal_contains,
    ideal_power,
    colon,
    membership,
)
from .poly import PolyRing, SparsePolynomial
from .report import ConsistencyReport

SHARP = "sharp"
STRONG = "strong"
CLASSIC = "classic-F-pure"

PROVEN_PURE = "proven-pure"
INCONCLUSIVE = "inconclusive"
FAILED_AT_ALL = "failed-at-all"
DEGENERATE = "degenerate"


def maximal_ideal(ring: PolyRing) -> Ideal:
    """The homogeneous maximal ideal (x_1, ..., x_n)."""
    return Ideal(ring, [ring.var(v) for v in ring.variables])


@dataclass(frozen=True)
class PairSpec:
    """A pair (R, a^t) with R = S/I, presented inside the ambient ring S.

    ``a_preimage`` is an ideal of S containing I whose image in R is the
    pair ideal a. The hypothesis that a meets R-degrees away from every
    minimal prime is the caller's responsibility; deciding it would need
    minimal primes, which this package does not compute.
    """

    ring: PolyRing
    defining: Ideal
    a_preimage: Ideal
    t: Fraction

    def __post_init__(self):
        if self.defining.ring != self.ring or self.a_preimage.ring != self.ring:
            raise RingMismatchError("pair components live in different rings")
        if self.t <= 0:
            raise ValueError(f"pair exponent must be positive, got {self.t}")
        if self.a_preimage.is_zero():
            raise ValueError("pair ideal must be nonzero")
        if not ideal_contains(self.a_preimage, self.defining):
            raise ValueError("a_preimage must contain the defining ideal")

    def principal_modulo_defining(self) -> bool:
        """True when the image of a_preimage in R is principal.

        Decided by counting generators outside the defining ideal; with at
        most one such generator the image is visibly principal.
        """
        outside = [
            g for g in self.a_preimage.generators if not membership(g, self.defining)
        ]
        return len(outside) <= 1


@dataclass
class PurityVerdict:
    """Outcome of a purity criterion run.

    ``per_e`` maps each tested e to whether the escape condition held
    there. A proven verdict carries q = p^e and an explicit generator
    product that escapes m^[q]; both facts can be rechecked from scratch
    with verify_witness.
    """

    criterion: str
    outcome: str
    e_tested: tuple[int, ...]
    per_e: dict[int, bool] = field(default_factory=dict)
    witness_e: Optional[int] = None
    witness_q: Optional[int] = None
    witness_poly: Optional[SparsePolynomial] = None
    note: str = ""

    @property
    def proven(self) -> bool:
        return self.outcome == PROVEN_PURE


def _escape_witness(
    pair: PairSpec, N: int, q: int, limits: EngineLimits
) -> Optional[SparsePolynomial]:
    """A generator product of a'^N * (I^[q] : I) outside m^[q], if any."""
    cond = colon(bracket_power(pair.defining, q, limits), pair.defining, limits)
    powered = ideal_power(pair.a_preimage, N, limits)
    mq = bracket_power(maximal_ideal(pair.ring), q, limits)
    for u in powered.generators:
        for v in cond.generators:
            g = u * v
            if not membership(g, mq, limits):
                return g
    return None


def _exponent(criterion: str, t: Fraction, q: int) -> int:
    if criterion == SHARP:
        return ceil_mul(t, q - 1)
    if criterion == STRONG:
        return ceil_mul(t, q)
    return floor_mul(t, q - 1)


def _run_criterion(
    pair: PairSpec,
    criterion: str,
    e_values: Iterable[int],
    stop_on_proof: bool,
    limits: EngineLimits,
) -> PurityVerdict:
    p = pair.ring.p
    per_e: dict[int, bool] = {}
    tested: list[int] = []
    witness = None
    witness_e = None
    for e in e_values:
        if e < 1:
            raise ValueError(f"criterion exponents start at e=1, got {e}")
        q = p**e
        g = _escape_witness(pair, _exponent(criterion, pair.t, q), q, limits)
        tested.append(e)
        per_e[e] = g is not None
        if g is not None and witness is None:
            witness, witness_e = g, e
            if stop_on_proof:
                break
    if criterion in (SHARP, STRONG) and witness is not None:
        note = "proven at the origin; a single splitting exponent suffices"
        if criterion == STRONG:
            note += (
                "; strong-exponent variant ceil(t*q) of the sharp splitting "
                "criterion, proving strong F-purity"
            )
        return PurityVerdict(
            criterion,
            PROVEN_PURE,
            tuple(tested),
            per_e,
            witness_e,
            p**witness_e,
            witness,
            note,
        )
    if criterion in (SHARP, STRONG):
        return PurityVerdict(
            criterion,
            INCONCLUSIVE,
            tuple(tested),
            per_e,
            note=(
                "containment held at every tested e; the criterion quantifies "
                "over infinitely many q, so failure at finitely many exponents "
                "disproves nothing"
            ),
        )
    outcome = FAILED_AT_ALL if not any(per_e.values()) else INCONCLUSIVE
    return PurityVerdict(
        criterion,
        outcome,
        tuple(tested),
        per_e,
        witness_e,
        p**witness_e if witness_e else None,
        witness,
        note=(
            "per-exponent diagnostic only: the classic condition quantifies "
            "over all e >> 0, so no finite pattern proves or disproves it"
        ),
    )


def sharp_fedder(
    pair: PairSpec, e_max: int, limits: EngineLimits = DEFAULT_LIMITS
) -> PurityVerdict:
    """Sharp F-purity via the ceil(t(q-1)) escape condition for e <= e_max.

    An escape at any single e is a proof; containment throughout is
    inconclusive by design.
    """
    if e_max < 1:
        raise ValueError(f"e_max must be at least 1, got {e_max}")
    return _run_criterion(pair, SHARP, range(1, e_max + 1), True, limits)


def strong_fedder(
    pair: PairSpec, e_max: int, limits: EngineLimits = DEFAULT_LIMITS
) -> PurityVerdict:
    """Strong F-purity via the ceil(t*q) exponent; one escape proves it."""
    if e_max < 1:
        raise ValueError(f"e_max must be at least 1, got {e_max}")
    return _run_criterion(pair, STRONG, range(1, e_max + 1), True, limits)


def classic_fpure(
    pair: PairSpec, e_list: Iterable[int], limits: EngineLimits = DEFAULT_LIMITS
) -> PurityVerdict:
    """Classic F-purity condition with floor(t(q-1)), per listed exponent.

    Purely diagnostic: the result reports where the condition held and
    where it failed, and proves nothing globally.
    """
    return _run_criterion(pair, CLASSIC, list(e_list), False, limits)


def principal_sharp_implies_classic(
    pair: PairSpec, e_max: int, limits: EngineLimits = DEFAULT_LIMITS
) -> ConsistencyReport:
    """For principal pairs, a sharp proof forces the classic condition
    everywhere; any counterexample is an implementation bug report."""
    report = ConsistencyReport(subject="principal sharp => classic at every e")
    if not pair.principal_modulo_defining():
        raise ValueError("pair ideal must be principal modulo the defining ideal")
    sharp = sharp_fedder(pair, e_max, limits)
    if not sharp.proven:
        report.note = "sharp criterion inconclusive here; nothing to cross-check"
        return report
    classic = classic_fpure(pair, range(1, e_max + 1), limits)
    for e in range(1, e_max + 1):
        report.record(classic.per_e[e], e=e, t=pair.t, missing="classic condition")
    return report


def sharp_from_single_split(
    f: SparsePolynomial, e: int, ring: PolyRing, limits: EngineLimits = DEFAULT_LIMITS
) -> tuple[PairSpec, PurityVerdict]:
    """Build the pair (S, (f)^(1/(p^e - 1))) and settle it from one split.

    Over the ambient ring the splitting condition is simply f outside
    m^[p^e]; when it holds the constructed pair is sharply F-pure.
    """
    if e < 1:
        raise ValueError(f"e must be at least 1, got {e}")
    if f.is_zero():
        raise ValueError("f must be nonzero")
    q = ring.p**e
    t = Fraction(1, q - 1)
    pair = PairSpec(ring, Ideal.zero(ring), Ideal(ring, [f]), t)
    splits = not membership(f, bracket_power(maximal_ideal(ring), q, limits), limits)
    if splits:
        verdict = PurityVerdict(
            SHARP,
            PROVEN_PURE,
            (e,),
            {e: True},
            e,
            q,
            f,
            note=f"f escapes m^[{q}], so the exponent-1/(q-1) pair splits at e={e}",
        )
    else:
        verdict = PurityVerdict(
            SHARP,
            INCONCLUSIVE,
            (e,),
            {e: False},
            note=f"f lies in m^[{q}]: this map does not split; no conclusion",
        )
    return pair, verdict


def verify_witness(
    pair: PairSpec, verdict: PurityVerdict, limits: EngineLimits = DEFAULT_LIMITS
) -> bool:
    """Recheck a proven verdict's witness from scratch.

    Confirms the stored polynomial lies in a'^N * (I^[q] : I) and escapes
    m^[q], with N recomputed from the criterion flavor.
    """
    if not verdict.proven or verdict.witness_poly is None:
        raise ValueError("only proven verdicts carry a witness")
    q = verdict.witness_q
    N = _exponent(verdict.criterion, pair.t, q)
    cond = colon(bracket_power(pair.defining, q, limits), pair.defining, limits)
    product = ideal_power(pair.a_preimage, N, limits).times(cond)
    in_product = membership(verdict.witness_poly, product, limits)
    escapes = not membership(
        verdict.witness_poly, bracket_power(maximal_ideal(pair.ring), q, limits), limits
    )
    return in_product and escapes
