from fractions import Fraction

import pytest

from fpurity import (
    Ideal,
    PairSpec,
    bracket_power,
    classic_fpure,
    denominator_order,
    maximal_ideal,
    membership,
    parse_poly,
    principal_sharp_implies_classic,
    sharp_fedder,
    sharp_from_single_split,
    strong_fedder,
    verify_witness,
)
from fpurity.poly import poly_pow

from battery import battery_pairs
from conftest import p


def pair(ring, a_texts, t, defining_texts=()):
    defining = Ideal(ring, [parse_poly(s, ring) for s in defining_texts])
    a = Ideal(ring, [parse_poly(s, ring) for s in a_texts]).plus(defining)
    return PairSpec(ring, defining, a, Fraction(t))


# --- PairSpec validation -----------------------------------------------------


def test_pair_rejects_nonpositive_t(r3xy):
    with pytest.raises(ValueError):
        pair(r3xy, ["x"], 0)


def test_pair_rejects_zero_a(r3xy):
    with pytest.raises(ValueError):
        PairSpec(r3xy, Ideal.zero(r3xy), Ideal.zero(r3xy), Fraction(1))


def test_pair_requires_containment(r3xy):
    with pytest.raises(ValueError, match="contain"):
        PairSpec(r3xy, Ideal(r3xy, [p("x", r3xy)]), Ideal(r3xy, [p("y", r3xy)]), Fraction(1))


# --- sharp criterion ---------------------------------------------------------


def test_sharp_monomial_pair_proven(r3xy):
    v = sharp_fedder(pair(r3xy, ["x*y"], 1), 1)
    assert v.proven and v.witness_e == 1
    assert v.witness_poly == p("x^2*y^2", r3xy)


def test_sharp_quadric_cone_proven(r3xyz):
    v = sharp_fedder(pair(r3xyz, ["1"], 1, defining_texts=["x^2 - y*z"]), 1)
    assert v.proven and v.witness_e == 1
    # the escape witness is the colon generator, whose x^2*y*z term survives
    assert v.witness_poly == poly_pow(p("x^2 - y*z", r3xyz), 2)


def test_sharp_above_threshold_inconclusive(r3xy):
    v = sharp_fedder(pair(r3xy, ["x*y"], Fraction(3, 2)), 4)
    assert v.outcome == "inconclusive"
    assert v.e_tested == (1, 2, 3, 4)
    assert not any(v.per_e.values())


# --- strong criterion ---------------------------------------------------------


def test_strong_at_threshold_inconclusive(r3xy):
    v = strong_fedder(pair(r3xy, ["x*y"], 1), 4)
    assert v.outcome == "inconclusive"


def test_strong_below_threshold_proven(r3xy):
    v = strong_fedder(pair(r3xy, ["x*y"], Fraction(1, 2)), 1)
    assert v.proven and v.witness_e == 1


def test_strong_trivial_pair_ideal(r3xy):
    v = strong_fedder(pair(r3xy, ["1"], 5), 1)
    assert v.proven and v.witness_e == 1


# --- classic criterion ---------------------------------------------------------


def test_classic_quadric_cone_holds(r3xyz):
    v = classic_fpure(pair(r3xyz, ["1"], 1, defining_texts=["x^2 - y*z"]), [1])
    assert v.per_e[1] is True


def test_classic_monomial_holds(r3xy):
    v = classic_fpure(pair(r3xy, ["x*y"], 1), [1])
    assert v.per_e[1] is True


def test_classic_failure_is_diagnostic(r3x):
    v = classic_fpure(pair(r3x, ["x"], 2), [1])
    assert v.per_e[1] is False
    assert v.outcome == "failed-at-all"


# --- one criterion implies the next at each exponent ---------------------------


@pytest.mark.parametrize(
    "a_texts,t",
    [(["x*y"], Fraction(1)), (["x*y"], Fraction(1, 2)), (["x"], Fraction(2, 3)), (["x", "y"], Fraction(3, 2))],
)
def test_exponent_level_ordering(r3xy, a_texts, t):
    pr = pair(r3xy, a_texts, t)
    strong = strong_fedder(pr, 3).per_e
    sharp = sharp_fedder(pr, 3).per_e
    classic = classic_fpure(pr, (1, 2, 3)).per_e
    for e in (1, 2, 3):
        if e in strong and strong[e]:
            assert sharp.get(e, True)
        if e in sharp and sharp[e]:
            assert classic[e]


def test_monotone_in_t(r3xy):
    pr = pair(r3xy, ["x*y"], 1)
    v = sharp_fedder(pr, 4)
    assert v.proven
    for smaller in (Fraction(1, 2), Fraction(2, 3), Fraction(5, 6)):
        v2 = sharp_fedder(pair(r3xy, ["x*y"], smaller), v.witness_e)
        assert v2.proven and v2.witness_e <= v.witness_e


def test_sharp_equals_classic_at_integrality_exponent(r3xy):
    from fpurity.purity import SHARP, _run_criterion

    for t in (Fraction(1, 2), Fraction(3, 4), Fraction(5, 8), Fraction(3, 2)):
        e0 = denominator_order(t, 3)
        assert e0 is not None
        pr = pair(r3xy, ["x*y"], t)
        from fpurity.ideals import DEFAULT_LIMITS

        sharp_at_e0 = _run_criterion(pr, SHARP, [e0], False, DEFAULT_LIMITS).per_e[e0]
        classic_at_e0 = classic_fpure(pr, [e0]).per_e[e0]
        assert sharp_at_e0 == classic_at_e0


# --- principal consistency ------------------------------------------------------


def test_principal_sharp_implies_classic_monomial(r3xy):
    report = principal_sharp_implies_classic(pair(r3xy, ["x*y"], 1), 4)
    assert report.passed and report.checks == 4


def test_principal_sharp_implies_classic_half(r3x):
    report = principal_sharp_implies_classic(pair(r3x, ["x"], Fraction(1, 2)), 4)
    assert report.passed and report.checks == 4


def test_principal_check_trivial_pair(r3xy):
    report = principal_sharp_implies_classic(pair(r3xy, ["1"], 1), 3)
    assert report.passed


def test_principal_check_rejects_non_principal(r3xy):
    with pytest.raises(ValueError, match="principal"):
        principal_sharp_implies_classic(pair(r3xy, ["x", "y"], 1), 2)


# --- single-splitting constructor ------------------------------------------------


def test_split_from_monomial(r3xy):
    built, verdict = sharp_from_single_split(p("x*y", r3xy), 1, r3xy)
    assert verdict.proven
    assert built.t == Fraction(1, 2)


def test_split_fails_inside_bracket(r3xy):
    _, verdict = sharp_from_single_split(p("x^3", r3xy), 1, r3xy)
    assert not verdict.proven
    assert "does not split" in verdict.note


def test_split_unit(r3xy):
    _, verdict = sharp_from_single_split(r3xy.one(), 2, r3xy)
    assert verdict.proven


# --- witnesses -------------------------------------------------------------------


def test_witness_reverifies(r3xy, r3xyz):
    cases = [
        (pair(r3xy, ["x*y"], 1), 2),
        (pair(r3xyz, ["1"], 1, defining_texts=["x^2 - y*z"]), 2),
        (pair(r3xy, ["x*y"], Fraction(1, 2)), 2),
    ]
    for pr, e_max in cases:
        v = sharp_fedder(pr, e_max)
        assert v.proven
        assert verify_witness(pr, v)
        q = pr.ring.p**v.witness_e
        assert not membership(v.witness_poly, bracket_power(maximal_ideal(pr.ring), q))


def test_battery_is_all_proven():
    for pr in battery_pairs():
        assert sharp_fedder(pr, 4).proven


def test_sharp_matches_closed_form_for_principal_monomials(r3xy):
    # independent oracle: for a = (x^a1 y^a2) over the ambient ring, the
    # escape at e happens iff N*a1 < q and N*a2 < q with N = ceil(t(q-1))
    import random
    from fpurity.ideals import DEFAULT_LIMITS
    from fpurity.purity import SHARP, _run_criterion
    from fpurity.ceilarith import ceil_mul

    rng = random.Random(97)
    for _ in range(40):
        exps = (rng.randrange(0, 4), rng.randrange(0, 4))
        if exps == (0, 0):
            continue
        t = Fraction(rng.randrange(1, 7), rng.randrange(1, 7))
        pr = PairSpec(r3xy, Ideal.zero(r3xy), Ideal(r3xy, [r3xy.monomial(exps)]), t)
        got = _run_criterion(pr, SHARP, range(1, 4), False, DEFAULT_LIMITS).per_e
        for e in range(1, 4):
            q = 3**e
            N = ceil_mul(t, q - 1)
            assert got[e] == all(N * a < q for a in exps)
