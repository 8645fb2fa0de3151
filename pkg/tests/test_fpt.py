from fractions import Fraction

import pytest

from fpurity import (
    Ideal,
    PairSpec,
    fpt_bounds,
    fpt_estimate,
    maximal_ideal,
    nu_table,
    nu_value,
    parse_poly,
    parse_ring,
    sharp_fedder,
    threshold_consistency,
)


def ideal(texts, ring):
    return Ideal(ring, [parse_poly(t, ring) for t in texts])


# --- nu values -----------------------------------------------------------------


def test_nu_variable(r3x):
    assert nu_value(ideal(["x"], r3x), 9, maximal_ideal(r3x)) == 8


def test_nu_square(r3x):
    assert nu_value(ideal(["x^2"], r3x), 9, maximal_ideal(r3x)) == 4


def test_nu_maximal_ideal(r3xy):
    assert nu_value(ideal(["x", "y"], r3xy), 3, maximal_ideal(r3xy)) == 4


def test_nu_rejects_units(r3xy):
    with pytest.raises(ValueError, match="contained in m"):
        nu_value(ideal(["x + 1"], r3xy), 3, maximal_ideal(r3xy))


def test_nu_matches_closed_form_for_principal_monomials(r3xy):
    # independent oracle: for f = x^a1 y^a2, f^s escapes (x^q, y^q) iff
    # s*aj <= q-1 for every j, so nu = min_j (q-1)//aj
    import random

    rng = random.Random(41)
    for _ in range(30):
        exps = (rng.randrange(0, 5), rng.randrange(0, 5))
        if exps == (0, 0):
            continue
        for q in (3, 9, 27):
            expected = min((q - 1) // a for a in exps if a > 0)
            got = nu_value(Ideal(r3xy, [r3xy.monomial(exps)]), q, maximal_ideal(r3xy))
            assert got == expected


# --- interval bounds --------------------------------------------------------------


def test_bounds_square(r3x):
    record = fpt_bounds(ideal(["x^2"], r3x), 2, maximal_ideal(r3x))
    assert record.nu == 4
    assert (record.lo, record.hi) == (Fraction(4, 9), Fraction(5, 9))
    assert record.lo <= Fraction(1, 2) <= record.hi


def test_bounds_char2_monomial(r2xy):
    record = fpt_bounds(ideal(["x*y"], r2xy), 2, maximal_ideal(r2xy))
    assert record.nu == 3
    assert (record.lo, record.hi) == (Fraction(3, 4), Fraction(1))


def test_bounds_variable(r3x):
    for e in (1, 2, 3):
        record = fpt_bounds(ideal(["x"], r3x), e, maximal_ideal(r3x))
        q = 3**e
        assert (record.lo, record.hi) == (Fraction(q - 1, q), Fraction(1))


def test_bounds_non_principal_widen_by_generator_count(r3xy):
    # (x, y) needs the mu/q slack: the principal-style (nu+1)/q upper bound
    # would exclude the true threshold 2
    record = fpt_bounds(ideal(["x", "y"], r3xy), 1, maximal_ideal(r3xy))
    assert record.nu == 4
    assert record.lo == Fraction(4, 3)
    assert record.hi == Fraction(2)


def test_nu_scaling_sandwich(r3x, r3xy):
    for ring, texts in ((r3x, ["x^2"]), (r3xy, ["x*y"]), (r3xy, ["x^2*y"])):
        a = ideal(texts, ring)
        records = nu_table(a, 4, maximal_ideal(ring))
        nu = {r.e: r.nu for r in records}
        for e in (1, 2, 3):
            for d in (1, 2):
                if e + d > 4:
                    continue
                assert 3**d * nu[e] <= nu[e + d] <= 3**d * (nu[e] + 1)


def test_interval_nesting(r3xy):
    records = nu_table(ideal(["x^2*y"], r3xy), 4, maximal_ideal(r3xy))
    lo = max(r.lo for r in records)
    hi = min(r.hi for r in records)
    assert lo <= hi
    for a, b in zip(records, records[1:]):
        assert max(a.lo, b.lo) <= min(a.hi, b.hi)


# --- estimates and certificates -----------------------------------------------------


def test_estimate_square_mustata(r3x):
    est = fpt_estimate(ideal(["x^2"], r3x), 3, maximal_ideal(r3x))
    cert = est.certificate
    assert cert is not None
    assert cert.kind == "mustata-converse"
    assert cert.t_star == Fraction(1, 2)
    assert cert.e_star == 1
    assert cert.exact and est.label == "exact"
    assert est.lo <= Fraction(1, 2) <= est.hi


def test_estimate_monomial_sharp(r3xy):
    est = fpt_estimate(ideal(["x*y"], r3xy), 3, maximal_ideal(r3xy))
    cert = est.certificate
    assert cert is not None
    assert cert.kind == "sharp-fedder"
    assert cert.t_star == Fraction(1)
    assert cert.exact and est.label == "exact"


def test_estimate_maximal_ideal(r3xy):
    est = fpt_estimate(ideal(["x", "y"], r3xy), 3, maximal_ideal(r3xy))
    cert = est.certificate
    assert cert is not None
    assert cert.kind == "sharp-fedder"
    assert cert.t_star == Fraction(2)


def test_certified_value_is_sharp_and_nothing_above_is(r3x):
    ring = r3x
    a = ideal(["x^2"], ring)
    est = fpt_estimate(a, 3, maximal_ideal(ring))
    t_star = est.certificate.t_star
    assert sharp_fedder(PairSpec(ring, Ideal.zero(ring), a, t_star), 3).proven
    for delta in (Fraction(1, 26), Fraction(1, 13), Fraction(3, 26)):
        above = t_star + delta
        if above > est.hi:
            continue
        verdict = sharp_fedder(PairSpec(ring, Ideal.zero(ring), a, above), 3)
        assert not verdict.proven


def test_certificate_denominator_bookkeeping(r3x, r3xy):
    # with  t*(p^e - 1)  integral,  t* * p^e  is integral only for integer t*
    for ring, texts, e_max in ((r3x, ["x^2"], 3), (r3xy, ["x*y"], 3)):
        est = fpt_estimate(ideal(texts, ring), e_max, maximal_ideal(ring))
        cert = est.certificate
        assert (cert.t_star * (ring.p**cert.e_star - 1)).denominator == 1
        p_pow_t = cert.t_star * ring.p**cert.e_star
        if p_pow_t.denominator == 1:
            assert cert.t_star.denominator == 1


def test_estimate_below_true_threshold_is_lower_bound():
    # fpt(x^2) = 1/2 over F_2[x] has denominator divisible by p, so no
    # candidate can hit it exactly. The single-exponent integrality pattern
    # fires spuriously at 3/7 (nu(8) = 3 = (3/7)*7) and must be rejected by
    # the multi-exponent check; what survives is an honest proven lower
    # bound at 3/7, not an exactness claim.
    ring = parse_ring("p=2; vars=x")
    est = fpt_estimate(ideal(["x^2"], ring), 3, maximal_ideal(ring))
    assert est.lo <= Fraction(1, 2) <= est.hi
    cert = est.certificate
    assert cert is not None
    assert cert.kind == "sharp-fedder"
    assert cert.t_star == Fraction(3, 7)
    assert not cert.exact
    assert est.label == "lower-bound"


# --- threshold consistency ------------------------------------------------------------


def test_consistency_monomial(r3xy):
    report = threshold_consistency(
        ideal(["x*y"], r3xy), Fraction(1), [Fraction(1, 3)]
    )
    assert report.passed


def test_consistency_variable(r3x):
    report = threshold_consistency(ideal(["x"], r3x), Fraction(1), [Fraction(1, 2)])
    assert report.passed


def test_consistency_degenerate_epsilon(r3xy):
    report = threshold_consistency(ideal(["x*y"], r3xy), Fraction(1), [Fraction(1)])
    assert report.passed and report.checks == 1


def test_consistency_requires_proven_t(r3xy):
    with pytest.raises(ValueError, match="sharp purity proof"):
        threshold_consistency(ideal(["x*y"], r3xy), Fraction(3, 2), [Fraction(1, 2)])


def test_consistency_rejects_bad_epsilon(r3xy):
    with pytest.raises(ValueError):
        threshold_consistency(ideal(["x*y"], r3xy), Fraction(1), [Fraction(2)])
