import random

import pytest

from dihyper.formulas import all_dihypergraphs_graded
from dihyper.polynomials import ONE, ZERO, YPoly, one_plus_y_pow
from dihyper.series import (
    EgfSeries,
    GradedSeries,
    alternating_series,
    egf_exp,
    egf_log,
    egf_to_graded,
    graded_mul,
    graded_one,
    graded_reciprocal,
    graded_to_egf,
    hadamard,
    ones_series,
)


def rand_egf(rng, b, order, lo=-3, hi=3, max_deg=4):
    coeffs = tuple(
        YPoly(rng.randint(lo, hi) for _ in range(rng.randint(0, max_deg + 1)))
        for _ in range(order + 1)
    )
    return EgfSeries(b, coeffs)


def test_series_validation():
    with pytest.raises(ValueError):
        EgfSeries(1, (ONE,))
    with pytest.raises(ValueError):
        GradedSeries(2, ())
    with pytest.raises(TypeError):
        EgfSeries(2, (1, 2))


def test_order_property():
    assert EgfSeries(2, (ONE, ZERO, ONE)).order == 2
    assert graded_one(3, 5).order == 5


def test_retag_round_trip():
    rng = random.Random(3)
    for b in (2, 3, 4):
        f = rand_egf(rng, b, 6)
        assert graded_to_egf(egf_to_graded(f)) == f
        F = egf_to_graded(f)
        assert egf_to_graded(graded_to_egf(F)) == F


def test_retag_preserves_stored_coefficients():
    f = EgfSeries(2, (ONE, YPoly([2]), YPoly([0, 1])))
    F = egf_to_graded(f)
    assert F.coeffs == f.coeffs
    assert F.b == 2


def test_ones_and_alternating_series():
    assert ones_series(2, 3).coeffs == (ONE, ONE, ONE, ONE)
    assert alternating_series(3, 2).coeffs == (ONE, YPoly([-1]), ONE)
    assert graded_to_egf(alternating_series(2, 5)).coeffs[3] == YPoly([-1])


def test_delta_inverse_of_reciprocal_all_dihypergraphs():
    # hand-run of the reciprocal recurrence at b=2, order 2
    G = graded_reciprocal(all_dihypergraphs_graded(2, 2))
    e = graded_to_egf(G)
    assert e.coeffs == (ONE, YPoly([-1]), YPoly([1, 0, -1]))


def test_hadamard():
    all_ones = EgfSeries(2, (ONE, ONE, ONE))
    f = EgfSeries(2, (ONE, YPoly([1, 1]), YPoly([0, 2])))
    assert hadamard(f, all_ones) == f
    assert hadamard(all_ones, all_ones) == all_ones
    g = hadamard(f, f)
    assert g.coeffs[1] == YPoly([1, 2, 1])
    with pytest.raises(ValueError):
        hadamard(f, EgfSeries(2, (ONE, ONE)))


def test_graded_mul_simple_case():
    F = GradedSeries(2, (ONE, ONE, ZERO))
    c = graded_mul(F, F)
    assert c.coeffs[0] == ONE
    assert c.coeffs[1] == YPoly([2])
    assert c.coeffs[2] == YPoly([2, 2])  # 2*(1+y)


def test_graded_mul_identity_and_validation():
    rng = random.Random(11)
    F = egf_to_graded(rand_egf(rng, 3, 5))
    assert graded_mul(F, graded_one(3, 5)) == F
    with pytest.raises(ValueError):
        graded_mul(F, graded_one(2, 5))
    with pytest.raises(ValueError):
        graded_mul(F, graded_one(3, 4))


def test_graded_mul_commutative_associative():
    rng = random.Random(17)
    for b in (2, 3):
        F = egf_to_graded(rand_egf(rng, b, 6))
        G = egf_to_graded(rand_egf(rng, b, 6))
        H = egf_to_graded(rand_egf(rng, b, 6))
        assert graded_mul(F, G) == graded_mul(G, F)
        assert graded_mul(graded_mul(F, G), H) == graded_mul(F, graded_mul(G, H))


def test_graded_mul_distributes_over_addition():
    rng = random.Random(23)
    F = egf_to_graded(rand_egf(rng, 2, 5))
    G = egf_to_graded(rand_egf(rng, 2, 5))
    H = egf_to_graded(rand_egf(rng, 2, 5))
    assert graded_mul(F, G + H) == graded_mul(F, G) + graded_mul(F, H)


def test_graded_reciprocal():
    assert graded_reciprocal(graded_one(2, 4)) == graded_one(2, 4)
    rec = graded_reciprocal(alternating_series(2, 3))
    assert rec.coeffs[2] == YPoly([1, 2])
    assert rec.coeffs[3] == YPoly([1, 6, 12, 6])
    rng = random.Random(5)
    for b in (2, 3, 4):
        f = rand_egf(rng, b, 6)
        F = GradedSeries(b, (ONE,) + f.coeffs[1:])
        assert graded_mul(F, graded_reciprocal(F)) == graded_one(b, 6)


def test_graded_reciprocal_requires_unit_constant_term():
    with pytest.raises(ValueError):
        graded_reciprocal(GradedSeries(2, (YPoly([2]), ONE)))
    with pytest.raises(ValueError):
        graded_reciprocal(GradedSeries(2, (ZERO, ONE)))


def test_egf_exp_basics():
    x = EgfSeries(2, (ZERO, ONE, ZERO, ZERO))
    assert egf_exp(x).coeffs == (ONE, ONE, ONE, ONE)
    zero = EgfSeries(2, (ZERO, ZERO, ZERO))
    assert egf_exp(zero).coeffs == (ONE, ZERO, ZERO)
    with pytest.raises(ValueError):
        egf_exp(EgfSeries(2, (ONE, ZERO)))


def test_egf_log_basics():
    one = EgfSeries(2, (ONE, ZERO, ZERO))
    assert egf_log(one).coeffs == (ZERO, ZERO, ZERO)
    all_ones = EgfSeries(2, (ONE, ONE, ONE, ONE))
    assert egf_log(all_ones).coeffs == (ZERO, ONE, ZERO, ZERO)
    with pytest.raises(ValueError):
        egf_log(EgfSeries(2, (ZERO, ONE)))


def test_neg_log_of_reciprocal_gives_two_node_strong_count():
    e = EgfSeries(2, (ONE, YPoly([-1]), YPoly([1, 0, -1])))
    s = egf_log(e).negate()
    assert s.coeffs[2] == YPoly([0, 0, 1])


def test_exp_log_round_trip():
    rng = random.Random(31)
    for b in (2, 3, 4):
        f = rand_egf(rng, b, 8)
        f = EgfSeries(b, (ZERO,) + f.coeffs[1:])
        assert egf_log(egf_exp(f)) == f
        e = EgfSeries(b, (ONE,) + f.coeffs[1:])
        assert egf_exp(egf_log(e)) == e


def test_addition_and_negate():
    f = EgfSeries(2, (ONE, YPoly([2])))
    g = EgfSeries(2, (ONE, YPoly([-2])))
    assert (f + g).coeffs == (YPoly([2]), ZERO)
    assert f.negate().coeffs == (YPoly([-1]), YPoly([-2]))
    with pytest.raises(ValueError):
        f + EgfSeries(3, (ONE, ONE))


@pytest.mark.parametrize("y0", [0, 1, 2])
def test_specialization_consistency(y0):
    # redo graded_mul over plain integers at y=y0 and compare
    rng = random.Random(41 + y0)
    b, order = 2, 5
    F = egf_to_graded(rand_egf(rng, b, order))
    G = egf_to_graded(rand_egf(rng, b, order))
    product = graded_mul(F, G)
    from dihyper.polynomials import binomial, mix_exponent

    base = 1 + y0
    for n in range(order + 1):
        direct = sum(
            binomial(n, k)
            * base ** mix_exponent(n, k, b)
            * F.coeffs[k].evaluate(y0)
            * G.coeffs[n - k].evaluate(y0)
            for k in range(n + 1)
        )
        assert product.coeffs[n].evaluate(y0) == direct
