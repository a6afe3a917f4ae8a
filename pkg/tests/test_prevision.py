"""Random quantities of terms and their previsions."""

import random
from fractions import Fraction

import pytest

from trievent import (
    And,
    BasicConditional,
    ConditionalProbability,
    DomainError,
    Event,
    Not,
    ONE,
    Or,
    PrevisionEngine,
    RandomQuantity,
    SpaceMismatchError,
    WorldSpace,
    ZERO,
    conditional_prevision,
    conditionalize,
)
from trievent.laws import rand_event, rand_nonempty_event, rand_positive_cp, rand_term
from trievent.terms import reduce as reduce_term

from oracle_support import oracle_quantity

SP4 = WorldSpace(("w1", "w2", "w3", "w4"))


def test_random_quantity_basics(u3):
    x = RandomQuantity.indicator(u3.b)
    assert x.values == (1, 1, 0)
    y = RandomQuantity.constant(u3.space, "1/2")
    assert (x + y).values == (Fraction(3, 2), Fraction(3, 2), Fraction(1, 2))
    assert (1 - x).values == (0, 0, 1)
    assert (x * 2).at("w1") == 2
    with pytest.raises(ValueError):
        RandomQuantity(u3.space, (Fraction(1),))


def test_conditional_prevision_reads_only_given_worlds(u3):
    x = RandomQuantity(u3.space, (Fraction(5), Fraction(1), Fraction(3)))
    assert conditional_prevision(u3.cp, x, u3.space.top) == 3
    assert conditional_prevision(u3.cp, x, u3.b) == 3
    assert conditional_prevision(u3.cp, x, u3.c) == 3
    with pytest.raises(DomainError):
        conditional_prevision(u3.cp, x, u3.space.bottom)


def test_constants_evaluate_trivially(u3):
    eng = u3.engine
    assert eng.random_quantity(ONE).values == (1, 1, 1)
    assert eng.random_quantity(ZERO).values == (0, 0, 0)
    assert eng.prevision(ONE) == 1
    assert eng.prevision(ZERO) == 0
    assert eng.support(ONE) == u3.space.top


def test_basic_conditional_three_values(u3):
    t = BasicConditional(u3.a, u3.b)
    assert u3.engine.random_quantity(t).values == (1, 0, Fraction(1, 2))
    assert u3.engine.prevision(t) == Fraction(1, 2)
    assert u3.engine.support(t) == u3.b


def test_negation_complements_pointwise(u3):
    t = BasicConditional(u3.a, u3.b)
    x = u3.engine.random_quantity(t)
    nx = u3.engine.random_quantity(Not(t))
    assert nx == 1 - x


def test_conjunction_worked_example(u3):
    t = And(BasicConditional(u3.a, u3.b), BasicConditional(u3.c, u3.d))
    x = u3.engine.random_quantity(t)
    assert x.values == (Fraction(1, 2), 0, Fraction(1, 2))
    assert u3.engine.prevision(t) == Fraction(1, 3)
    assert u3.engine.support(t) == u3.space.top


def conjunction_by_cases(a, b, c, d, cp):
    """Closed-form conjunction of two basic conditionals.

    Five regions: both decided true -> 1; either decided false -> 0;
    only one decided true -> the other's conditional probability; and
    the fully undecided region carries the overall price

        z = [P(abcd) + P(a|b) P(!b c d) + P(c|d) P(a b !d)] / P(b v d).
    """
    space = cp.space
    x = cp.cond_prob(a, b)
    y = cp.cond_prob(c, d)
    z = (
        cp.prob(a & b & c & d)
        + x * cp.prob(~b & c & d)
        + y * cp.prob(a & b & ~d)
    ) / cp.prob(b | d)
    values = []
    for w in range(space.size):
        in_ab = a.has(w) and b.has(w)
        in_cd = c.has(w) and d.has(w)
        false_ab = b.has(w) and not a.has(w)
        false_cd = d.has(w) and not c.has(w)
        if false_ab or false_cd:
            values.append(Fraction(0))
        elif in_ab and in_cd:
            values.append(Fraction(1))
        elif in_ab:
            values.append(y)
        elif in_cd:
            values.append(x)
        else:
            values.append(z)
    return tuple(values), z


def test_conjunction_matches_closed_form():
    rng = random.Random(314)
    for _ in range(150):
        cp = rand_positive_cp(rng, SP4)
        a = rand_event(rng, SP4)
        b = rand_nonempty_event(rng, SP4)
        c = rand_event(rng, SP4)
        d = rand_nonempty_event(rng, SP4)
        engine = PrevisionEngine(cp)
        t = And(BasicConditional(a, b), BasicConditional(c, d))
        expected_values, expected_z = conjunction_by_cases(a, b, c, d, cp)
        assert engine.random_quantity(t).values == expected_values
        assert engine.prevision(t) == expected_z


def test_layered_model_regression(u3):
    lay = ConditionalProbability(
        u3.space, [{"w1": 1}, {"w2": "1/2", "w3": "1/2"}]
    )
    engine = PrevisionEngine(lay)
    t = And(BasicConditional(u3.a, u3.b), BasicConditional(u3.c, u3.d))
    # residual at w1 is [c|d], priced on the lower layer at 1/2; residual
    # at w3 is [a|b], priced on the top layer at 1; the prevision then
    # sees only w1, the sole carrier of top-layer mass
    assert engine.random_quantity(t).values == (Fraction(1, 2), 0, Fraction(1))
    assert engine.prevision(t) == Fraction(1, 2)


def test_engine_matches_oracle_randomized():
    rng = random.Random(2718)
    space = WorldSpace(("w1", "w2", "w3"))
    for _ in range(60):
        cp = rand_positive_cp(rng, space)
        t = rand_term(rng, space, 3)
        engine = PrevisionEngine(cp)
        values, z = oracle_quantity(t, cp)
        assert engine.random_quantity(t).values == values
        assert engine.prevision(t) == z


def test_memo_reuses_results(u3):
    engine = PrevisionEngine(u3.cp)
    t = And(BasicConditional(u3.a, u3.b), BasicConditional(u3.c, u3.d))
    first = engine.random_quantity(t)
    again = engine.random_quantity(t)
    assert first is again


def test_engine_rejects_foreign_terms(u3):
    other = WorldSpace(("x", "y"))
    t = BasicConditional(other.event(["x"]), other.top)
    with pytest.raises(SpaceMismatchError):
        u3.engine.prevision(t)


def test_normalization_at_entry(u3):
    t = BasicConditional(u3.a, u3.b)
    assert u3.engine.random_quantity(And(t, ONE)) == u3.engine.random_quantity(t)
    assert u3.engine.prevision(Or(t, ONE)) == 1
    assert u3.engine.support(And(t, ZERO)) == u3.space.top


def test_conditionalize_properties(u3):
    rng = random.Random(99)
    for _ in range(40):
        values = tuple(Fraction(rng.randint(-5, 5), rng.randint(1, 7)) for _ in range(3))
        x = RandomQuantity(u3.space, values)
        h = rand_nonempty_event(rng, u3.space)
        y = conditionalize(u3.cp, x, h)
        z = conditional_prevision(u3.cp, x, h)
        for i in range(3):
            assert y.values[i] == (x.values[i] if h.has(i) else z)
        assert conditionalize(u3.cp, y, h) == y
        assert conditional_prevision(u3.cp, y, h) == z
        # the conditionalized quantity has prevision z however you price it
        assert conditional_prevision(u3.cp, y, u3.space.top) == z


def test_compound_price_from_residual_prices(reduct8):
    # the eight-residual term: its price must be the probability-weighted
    # combination of the prices of its per-world residuals
    rng = random.Random(808)
    t = And(reduct8.ab, Or(reduct8.cd, Not(reduct8.ef)))
    for _ in range(10):
        cp = rand_positive_cp(rng, reduct8.space)
        engine = PrevisionEngine(cp)
        support = engine.support(t)
        expected = sum(
            engine.prevision(reduce_term(t, w)) * cp.cond_prob(reduct8.space.singleton(w), support)
            for w in range(reduct8.space.size)
            if support.has(w)
        )
        assert engine.prevision(t) == expected


def test_off_support_value_is_the_prevision(u3):
    rng = random.Random(5)
    for _ in range(40):
        cp = rand_positive_cp(rng, u3.space)
        engine = PrevisionEngine(cp)
        t = rand_term(rng, u3.space, 2)
        x = engine.random_quantity(t)
        bt = engine.support(t)
        z = engine.prevision(t)
        for i in range(u3.space.size):
            if not bt.has(i):
                assert x.values[i] == z
