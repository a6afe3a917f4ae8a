"""Acceptance gate: twelve exact-arithmetic criteria, one line each.

Every check is an exact rational comparison (zero tolerance).  Each test
carries a ``criterion`` marker; the conftest hook turns those into one
PASS/FAIL line per criterion in the terminal summary, visible even under
pytest's output capture.
"""

import json
import random
import subprocess
import sys
from fractions import Fraction
from itertools import product

import pytest

from trievent import (
    And,
    BasicConditional,
    ConditionalProbability,
    Event,
    Not,
    Or,
    PrevisionEngine,
    WorldSpace,
    atom_chain_weight,
    atom_set,
    atom_term,
    bet,
    enumerate_atoms,
    mu_p,
    rational_from_json,
)
from trievent.laws import (
    rand_event,
    rand_layered_cp,
    rand_nonempty_event,
    rand_positive_cp,
    rand_term,
    suite_prevision_identities,
    suite_quantity_identities,
)

from oracle_support import oracle_quantity

SPACES = {n: WorldSpace(tuple(f"w{i}" for i in range(1, n + 1))) for n in (2, 3, 4)}

UNIFORM3_MODEL = """\
worlds: w1 w2 w3
event a = {w1}
event b = {w1, w2}
event c = {w3}
event d = {w2, w3}
layer: w1=1/3 w2=1/3 w3=1/3
"""


def criterion(name):
    """Tag a test as one acceptance criterion; conftest prints its line."""
    return pytest.mark.criterion(name)


def rand_space(rng):
    return SPACES[rng.choice((2, 3, 4))]


@criterion("criterion 01: basic-conditional three-valued table")
def test_basic_conditional_table():
    rng = random.Random(101)
    for _ in range(200):
        space = rand_space(rng)
        cp = rand_positive_cp(rng, space)
        a = rand_event(rng, space)
        b = rand_nonempty_event(rng, space)
        x = PrevisionEngine(cp).random_quantity(BasicConditional(a, b))
        p = cp.cond_prob(a, b)
        for w in range(space.size):
            if b.has(w):
                assert x.values[w] == (1 if a.has(w) else 0)
            else:
                assert x.values[w] == p


@criterion("criterion 02: nine quantity identities on 500 random instances")
def test_quantity_identities():
    for space, cases, seed in ((SPACES[3], 260, 1), (SPACES[4], 240, 2)):
        results = suite_quantity_identities(space, random.Random(seed), cases, 3)
        assert len(results) == 9
        for result in results:
            assert result.cases == cases
            assert result.ok, f"{result.name}: {result.counterexample}"


@criterion("criterion 03: conjunction closed form and worked instance 1/3")
def test_conjunction_closed_form():
    rng = random.Random(33)
    for _ in range(200):
        space = rand_space(rng)
        cp = rand_positive_cp(rng, space)
        a = rand_event(rng, space)
        b = rand_nonempty_event(rng, space)
        c = rand_event(rng, space)
        d = rand_nonempty_event(rng, space)
        t = And(BasicConditional(a, b), BasicConditional(c, d))
        assert cp.prob(b | d) > 0
        expected = (
            cp.prob(a & b & c & d)
            + cp.cond_prob(a, b) * cp.prob(~b & c & d)
            + cp.cond_prob(c, d) * cp.prob(a & b & ~d)
        ) / cp.prob(b | d)
        assert PrevisionEngine(cp).prevision(t) == expected

    space = SPACES[3]
    cp = ConditionalProbability.uniform(space)
    t = And(
        BasicConditional(space.event(["w1"]), space.event(["w1", "w2"])),
        BasicConditional(space.event(["w3"]), space.event(["w2", "w3"])),
    )
    assert PrevisionEngine(cp).prevision(t) == Fraction(1, 3)


@criterion("criterion 04: collapse identities, exhaustive at three worlds")
def test_collapse_identities():
    space = SPACES[3]
    rng = random.Random(44)
    probabilities = [
        ConditionalProbability.uniform(space),
        rand_positive_cp(rng, space),
        rand_layered_cp(rng, space),
    ]
    masks = range(1 << space.size)
    for cp in probabilities:
        engine = PrevisionEngine(cp)
        for d_mask, b_mask, a_mask in product(masks, repeat=3):
            if b_mask & ~d_mask or a_mask & ~b_mask or not b_mask:
                continue
            a, b, d = (Event(space, m) for m in (a_mask, b_mask, d_mask))
            chained = And(BasicConditional(a, b), BasicConditional(b, d))
            collapsed = BasicConditional(a, d)
            assert engine.random_quantity(chained) == engine.random_quantity(collapsed)
            assert cp.cond_prob(a, d) == cp.cond_prob(a, b) * cp.cond_prob(b, d)
        for a_mask, c_mask, b_mask in product(masks, repeat=3):
            if not b_mask:
                continue
            a, c, b = (Event(space, m) for m in (a_mask, c_mask, b_mask))
            shared = And(BasicConditional(a, b), BasicConditional(c, b))
            merged = BasicConditional(a & c, b)
            assert engine.random_quantity(shared) == engine.random_quantity(merged)


@criterion("criterion 05: factorial atom counts and set homomorphism")
def test_atom_counts_and_homomorphism():
    assert len(enumerate_atoms(SPACES[2])) == 2
    assert len(enumerate_atoms(SPACES[3])) == 6
    assert len(enumerate_atoms(SPACES[4])) == 24

    rng = random.Random(55)
    for _ in range(300):
        space = SPACES[rng.choice((3, 4))]
        universe = set(enumerate_atoms(space))
        t = rand_term(rng, space, 3)
        s = rand_term(rng, space, 3)
        at, as_ = atom_set(t), atom_set(s)
        assert atom_set(Not(t)) == universe - at
        assert atom_set(And(t, s)) == at & as_
        assert atom_set(Or(t, s)) == at | as_


@criterion("criterion 06: atom previsions factorize as chain products")
def test_chain_factorization():
    rng = random.Random(66)
    for n in (3, 4):
        space = SPACES[n]
        atoms = enumerate_atoms(space)
        for _ in range(100):
            cp = rand_positive_cp(rng, space)
            engine = PrevisionEngine(cp)
            total = Fraction(0)
            for atom in atoms:
                weight = atom_chain_weight(atom, cp)
                assert engine.prevision(atom_term(atom)) == weight
                total += weight
            assert total == 1


@criterion("criterion 07: prevision equals the atom-sum measure")
def test_prevision_is_atom_sum():
    rng = random.Random(77)
    for _ in range(300):
        space = rand_space(rng)
        cp = rand_positive_cp(rng, space)
        t = rand_term(rng, space, 3)
        assert PrevisionEngine(cp).prevision(t) == mu_p(t, cp)


@criterion("criterion 08: ten prevision identities on 300 random instances")
def test_prevision_identities():
    for space, cases, seed in ((SPACES[3], 150, 8), (SPACES[4], 150, 9)):
        results = suite_prevision_identities(space, random.Random(seed), cases, 3)
        assert len(results) == 10
        for result in results:
            assert result.cases == cases
            assert result.ok, f"{result.name}: {result.counterexample}"


@criterion("criterion 09: fair bets gain zero; perturbed bets gain the perturbation")
def test_zero_gain_coherence():
    rng = random.Random(90)
    for case_no in range(300):
        space = rand_space(rng)
        cp = (
            rand_positive_cp(rng, space)
            if case_no % 2 == 0
            else rand_layered_cp(rng, space)
        )
        engine = PrevisionEngine(cp)
        t = rand_term(rng, space, 3)
        assert bet(engine, t).gain_prevision == 0
        eps = Fraction(rng.randint(-9, 9), rng.randint(1, 99))
        assert bet(engine, t, perturb=eps).gain_prevision == eps
    u3 = PrevisionEngine(ConditionalProbability.uniform(SPACES[3]))
    t = BasicConditional(SPACES[3].event(["w1"]), SPACES[3].event(["w1", "w2"]))
    assert bet(u3, t, perturb=Fraction(1, 100)).gain_prevision == Fraction(1, 100)


@criterion("criterion 10: axiom validation, product rule exhaustive at three worlds")
def test_axiom_validation():
    rng = random.Random(110)
    for case_no in range(100):
        space = SPACES[2 + case_no % 3]
        cp = rand_layered_cp(rng, space)
        report = cp.validate()
        assert report.ok, report.violation

    space = SPACES[3]
    masks = range(1 << space.size)
    for _ in range(10):
        cp = rand_layered_cp(rng, space)
        checked = 0
        for a_mask, b_mask, c_mask in product(masks, repeat=3):
            if not c_mask or not b_mask & c_mask:
                continue
            a, b, c = (Event(space, m) for m in (a_mask, b_mask, c_mask))
            assert cp.cond_prob(a & b, c) == cp.cond_prob(a, b & c) * cp.cond_prob(b, c)
            checked += 1
        # 8 consequents x 37 pairs (b,c) with c and b&c possible
        assert checked == 296


@criterion("criterion 11: memoized engine equals direct recursion, byte-exact")
def test_engine_matches_oracle_exhaustively():
    space = SPACES[3]
    dictionary = (
        BasicConditional(space.event(["w1"]), space.event(["w1", "w2"])),
        BasicConditional(space.event(["w3"]), space.event(["w2", "w3"])),
        BasicConditional(space.event(["w1", "w3"]), space.top),
    )
    depth1 = set(dictionary)
    depth1.update(Not(t) for t in dictionary)
    depth1.update(And(t, s) for t in dictionary for s in dictionary)
    depth1.update(Or(t, s) for t in dictionary for s in dictionary)
    depth2 = set(depth1)
    depth2.update(Not(t) for t in depth1)
    depth2.update(And(t, s) for t in depth1 for s in depth1)
    depth2.update(Or(t, s) for t in depth1 for s in depth1)
    # 24 depth-1 terms, 21 new negations, 567 new conjunctions, 567 new
    # disjunctions once depth-1 duplicates are removed
    assert len(depth2) == 1179

    cp = ConditionalProbability(space, [{"w1": "1/2", "w2": "1/3", "w3": "1/6"}])
    engine = PrevisionEngine(cp)
    for t in depth2:
        values, z = oracle_quantity(t, cp)
        got = engine.random_quantity(t)
        rendered = [str(v) for v in got.values] + [str(engine.prevision(t))]
        expected = [str(v) for v in values] + [str(z)]
        assert rendered == expected


@criterion("criterion 12: seeded CLI runs are byte-identical; JSON is lossless")
def test_cli_determinism(tmp_path):
    model = tmp_path / "uniform3.model"
    model.write_text(UNIFORM3_MODEL, encoding="utf-8")

    args = [
        sys.executable, "-m", "trievent", "laws",
        "--model", str(model), "--seed", "42", "--cases", "100",
    ]
    first = subprocess.run(args, capture_output=True)
    second = subprocess.run(args, capture_output=True)
    assert first.returncode == 0 and second.returncode == 0
    assert first.stdout == second.stdout
    assert b"result: all laws hold" in first.stdout

    eval_args = [
        sys.executable, "-m", "trievent", "eval",
        "--model", str(model), "--term", "[a|b] & [c|d]", "--format", "json",
    ]
    payload = json.loads(subprocess.run(eval_args, capture_output=True).stdout)
    values = {w: rational_from_json(v) for w, v in payload["values"].items()}
    assert values == {
        "w1": Fraction(1, 2), "w2": Fraction(0), "w3": Fraction(1, 2),
    }
    assert rational_from_json(payload["prevision"]) == Fraction(1, 3)
    for cell in [*payload["values"].values(), payload["prevision"]]:
        frac = Fraction(cell["num"], cell["den"])
        assert cell["den"] > 0
        assert frac.numerator == cell["num"] and frac.denominator == cell["den"]
