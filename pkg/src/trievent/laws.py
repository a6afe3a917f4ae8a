"""Seeded random suites checking the algebraic laws of the package.

Four suites, each over randomized instances on a given world space:

  * quantity identities: lattice laws of the per-world random
    quantities (idempotence through inclusion-exclusion), under random
    positive probabilities;
  * bracket identities: equivalences and entailments of basic
    conditionals, decided symbolically on atom sets and cross-checked
    numerically;
  * prevision identities: the same laws at the level of fair prices,
    under a mix of positive and layered probabilities;
  * atom sums: prevision of a term as the sum of its atoms' chain
    weights, and the chain factorization of a single atom, under
    positive probabilities.

Every check is an exact rational comparison.  The report also carries
an informational note probing the atom-sum formula under layered
probabilities; that question is deliberately left open, so the probe
never turns into a pass/fail law.

All sampling comes from one seeded :class:`random.Random`, so a report
is a pure function of (space, seed, cases, depth).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .conditionals import (
    DEFAULT_ATOM_LIMIT,
    atom_chain_weight,
    atom_set,
    atom_term,
    enumerate_atoms,
    equiv,
    leq_term,
    mu_p,
)
from .events import Event, WorldSpace
from .prevision import PrevisionEngine, RandomQuantity
from .probability import ConditionalProbability
from .terms import And, BasicConditional, CondTerm, Not, Or, term_to_str


def rand_event(rng: random.Random, space: WorldSpace) -> Event:
    return Event(space, rng.randrange(1 << space.size))

def rand_nonempty_event(rng: random.Random, space: WorldSpace) -> Event:
    return Event(space, rng.randrange(1, 1 << space.size))

def rand_basic(rng: random.Random, space: WorldSpace) -> BasicConditional:
    return BasicConditional(rand_event(rng, space), rand_nonempty_event(rng, space))


def rand_term(rng: random.Random, space: WorldSpace, depth: int) -> CondTerm:
    """Random constant-free term with connective nesting up to ``depth``."""
    if depth <= 0 or rng.random() < 0.35:
        return rand_basic(rng, space)
    roll = rng.random()
    if roll < 0.25:
        return Not(rand_term(rng, space, depth - 1))
    left = rand_term(rng, space, depth - 1)
    right = rand_term(rng, space, depth - 1)
    return And(left, right) if roll < 0.625 else Or(left, right)


def rand_positive_cp(rng: random.Random, space: WorldSpace) -> ConditionalProbability:
    """Single full-support layer with small random rational weights."""
    weights = [rng.randint(1, 9) for _ in range(space.size)]
    total = sum(weights)
    return ConditionalProbability(
        space, [{i: Fraction(w, total) for i, w in enumerate(weights)}]
    )


def rand_layered_cp(
    rng: random.Random, space: WorldSpace, max_layers: int = 3
) -> ConditionalProbability:
    """Random nested-support family: shuffled worlds cut into 1-3 layers."""
    n = space.size
    order = list(range(n))
    rng.shuffle(order)
    layer_count = rng.randint(1, min(max_layers, n))
    cuts = sorted(rng.sample(range(1, n), layer_count - 1)) if layer_count > 1 else []
    bounds = [0, *cuts, n]
    layers = []
    for lo, hi in zip(bounds, bounds[1:]):
        chunk = order[lo:hi]
        weights = [rng.randint(1, 9) for _ in chunk]
        total = sum(weights)
        layers.append({i: Fraction(w, total) for i, w in zip(chunk, weights)})
    return ConditionalProbability(space, layers)


@dataclass
class LawResult:
    """One law across all sampled cases: pass count and first failure."""

    name: str
    cases: int = 0
    failures: int = 0
    counterexample: str | None = None

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def record(self, holds: bool, describe) -> None:
        self.cases += 1
        if not holds:
            self.failures += 1
            if self.counterexample is None:
                self.counterexample = describe()


@dataclass
class LawsReport:
    """Everything the law runner produced for one (space, seed) run."""

    space: WorldSpace
    seed: int
    cases: int
    depth: int
    results: list[LawResult] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(result.ok for result in self.results)


def _ones(space: WorldSpace) -> RandomQuantity:
    return RandomQuantity.constant(space, 1)

def _zeros(space: WorldSpace) -> RandomQuantity:
    return RandomQuantity.constant(space, 0)


def suite_quantity_identities(
    space: WorldSpace, rng: random.Random, cases: int, depth: int,
    limit: int = DEFAULT_ATOM_LIMIT,
) -> list[LawResult]:
    """Per-world lattice identities of the random quantities."""
    names = [
        "and-idempotence",
        "and-commutativity",
        "and-associativity",
        "contradiction-vanishes",
        "de-morgan",
        "and-or-distributivity",
        "inclusion-exclusion",
        "negation-complement",
        "nested-antecedent-collapse",
    ]
    results = {name: LawResult(name) for name in names}
    for _ in range(cases):
        cp = rand_positive_cp(rng, space)
        engine = PrevisionEngine(cp)
        t = rand_term(rng, space, depth)
        s = rand_term(rng, space, depth)
        r = rand_term(rng, space, depth)
        X = engine.random_quantity

        def ctx(extra: str = "") -> str:
            return (
                f"t={term_to_str(t)}  s={term_to_str(s)}  r={term_to_str(r)}"
                f"{extra}  P={cp!r}"
            )

        results["and-idempotence"].record(X(t) == X(And(t, t)), ctx)
        results["and-commutativity"].record(X(And(t, s)) == X(And(s, t)), ctx)
        results["and-associativity"].record(
            X(And(t, And(s, r))) == X(And(And(t, s), r)), ctx
        )
        results["contradiction-vanishes"].record(X(And(t, Not(t))) == _zeros(space), ctx)
        results["de-morgan"].record(X(Not(And(t, s))) == X(Or(Not(t), Not(s))), ctx)
        results["and-or-distributivity"].record(
            X(And(t, Or(s, r))) == X(Or(And(t, s), And(t, r))), ctx
        )
        results["inclusion-exclusion"].record(
            X(Or(t, s)) + X(And(t, s)) == X(t) + X(s), ctx
        )
        results["negation-complement"].record(
            X(Not(t)) == 1 - X(t) and X(Not(Not(t))) == X(t), ctx
        )
        b = rand_nonempty_event(rng, space)
        a = b.conj(rand_event(rng, space))
        c = rand_event(rng, space)
        wide = BasicConditional(a, b.disj(c))
        narrow = BasicConditional(a, b)
        results["nested-antecedent-collapse"].record(
            X(And(narrow, wide)) == X(wide),
            lambda: f"a={a}  b={b}  c={c}  P={cp!r}",
        )
    return [results[name] for name in names]


def suite_bracket_identities(
    space: WorldSpace, rng: random.Random, cases: int, depth: int,
    limit: int = DEFAULT_ATOM_LIMIT,
) -> list[LawResult]:
    """Equivalence-class identities of basic conditionals.

    Each identity is decided on atom sets and independently confirmed
    on the random quantities under a sampled positive probability.
    """
    names = [
        "reflexive-conditional-is-one",
        "shared-antecedent-conjunction",
        "negation-moves-inside",
        "consequent-absorbs-antecedent",
        "chain-collapse",
        "antecedent-widening-entails",
    ]
    results = {name: LawResult(name) for name in names}
    for _ in range(cases):
        cp = rand_positive_cp(rng, space)
        engine = PrevisionEngine(cp)
        X = engine.random_quantity
        a = rand_event(rng, space)
        b = rand_nonempty_event(rng, space)
        c = rand_event(rng, space)

        def ctx() -> str:
            return f"a={a}  b={b}  c={c}  P={cp!r}"

        nonempty = rand_nonempty_event(rng, space)
        reflexive = BasicConditional(nonempty, nonempty)
        results["reflexive-conditional-is-one"].record(
            len(atom_set(reflexive, limit=limit)) == math.factorial(space.size)
            and X(reflexive) == _ones(space),
            lambda: f"a={nonempty}  P={cp!r}",
        )
        shared = And(BasicConditional(a, b), BasicConditional(c, b))
        merged = BasicConditional(a.conj(c), b)
        results["shared-antecedent-conjunction"].record(
            equiv(shared, merged, limit=limit) and X(shared) == X(merged), ctx
        )
        negated = Not(BasicConditional(a, b))
        inside = BasicConditional(a.neg(), b)
        results["negation-moves-inside"].record(
            equiv(negated, inside, limit=limit) and X(negated) == X(inside), ctx
        )
        absorbed = BasicConditional(a.conj(b), b)
        plain = BasicConditional(a, b)
        results["consequent-absorbs-antecedent"].record(
            equiv(absorbed, plain, limit=limit) and X(absorbed) == X(plain), ctx
        )
        chain_c = b.disj(rand_event(rng, space))
        chain_a = b.conj(rand_event(rng, space))
        chained = And(BasicConditional(chain_a, b), BasicConditional(b, chain_c))
        collapsed = BasicConditional(chain_a, chain_c)
        results["chain-collapse"].record(
            equiv(chained, collapsed, limit=limit) and X(chained) == X(collapsed),
            lambda: f"a={chain_a}  b={b}  c={chain_c}  P={cp!r}",
        )
        sub_a = b.conj(rand_event(rng, space))
        widened = BasicConditional(sub_a, b.disj(c))
        narrowed = BasicConditional(sub_a, b)
        results["antecedent-widening-entails"].record(
            leq_term(widened, narrowed, limit=limit)
            and X(And(widened, narrowed)) == X(widened),
            lambda: f"a={sub_a}  b={b}  c={c}  P={cp!r}",
        )
    return [results[name] for name in names]


def suite_prevision_identities(
    space: WorldSpace, rng: random.Random, cases: int, depth: int,
    limit: int = DEFAULT_ATOM_LIMIT,
) -> list[LawResult]:
    """Fair-price identities, under alternating positive and layered P."""
    names = [
        "prevision-and-idempotence",
        "prevision-and-commutativity",
        "prevision-and-associativity",
        "prevision-of-contradiction",
        "prevision-de-morgan",
        "prevision-distributivity",
        "unit-quantity-prevision",
        "zero-quantity-prevision",
        "prevision-inclusion-exclusion",
        "prevision-complement",
    ]
    results = {name: LawResult(name) for name in names}
    for case_no in range(cases):
        if case_no % 2 == 0:
            cp = rand_positive_cp(rng, space)
        else:
            cp = rand_layered_cp(rng, space)
        engine = PrevisionEngine(cp)
        t = rand_term(rng, space, depth)
        s = rand_term(rng, space, depth)
        r = rand_term(rng, space, depth)
        P = engine.prevision
        X = engine.random_quantity

        def ctx() -> str:
            return (
                f"t={term_to_str(t)}  s={term_to_str(s)}  r={term_to_str(r)}  P={cp!r}"
            )

        results["prevision-and-idempotence"].record(P(t) == P(And(t, t)), ctx)
        results["prevision-and-commutativity"].record(P(And(t, s)) == P(And(s, t)), ctx)
        results["prevision-and-associativity"].record(
            P(And(t, And(s, r))) == P(And(And(t, s), r)), ctx
        )
        results["prevision-of-contradiction"].record(P(And(t, Not(t))) == 0, ctx)
        results["prevision-de-morgan"].record(
            P(Not(And(t, s))) == P(Or(Not(t), Not(s))), ctx
        )
        results["prevision-distributivity"].record(
            P(And(t, Or(s, r))) == P(Or(And(t, s), And(t, r))), ctx
        )
        tautology = Not(And(t, Not(t)))
        results["unit-quantity-prevision"].record(
            X(tautology) == _ones(space) and P(tautology) == 1, ctx
        )
        contradiction = And(t, Not(t))
        results["zero-quantity-prevision"].record(
            X(contradiction) == _zeros(space) and P(contradiction) == 0, ctx
        )
        results["prevision-inclusion-exclusion"].record(
            P(Or(t, s)) + P(And(t, s)) == P(t) + P(s), ctx
        )
        results["prevision-complement"].record(P(Not(t)) == 1 - P(t), ctx)
    return [results[name] for name in names]


def suite_atom_sums(
    space: WorldSpace, rng: random.Random, cases: int, depth: int,
    limit: int = DEFAULT_ATOM_LIMIT,
) -> list[LawResult]:
    """Atom-sum prevision and single-atom chain factorization, positive P."""
    results = {
        "atom-chain-factorization": LawResult("atom-chain-factorization"),
        "atom-sum-prevision": LawResult("atom-sum-prevision"),
    }
    atoms = list(enumerate_atoms(space, limit))
    for _ in range(cases):
        cp = rand_positive_cp(rng, space)
        engine = PrevisionEngine(cp)
        atom = atoms[rng.randrange(len(atoms))]
        results["atom-chain-factorization"].record(
            engine.prevision(atom_term(atom)) == atom_chain_weight(atom, cp),
            lambda: f"atom={atom}  P={cp!r}",
        )
        t = rand_term(rng, space, depth)
        results["atom-sum-prevision"].record(
            engine.prevision(t) == mu_p(t, cp, limit),
            lambda: f"t={term_to_str(t)}  P={cp!r}",
        )
    return [results["atom-chain-factorization"], results["atom-sum-prevision"]]


def _layered_atom_sum_note(
    space: WorldSpace, rng: random.Random, cases: int, depth: int,
    limit: int = DEFAULT_ATOM_LIMIT,
) -> str:
    """Informational probe: does the atom-sum formula survive layering?

    Whether the atom-sum prevision extends beyond positive probabilities
    is an open question, so this only counts agreements and never fails
    a run.
    """
    agree = 0
    total = 0
    for _ in range(cases):
        cp = rand_layered_cp(rng, space)
        if cp.is_positive:
            continue
        engine = PrevisionEngine(cp)
        t = rand_term(rng, space, depth)
        chain_sum = sum(
            (atom_chain_weight(atom, cp) for atom in atom_set(t, space, limit)),
            start=Fraction(0),
        )
        total += 1
        if engine.prevision(t) == chain_sum:
            agree += 1
    return (
        f"note: layered-probability atom sums (no law claimed): "
        f"{agree}/{total} sampled terms agree with the prevision"
    )


_SUITES = (
    suite_quantity_identities,
    suite_bracket_identities,
    suite_prevision_identities,
    suite_atom_sums,
)


def run_laws(
    space: WorldSpace,
    seed: int,
    cases: int,
    depth: int,
    limit: int = DEFAULT_ATOM_LIMIT,
) -> LawsReport:
    """All suites with sub-seeds derived from one master seed."""
    master = random.Random(seed)
    report = LawsReport(space, seed, cases, depth)
    for suite in _SUITES:
        rng = random.Random(master.randrange(1 << 63))
        report.results.extend(suite(space, rng, cases, depth, limit))
    probe_rng = random.Random(master.randrange(1 << 63))
    report.notes.append(_layered_atom_sum_note(space, probe_rng, cases, depth, limit))
    return report
