"""Random quantities attached to conditional terms, and their previsions.

A term t over basic conditionals does not have a truth value at a world
w in general: replacing each basic conditional decided at w by its truth
value and absorbing constants can leave a strictly smaller residual
term.  The quantity attached to t therefore takes, at w, the prevision
of the residual's own quantity.  Concretely

    X_t(w) = P(X_{t^w} | b(t^w))

where t^w is the residual of t at w and b(.) is the disjunction of the
antecedents.  Constants ground the recursion (X has constant value 1 or
0, prevision alike), and a world deciding nothing contributes the
prevision of t itself, computed from the worlds of b(t) alone.  Since
every world of b(t) decides at least one basic conditional, residuals
there have strictly fewer basic occurrences and the recursion ends.

The engine memoizes by residual term, which the structural equality of
the term classes makes safe.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, SpaceMismatchError
from .events import Event, WorldSpace
from .probability import ConditionalProbability
from .terms import (
    Constant,
    CondTerm,
    antecedent_disjunction,
    normalize,
    reduce,
    term_space,
)


@dataclass(frozen=True)
class RandomQuantity:
    """Exact rational value per world, in world declaration order."""

    space: WorldSpace
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.values) != self.space.size:
            raise ValueError("one value per world required")

    @classmethod
    def constant(cls, space: WorldSpace, value) -> "RandomQuantity":
        return cls(space, (Fraction(value),) * space.size)

    @classmethod
    def indicator(cls, event: Event) -> "RandomQuantity":
        one, zero = Fraction(1), Fraction(0)
        return cls(
            event.space,
            tuple(one if event.has(i) else zero for i in range(event.space.size)),
        )

    def at(self, world) -> Fraction:
        index = self.space.index(world) if isinstance(world, str) else int(world)
        return self.values[index]

    def _same_space(self, other: "RandomQuantity") -> None:
        if self.space != other.space:
            raise SpaceMismatchError("random quantities live on different world spaces")

    def __add__(self, other):
        if isinstance(other, RandomQuantity):
            self._same_space(other)
            return RandomQuantity(
                self.space, tuple(x + y for x, y in zip(self.values, other.values))
            )
        scalar = Fraction(other)
        return RandomQuantity(self.space, tuple(x + scalar for x in self.values))

    __radd__ = __add__

    def __neg__(self):
        return RandomQuantity(self.space, tuple(-x for x in self.values))

    def __sub__(self, other):
        if isinstance(other, RandomQuantity):
            self._same_space(other)
            return RandomQuantity(
                self.space, tuple(x - y for x, y in zip(self.values, other.values))
            )
        scalar = Fraction(other)
        return RandomQuantity(self.space, tuple(x - scalar for x in self.values))

    def __rsub__(self, other):
        scalar = Fraction(other)
        return RandomQuantity(self.space, tuple(scalar - x for x in self.values))

    def __mul__(self, other):
        scalar = Fraction(other)
        return RandomQuantity(self.space, tuple(x * scalar for x in self.values))

    __rmul__ = __mul__

    def __str__(self):
        pairs = ", ".join(
            f"{self.space.name(i)}: {v}" for i, v in enumerate(self.values)
        )
        return "{" + pairs + "}"


def conditional_prevision(
    cp: ConditionalProbability, quantity: RandomQuantity, given: Event
) -> Fraction:
    """P(X|given) = sum over worlds of X(w) P({w}|given)."""
    if quantity.space != cp.space or given.space != cp.space:
        raise SpaceMismatchError("quantity, event and probability must share a space")
    if given.is_empty:
        raise DomainError("cannot take a prevision given the impossible event")
    dist = cp.conditional_distribution(given)
    return sum(
        (x * p for x, p in zip(quantity.values, dist) if p), start=Fraction(0)
    )


def conditionalize(
    cp: ConditionalProbability, quantity: RandomQuantity, given: Event
) -> RandomQuantity:
    """Replace the values off ``given`` by the prevision of X on ``given``.

    The result agrees with X on ``given`` and is constant, equal to
    P(X|given), elsewhere.  Applying it twice changes nothing, and its
    prevision given the same event equals P(X|given).
    """
    z = conditional_prevision(cp, quantity, given)
    return RandomQuantity(
        quantity.space,
        tuple(
            x if given.has(i) else z for i, x in enumerate(quantity.values)
        ),
    )


class PrevisionEngine:
    """Evaluates conditional terms to random quantities and previsions."""

    def __init__(self, cp: ConditionalProbability):
        self.cp = cp
        self.space = cp.space
        self._memo: dict[CondTerm, tuple[RandomQuantity, Fraction]] = {}

    def _check_term(self, term: CondTerm) -> None:
        space = term_space(term)
        if space is not None and space != self.space:
            raise SpaceMismatchError("term belongs to a different world space")

    def random_quantity(self, term: CondTerm) -> RandomQuantity:
        """The quantity X_t, one exact rational per world."""
        self._check_term(term)
        return self._eval(normalize(term))[0]

    def prevision(self, term: CondTerm) -> Fraction:
        """P(X_t | b(t)), the fair price of the term."""
        self._check_term(term)
        return self._eval(normalize(term))[1]

    def support(self, term: CondTerm) -> Event:
        """b(t): the worlds where the term is decided, TOP for constants."""
        self._check_term(term)
        return antecedent_disjunction(normalize(term), self.space)

    def _eval(self, term: CondTerm) -> tuple[RandomQuantity, Fraction]:
        cached = self._memo.get(term)
        if cached is not None:
            return cached
        if isinstance(term, Constant):
            value = Fraction(1 if term.truth else 0)
            result = (RandomQuantity.constant(self.space, value), value)
            self._memo[term] = result
            return result
        bt = antecedent_disjunction(term, self.space)
        values: dict[int, Fraction] = {}
        for w in bt.indices():
            residual = reduce(term, w)
            # Worlds of b(t) decide some basic conditional, so the
            # residual is strictly smaller and the recursion terminates.
            values[w] = self._eval(residual)[1]
        dist = self.cp.conditional_distribution(bt)
        z = sum((values[w] * dist[w] for w in values if dist[w]), start=Fraction(0))
        quantity = RandomQuantity(
            self.space,
            tuple(values.get(i, z) for i in range(self.space.size)),
        )
        result = (quantity, z)
        self._memo[term] = result
        return result
