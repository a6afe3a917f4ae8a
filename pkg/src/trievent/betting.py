"""Betting reading of previsions: pay the price, receive the quantity.

A bet on a term t collects the payment and owes X_t(w) once the world
is known, so the bettor's gain is G(w) = paid - X_t(w).  Pricing the
bet at the conditional prevision of X_t makes the conditional prevision
of G given b(t) exactly zero; any other price shifts the gain prevision
by exactly the difference.  Worlds outside b(t) call the bet off: there
X_t(w) already equals the fair price, so a fairly priced bet gains
nothing on them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .events import Event
from .prevision import PrevisionEngine, RandomQuantity, conditional_prevision
from .terms import CondTerm


@dataclass(frozen=True)
class BetReport:
    """One priced bet: payment, per-world gains and their prevision."""

    term: CondTerm
    support: Event
    paid: Fraction
    gains: RandomQuantity
    gain_prevision: Fraction

    @property
    def coherent(self) -> bool:
        """True when the price makes the bet fair (zero gain prevision)."""
        return self.gain_prevision == 0


def bet(engine: PrevisionEngine, term: CondTerm, perturb=0) -> BetReport:
    """Price the term and report the resulting gains.

    With ``perturb`` zero the payment is the term's prevision and the
    report is coherent.  A nonzero ``perturb`` overpays by that amount,
    and the gain prevision comes out equal to it.
    """
    quantity = engine.random_quantity(term)
    support = engine.support(term)
    paid = engine.prevision(term) + Fraction(perturb)
    gains = paid - quantity
    gain_prevision = conditional_prevision(engine.cp, gains, support)
    return BetReport(term, support, paid, gains, gain_prevision)
