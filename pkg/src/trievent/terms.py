"""Compound conditional terms and the world-reduct rewriting engine.

Terms are immutable trees built from basic conditionals with negation,
conjunction, disjunction and the two constants.  Structural equality of
the dataclass nodes is the identity used for reduct de-duplication and
for memoization downstream; no commutativity-aware canonicalization is
performed here.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, SpaceMismatchError
from .events import Event, WorldSpace


class CondTerm:
    """Base class for conditional term nodes.  Nodes are immutable values."""

    __slots__ = ()

    def __invert__(self):
        return Not(self)

    def __and__(self, other):
        return And(self, _as_term(other))

    def __or__(self, other):
        return Or(self, _as_term(other))


def _as_term(value) -> CondTerm:
    if not isinstance(value, CondTerm):
        raise TypeError(f"expected a CondTerm, got {type(value).__name__}")
    return value


@dataclass(frozen=True)
class BasicConditional(CondTerm):
    """Three-valued conditional: true on ab, false on (neg a)b, void on neg b.

    The antecedent must not be the impossible event.
    """

    consequent: Event
    antecedent: Event

    def __post_init__(self):
        if self.consequent.space != self.antecedent.space:
            raise SpaceMismatchError("consequent and antecedent use different spaces")
        if self.antecedent.is_empty:
            raise DomainError("conditional antecedent must not be the impossible event")


@dataclass(frozen=True)
class Not(CondTerm):
    arg: CondTerm


@dataclass(frozen=True)
class And(CondTerm):
    left: CondTerm
    right: CondTerm


@dataclass(frozen=True)
class Or(CondTerm):
    left: CondTerm
    right: CondTerm


@dataclass(frozen=True)
class Constant(CondTerm):
    truth: bool


ONE = Constant(True)
ZERO = Constant(False)


def cond_set(term: CondTerm) -> frozenset[BasicConditional]:
    """The set of distinct basic conditionals appearing in the term."""
    found: set[BasicConditional] = set()
    stack = [term]
    while stack:
        node = stack.pop()
        match node:
            case BasicConditional():
                found.add(node)
            case Not(arg):
                stack.append(arg)
            case And(left, right) | Or(left, right):
                stack.append(left)
                stack.append(right)
            case Constant():
                pass
            case _:
                raise TypeError(f"not a conditional term: {node!r}")
    return frozenset(found)


def term_space(term: CondTerm) -> WorldSpace | None:
    """The common world space of the term's leaves; None for constant terms."""
    space = None
    for basic in cond_set(term):
        if space is None:
            space = basic.antecedent.space
        elif basic.antecedent.space != space:
            raise SpaceMismatchError("term mixes leaves from different world spaces")
    return space


def antecedent_disjunction(term: CondTerm, space: WorldSpace | None = None) -> Event:
    """Disjunction of the antecedents of the term's basic conditionals.

    A term without basic conditionals (the constants) has antecedent
    disjunction TOP; the ambient space must then be supplied.
    """
    own = term_space(term)
    if own is not None and space is not None and own != space:
        raise SpaceMismatchError("term does not live on the given world space")
    if own is None:
        if space is None:
            raise ValueError("constant term: supply the world space explicitly")
        return space.top
    mask = 0
    for basic in cond_set(term):
        mask |= basic.antecedent.mask
    return Event(own, mask)


def _norm_not(arg: CondTerm) -> CondTerm:
    if arg == ONE:
        return ZERO
    if arg == ZERO:
        return ONE
    return Not(arg)


def _norm_and(left: CondTerm, right: CondTerm) -> CondTerm:
    if left == ONE:
        return right
    if right == ONE:
        return left
    if left == ZERO or right == ZERO:
        return ZERO
    return And(left, right)


def _norm_or(left: CondTerm, right: CondTerm) -> CondTerm:
    if left == ONE or right == ONE:
        return ONE
    if left == ZERO:
        return right
    if right == ZERO:
        return left
    return Or(left, right)


def normalize(term: CondTerm) -> CondTerm:
    """Absorb constants bottom-up until no rule applies.

    The rules are exactly: not 1 -> 0, not 0 -> 1, r & 1 -> r, r & 0 -> 0,
    r | 1 -> 1, r | 0 -> r (and their mirrored forms).  The result is a
    constant or a constant-free term; no other simplification happens.
    """
    match term:
        case BasicConditional() | Constant():
            return term
        case Not(arg):
            return _norm_not(normalize(arg))
        case And(left, right):
            return _norm_and(normalize(left), normalize(right))
        case Or(left, right):
            return _norm_or(normalize(left), normalize(right))
        case _:
            raise TypeError(f"not a conditional term: {term!r}")


def reduce(term: CondTerm, world: int) -> CondTerm:
    """The world-reduct of the term.

    Every basic conditional decided at the world is replaced by a
    constant (1 where both consequent and antecedent hold, 0 where the
    antecedent holds but the consequent fails), then constants are
    absorbed with the :func:`normalize` rules.  Undecided leaves are left
    untouched, so a world outside the antecedent disjunction of a
    normalized term returns the term unchanged.
    """
    match term:
        case Constant():
            return term
        case BasicConditional(consequent=a, antecedent=b):
            if b.has(world):
                return ONE if a.has(world) else ZERO
            return term
        case Not(arg):
            return _norm_not(reduce(arg, world))
        case And(left, right):
            return _norm_and(reduce(left, world), reduce(right, world))
        case Or(left, right):
            return _norm_or(reduce(left, world), reduce(right, world))
        case _:
            raise TypeError(f"not a conditional term: {term!r}")


def proper_reducts(term: CondTerm, space: WorldSpace | None = None) -> frozenset[CondTerm]:
    """All world-reducts of the term distinct from the term itself."""
    own = term_space(term)
    if own is None:
        own = space
    if own is None:
        # A constant reduces to itself at every world.
        return frozenset()
    reducts = {reduce(term, w) for w in range(own.size)}
    reducts.discard(term)
    return frozenset(reducts)


def basic_occurrences(term: CondTerm) -> int:
    """Number of basic-conditional leaf occurrences (the recursion measure)."""
    match term:
        case Constant():
            return 0
        case BasicConditional():
            return 1
        case Not(arg):
            return basic_occurrences(arg)
        case And(left, right) | Or(left, right):
            return basic_occurrences(left) + basic_occurrences(right)
        case _:
            raise TypeError(f"not a conditional term: {term!r}")


def _event_to_str(event: Event, event_name=None) -> str:
    if event_name is not None:
        name = event_name(event)
        if name is not None:
            return name
    return str(event)


def term_to_str(term: CondTerm, event_name=None) -> str:
    """Render a term in the CLI grammar.

    ``event_name`` may map an :class:`Event` back to a declared name;
    unnamed events fall back to TOP/BOT or a literal world set.  Chains
    of one associative connective print without inner parentheses.
    """

    def render(node: CondTerm, parent: str) -> str:
        match node:
            case Constant(truth):
                return "TRUE" if truth else "FALSE"
            case BasicConditional(consequent=a, antecedent=b):
                return f"[{_event_to_str(a, event_name)}|{_event_to_str(b, event_name)}]"
            case Not(arg):
                return "~" + render(arg, "not")
            case And(left, right):
                body = f"{render(left, 'and')} & {render(right, 'and')}"
                return f"({body})" if parent == "not" else body
            case Or(left, right):
                body = f"{render(left, 'or')} v {render(right, 'or')}"
                return f"({body})" if parent in ("not", "and") else body
            case _:
                raise TypeError(f"not a conditional term: {node!r}")

    return render(term, "top")
