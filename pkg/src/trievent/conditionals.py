"""The Boolean algebra structure of compound conditionals.

Modulo the equivalence induced by their random quantities under every
full conditional probability, the terms over a finite space of n worlds
form a finite Boolean algebra whose atoms are indexed by sequences of
n-1 distinct worlds.  The sequence ⟨w_1, ..., w_{n-1}⟩ names the atom

    (β_1|TOP) & (β_2|~β_1) & ... & (β_{n-1} | β_{n-1} v β_n)

where β_k is the singleton event of w_k, each antecedent is the
complement of the earlier singletons, and β_n is the one world left
out.  A term is equivalent to the join of the atoms below it, so
equivalence and entailment reduce to comparing atom sets, and the
prevision of a term under a positive probability is the sum of the
chain weights of its atoms.

There are n! atoms, so everything here is gated by a limit on the
space size (default 8, overridable per call).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import AtomLimitError, DomainError, SpaceMismatchError
from .events import Event, WorldSpace
from .probability import ConditionalProbability
from .terms import (
    And,
    BasicConditional,
    Constant,
    CondTerm,
    Not,
    ONE,
    Or,
    term_space,
)

DEFAULT_ATOM_LIMIT = 8


@dataclass(frozen=True)
class AtomSequence:
    """Sequence of n-1 distinct worlds naming one atom."""

    space: WorldSpace
    seq: tuple[int, ...]

    def __post_init__(self):
        n = self.space.size
        if len(self.seq) != n - 1:
            raise ValueError(f"atom sequence must list {n - 1} worlds")
        if len(set(self.seq)) != len(self.seq):
            raise ValueError("atom sequence worlds must be distinct")
        for index in self.seq:
            if not 0 <= index < n:
                raise ValueError(f"world index {index} out of range")

    @property
    def omitted(self) -> int:
        """The single world the sequence leaves out."""
        present = set(self.seq)
        return next(i for i in range(self.space.size) if i not in present)

    def extended_order(self) -> tuple[int, ...]:
        """The sequence with the omitted world appended: a full ranking."""
        return self.seq + (self.omitted,)

    def names(self) -> tuple[str, ...]:
        return tuple(self.space.name(i) for i in self.seq)

    def __str__(self):
        return "⟨" + ", ".join(self.names()) + "⟩"


def enumerate_atoms(
    space: WorldSpace, limit: int = DEFAULT_ATOM_LIMIT
) -> tuple[AtomSequence, ...]:
    """All n! atom sequences, in lexicographic world order."""
    _check_limit(space, limit)
    n = space.size
    return tuple(
        AtomSequence(space, seq) for seq in itertools.permutations(range(n), n - 1)
    )


def _check_limit(space: WorldSpace, limit: int) -> None:
    if space.size > limit:
        raise AtomLimitError(
            f"atom enumeration needs {space.size}! sequences; "
            f"the limit is {limit} worlds (raise it explicitly to proceed)"
        )


def atom_term(atom: AtomSequence) -> CondTerm:
    """The conjunction of basic conditionals the sequence names."""
    space = atom.space
    term: CondTerm | None = None
    mask_so_far = 0
    full = (1 << space.size) - 1
    for index in atom.seq:
        antecedent = Event(space, full & ~mask_so_far)
        factor = BasicConditional(space.singleton(index), antecedent)
        term = factor if term is None else And(term, factor)
        mask_so_far |= 1 << index
    return ONE if term is None else term


def eval_under_atom(term: CondTerm, atom: AtomSequence) -> bool:
    """Truth value of the term at this atom.

    A basic conditional (a|b) is decided by the first world of the
    atom's extended order that lies in b; it holds iff that world also
    lies in a.  Connectives are then evaluated classically.
    """
    order = atom.extended_order()

    def walk(node: CondTerm) -> bool:
        match node:
            case Constant(truth):
                return truth
            case BasicConditional(consequent=a, antecedent=b):
                if b.space != atom.space:
                    raise SpaceMismatchError("term and atom live on different spaces")
                first = next(w for w in order if b.has(w))
                return a.has(first)
            case Not(arg):
                return not walk(arg)
            case And(left, right):
                return walk(left) and walk(right)
            case Or(left, right):
                return walk(left) or walk(right)
            case _:
                raise TypeError(f"not a conditional term: {node!r}")

    return walk(term)


def atom_set(
    term: CondTerm,
    space: WorldSpace | None = None,
    limit: int = DEFAULT_ATOM_LIMIT,
) -> frozenset[AtomSequence]:
    """The atoms below the term: its identity in the Boolean algebra."""
    own = term_space(term)
    if own is not None and space is not None and own != space:
        raise SpaceMismatchError("term does not live on the given world space")
    if own is None:
        own = space
    if own is None:
        raise ValueError("constant term: supply the world space explicitly")
    return frozenset(
        atom for atom in enumerate_atoms(own, limit) if eval_under_atom(term, atom)
    )


def equiv(
    left: CondTerm,
    right: CondTerm,
    space: WorldSpace | None = None,
    limit: int = DEFAULT_ATOM_LIMIT,
) -> bool:
    """Equality in the Boolean algebra: same atoms on both sides."""
    own = _common_space(left, right, space)
    return atom_set(left, own, limit) == atom_set(right, own, limit)


def leq_term(
    left: CondTerm,
    right: CondTerm,
    space: WorldSpace | None = None,
    limit: int = DEFAULT_ATOM_LIMIT,
) -> bool:
    """Entailment in the Boolean algebra: atom-set inclusion."""
    own = _common_space(left, right, space)
    return atom_set(left, own, limit) <= atom_set(right, own, limit)


def _common_space(left: CondTerm, right: CondTerm, space: WorldSpace | None) -> WorldSpace:
    lspace = term_space(left)
    rspace = term_space(right)
    own = space
    for candidate in (lspace, rspace):
        if candidate is None:
            continue
        if own is None:
            own = candidate
        elif own != candidate:
            raise SpaceMismatchError("terms live on different world spaces")
    if own is None:
        raise ValueError("constant terms: supply the world space explicitly")
    return own


def atom_chain_weight(atom: AtomSequence, cp: ConditionalProbability) -> Fraction:
    """Product of P(β_k | β_k v ... v β_n) along the atom's sequence."""
    if cp.space != atom.space:
        raise SpaceMismatchError("atom and probability live on different spaces")
    space = atom.space
    full = (1 << space.size) - 1
    weight = Fraction(1)
    mask_so_far = 0
    for index in atom.seq:
        rest = Event(space, full & ~mask_so_far)
        weight *= cp.cond_prob(space.singleton(index), rest)
        mask_so_far |= 1 << index
    return weight


def mu_p(
    term: CondTerm,
    cp: ConditionalProbability,
    limit: int = DEFAULT_ATOM_LIMIT,
) -> Fraction:
    """Atom-sum value of the term under a positive probability.

    Sums the chain weights of the atoms below the term.  For a positive
    probability this equals the prevision of the term; the layered case
    is deliberately not claimed here and is only probed experimentally
    by the law-check suites.
    """
    if not cp.is_positive:
        raise DomainError("atom-sum prevision requires a positive (single-layer) probability")
    return sum(
        (atom_chain_weight(atom, cp) for atom in atom_set(term, cp.space, limit)),
        start=Fraction(0),
    )
