"""Full conditional probabilities with exact rational values.

A full conditional probability on a finite space is stored as an
ordered family of layers: each layer is a rational distribution on a
nonempty support of worlds, the supports are pairwise disjoint, and
together they cover the space.  ``P(a|b)`` reads off the first layer
that gives ``b`` positive mass, which keeps conditioning on events of
probability zero well defined.  The single-layer case is the ordinary
positive-probability setting.

Everything is an exact :class:`fractions.Fraction`; no floats are ever
introduced, so the algebraic identities checked elsewhere in the
package are exact equalities.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, SpaceMismatchError
from .events import Event, WorldSpace


class ConditionalProbability:
    """Layered family of rational distributions realizing P: A x A' -> [0,1]."""

    def __init__(self, space: WorldSpace, layers):
        """``layers`` is an ordered iterable of mappings world -> weight.

        Worlds may be given by name or index; weights are positive
        rationals (anything :class:`Fraction` accepts) summing to one
        per layer.  Layer supports must be pairwise disjoint and must
        jointly cover the space.
        """
        self.space = space
        built = []
        seen_mask = 0
        for layer_no, raw in enumerate(layers):
            weights: dict[int, Fraction] = {}
            for world, value in raw.items():
                index = space.index(world) if isinstance(world, str) else int(world)
                if not 0 <= index < space.size:
                    raise ValueError(f"layer {layer_no}: world index {index} out of range")
                weight = Fraction(value)
                if weight <= 0:
                    raise ValueError(
                        f"layer {layer_no}: weight for {space.name(index)!r} must be positive"
                    )
                if index in weights:
                    raise ValueError(
                        f"layer {layer_no}: duplicate world {space.name(index)!r}"
                    )
                weights[index] = weight
            if not weights:
                raise ValueError(f"layer {layer_no} is empty")
            if sum(weights.values()) != 1:
                raise ValueError(f"layer {layer_no}: weights must sum to 1")
            mask = 0
            for index in weights:
                mask |= 1 << index
            if mask & seen_mask:
                raise ValueError(f"layer {layer_no}: support overlaps an earlier layer")
            seen_mask |= mask
            built.append((mask, dict(sorted(weights.items()))))
        if not built:
            raise ValueError("at least one layer is required")
        if seen_mask != (1 << space.size) - 1:
            missing = [space.name(i) for i in range(space.size) if not seen_mask >> i & 1]
            raise ValueError(f"layer supports must cover the space; missing {missing}")
        self._layers = tuple(built)
        # Grow-only cache of P(.|b) singleton distributions, keyed by b's mask.
        self._dist_cache: dict[int, tuple[Fraction, ...]] = {}

    @classmethod
    def uniform(cls, space: WorldSpace) -> "ConditionalProbability":
        n = space.size
        return cls(space, [{i: Fraction(1, n) for i in range(n)}])

    @classmethod
    def positive(cls, space: WorldSpace, weights) -> "ConditionalProbability":
        """Single full-support layer from a mapping world -> weight."""
        return cls(space, [weights])

    @property
    def layers(self) -> tuple[tuple[int, dict[int, Fraction]], ...]:
        return self._layers

    @property
    def is_positive(self) -> bool:
        return len(self._layers) == 1

    def _layer_mass(self, layer: dict[int, Fraction], mask: int) -> Fraction:
        return sum(
            (w for i, w in layer.items() if mask >> i & 1), start=Fraction(0)
        )

    def _select_layer(self, mask: int) -> dict[int, Fraction]:
        for support, layer in self._layers:
            if support & mask:
                return layer
        raise AssertionError("unreachable: layer supports cover the space")

    def cond_prob(self, a: Event, b: Event) -> Fraction:
        """P(a|b) for b not impossible."""
        self._check_event(a)
        self._check_event(b)
        if b.is_empty:
            raise DomainError("cannot condition on the impossible event")
        layer = self._select_layer(b.mask)
        return self._layer_mass(layer, a.mask & b.mask) / self._layer_mass(layer, b.mask)

    def prob(self, a: Event) -> Fraction:
        """Unconditional probability P(a) = P(a|TOP)."""
        return self.cond_prob(a, self.space.top)

    def conditional_distribution(self, b: Event) -> tuple[Fraction, ...]:
        """P({w}|b) for every world w, as a vector in declaration order."""
        self._check_event(b)
        if b.is_empty:
            raise DomainError("cannot condition on the impossible event")
        cached = self._dist_cache.get(b.mask)
        if cached is not None:
            return cached
        layer = self._select_layer(b.mask)
        total = self._layer_mass(layer, b.mask)
        zero = Fraction(0)
        dist = tuple(
            layer.get(i, zero) / total if b.mask >> i & 1 else zero
            for i in range(self.space.size)
        )
        self._dist_cache[b.mask] = dist
        return dist

    def _check_event(self, event: Event) -> None:
        if event.space != self.space:
            raise SpaceMismatchError("event belongs to a different world space")

    def validate(self, max_space_size: int = 6) -> "ValidationReport":
        """Exhaustively check the conditional-probability axioms for this table."""
        return validate_conditional_probability(self.space, self.cond_prob, max_space_size)

    def __repr__(self):
        parts = []
        for _, layer in self._layers:
            inner = ", ".join(f"{self.space.name(i)}={w}" for i, w in layer.items())
            parts.append("{" + inner + "}")
        return f"ConditionalProbability({'; '.join(parts)})"


@dataclass
class ValidationReport:
    """Outcome of the axiom check: pass, or the first violated instance."""

    ok: bool
    violation: str | None = None
    checked: int = 0

    def __bool__(self):
        return self.ok


def validate_conditional_probability(space, cond_prob, max_space_size: int = 6) -> ValidationReport:
    """Check the conditional-probability axioms against any P(a|b) table.

    ``cond_prob`` is any callable of two events returning a rational.
    The check is exhaustive over the finite space: additivity and unit
    mass of every P(.|b), P(b|b) = 1, and the product rule
    P(ab|c) = P(a|bc) P(b|c) for all b, c with bc nonempty.  Stops at
    the first violation found.
    """
    n = space.size
    if n > max_space_size:
        raise DomainError(
            f"exhaustive axiom check limited to {max_space_size} worlds (space has {n})"
        )
    checked = 0
    events = list(space.all_events())
    nonempty = [e for e in events if not e.is_empty]
    singletons = space.atoms()

    # The table is deterministic, so memoize lookups: the product-rule
    # sweep asks for the same pairs over and over.
    cache: dict[tuple[int, int], Fraction] = {}

    def lookup(a, b):
        key = (a.mask, b.mask)
        value = cache.get(key)
        if value is None:
            value = cache[key] = Fraction(cond_prob(a, b))
        return value

    for b in nonempty:
        # Additivity over atoms pins down P(.|b) as a measure; unit mass
        # and nonnegativity make it a probability.
        by_atoms = {}
        for w in singletons:
            value = lookup(w, b)
            checked += 1
            if value < 0:
                return ValidationReport(False, f"P({w}|{b}) = {value} < 0", checked)
            by_atoms[w.mask] = value
        for a in events:
            total = sum(
                (by_atoms[w.mask] for w in singletons if w.leq(a)), start=Fraction(0)
            )
            value = lookup(a, b)
            checked += 1
            if value != total:
                return ValidationReport(
                    False,
                    f"additivity: P({a}|{b}) = {value} but the atom masses sum to {total}",
                    checked,
                )
        top_mass = lookup(space.top, b)
        checked += 1
        if top_mass != 1:
            return ValidationReport(False, f"P(TOP|{b}) = {top_mass} != 1", checked)
        value = lookup(b, b)
        checked += 1
        if value != 1:
            return ValidationReport(False, f"P({b}|{b}) = {value} != 1", checked)

    for b in nonempty:
        for c in nonempty:
            bc = b.conj(c)
            if bc.is_empty:
                continue
            pb_c = lookup(b, c)
            for a in events:
                lhs = lookup(a.conj(b), c)
                rhs = lookup(a, bc) * pb_c
                checked += 1
                if lhs != rhs:
                    return ValidationReport(
                        False,
                        f"product rule: P({a.conj(b)}|{c}) = {lhs} but "
                        f"P({a}|{bc}) * P({b}|{c}) = {rhs}",
                        checked,
                    )
    return ValidationReport(True, None, checked)
