"""Actions of a base category on a bundle and their distributive laws.

An action b▷y is stored densely as table[b][y], defined exactly on the pairs
with src(b) = tgt(y); other cells hold UNDEFINED.
"""

from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from common.errors import XmodkitError
from fincat import (
    UNDEFINED,
    FinCatX,
    IdOnObjFunctor,
    compose_functors,
    is_bundle,
    validate_functor,
)
from logtools import get_logger

logger = get_logger(__name__)


class ActionError(XmodkitError):
    """Raised when an action table or a distributive law is malformed."""


class NotABundle(ActionError):
    """Raised when the acted-upon category has morphisms between distinct objects."""


class AxiomIViolation(ActionError):
    """t(b▷y) = t(b) fails."""


class AxiomIIViolation(ActionError):
    """b▷(y·y') = (b▷y)·(b▷y') or b▷1 = 1 fails."""


class AxiomIIIViolation(ActionError):
    """(b'·b)▷y = b'▷(b▷y) or 1▷y = y fails."""


class NotFirstComponentForm(ActionError):
    """Raised when a distributive law does not have the form (b, y) ↦ (y', b)."""


class NotSplit(ActionError):
    """Raised when s∘i is not the identity functor."""


class ActionNotPreserved(ActionError):
    """Raised when a pair of functors does not intertwine two actions."""


@dataclass(frozen=True)
class ActionSystem:
    """An action of B on the bundle Y.

    Attributes:
        base: The acting category B.
        fiber: The bundle Y.
        table: table[b][y] = b▷y, UNDEFINED off the composable pairs.
    """

    base: FinCatX
    fiber: FinCatX
    table: tuple[tuple[int, ...], ...]

    def act(self, b: int, y: int) -> int:
        return self.table[b][y]

    def composable_pairs(self) -> Iterator[tuple[int, int]]:
        """All (b, y) with src(b) = tgt(y), lexicographic."""
        for b in self.base.morphisms:
            for y in self.fiber.morphisms:
                if self.base.src[b] == self.fiber.tgt[y]:
                    yield b, y


def _dense_action(
    base: FinCatX, fiber: FinCatX, table: Mapping[tuple[int, int], int] | Sequence[Sequence[int]]
) -> tuple[tuple[int, ...], ...]:
    rows = [[UNDEFINED] * fiber.size for _ in base.morphisms]
    if isinstance(table, Mapping):
        for (b, y), value in table.items():
            if base.src[b] != fiber.tgt[y]:
                raise ActionError("Action given on a non-composable pair", (b, y))
            rows[b][y] = value
    else:
        for b in base.morphisms:
            for y in fiber.morphisms:
                if base.src[b] == fiber.tgt[y]:
                    rows[b][y] = table[b][y]
    for b in base.morphisms:
        for y in fiber.morphisms:
            if base.src[b] != fiber.tgt[y]:
                continue
            value = rows[b][y]
            if value == UNDEFINED:
                raise ActionError("Action undefined on a composable pair", (b, y))
            if not 0 <= value < fiber.size:
                raise ActionError("Action value out of range", (b, y))
    return tuple(tuple(row) for row in rows)


def validate_action(
    base: FinCatX,
    fiber: FinCatX,
    table: Mapping[tuple[int, int], int] | Sequence[Sequence[int]],
) -> ActionSystem:
    """Checks an action table against the three action axioms.

    Axiom (i) is checked first, then the actor-side axiom (iii), then the
    fiber-side axiom (ii); within each, the lexicographically first violation
    is reported.

    Args:
        base: The acting category B.
        fiber: The bundle Y over the same objects.
        table: b▷y, as a dict keyed (b, y) or a dense nested sequence.

    Returns:
        ActionSystem: The validated action.

    Raises:
        NotABundle: If Y has a morphism between distinct objects.
        ActionError: If the table is partial or the object sets differ.
        AxiomIViolation, AxiomIIViolation, AxiomIIIViolation: With witnesses.
    """
    if base.objects != fiber.objects:
        raise ActionError("Base and fiber live over different object sets")
    if not is_bundle(fiber):
        first = next(y for y in fiber.morphisms if fiber.src[y] != fiber.tgt[y])
        raise NotABundle(f"{fiber.names[first]} joins distinct objects", (first,))
    system = ActionSystem(base, fiber, _dense_action(base, fiber, table))
    B, Y, act = base, fiber, system.act

    for b, y in system.composable_pairs():
        if Y.tgt[act(b, y)] != B.tgt[b]:
            raise AxiomIViolation(f"t({B.names[b]}▷{Y.names[y]}) ≠ t({B.names[b]})", (b, y))

    for y in Y.morphisms:
        if act(B.identities[Y.tgt[y]], y) != y:
            raise AxiomIIIViolation(f"1▷{Y.names[y]} ≠ {Y.names[y]}", (y,))
    for b2 in B.morphisms:
        for b in B.morphisms:
            if B.src[b2] != B.tgt[b]:
                continue
            b2b = B.table[b2][b]
            for y in Y.morphisms:
                if Y.tgt[y] == B.src[b] and act(b2b, y) != act(b2, act(b, y)):
                    raise AxiomIIIViolation(
                        f"({B.names[b2]}·{B.names[b]})▷{Y.names[y]} ≠ {B.names[b2]}▷({B.names[b]}▷{Y.names[y]})",
                        (b2, b, y),
                    )

    for b in B.morphisms:
        if act(b, Y.identities[B.src[b]]) != Y.identities[B.tgt[b]]:
            raise AxiomIIViolation(f"{B.names[b]}▷1 ≠ 1", (b,))
        fibre = [y for y in Y.morphisms if Y.tgt[y] == B.src[b]]
        for y in fibre:
            for y2 in fibre:
                if act(b, Y.table[y][y2]) != Y.table[act(b, y)][act(b, y2)]:
                    raise AxiomIIViolation(
                        f"{B.names[b]}▷({Y.names[y]}·{Y.names[y2]}) ≠ ({B.names[b]}▷{Y.names[y]})·({B.names[b]}▷{Y.names[y2]})",
                        (b, y, y2),
                    )
    logger.debug(f"Validated action of {B.size} base morphisms on {Y.size} fiber morphisms")
    return system


@dataclass(frozen=True)
class DistLawMap:
    """A map x: B□_X Y → Y□_X B on composable pairs.

    Attributes:
        base: The category B.
        fiber: The bundle Y.
        table: x(b, y) = (y', b') keyed by composable (b, y).
    """

    base: FinCatX
    fiber: FinCatX
    table: Mapping[tuple[int, int], tuple[int, int]]

    def __call__(self, b: int, y: int) -> tuple[int, int]:
        return self.table[(b, y)]


def action_to_distlaw(act: ActionSystem) -> DistLawMap:
    """The distributive law (b, y) ↦ (b▷y, b) of an action."""
    return DistLawMap(
        act.base,
        act.fiber,
        {(b, y): (act.act(b, y), b) for b, y in act.composable_pairs()},
    )


def distlaw_to_action(x: DistLawMap) -> ActionSystem:
    """Reads the action off a distributive law with (e□1)·x = 1□e.

    Args:
        x: The distributive law.

    Returns:
        ActionSystem: b▷y = first component of x(b, y), validated.

    Raises:
        NotFirstComponentForm: If some x(b, y) has second component ≠ b.
        ActionError: If the resulting table violates an action axiom.
    """
    for (b, y), (_, b2) in sorted(x.table.items()):
        if b2 != b:
            raise NotFirstComponentForm(
                f"x({x.base.names[b]}, {x.fiber.names[y]}) moves the base component", (b, y)
            )
    return validate_action(x.base, x.fiber, {key: value[0] for key, value in x.table.items()})


@dataclass(frozen=True)
class SplitEpiPair:
    """A split epimorphism of categories over X: s∘i = 1.

    Attributes:
        total: The category A.
        base: The category B.
        i: The section B → A.
        s: The retraction A → B.
    """

    total: FinCatX
    base: FinCatX
    i: IdOnObjFunctor
    s: IdOnObjFunctor


def validate_split_pair(
    total: FinCatX,
    base: FinCatX,
    i: Sequence[int] | Mapping[int, int],
    s: Sequence[int] | Mapping[int, int],
) -> SplitEpiPair:
    """Validates the functors of a split pair and checks s∘i = 1.

    Invertibility of q is not checked here; see equivalences.validate_splitepi.

    Raises:
        FunctorError: If i or s is not a functor.
        NotSplit: Naming the first b with s(i(b)) ≠ b.
    """
    i_functor = validate_functor(i, base, total)
    s_functor = validate_functor(s, total, base)
    composite = compose_functors(s_functor, i_functor)
    for b in base.morphisms:
        if composite(b) != b:
            raise NotSplit(f"s(i({base.names[b]})) ≠ {base.names[b]}", (b,))
    return SplitEpiPair(total, base, i_functor, s_functor)


@dataclass(frozen=True)
class ActionMorphism:
    """A morphism of actions (ν: Y → Y', β: B → B') with ν(b▷y) = β(b)▷ν(y)."""

    source: ActionSystem
    target: ActionSystem
    nu: IdOnObjFunctor
    beta: IdOnObjFunctor


def validate_action_morphism(
    source: ActionSystem,
    target: ActionSystem,
    nu: Sequence[int] | Mapping[int, int],
    beta: Sequence[int] | Mapping[int, int],
) -> ActionMorphism:
    """Checks that (ν, β) are functors intertwining the two actions.

    Raises:
        FunctorError: If ν or β is not a functor.
        ActionNotPreserved: On the first (b, y) with ν(b▷y) ≠ β(b)▷ν(y).
    """
    nu_functor = validate_functor(nu, source.fiber, target.fiber)
    beta_functor = validate_functor(beta, source.base, target.base)
    for b, y in source.composable_pairs():
        if nu_functor(source.act(b, y)) != target.act(beta_functor(b), nu_functor(y)):
            raise ActionNotPreserved("ν(b▷y) ≠ β(b)▷ν(y)", (b, y))
    return ActionMorphism(source, target, nu_functor, beta_functor)

