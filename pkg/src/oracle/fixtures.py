"""The canonical fixtures, built in memory from the category builders.

The same structures ship as canonical documents in ``fixtures/``; the
``fixtures`` command regenerates those files from these builders.
"""

from dataclasses import dataclass
from typing import Callable

from distlaw import SplitEpiPair, validate_action, validate_split_pair
from equivalences import (
    CrossedModule,
    PreCrossedModule,
    validate_crossed_module,
    validate_precrossed,
)
from fincat import (
    alternating_group,
    bundle_of,
    cyclic_group,
    groupoid_inverses,
    idempotent_with_involution,
    indiscrete_groupoid,
    semilattice,
    symmetric_group,
)


@dataclass(frozen=True)
class Fixture:
    """A named, validated structure.

    Attributes:
        name: Short name, e.g. ``fix-a``.
        kind: Document kind of the payload.
        payload: The structure.
    """

    name: str
    kind: str
    payload: CrossedModule | PreCrossedModule | SplitEpiPair

    @property
    def filename(self) -> str:
        return f"{self.name}.{self.kind}.json"


def fix_a() -> CrossedModule:
    """S₃ acting on A₃ by conjugation, κ the inclusion."""
    s3, a3 = symmetric_group(3), alternating_group(3)
    inv = groupoid_inverses(s3)
    table = {
        (b, y): a3.morphism(s3.names[s3.compose_all([b, s3.morphism(a3.names[y]), inv(b)])])
        for b in s3.morphisms
        for y in a3.morphisms
    }
    action = validate_action(s3, a3, table)
    return validate_crossed_module(action, [s3.morphism(name) for name in a3.names])


def fix_b() -> CrossedModule:
    """Z₂ acting trivially on Z₂, κ the identity."""
    z2 = cyclic_group(2)
    action = validate_action(z2, cyclic_group(2), [[y for y in z2.morphisms] for _ in z2.morphisms])
    return validate_crossed_module(action, list(z2.morphisms))


def fix_c() -> CrossedModule:
    """The indiscrete groupoid on two objects transporting the bundle Z₂ ⊔ Z₂, κ trivial."""
    labels = ("0", "1")
    base = indiscrete_groupoid(labels)
    fiber = bundle_of(labels, [cyclic_group(2), cyclic_group(2)])
    table = {}
    for b in base.morphisms:
        target = base.objects.labels[base.tgt[b]]
        for y in fiber.morphisms:
            if fiber.tgt[y] == base.src[b]:
                element, _ = fiber.names[y].split("@")
                table[(b, y)] = fiber.morphism(f"{element}@{target}")
    action = validate_action(base, fiber, table)
    return validate_crossed_module(action, [base.identities[fiber.src[y]] for y in fiber.morphisms])


def fix_d() -> SplitEpiPair:
    """The monoid {1, a, g} over the semilattice {1, a} with s(g) = 1.

    The kernel is {1, g} and q(1, a) = a = g·a = q(g, a), so q is not injective.
    """
    total, base = idempotent_with_involution(), semilattice()
    i = [total.morphism(name) for name in base.names]
    s = [base.morphism({"g": "1"}.get(name, name)) for name in total.names]
    return validate_split_pair(total, base, i, s)


def fix_e() -> PreCrossedModule:
    """S₃ over the trivial group with trivial action and κ; Peiffer fails."""
    base, fiber = cyclic_group(1), symmetric_group(3)
    action = validate_action(base, fiber, [list(fiber.morphisms)])
    return validate_precrossed(action, [0] * fiber.size)


FIXTURE_BUILDERS: dict[str, tuple[str, Callable]] = {
    "fix-a": ("xmod", fix_a),
    "fix-b": ("xmod", fix_b),
    "fix-c": ("xmod", fix_c),
    "fix-d": ("splitepi", fix_d),
    "fix-e": ("prexmod", fix_e),
}


def get_fixture(name: str) -> Fixture:
    kind, build = FIXTURE_BUILDERS[name]
    return Fixture(name, kind, build())


def all_fixtures() -> list[Fixture]:
    return [get_fixture(name) for name in FIXTURE_BUILDERS]
