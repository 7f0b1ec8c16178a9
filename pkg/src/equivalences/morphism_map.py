from dataclasses import dataclass, field
from typing import Callable, Hashable, Sequence

from logtools import get_logger

logger = get_logger(__name__)

Element = Hashable


@dataclass(frozen=True)
class MorphismMap:
    """A finite map between constructed sets, with its inverse when bijective.

    Attributes:
        dom_label: Name of the domain set, e.g. ``(A□_B I)B``.
        cod_label: Name of the codomain set.
        domain: Domain elements (ids or tuples of ids), in canonical order.
        codomain: Codomain elements, in canonical order.
        table: Codomain position of the image of each domain element.
        inverse: Domain position of the preimage of each codomain element, or None.
    """

    dom_label: str
    cod_label: str
    domain: tuple[Element, ...]
    codomain: tuple[Element, ...]
    table: tuple[int, ...]
    inverse: tuple[int, ...] | None = None
    _dom_index: dict = field(init=False, repr=False, compare=False)
    _cod_index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_dom_index", {e: i for i, e in enumerate(self.domain)})
        object.__setattr__(self, "_cod_index", {e: i for i, e in enumerate(self.codomain)})

    @property
    def bijective(self) -> bool:
        return self.inverse is not None

    def __call__(self, element: Element) -> Element:
        return self.codomain[self.table[self._dom_index[element]]]

    def preimage(self, element: Element) -> Element:
        """The unique preimage of a codomain element; needs a bijective map."""
        if self.inverse is None:
            raise ValueError(f"{self.dom_label} → {self.cod_label} is not bijective")
        return self.domain[self.inverse[self._cod_index[element]]]

    def items(self):
        for element, target in zip(self.domain, self.table):
            yield element, self.codomain[target]


def tabulate(
    dom_label: str,
    cod_label: str,
    domain: Sequence[Element],
    codomain: Sequence[Element],
    fn: Callable[[Element], Element],
) -> MorphismMap:
    """Evaluates fn on every domain element and decides bijectivity.

    The image table is built in full; the map is bijective when it is
    injective and the two sets have the same size, in which case the inverse
    table is materialized.

    Args:
        dom_label: Name of the domain set.
        cod_label: Name of the codomain set.
        domain: Domain elements in canonical order.
        codomain: Codomain elements in canonical order.
        fn: The map, returning codomain elements.

    Returns:
        MorphismMap: The tabulated map.
    """
    cod_index = {e: i for i, e in enumerate(codomain)}
    table = tuple(cod_index[fn(element)] for element in domain)
    inverse = None
    if len(domain) == len(codomain) and len(set(table)) == len(table):
        slots = [0] * len(codomain)
        for i, target in enumerate(table):
            slots[target] = i
        inverse = tuple(slots)
    logger.debug(
        f"{dom_label} → {cod_label}: {len(domain)} → {len(codomain)} points, bijective={inverse is not None}"
    )
    return MorphismMap(dom_label, cod_label, tuple(domain), tuple(codomain), table, inverse)


def failure_witness(m: MorphismMap) -> tuple:
    """Why a map is not bijective: the first colliding pair, else the first missed element."""
    seen: dict[int, int] = {}
    for i, target in enumerate(m.table):
        if target in seen:
            return (m.domain[seen[target]], m.domain[i])
        seen[target] = i
    missed = next(j for j in range(len(m.codomain)) if j not in seen)
    return (m.codomain[missed],)
