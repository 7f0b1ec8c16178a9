from equivalences import MorphismMap
from logtools import get_logger

from .errors import NotInjective, NotSurjective

logger = get_logger(__name__)


def brute_force_inverse(f: MorphismMap) -> MorphismMap:
    """Inverts a finite map by nested search, independently of its stored inverse.

    Args:
        f: The map to invert.

    Returns:
        MorphismMap: The inverse, from f's codomain to f's domain.

    Raises:
        NotInjective: With the first pair (i < j, lexicographic) sharing an image.
        NotSurjective: With the first codomain element that is never hit.
    """
    n = len(f.domain)
    for i in range(n):
        for j in range(i + 1, n):
            if f.table[i] == f.table[j]:
                logger.info(f"{f.dom_label} → {f.cod_label} identifies two points")
                raise NotInjective(
                    f"{f.dom_label} → {f.cod_label} is not injective", (f.domain[i], f.domain[j])
                )
    inverse = []
    for c, element in enumerate(f.codomain):
        hits = [i for i in range(n) if f.table[i] == c]
        if not hits:
            raise NotSurjective(f"{f.dom_label} → {f.cod_label} is not surjective", (element,))
        inverse.append(hits[0])
    return MorphismMap(f.cod_label, f.dom_label, f.codomain, f.domain, tuple(inverse), f.table)
