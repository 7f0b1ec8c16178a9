"""Conversions between document kinds along the equivalences.

Direct edges apply an equivalence functor (or, for prexmod → relcat, upgrade
through the Peiffer identity first). Forgetful edges drop structure and are
only taken as hops of an explicitly requested ``--via`` chain.
"""

from typing import Callable, Sequence

from distlaw import semidirect_product
from equivalences import (
    prex_to_reflgraph,
    reflgraph_to_prex,
    relcat_to_xmod,
    splitepi_to_distlaw,
    validate_crossed_module,
    xmod_to_relcat,
)
from logtools import get_logger

from .documents import DocumentError

logger = get_logger(__name__)

Conversion = Callable[[object], object]


def _prex_to_relcat(pxm):
    return xmod_to_relcat(validate_crossed_module(pxm.action, pxm.kappa.table))


DIRECT: dict[tuple[str, str], Conversion] = {
    ("splitepi", "action"): splitepi_to_distlaw,
    ("action", "splitepi"): lambda action: semidirect_product(action).pair,
    ("reflgraph", "prexmod"): reflgraph_to_prex,
    ("prexmod", "reflgraph"): prex_to_reflgraph,
    ("relcat", "xmod"): relcat_to_xmod,
    ("xmod", "relcat"): xmod_to_relcat,
    ("prexmod", "relcat"): _prex_to_relcat,
}

FORGETFUL: dict[tuple[str, str], Conversion] = {
    ("xmod", "prexmod"): lambda xm: xm.precrossed,
    ("prexmod", "action"): lambda pxm: pxm.action,
    ("relcat", "reflgraph"): lambda ic: ic.graph,
    ("reflgraph", "splitepi"): lambda rg: rg.pair,
}


def conversion_path(source: str, target: str, via: Sequence[str] = ()) -> list[tuple[str, str]]:
    """The hops from source to target kind.

    Without ``via`` only a direct edge (or no hop at all, when the kinds
    agree) is allowed. With ``via`` every hop may be direct or forgetful.

    Raises:
        DocumentError: If some hop is not an allowed conversion.
    """
    kinds = [source, *via, target]
    hops = [(a, b) for a, b in zip(kinds, kinds[1:]) if a != b]
    for hop in hops:
        allowed = hop in DIRECT or (via and hop in FORGETFUL)
        if not allowed:
            raise DocumentError(f"No conversion from {hop[0]} to {hop[1]}", ())
    return hops


def convert(structure, source: str, target: str, via: Sequence[str] = ()):
    """Sends a structure along the conversion path, hop by hop."""
    for hop in conversion_path(source, target, via):
        logger.debug(f"Converting {hop[0]} → {hop[1]}")
        edges = DIRECT if hop in DIRECT else FORGETFUL
        structure = edges[hop](structure)
    return structure
