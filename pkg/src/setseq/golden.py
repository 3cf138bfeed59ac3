"""Loaders for the golden certificates shipped with the package.

These are the explicitly known labelings of the smallest odd trees:
the 4-vertex star and the three odd trees on 8 vertices (star,
double star, and the degree-{1,3} caterpillar).  They anchor the
verifier tests and serve as bases for the larger constructions.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .graphs import Graph
from .io import load_certificate
from .labelings import Labeling

GOLDEN_NAMES = ("star4", "odd8_star", "odd8_doublestar", "odd8_caterpillar")


def data_path(name: str) -> Path:
    return Path(str(resources.files("setseq").joinpath("data", name)))


def load_golden(name: str) -> tuple[Graph, Labeling]:
    if name not in GOLDEN_NAMES and name != "p16":
        raise KeyError(f"unknown golden certificate {name!r}")
    return load_certificate(data_path(f"{name}.cert"))


def golden_star4() -> tuple[Graph, Labeling]:
    return load_golden("star4")


def golden_odd8() -> dict[str, tuple[Graph, Labeling]]:
    """The three labeled odd trees on 8 vertices."""
    return {
        "star": load_golden("odd8_star"),
        "doublestar": load_golden("odd8_doublestar"),
        "caterpillar": load_golden("odd8_caterpillar"),
    }
