"""Named diagrams: Gauss codes and braid words used by the tests and the CLI."""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import BraidWord, GaussCode, parse_braid_word, parse_gauss_code

# The 2-crossing virtual unknot piece P = O1+U2-U1+O2-; the Kishino
# diagrams are connected sums of P and its crossing-switched mirror.
GAUSS_CODES = {
    "vtrefoil": "O1+O2+U1+U2+",
    "kishino1": "O1+U2-U1+O2-O3+U4-U3+O4-",
    "kishino2": "U1-O2+O1-U2+U3-O4+O3-U4+",
    "kishino3": "O1+U2-U1+O2-U3-O4+O3-U4+",
    "trefoil-gauss": "O1+U2+O3+U1+O2+U3+",
    "kink": "O1+U1+",
}

BRAID_WORDS = {
    "trefoil": ("s1 s1 s1", 2),
    "figure8": ("s1 S2 s1 S2", 3),
}


@dataclass(frozen=True)
class Diagram:
    name: str
    gauss: GaussCode | None = None
    braid: BraidWord | None = None

    @property
    def source(self) -> str:
        if self.gauss is not None:
            return str(self.gauss)
        return f"{self.braid} (strands={self.braid.strands})"


def diagram_names() -> list[str]:
    return list(GAUSS_CODES) + list(BRAID_WORDS)


def named_diagram(name: str) -> Diagram:
    key = name.strip().lower()
    if key in GAUSS_CODES:
        return Diagram(key, gauss=parse_gauss_code(GAUSS_CODES[key]))
    if key in BRAID_WORDS:
        word, n = BRAID_WORDS[key]
        return Diagram(key, braid=parse_braid_word(word, n))
    raise KeyError(f"unknown diagram {name!r}")
