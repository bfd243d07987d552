"""Locations of the bundled desk-scale problem files."""

from __future__ import annotations

from importlib import resources
from pathlib import Path

#: The mini test suite, in canonical order.
MINI_SUITE = (
    "SYL/SYL001-1.p",
    "CHN/CHN001-1.p",
    "CHN/CHN002-1.p",
    "PHL/PHL001-1.p",
    "PHL/PHL002-1.p",
    "EQC/EQC001-1.p",
    "EQC/EQC002-1.p",
    "EQC/EQC003-1.p",
    "REF/REF001-1.p",
    "REL/REL001-1.p",
    "HRN/HRN001-1.p",
    "FLD/FLD001-1.p",
    "INC/INC001-1.p",
    "SAT/SAT001-1.p",
    "SAT/SAT002-1.p",
)

#: Mini-suite members that are unsatisfiable and ground or near-ground
#: (variables range over the problem's own constants), so a finite
#: truth-table oracle can confirm any refutation.
GROUND_UNSAT_SUITE = (
    "SYL/SYL001-1.p",
    "CHN/CHN001-1.p",
    "CHN/CHN002-1.p",
    "PHL/PHL001-1.p",
    "PHL/PHL002-1.p",
    "EQC/EQC001-1.p",
    "EQC/EQC002-1.p",
    "EQC/EQC003-1.p",
    "REF/REF001-1.p",
    "REL/REL001-1.p",
    "HRN/HRN001-1.p",
    "INC/INC001-1.p",
)


def problems_root() -> Path:
    """Directory holding ``Problems/`` and ``Axioms/``."""
    return Path(str(resources.files("satenv").joinpath("problems")))


def problem_path(name: str) -> Path:
    """Absolute path of a bundled problem, e.g. ``SYL/SYL001-1.p``."""
    return problems_root() / "Problems" / name


def mini_suite() -> list[Path]:
    return [problem_path(name) for name in MINI_SUITE]


def ground_unsat_suite() -> list[Path]:
    return [problem_path(name) for name in GROUND_UNSAT_SUITE]


def socrates_problem() -> Path:
    return problem_path("SYL/SYL001-1.p")
