"""Per-structure verification reports."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of the three-way equivalence check on one structure.

    c1 is intra-regularity, c2 the bi-ideal triple condition, c3 the
    quasi-ideal triple condition.  witnesses holds (condition, witness)
    pairs for whichever conditions failed; timing_ms is the wall time
    spent on each condition.
    """

    structure_id: str
    c1: bool
    c2: bool
    c3: bool
    equivalence_ok: bool
    witnesses: tuple = ()
    timing_ms: tuple = (0.0, 0.0, 0.0)

    def __post_init__(self):
        if self.equivalence_ok != (self.c1 == self.c2 == self.c3):
            raise ValueError("equivalence_ok must equal (c1 == c2 == c3)")
