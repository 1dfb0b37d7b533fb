from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Optional

if TYPE_CHECKING:
    from .group import Decomposition
    from .measure import Measure

BRANCHES = (
    "I.2(a)", "I.2(b)", "I.2(c)",
    "II.1", "II.2", "II.3", "II.4",
    "corollary-1",
)


@dataclass(frozen=True)
class TecVerdict:
    """Outcome of a triviality decision.

    ``branch`` names the satisfied condition for a positive verdict
    (``"oracle"`` when it came from enumeration) and is ``"counterexample"``
    for a negative one, in which case ``counterexample`` holds an equivalent
    measure that is not a shift of the input.
    """

    tec: bool
    branch: str
    decomposition: Optional[Decomposition] = None
    normalizing_shift: int = 0
    counterexample: Optional[Measure] = None
    pattern: Optional[int] = None
