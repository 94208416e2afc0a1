"""The versioned list of known, expected divergences.

Computed results that contradict a published claim are carried here so
reports can flag them as expected instead of failing.
"""

import functools
from importlib import resources

from pydantic import BaseModel
from pydantic import ConfigDict


class ExampleDivergence(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    example: str
    check: str
    note: str = ""


class TheoremDivergence(BaseModel):
    """A theorem direction known to fail on some instances.

    ``direction=None`` covers every direction of the theorem.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    theorem: str
    direction: str | None = None
    note: str = ""


class DivergenceList(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    version: int
    examples: tuple[ExampleDivergence, ...] = ()
    theorems: tuple[TheoremDivergence, ...] = ()

    def example_entry(
        self, example: str, check: str
    ) -> ExampleDivergence | None:
        return next(
            (
                entry
                for entry in self.examples
                if entry.example == example and entry.check == check
            ),
            None,
        )

    def covers_theorem(self, theorem: str, directions: list[str]) -> bool:
        """True if every failing direction of ``theorem`` is listed."""
        listed = [e for e in self.theorems if e.theorem == theorem]
        if any(entry.direction is None for entry in listed):
            return True
        known = {entry.direction for entry in listed}
        return bool(directions) and all(d in known for d in directions)


@functools.cache
def load_divergences() -> DivergenceList:
    """Load the list shipped in ``sit_rings/data/divergences.json``."""
    text = (
        resources.files("sit_rings")
        .joinpath("data", "divergences.json")
        .read_text(encoding="utf-8")
    )
    return DivergenceList.model_validate_json(text)
