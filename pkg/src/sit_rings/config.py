"""Size caps for ring construction and analysis."""

from collections.abc import Iterator
from contextlib import contextmanager
from contextvars import ContextVar

from pydantic import BaseModel
from pydantic import ConfigDict
from pydantic import Field

from .exceptions import CapExceeded


class Caps(BaseModel):
    """Upper bounds on ring orders.

    ``construction`` bounds the order of any ring or ambient set built by a
    constructor; ``analysis`` bounds the order of rings handed to the
    exhaustive classification and decomposition searches.
    """

    model_config = ConfigDict(frozen=True)

    construction: int = Field(default=65_536, ge=1)
    analysis: int = Field(default=4_096, ge=1)

    @classmethod
    def uniform(cls, limit: int) -> "Caps":
        return cls(construction=limit, analysis=limit)


_current_caps: ContextVar[Caps] = ContextVar("sit_rings_caps", default=Caps())


def get_caps() -> Caps:
    return _current_caps.get()


@contextmanager
def use_caps(caps: Caps) -> Iterator[Caps]:
    """Override the caps for the duration of a ``with`` block."""
    token = _current_caps.set(caps)
    try:
        yield caps
    finally:
        _current_caps.reset(token)


def check_construction(order: int, what: str) -> None:
    """Raise :class:`CapExceeded` if ``order`` exceeds the construction cap.

    :param order: The order about to be materialised.
    :param what: Short description used in the error message.
    :raises CapExceeded: If the cap is exceeded.
    """
    cap = get_caps().construction
    if order > cap:
        raise CapExceeded(
            f"{what} would have order {order}, construction cap is {cap}",
            context={"order": order, "cap": cap, "what": what},
        )


def check_analysis(order: int, what: str) -> None:
    """Raise :class:`CapExceeded` if ``order`` exceeds the analysis cap."""
    cap = get_caps().analysis
    if order > cap:
        raise CapExceeded(
            f"{what} has order {order}, analysis cap is {cap}",
            context={"order": order, "cap": cap, "what": what},
        )
