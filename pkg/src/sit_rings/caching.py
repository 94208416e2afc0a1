"""Per-ring memoisation shared by the analysis modules."""

import threading
import weakref
from collections.abc import Callable
from collections.abc import Hashable
from typing import Any

from .ring import FiniteRing


_cache: weakref.WeakKeyDictionary[FiniteRing, dict[Hashable, Any]] = (
    weakref.WeakKeyDictionary()
)
_lock = threading.Lock()


def memoized[T](ring: FiniteRing, key: Hashable, factory: Callable[[], T]) -> T:
    """Return the cached value for ``(ring, key)``, computing it once.

    The factory runs outside the lock; if two threads race, the first
    stored value wins and both callers receive it.
    """
    with _lock:
        slot = _cache.setdefault(ring, {})
        if key in slot:
            return slot[key]
    value = factory()
    with _lock:
        return _cache.setdefault(ring, {}).setdefault(key, value)
