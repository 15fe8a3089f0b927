__all__ = ["OperatorCache", "operator_cache"]


import threading
from typing import Any, Callable, Dict, Hashable


class OperatorCache:
    """
    A thread-safe registry of precomputed discrete operators.

    Features:
    - Builds an operator once per (grid key, operator name) pair.
    - Hands the same read-only object to every caller afterwards.
    - Can be released wholesale, e.g. between sweep members with large grids.
    """

    def __init__(self):
        """Initializes an empty cache guarded by a re-entrant lock."""
        self.__lock = threading.RLock()
        self.__entries: Dict[Hashable, Any] = dict()

    @property
    def lock(self) -> threading.RLock:
        """Returns the internal lock object for ensuring thread safety."""
        return self.__lock

    @property
    def entries(self) -> Dict[Hashable, Any]:
        """Returns the mapping of keys to cached operators."""
        return self.__entries

    def get(self, key: Hashable, factory: Callable[[], Any]) -> Any:
        """
        Retrieves the operator stored under ``key``, building it if absent.

        The lock is re-entrant because factories may request other cached
        operators of the same grid.

        Args:
            key (Hashable): Typically ``(grid.key, name)``.
            factory (Callable[[], Any]): Builds the operator on a miss.

        Returns:
            Any: The cached operator.
        """
        with self.lock:
            if key not in self.entries:
                self.entries[key] = factory()
            return self.entries[key]

    def release(self, grid_key: Hashable = None) -> None:
        """
        Drops cached operators, either all of them or those of one grid.

        Args:
            grid_key (Hashable): When given, only entries whose key starts with it.
        """
        with self.lock:
            if grid_key is None:
                self.entries.clear()
                return
            for key in [k for k in self.entries if isinstance(k, tuple) and k[0] == grid_key]:
                self.entries.pop(key)

    def __len__(self) -> int:
        with self.lock:
            return len(self.entries)


operator_cache = OperatorCache()
