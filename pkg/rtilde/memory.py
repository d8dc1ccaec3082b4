import logging
import threading
from abc import ABC, abstractmethod
from collections import OrderedDict
from typing import Any, Optional

logger = logging.getLogger(__name__)


# Base abstract class for memo tables
class BaseMemoStore(ABC):
    """Abstract base class for memo table implementations.

    Keys are strings, values are JSON-compatible (nested lists of integers).
    """

    @abstractmethod
    def get(self, key: str) -> Optional[Any]:
        """Return the stored value, or None on a miss."""
        pass

    @abstractmethod
    def set(self, key: str, value: Any) -> None:
        """Store a value."""
        pass

    @abstractmethod
    def clear(self) -> None:
        """Remove every entry of this store."""
        pass

    @abstractmethod
    def __len__(self) -> int:
        pass


# In-memory implementation
class InMemoryMemoStore(BaseMemoStore):
    """In-memory memo table with LRU eviction, safe to share between threads."""

    def __init__(self, max_entries: int = 500000):
        self.max_entries = max_entries
        self._data: "OrderedDict[str, Any]" = OrderedDict()
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def get(self, key: str) -> Optional[Any]:
        with self._lock:
            if key in self._data:
                self._data.move_to_end(key)
                self.hits += 1
                return self._data[key]
            self.misses += 1
            return None

    def set(self, key: str, value: Any) -> None:
        with self._lock:
            self._data[key] = value
            self._data.move_to_end(key)
            while len(self._data) > self.max_entries:
                evicted, _ = self._data.popitem(last=False)
                logger.debug(f"Evicted memo entry {evicted}")

    def clear(self) -> None:
        with self._lock:
            self._data.clear()

    def __len__(self) -> int:
        with self._lock:
            return len(self._data)
