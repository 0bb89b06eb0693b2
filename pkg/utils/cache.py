import threading
from collections import OrderedDict
from functools import wraps
from typing import Any, Callable, Dict, Hashable, Optional

from utils.logger import get_logger

logger = get_logger("ComputationCache")


class ComputationCache:
	def __init__(self, max_entries: int = 256):
		"""
		In-memory LRU store for expensive per-field computations
		(class groups, fundamental units, prime decompositions).

		Args:
			max_entries: Upper bound on stored results before eviction
		"""
		self.max_entries = max_entries
		self._store: "OrderedDict[Hashable, Any]" = OrderedDict()
		self._key_locks: Dict[Hashable, threading.Lock] = {}  # Per-key locks so one value is computed once
		self._guard = threading.Lock()
		self._hits = 0
		self._misses = 0

	def _lock_for(self, key: Hashable) -> threading.Lock:
		with self._guard:
			lock = self._key_locks.get(key)
			if lock is None:
				lock = self._key_locks[key] = threading.Lock()
			return lock

	def get_or_compute(self, key: Hashable, compute: Callable[[], Any]) -> Any:
		with self._guard:
			if key in self._store:
				self._store.move_to_end(key)
				self._hits += 1
				return self._store[key]

		with self._lock_for(key):
			with self._guard:
				if key in self._store:
					self._hits += 1
					return self._store[key]
			value = compute()
			with self._guard:
				self._misses += 1
				self._store[key] = value
				self._evict()
			return value

	def _evict(self):
		while len(self._store) > self.max_entries:
			old_key, _ = self._store.popitem(last=False)
			self._key_locks.pop(old_key, None)
			logger.debug(f"Evicted cache entry {old_key[0] if isinstance(old_key, tuple) else old_key}")

	def resize(self, max_entries: int):
		with self._guard:
			self.max_entries = max_entries
			self._evict()
		logger.debug(f"Cache resized to {max_entries} entries")

	def clear(self):
		with self._guard:
			self._store.clear()
			self._key_locks.clear()
			self._hits = self._misses = 0

	def stats(self) -> Dict[str, int]:
		with self._guard:
			return {"entries": len(self._store), "hits": self._hits, "misses": self._misses}


computation_cache = ComputationCache()


def cached(operation: str, key_func: Optional[Callable[..., Hashable]] = None):
	"""
	Memoize a pure function in the shared computation cache under (operation, key).
	"""

	def decorator(func):
		@wraps(func)
		def wrapper(*args, **kwargs):
			key = (operation, key_func(*args, **kwargs) if key_func else (args, tuple(sorted(kwargs.items()))))
			return computation_cache.get_or_compute(key, lambda: func(*args, **kwargs))

		wrapper.uncached = func
		return wrapper

	return decorator
