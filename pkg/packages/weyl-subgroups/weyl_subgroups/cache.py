# Copyright 2026 The weyl-subgroups Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import collections
import threading
from collections.abc import Callable, Hashable
from typing import Generic, TypeVar

V = TypeVar("V")


class LruCache(Generic[V]):
    """
    A simple implementation of an in-memory LRU cache.
    Thread-safe for concurrent access.
    """

    def __init__(self, capacity: int) -> None:
        self.cache: collections.OrderedDict[Hashable, V] = collections.OrderedDict()
        self.capacity = capacity
        self._lock = threading.RLock()

    def get(self, key: Hashable) -> V | None:
        """
        Retrieves an item from the cache and marks it as recently used.
        Returns None if the key is not found.
        """
        with self._lock:
            if key not in self.cache:
                return None
            self.cache.move_to_end(key)
            return self.cache[key]

    def put(self, key: Hashable, value: V) -> None:
        """
        Adds an item to the cache. If the cache is full, the least
        recently used item is removed.
        """
        with self._lock:
            self.cache[key] = value
            self.cache.move_to_end(key)
            if len(self.cache) > self.capacity:
                self.cache.popitem(last=False)

    def get_or_build(self, key: Hashable, build: Callable[[], V]) -> V:
        """Returns the cached value for key, building and storing it on a miss."""
        value = self.get(key)
        if value is not None:
            return value
        # Built without holding the lock; the first value stored wins.
        built = build()
        with self._lock:
            value = self.get(key)
            if value is None:
                self.put(key, built)
                value = built
            return value

    def clear(self) -> None:
        with self._lock:
            self.cache.clear()

    def __len__(self) -> int:
        with self._lock:
            return len(self.cache)
