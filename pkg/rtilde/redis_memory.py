"""
Redis-backed implementation of a memo table.
"""
import json
import logging
from typing import Any, Optional

from rtilde.memory import BaseMemoStore

logger = logging.getLogger(__name__)


class RedisMemoStore(BaseMemoStore):
    """Redis-backed memo table; one namespace per logical table."""

    def __init__(self, namespace: str, redis_client: Any, ttl: int = 86400, key_prefix: str = "rtilde:"):
        """
        Initialize a Redis-backed memo table.

        Args:
            namespace: Name of the table, e.g. ``canon:<fingerprint>``
            redis_client: Redis client instance
            ttl: Time-to-live of each entry in seconds (default: 1 day)
            key_prefix: Prefix shared by every key written by rtilde
        """
        self.namespace = namespace
        self.redis = redis_client
        self.ttl = ttl
        self.key_prefix = key_prefix

    def _get_key(self, key: str) -> str:
        """Get the Redis key for an entry of this table."""
        return f"{self.key_prefix}{self.namespace}:{key}"

    def get(self, key: str) -> Optional[Any]:
        try:
            data = self.redis.get(self._get_key(key))
            if data:
                # If Redis client has decode_responses=True, data is already a string
                if isinstance(data, bytes):
                    data = data.decode('utf-8')
                return json.loads(data)
        except Exception as e:
            logger.error(f"Error reading memo entry from Redis: {e}")
        return None

    def set(self, key: str, value: Any) -> None:
        redis_key = self._get_key(key)
        try:
            self.redis.set(redis_key, json.dumps(value))
            self.redis.expire(redis_key, self.ttl)
        except Exception as e:
            # A lost write only costs a recomputation
            logger.error(f"Error writing memo entry to Redis: {e}")

    def clear(self) -> None:
        try:
            for redis_key in self.redis.scan_iter(match=f"{self.key_prefix}{self.namespace}:*"):
                self.redis.delete(redis_key)
        except Exception as e:
            logger.error(f"Error clearing memo table {self.namespace} from Redis: {e}")

    def __len__(self) -> int:
        try:
            return sum(1 for _ in self.redis.scan_iter(match=f"{self.key_prefix}{self.namespace}:*"))
        except Exception as e:
            logger.error(f"Error counting memo entries in Redis: {e}")
            return 0
