"""
Memo store selection: Redis as shared storage when enabled, in-memory otherwise.
"""
import logging
from typing import Any, Dict, Optional

from rtilde.config import settings
from rtilde.memory import BaseMemoStore, InMemoryMemoStore
from rtilde.redis_memory import RedisMemoStore

logger = logging.getLogger(__name__)

# In-memory fallback tables, one per namespace, shared by every query of the process
memo_stores: Dict[str, InMemoryMemoStore] = {}

_redis_client: Optional[Any] = None
_redis_checked = False


def get_redis_client() -> Optional[Any]:
    """Create the Redis client on first use; None when Redis is disabled or unreachable."""
    global _redis_client, _redis_checked
    if _redis_checked:
        return _redis_client
    _redis_checked = True

    if not settings.redis.enabled:
        logger.debug("Redis is disabled in settings. Using in-memory memo tables.")
        return None

    try:
        import redis
        logger.info(f"Redis settings: host={settings.redis.host}, port={settings.redis.port}, db={settings.redis.db}")
        client = redis.Redis(
            host=settings.redis.host,
            port=settings.redis.port,
            password=settings.redis.password or None,
            db=settings.redis.db,
            decode_responses=True,
            socket_timeout=5,
            socket_connect_timeout=5
        )
        client.ping()
        logger.info("Connected to Redis for shared memo tables")
        _redis_client = client
    except ImportError as e:
        logger.error(f"Redis package not installed: {e}")
        logger.warning("Falling back to in-memory memo tables.")
    except Exception as e:
        logger.error(f"Failed to initialize Redis client: {e}")
        logger.warning("Falling back to in-memory memo tables. Please check your Redis configuration.")
    return _redis_client


def reset_redis_client() -> None:
    """Forget the cached client so the next call reconnects (used after settings change)."""
    global _redis_client, _redis_checked
    _redis_client = None
    _redis_checked = False


def get_memo_store(namespace: str) -> BaseMemoStore:
    """Get the memo table for a namespace with Redis as primary storage and in-memory as fallback."""
    client = get_redis_client()
    if client is not None:
        logger.debug(f"Using Redis memo table {namespace}")
        return RedisMemoStore(
            namespace=namespace,
            redis_client=client,
            ttl=settings.redis.ttl,
            key_prefix=settings.redis.key_prefix
        )

    if not settings.cache.enabled:
        return InMemoryMemoStore(max_entries=settings.cache.max_entries)

    if namespace not in memo_stores:
        memo_stores[namespace] = InMemoryMemoStore(max_entries=settings.cache.max_entries)
        logger.debug(f"Created in-memory memo table {namespace}")
    return memo_stores[namespace]
