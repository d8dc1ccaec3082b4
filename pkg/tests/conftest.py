"""
Shared fixtures: groups, memo tables and Redis clients.
"""
import os
import sys
from unittest.mock import MagicMock

import pytest
import redis

# Add the project root to the Python path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from rtilde.config import settings
from rtilde.coxeter import CoxeterGroup, dihedral_matrix, type_a_matrix
from rtilde.memory import InMemoryMemoStore
from rtilde.redis_memory import RedisMemoStore
from rtilde.stores import memo_stores, reset_redis_client
from rtilde.symmetric import SymmetricGroup


@pytest.fixture(autouse=True)
def fresh_memo_stores():
    """Every test starts without shared memo tables."""
    memo_stores.clear()
    reset_redis_client()
    yield
    memo_stores.clear()


@pytest.fixture
def s3():
    """S_3 on the permutation backend."""
    return SymmetricGroup(3)


@pytest.fixture
def s4():
    """S_4 on the permutation backend."""
    return SymmetricGroup(4)


@pytest.fixture
def generic_s4():
    """S_4 through its Coxeter matrix only."""
    return CoxeterGroup(type_a_matrix(3), store=InMemoryMemoStore())


@pytest.fixture
def dihedral5():
    """I_2(5), a non-crystallographic finite group."""
    return CoxeterGroup(dihedral_matrix(5), store=InMemoryMemoStore())


@pytest.fixture
def mock_redis_client():
    """MagicMock standing in for redis.Redis; every key is a miss."""
    mock_client = MagicMock()
    mock_client.ping.return_value = True
    mock_client.get.return_value = None
    mock_client.set.return_value = True
    mock_client.expire.return_value = True
    mock_client.delete.return_value = True
    mock_client.scan_iter.return_value = iter([])
    return mock_client


@pytest.fixture
def redis_client():
    """Live client on the configured server; skips the test when none answers."""
    try:
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
        return client
    except (redis.exceptions.ConnectionError, redis.exceptions.TimeoutError):
        pytest.skip("Redis server not available")


@pytest.fixture
def redis_store(redis_client):
    """Redis-backed memo table for testing."""
    store = RedisMemoStore(
        namespace="test_table",
        redis_client=redis_client,
        ttl=60,  # Short TTL for tests
        key_prefix="rtilde-test:"
    )
    # Clear any existing data
    store.clear()
    yield store
    # Clean up
    store.clear()


@pytest.fixture
def in_memory_store():
    """In-memory memo table for testing."""
    return InMemoryMemoStore(max_entries=3)
