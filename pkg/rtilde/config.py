"""
Settings for computation, memo tables, Redis, rendering and logging.
Every value can be overridden through an RTILDE_* environment variable or a .env file.
"""
import logging
import os
from typing import Any, Dict, Optional

from dotenv import load_dotenv
from pydantic import ConfigDict, Field
from pydantic_settings import BaseSettings

# Load environment variables from .env file
load_dotenv()

DEFAULT_LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


class ComputeSettings(BaseSettings):
    """Settings for the computational core."""
    workers: int = Field(
        default=int(os.getenv("RTILDE_WORKERS", "1")),
        description="Number of worker processes used by verify and scan",
        json_schema_extra={"env": "RTILDE_WORKERS"}
    )
    support_cap: int = Field(
        default=int(os.getenv("RTILDE_SUPPORT_CAP", "200000")),
        description="Maximum number of basis elements in a Hecke algebra expansion",
        json_schema_extra={"env": "RTILDE_SUPPORT_CAP"}
    )
    descent_policy: str = Field(
        default=os.getenv("RTILDE_DESCENT_POLICY", "rightmost"),
        description="Descent used by the R-tilde recursion ('rightmost', 'smallest' or 'largest')",
        json_schema_extra={"env": "RTILDE_DESCENT_POLICY"}
    )
    progress: bool = Field(
        default=os.getenv("RTILDE_PROGRESS", "false").lower() == "true",
        description="Show progress bars on stderr",
        json_schema_extra={"env": "RTILDE_PROGRESS"}
    )

    model_config = ConfigDict(env_file=".env", extra="ignore", env_prefix="RTILDE_")


class CacheSettings(BaseSettings):
    """In-process memo table settings."""
    enabled: bool = Field(
        default=os.getenv("RTILDE_CACHE_ENABLED", "true").lower() == "true",
        description="Whether memo tables are kept between queries",
        json_schema_extra={"env": "RTILDE_CACHE_ENABLED"}
    )
    max_entries: int = Field(
        default=int(os.getenv("RTILDE_CACHE_MAX_ENTRIES", "500000")),
        description="Maximum number of entries per in-memory memo table",
        json_schema_extra={"env": "RTILDE_CACHE_MAX_ENTRIES"}
    )

    model_config = ConfigDict(env_file=".env", extra="ignore", env_prefix="RTILDE_CACHE_")


class RedisSettings(BaseSettings):
    """Redis configuration settings for the shared memo store."""
    enabled: bool = Field(
        default=os.getenv("RTILDE_REDIS_ENABLED", "false").lower() == "true",
        description="Whether Redis is enabled",
        json_schema_extra={"env": "RTILDE_REDIS_ENABLED"}
    )
    host: str = Field(
        default=os.getenv("RTILDE_REDIS_HOST", "localhost"),
        description="Redis host",
        json_schema_extra={"env": "RTILDE_REDIS_HOST"}
    )
    port: int = Field(
        default=int(os.getenv("RTILDE_REDIS_PORT", "6379")),
        description="Redis port",
        json_schema_extra={"env": "RTILDE_REDIS_PORT"}
    )
    password: Optional[str] = Field(
        default=os.getenv("RTILDE_REDIS_PASSWORD", ""),
        description="Redis password",
        json_schema_extra={"env": "RTILDE_REDIS_PASSWORD"}
    )
    db: int = Field(
        default=int(os.getenv("RTILDE_REDIS_DB", "0")),
        description="Redis database number",
        json_schema_extra={"env": "RTILDE_REDIS_DB"}
    )
    ttl: int = Field(
        default=int(os.getenv("RTILDE_REDIS_TTL", "86400")),
        description="Time-to-live of memo entries in seconds (default: 1 day)",
        json_schema_extra={"env": "RTILDE_REDIS_TTL"}
    )
    key_prefix: str = Field(
        default=os.getenv("RTILDE_REDIS_KEY_PREFIX", "rtilde:"),
        description="Prefix of every Redis key written by rtilde",
        json_schema_extra={"env": "RTILDE_REDIS_KEY_PREFIX"}
    )

    model_config = ConfigDict(env_file=".env", extra="ignore", env_prefix="RTILDE_REDIS_")


class RenderSettings(BaseSettings):
    """Pixel geometry of SVG renderings."""
    unit: float = Field(
        default=float(os.getenv("RTILDE_RENDER_UNIT", "40")),
        description="Pixels per layout unit",
        json_schema_extra={"env": "RTILDE_RENDER_UNIT"}
    )
    margin: float = Field(
        default=float(os.getenv("RTILDE_RENDER_MARGIN", "20")),
        description="Canvas margin in pixels",
        json_schema_extra={"env": "RTILDE_RENDER_MARGIN"}
    )
    stroke_width: float = Field(
        default=float(os.getenv("RTILDE_RENDER_STROKE_WIDTH", "3")),
        description="Strand width in pixels",
        json_schema_extra={"env": "RTILDE_RENDER_STROKE_WIDTH"}
    )
    dot_radius: float = Field(
        default=float(os.getenv("RTILDE_RENDER_DOT_RADIUS", "5")),
        description="Radius of dot markers in pixels",
        json_schema_extra={"env": "RTILDE_RENDER_DOT_RADIUS"}
    )

    model_config = ConfigDict(env_file=".env", extra="ignore", env_prefix="RTILDE_RENDER_")


class LoggingSettings(BaseSettings):
    """Logging configuration settings."""
    level: str = Field(
        default=os.getenv("RTILDE_LOG_LEVEL", "WARNING"),
        description="Root log level",
        json_schema_extra={"env": "RTILDE_LOG_LEVEL"}
    )
    format: str = Field(
        default=os.getenv("RTILDE_LOG_FORMAT", DEFAULT_LOG_FORMAT),
        description="Log record format",
        json_schema_extra={"env": "RTILDE_LOG_FORMAT"}
    )

    model_config = ConfigDict(env_file=".env", extra="ignore", env_prefix="RTILDE_LOG_")


class Settings(BaseSettings):
    """Main settings class that combines all configuration settings."""
    compute: ComputeSettings = Field(default_factory=ComputeSettings)
    cache: CacheSettings = Field(default_factory=CacheSettings)
    redis: RedisSettings = Field(default_factory=RedisSettings)
    render: RenderSettings = Field(default_factory=RenderSettings)
    logging: LoggingSettings = Field(default_factory=LoggingSettings)

    model_config = ConfigDict(env_file=".env", extra="ignore")


# Create a global settings instance
settings = Settings()


def get_compute_config() -> Dict[str, Any]:
    """Get compute configuration as a dictionary."""
    return {
        "workers": settings.compute.workers,
        "support_cap": settings.compute.support_cap,
        "descent_policy": settings.compute.descent_policy,
        "progress": settings.compute.progress,
    }


def get_redis_config() -> Dict[str, Any]:
    """Get Redis configuration as a dictionary (password omitted)."""
    return {
        "enabled": settings.redis.enabled,
        "host": settings.redis.host,
        "port": settings.redis.port,
        "db": settings.redis.db,
        "ttl": settings.redis.ttl,
        "key_prefix": settings.redis.key_prefix,
    }


def get_full_config() -> Dict[str, Any]:
    """Get the full configuration as a dictionary."""
    return {
        "compute": get_compute_config(),
        "cache": {
            "enabled": settings.cache.enabled,
            "max_entries": settings.cache.max_entries,
        },
        "redis": get_redis_config(),
        "render": {
            "unit": settings.render.unit,
            "margin": settings.render.margin,
            "stroke_width": settings.render.stroke_width,
            "dot_radius": settings.render.dot_radius,
        },
        "logging": {
            "level": settings.logging.level,
        },
    }


def configure_logging(level: Optional[str] = None) -> None:
    """Configure root logging once for command-line use."""
    name = (level or settings.logging.level).upper()
    logging.basicConfig(level=getattr(logging, name, logging.WARNING), format=settings.logging.format)
