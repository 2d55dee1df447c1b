"""
Base data models for etapoly.
All domain values are immutable once constructed.
"""

from pydantic import BaseModel, ConfigDict


class FrozenModel(BaseModel):
    """Base Pydantic model with common configuration."""

    model_config = ConfigDict(frozen=True, from_attributes=True)
