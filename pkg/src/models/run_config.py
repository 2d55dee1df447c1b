"""
Validated command-line configuration.
"""

from typing import Dict, Optional, Tuple

from pydantic import Field, model_validator

from src.models.base import FrozenModel

COMMANDS: Dict[str, Tuple[str, ...]] = {
    "compute": ("n",),
    "oracles": (),
    "triangle": (),
    "census": ("p",),
    "predict": ("p",),
    "lemma21": ("p", "k"),
    "lemma34": ("p", "j"),
    "acoeffs": ("p",),
    "divpop": ("p", "q"),
    "verify": (),
}

ENGINES = ("recurrence", "hno", "multiset")
CENSUS_SOURCES = ("exact", "predictor")


class RunConfig(FrozenModel):
    """One subcommand plus its flags."""

    command: str
    n: Optional[int] = Field(default=None, ge=0)
    max_n: Optional[int] = Field(default=None, ge=0)
    p: Optional[int] = None
    k: Optional[int] = Field(default=None, ge=0)
    t: Optional[int] = Field(default=None, ge=0)
    q: Optional[int] = None
    j: Optional[int] = Field(default=None, ge=0)
    r: Optional[int] = Field(default=None, ge=0)
    engine: str = "recurrence"
    style: str = "paper"
    source: str = "exact"
    method: str = "generating"
    suite: Optional[str] = None
    cache_path: Optional[str] = None
    allow_expensive: bool = False

    @model_validator(mode="after")
    def _check_command(self) -> "RunConfig":
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        missing = [f"--{name.replace('_', '-')}" for name in COMMANDS[self.command] if getattr(self, name) is None]
        if missing:
            raise ValueError(f"{self.command} requires {', '.join(missing)}")
        if self.command == "predict" and (self.n is None) == (self.k is None):
            raise ValueError("predict requires exactly one of --n and --k")
        if self.command == "predict" and self.n is not None and self.r is not None:
            raise ValueError("predict takes --r only with --k")
        if self.engine not in ENGINES:
            raise ValueError(f"unknown engine {self.engine!r}")
        if self.source not in CENSUS_SOURCES:
            raise ValueError(f"unknown source {self.source!r}")
        return self
