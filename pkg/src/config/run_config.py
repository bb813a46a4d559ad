"""
Validated configuration of one command-line run
"""
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .settings import settings

CommandName = Literal["h1dr", "pairing", "residues", "cartier", "di-check", "example1"]


class RunConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    command: CommandName
    spec: str
    precision: int = Field(default_factory=lambda: settings.WORKING_PRECISION, ge=settings.MIN_PRECISION)
    seed: int = Field(default_factory=lambda: settings.DEFAULT_SEED, ge=0)
    out: Optional[str] = None
    json_output: bool = False
    samples: int = Field(default_factory=lambda: settings.RANDOM_SAMPLES, ge=0)
    omega: Optional[str] = None
    omega2: Optional[str] = None
    gram: bool = False

    @model_validator(mode="after")
    def _check_arguments(self) -> "RunConfig":
        if self.command in ("residues", "cartier") and self.omega is None:
            raise ValueError(f"{self.command} needs --omega")
        if self.command == "pairing" and not self.gram and (self.omega is None or self.omega2 is None):
            raise ValueError("pairing needs --omega and --omega2, or --gram")
        return self
