from typing import Literal, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from config import config


class JobConfig(BaseModel):
    """One CLI job: what to load, which pair to build and how far to go."""

    command: Literal["classify", "pipeline"]
    group: str
    class_selector: str = "all"
    irrep: str = "all"
    section: Optional[str] = None
    n_max: int = Field(default_factory=lambda: config.n_max)
    h_max: int = Field(default_factory=lambda: config.h_max)
    max_matrix_dim: int = Field(default_factory=lambda: config.max_matrix_dim)
    out: Optional[str] = None
    verify_only: bool = False
    relations: bool = False
    cohomology: bool = False
    hilbert: bool = False
    output_format: Literal["json", "text"] = "json"

    @field_validator("max_matrix_dim")
    @classmethod
    def _positive_bound(cls, v: int) -> int:
        if v <= 0:
            raise ValueError(f"max_matrix_dim must be positive, got {v}")
        return v

    @field_validator("n_max")
    @classmethod
    def _degree(cls, v: int) -> int:
        if v < 1:
            raise ValueError(f"n_max must be at least 1, got {v}")
        return v

    @model_validator(mode="after")
    def _selectors(self) -> "JobConfig":
        if self.h_max < 0:
            raise ValueError(f"h_max must be nonnegative, got {self.h_max}")
        if self.command == "pipeline":
            if self.class_selector == "all" and self.section is None:
                raise ValueError("pipeline needs --class or --section")
            if self.irrep == "all":
                raise ValueError("pipeline needs --irrep")
        return self

    @property
    def cohomology_degree(self) -> int:
        """Highest Betti number that fits under n_max: H^k needs Lambda^{k+1}."""
        return min(self.h_max, self.n_max - 1)
