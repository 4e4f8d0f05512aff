# Copyright Cade Stocker 2026

"""
Parameter validation schemas for the command line using Pydantic.
    Every subcommand builds one of these from its options before doing any work, so a bad combination
    (a generator family without its parameter, a negative seed, an unknown algorithm) fails fast with exit code 2.

The CLI catches pydantic.ValidationError and reports the first message.
"""

from pathlib import Path
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

ALGORITHMS = ('oracle', 'convex-dp', 'bistar', 'diam3', 'tristar', 'algsimple', 'alglocal')
FAMILIES = ('arc', 'diambound', 'p4k2', 'random', 'convex', 'counterexample9', 'caterpillar')
CONSTRUCTIONS = ('arc', 'diambound', 'p4k2')


class RunConfig(BaseModel):
    """Options shared by every subcommand, resolved against the configuration class."""

    model_config = ConfigDict(strict=False)

    subcommand: str = Field(..., min_length=1)
    input: Optional[Path] = None
    output: Optional[Path] = None
    algo: Optional[str] = None
    d: Optional[int] = Field(None, ge=1)
    k: Optional[int] = Field(None, ge=1)
    n: Optional[int] = Field(None, ge=1)
    seed: int = Field(0, ge=0)
    size: Optional[int] = Field(None, ge=1)
    eps: float = Field(1e-6, gt=0, lt=1)
    jobs: int = Field(1, ge=1)
    cap: int = Field(10, ge=1)
    render: bool = False


class GenParams(BaseModel):
    """Schema for `planetree gen`; each family requires its own parameter."""

    model_config = ConfigDict(strict=False)

    family: str
    n: Optional[int] = None
    d: Optional[int] = None
    k: Optional[int] = None
    seed: int = Field(0, ge=0)
    form: Optional[str] = None
    spine: Optional[Path] = None

    @field_validator('family')
    @classmethod
    def validate_family(cls, v: str) -> str:
        if v not in FAMILIES:
            raise ValueError(f"family must be one of {', '.join(FAMILIES)}")
        return v

    @model_validator(mode='after')
    def check_family_params(self) -> 'GenParams':
        if self.family == 'arc' and (self.n is None or self.n < 1):
            raise ValueError("arc needs --n of at least 1")
        if self.family == 'diambound' and (self.d is None or self.d < 2):
            raise ValueError("diambound needs --d of at least 2")
        if self.family == 'p4k2' and (self.k is None or self.k < 1):
            raise ValueError("p4k2 needs --k of at least 1")
        if self.family == 'random' and (self.n is None or self.n < 2):
            raise ValueError("random needs --n of at least 2")
        if self.family == 'convex' and (self.n is None or self.n < 3):
            raise ValueError("convex needs --n of at least 3")
        if self.family == 'caterpillar' and not (self.form or self.spine):
            raise ValueError("caterpillar needs --form, e.g. '1,0,2', or --spine FILE")
        if self.form and self.spine:
            raise ValueError("give either --form or --spine, not both")
        return self


class SolveParams(BaseModel):
    """Schema for `planetree solve`."""

    model_config = ConfigDict(strict=False)

    input: Path
    algo: str
    output: Optional[Path] = None
    roots: Optional[str] = None
    start: Optional[Path] = None
    spine_output: Optional[Path] = None
    eps: float = Field(1e-6, gt=0, lt=1)
    cap: int = Field(10, ge=1)
    jobs: int = Field(1, ge=1)

    @field_validator('algo')
    @classmethod
    def validate_algo(cls, v: str) -> str:
        if v not in ALGORITHMS:
            raise ValueError(f"algo must be one of {', '.join(ALGORITHMS)}")
        return v

    @field_validator('roots')
    @classmethod
    def validate_roots(cls, v: Optional[str]) -> Optional[str]:
        if v is None:
            return v
        parts = v.split(',')
        if not all(p.strip().isdigit() for p in parts):
            raise ValueError("roots must be comma separated point indices, e.g. '0,3'")
        return v

    def root_indices(self):
        return tuple(int(p) for p in self.roots.split(',')) if self.roots else None


class RenderParams(BaseModel):
    """Schema for `planetree render`."""

    model_config = ConfigDict(strict=False)

    input: Path
    output: Path
    tree: Optional[Path] = None
    hull: bool = False
    eps: float = Field(1e-6, gt=0, lt=1)

    @field_validator('output')
    @classmethod
    def validate_output(cls, v: Path) -> Path:
        if v.suffix.lower() != '.svg':
            raise ValueError("render output must be an .svg file")
        return v


class RatioParams(BaseModel):
    """Schema for `planetree ratio`: a construction and the parameter values to tabulate."""

    model_config = ConfigDict(strict=False)

    construction: str
    values: str = Field(..., min_length=1)
    cap: int = Field(10, ge=1)

    @field_validator('construction')
    @classmethod
    def validate_construction(cls, v: str) -> str:
        if v not in CONSTRUCTIONS:
            raise ValueError(f"construction must be one of {', '.join(CONSTRUCTIONS)}")
        return v

    @field_validator('values')
    @classmethod
    def validate_values(cls, v: str) -> str:
        parts = [p.strip() for p in v.split(',')]
        if not parts or not all(p.isdigit() and int(p) >= 1 for p in parts):
            raise ValueError("values must be comma separated positive integers, e.g. '10,50,100'")
        return v

    def value_list(self):
        return [int(p) for p in self.values.split(',')]
