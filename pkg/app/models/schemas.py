"""Pydantic schemas for reports, records and suite configuration."""

from datetime import datetime
from typing import Any, Literal, Optional, Union

from pydantic import BaseModel, Field, model_validator

from app.core.config import settings

INFINITE = "infinite"

Provenance = Literal["PAPER", "DERIVED", "TRIVIAL"]
Profile = Literal["theorems", "conjecture"]

# --- Invariants ---


class StaircaseInvariants(BaseModel):
    """Closed-form invariants of CS_n."""

    n: int
    chi: int
    omega: int
    alpha: int
    diam: int


class InvariantReport(BaseModel):
    """Exact invariants of one graph."""

    vertices: int = Field(..., ge=1)
    edges: int = Field(..., ge=0)
    components: int = Field(..., ge=1)
    diameter: Union[int, Literal["infinite"]]
    chi: int = Field(..., ge=1)
    omega: int = Field(..., ge=1)
    alpha: int = Field(..., ge=1)
    alpha_prime: int = Field(..., ge=0)
    triangle_free: bool
    bipartite: bool


class IsomorphismReport(BaseModel):
    """Outcome of an isomorphism search; the witness is a list of 1-based [v, image] pairs."""

    g_vertices: int
    h_vertices: int
    isomorphic: bool
    witness: Optional[list[list[int]]] = None


# --- Decomposition ---


class DecompositionReport(BaseModel):
    """Labeled edge-set comparison between Γ3 of a union and a summand construction."""

    instance: str
    lhs_vertices: int
    lhs_edges: int
    rhs_vertices: int
    rhs_edges: int
    class_vertices: dict[str, int]
    class_edges_equal: dict[str, bool]
    cross_class_edges: list[str] = Field(default_factory=list)
    missing_edges: list[str] = Field(default_factory=list)
    extra_edges: list[str] = Field(default_factory=list)
    verdict: bool


# --- Suite ---


class SuiteConfig(BaseModel):
    """Parameters of one verification run."""

    n_min: int = Field(default=3, ge=3)
    n_max: int = Field(default=9, ge=3)
    seed: int = 42
    profile: Profile = "theorems"
    corrupt: bool = Field(default=False, description="Inject a known-bad instance (self-test)")
    vertex_budget: int = Field(default=200, gt=0)
    np_hard_budget: int = Field(default=64, gt=0)
    iso_budget: int = Field(default=200, gt=0)
    aut_budget: int = Field(default=120, gt=0)
    conjecture_budget: int = Field(default=12, gt=0)
    oracle_instances: int = Field(default=200, ge=0)
    oracle_max_vertices: int = Field(default=12, ge=1)
    roundtrip_instances: int = Field(default=100, ge=0)
    roundtrip_max_vertices: int = Field(default=20, ge=1)
    random_pair_instances: int = Field(default=50, ge=0)
    random_pair_max_vertices: int = Field(default=5, ge=1)
    json_path: Optional[str] = None

    @model_validator(mode="after")
    def _check_range(self) -> "SuiteConfig":
        if self.n_min > self.n_max:
            raise ValueError(f"n_min ({self.n_min}) must not exceed n_max ({self.n_max})")
        return self

    @classmethod
    def from_settings(cls, **overrides: Any) -> "SuiteConfig":
        """Build a config from the application settings, then apply overrides."""
        values: dict[str, Any] = {
            "n_min": settings.suite_n_min,
            "n_max": settings.suite_n_max,
            "seed": settings.suite_seed,
            "vertex_budget": settings.vertex_budget,
            "np_hard_budget": settings.np_hard_budget,
            "iso_budget": settings.iso_budget,
            "aut_budget": settings.aut_budget,
            "conjecture_budget": settings.conjecture_budget,
            "oracle_instances": settings.oracle_instances,
            "oracle_max_vertices": settings.oracle_max_vertices,
            "roundtrip_instances": settings.roundtrip_instances,
            "roundtrip_max_vertices": settings.roundtrip_max_vertices,
            "random_pair_instances": settings.random_pair_instances,
            "random_pair_max_vertices": settings.random_pair_max_vertices,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


class CheckRecord(BaseModel):
    """Outcome of one theorem instance."""

    theorem: str
    instance: dict[str, Any]
    expected: Any
    computed: Any
    provenance: Provenance
    verdict: bool
    gating: bool = True
    error: Optional[str] = None
    runtime_s: float = 0.0


class VerificationReport(BaseModel):
    """Full result of a suite run."""

    suite: str
    config: SuiteConfig
    records: list[CheckRecord]
    verdict: bool
    artifact_version: str
    generated_at: datetime
    metrics: dict[str, Any] = Field(default_factory=dict)

    @property
    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if r.gating and not r.verdict]

    @property
    def resource_failures(self) -> list[CheckRecord]:
        return [r for r in self.failures if r.error and r.error.startswith("resource")]

    def deterministic_json(self) -> str:
        """JSON without runtimes, timestamps and metrics."""
        return self.model_dump_json(
            indent=2,
            exclude={
                "generated_at": True,
                "metrics": True,
                "records": {"__all__": {"runtime_s"}},
            },
        )


# --- Conjecture ---


class ConjectureRow(BaseModel):
    """One n of the matching-number conjecture table."""

    n: int
    computed: int
    constructed: int
    formula: int
    constructed_is_matching: bool
    computed_matches_formula: bool
    constructed_matches_formula: bool


class ConjectureReport(BaseModel):
    """Matching-number conjecture table; a conjecture check, not a theorem."""

    kind: Literal["CONJECTURE"] = "CONJECTURE"
    statement: str
    rows: list[ConjectureRow]

    @property
    def all_agree(self) -> bool:
        return all(
            r.constructed_is_matching
            and r.computed_matches_formula
            and r.constructed_matches_formula
            for r in self.rows
        )
