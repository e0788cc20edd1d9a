"""Tests for Pydantic schemas."""

from datetime import datetime, timezone

import pytest
from pydantic import ValidationError

from app.core.config import Settings
from app.models.schemas import (
    CheckRecord,
    ConjectureReport,
    ConjectureRow,
    InvariantReport,
    IsomorphismReport,
    SuiteConfig,
    VerificationReport,
)


def _record(verdict: bool, gating: bool = True, error: str | None = None) -> CheckRecord:
    return CheckRecord(
        theorem="vertex_count",
        instance={"n": 5},
        expected=10,
        computed=10 if verdict else 9,
        provenance="DERIVED",
        verdict=verdict,
        gating=gating,
        error=error,
        runtime_s=0.25,
    )


def _report(records: list[CheckRecord]) -> VerificationReport:
    return VerificationReport(
        suite="theorems",
        config=SuiteConfig(),
        records=records,
        verdict=all(r.verdict for r in records if r.gating),
        artifact_version="0.1.0",
        generated_at=datetime.now(timezone.utc),
        metrics={"total_latency_s": 1.0},
    )


def test_suite_config_defaults():
    cfg = SuiteConfig()
    assert (cfg.n_min, cfg.n_max, cfg.seed) == (3, 9, 42)
    assert cfg.profile == "theorems"
    assert not cfg.corrupt


def test_suite_config_range():
    with pytest.raises(ValidationError):
        SuiteConfig(n_min=2)
    with pytest.raises(ValidationError):
        SuiteConfig(n_min=8, n_max=5)
    with pytest.raises(ValidationError):
        SuiteConfig(vertex_budget=0)
    with pytest.raises(ValidationError):
        SuiteConfig(profile="lemmas")


def test_from_settings_overrides():
    cfg = SuiteConfig.from_settings(n_max=5, seed=None)
    assert cfg.n_max == 5
    assert cfg.seed == 42


def test_settings_fields(monkeypatch: pytest.MonkeyPatch):
    monkeypatch.setenv("SUITE_N_MAX", "7")
    loaded = Settings()
    assert loaded.suite_n_max == 7
    assert "app_name" not in Settings.model_fields
    assert "debug" not in Settings.model_fields


def test_isomorphism_report_json():
    report = IsomorphismReport(
        g_vertices=2, h_vertices=2, isomorphic=True, witness=[[1, 2], [2, 1]]
    )
    assert IsomorphismReport.model_validate_json(report.model_dump_json()) == report
    assert IsomorphismReport(g_vertices=1, h_vertices=2, isomorphic=False).witness is None


def test_failures():
    report = _report(
        [
            _record(True),
            _record(False),
            _record(False, gating=False),
            _record(False, error="resource: are_isomorphic: 300 vertices"),
        ]
    )
    assert len(report.failures) == 2
    assert len(report.resource_failures) == 1
    assert not report.verdict


def test_deterministic_json_drops_runtime_fields():
    report = _report([_record(True)])
    text = report.deterministic_json()
    assert "runtime_s" not in text
    assert "generated_at" not in text
    assert "total_latency_s" not in text
    assert '"theorem": "vertex_count"' in text
    later = report.model_copy(update={"generated_at": datetime(2030, 1, 1, tzinfo=timezone.utc)})
    assert later.deterministic_json() == text


def test_invariant_report_diameter():
    report = InvariantReport(
        vertices=2,
        edges=0,
        components=2,
        diameter="infinite",
        chi=1,
        omega=1,
        alpha=2,
        alpha_prime=0,
        triangle_free=True,
        bipartite=True,
    )
    assert report.model_dump()["diameter"] == "infinite"
    with pytest.raises(ValidationError):
        InvariantReport(**{**report.model_dump(), "diameter": "unbounded"})
    with pytest.raises(ValidationError):
        InvariantReport(**{**report.model_dump(), "vertices": 0})


def test_conjecture_report_agreement():
    good = ConjectureRow(
        n=6,
        computed=10,
        constructed=10,
        formula=10,
        constructed_is_matching=True,
        computed_matches_formula=True,
        constructed_matches_formula=True,
    )
    report = ConjectureReport(statement="alpha' formula", rows=[good])
    assert report.kind == "CONJECTURE"
    assert report.all_agree
    bad = good.model_copy(update={"computed": 9, "computed_matches_formula": False})
    assert not ConjectureReport(statement="alpha' formula", rows=[good, bad]).all_agree
