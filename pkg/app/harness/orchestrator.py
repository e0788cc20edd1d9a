"""Suite orchestrator.

Runs the theorem checks concurrently in worker threads:
  1. Select the checks for the profile (plus the self-test when corrupting)
  2. Run each check under a semaphore sized by ``settings.max_workers``
  3. Assemble records in catalogue order into one VerificationReport

Tracks per-check runtimes and verdict counts throughout.
"""

import asyncio
import uuid
from datetime import datetime, timezone

from app import __version__
from app.core.config import settings
from app.core.errors import Gamma3Error, ResourceError
from app.core.logging import bind_run, get_logger
from app.core.metrics import MetricsCollector, create_metrics
from app.harness.checks import CHECKS, CONJECTURE_CHECKS, CheckFn, check_corrupted
from app.models.schemas import CheckRecord, SuiteConfig, VerificationReport

logger = get_logger(__name__)


def select_checks(cfg: SuiteConfig) -> dict[str, CheckFn]:
    if cfg.profile == "conjecture":
        chosen = {name: CHECKS[name] for name in CONJECTURE_CHECKS}
    else:
        chosen = dict(CHECKS)
    if cfg.corrupt:
        chosen["self_test"] = check_corrupted
    return chosen


async def _run_check(
    name: str,
    check: CheckFn,
    cfg: SuiteConfig,
    semaphore: asyncio.Semaphore,
    metrics: MetricsCollector,
) -> list[CheckRecord]:
    async with semaphore:
        metrics.start_timer(name)
        try:
            records = await asyncio.to_thread(check, cfg)
        except ResourceError as exc:
            records = [
                CheckRecord(
                    theorem=name,
                    instance={},
                    expected=None,
                    computed=None,
                    provenance="DERIVED",
                    verdict=False,
                    error=f"resource: {exc}",
                )
            ]
        except Gamma3Error as exc:
            logger.error("suite_check_error", check=name, error=str(exc))
            records = [
                CheckRecord(
                    theorem=name,
                    instance={},
                    expected=None,
                    computed=None,
                    provenance="DERIVED",
                    verdict=False,
                    error=f"error: {exc}",
                )
            ]
        elapsed = metrics.stop_timer(name)

    for record in records:
        if record.gating:
            metrics.record_verdict(
                record.verdict, resource=bool(record.error and record.error.startswith("resource"))
            )
    logger.info(
        "suite_check_complete",
        check=name,
        records=len(records),
        failed=sum(1 for r in records if r.gating and not r.verdict),
        latency=round(elapsed, 3),
    )
    return records


async def run_suite(cfg: SuiteConfig) -> VerificationReport:
    """Run every selected check and return the report.

    The overall verdict is true iff every gating record is true.
    """
    run_id = str(uuid.uuid4())[:8]
    metrics = create_metrics(run_id)
    bind_run(run_id=run_id, profile=cfg.profile)
    checks = select_checks(cfg)
    logger.info(
        "suite_start",
        n_min=cfg.n_min,
        n_max=cfg.n_max,
        seed=cfg.seed,
        checks=len(checks),
    )

    semaphore = asyncio.Semaphore(settings.max_workers)
    batches = await asyncio.gather(
        *(_run_check(name, check, cfg, semaphore, metrics) for name, check in checks.items())
    )
    records = [record for batch in batches for record in batch]
    verdict = all(r.verdict for r in records if r.gating)

    report = VerificationReport(
        suite=cfg.profile,
        config=cfg,
        records=records,
        verdict=verdict,
        artifact_version=__version__,
        generated_at=datetime.now(timezone.utc),
        metrics=metrics.summary(),
    )
    logger.info(
        "suite_complete",
        verdict=verdict,
        records=len(records),
        failed=len(report.failures),
        latency=round(metrics.total_latency, 3),
    )
    return report


def run_suite_sync(cfg: SuiteConfig) -> VerificationReport:
    return asyncio.run(run_suite(cfg))
