"""
Scenario Harness - flagtwist

Runs a registered scenario for a number of seeded trials and assembles a
Report. Trial i uses the seed derived from (seed, i), so a report depends
only on (name, params, seed) and not on the number of workers.
"""

import hashlib
import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from datetime import datetime, timezone
from typing import Dict, List, Literal, Mapping, Optional

from pydantic import BaseModel, Field

from src.errors import BadParams, ExhaustedRetries, HypothesisFailed
from src.scenarios import Quantity, ScenarioParams, get_scenario
from src.settings import FlagTwistSettings, get_settings
from src.validation import validate_seed

logger = logging.getLogger(__name__)

Outcome = Literal["pass", "fail", "hypothesis-not-met"]


# ══════════════════════════════════════════════════════════════════════
# SEEDS
# ══════════════════════════════════════════════════════════════════════

def _hash_seed(text: str) -> int:
    return int.from_bytes(hashlib.sha256(text.encode("utf-8")).digest()[:8], "big")


def derive_seed(seed: int, index: int) -> int:
    """
    Seed of trial index: the first 8 bytes of sha256("<seed>:<index>").

    Examples:
        >>> derive_seed(1, 0) == derive_seed(1, 0)
        True
    """
    return _hash_seed(f"{seed}:{index}")


def retry_seed(trial_seed: int, attempt: int) -> int:
    """Seed for the attempt-th reseeded retry of a trial."""
    return _hash_seed(f"{trial_seed}:retry:{attempt}")


# ══════════════════════════════════════════════════════════════════════
# REPORT MODELS
# ══════════════════════════════════════════════════════════════════════

class CheckRecord(BaseModel):
    expectation: str
    expected: Quantity
    actual: Quantity
    holds: bool


class TrialRecord(BaseModel):
    index: int
    seed: int = Field(description="Seed of the attempt that was evaluated")
    retries: int = 0
    outcome: Outcome
    quantities: Dict[str, Quantity] = Field(default_factory=dict)
    checks: List[CheckRecord] = Field(default_factory=list)
    message: Optional[str] = None


class Verdict(BaseModel):
    status: Literal["pass", "fail", "inconclusive"]
    passed: int
    failed: int
    hypothesis_not_met: int


class Envelope(BaseModel):
    wall_time_s: float
    generated_at: str


class Report(BaseModel):
    scenario: str
    claim: str
    params: ScenarioParams
    seed: int
    trials: List[TrialRecord]
    verdict: Verdict
    notes: List[str] = Field(default_factory=list)
    envelope: Envelope

    def canonical_json(self) -> str:
        """JSON without the envelope; identical for identical inputs."""
        data = self.model_dump(mode="json", exclude={"envelope"})
        return json.dumps(data, indent=2, sort_keys=True) + "\n"

    def full_json(self) -> str:
        return json.dumps(self.model_dump(mode="json"), indent=2, sort_keys=True) + "\n"


def summarize(trials: List[TrialRecord]) -> Verdict:
    """
    pass iff no trial failed and at least one passed; fail iff any failed;
    inconclusive when every trial missed its hypothesis.
    """
    passed = sum(t.outcome == "pass" for t in trials)
    failed = sum(t.outcome == "fail" for t in trials)
    skipped = sum(t.outcome == "hypothesis-not-met" for t in trials)
    if failed:
        status = "fail"
    elif passed:
        status = "pass"
    else:
        status = "inconclusive"
    return Verdict(status=status, passed=passed, failed=failed, hypothesis_not_met=skipped)


# ══════════════════════════════════════════════════════════════════════
# EXECUTION
# ══════════════════════════════════════════════════════════════════════

def run_trial(name: str, params: ScenarioParams, index: int, seed: int,
              settings: FlagTwistSettings) -> TrialRecord:
    """
    Run trial index of a scenario, reseeding while the hypothesis fails.

    Module-level so a process pool can pickle it.
    """
    scenario = get_scenario(name)
    trial_seed = derive_seed(seed, index)
    attempt_seed = trial_seed
    last_error = ""
    for attempt in range(settings.max_hypothesis_retries + 1):
        if attempt:
            attempt_seed = retry_seed(trial_seed, attempt)
        try:
            quantities = scenario.trial(params, attempt_seed, settings)
        except (HypothesisFailed, ExhaustedRetries) as exc:
            last_error = str(exc)
            logger.warning("%s trial %d: seed %d rejected (%s)", name, index, attempt_seed, exc)
            continue

        checks = [
            CheckRecord(
                expectation=expectation.describe(),
                expected=expectation.resolve(quantities),
                actual=actual,
                holds=holds,
            )
            for expectation, actual, holds in scenario.evaluate(quantities)
        ]
        outcome: Outcome = "pass" if all(c.holds for c in checks) else "fail"
        return TrialRecord(index=index, seed=attempt_seed, retries=attempt, outcome=outcome,
                           quantities=quantities, checks=checks)

    return TrialRecord(index=index, seed=attempt_seed, retries=settings.max_hypothesis_retries,
                       outcome="hypothesis-not-met", message=last_error)


def run_scenario(name: str, params: Optional[Mapping[str, Optional[int]]] = None, seed: int = 0,
                 workers: int = 1, settings: Optional[FlagTwistSettings] = None) -> Report:
    """
    Execute a scenario and build its report.

    Args:
        name: Registered scenario name
        params: Optional d, n and trials overrides
        seed: Unsigned 64-bit master seed
        workers: Processes to spread trials over; 1 runs in-process
        settings: Defaults to get_settings()

    Returns:
        Report: trials in index order with the verdict

    Raises:
        UnknownScenario: If name is not registered
        BadParams: If params, seed or workers are out of range

    Examples:
        >>> run_scenario("cor1", {"d": 2, "n": 2, "trials": 2}, seed=1).verdict.status
        'pass'
    """
    settings = settings or get_settings()
    scenario = get_scenario(name)
    params = dict(params or {})
    unknown = set(params) - {"d", "n", "trials"}
    if unknown:
        raise BadParams(f"Unknown parameters {sorted(unknown)}")
    if not validate_seed(seed):
        raise BadParams(f"seed must be an integer in [0, 2^64), got {seed}")
    if workers < 1:
        raise BadParams(f"workers must be at least 1, got {workers}")
    resolved = scenario.resolve_params(params.get("d"), params.get("n"), params.get("trials"), settings)

    logger.info("running %s with d=%d n=%d trials=%d seed=%d",
                name, resolved.d, resolved.n, resolved.trials, seed)
    started = time.perf_counter()
    indices = range(resolved.trials)
    if workers == 1:
        trials = [run_trial(name, resolved, i, seed, settings) for i in indices]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            trials = list(pool.map(run_trial, [name] * len(indices), [resolved] * len(indices),
                                   indices, [seed] * len(indices), [settings] * len(indices)))
    elapsed = time.perf_counter() - started

    verdict = summarize(trials)
    logger.info("%s finished: %s (%d pass, %d fail, %d hypothesis not met)",
                name, verdict.status, verdict.passed, verdict.failed, verdict.hypothesis_not_met)
    return Report(
        scenario=name,
        claim=scenario.claim,
        params=resolved,
        seed=seed,
        trials=trials,
        verdict=verdict,
        notes=list(scenario.notes),
        envelope=Envelope(
            wall_time_s=round(elapsed, 3),
            generated_at=datetime.now(timezone.utc).isoformat(timespec="seconds"),
        ),
    )


def rerun_matches(report: Report, settings: Optional[FlagTwistSettings] = None) -> bool:
    """True iff rerunning the report's inputs reproduces its canonical JSON."""
    again = run_scenario(report.scenario, report.params.model_dump(), report.seed, settings=settings)
    return again.canonical_json() == report.canonical_json()
