"""Analytic-versus-simulated comparison report.

Runs the Monte-Carlo simulators across a small grid spanning the
scenario's operating ranges (corners plus center) and z-tests every
empirical estimate against its analytic counterpart.  A comparison
passes when |analytic - empirical| <= 3 standard errors.  Estimates
whose error bars are untrustworthy (too few events) are reported but
not tested, as is the coupled-band simulator, which measures a model
assumption rather than the implementation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NonConvergenceError
from .handoff_dist import (
    VARIANT_AS_PRINTED,
    VARIANT_NORMALIZED,
    VARIANTS,
    ServiceTimeModel,
    distribution,
    expected_handoffs,
)
from .montecarlo import (
    EmpiricalEstimate,
    SimulationConfig,
    simulate_handoff_counts,
    simulate_handoff_counts_coupled,
    simulate_occupancy,
    simulate_reclaim,
)
from .scenario import Scenario
from .traffic import (
    PuTrafficParams,
    handoff_outcome_probs,
    occupancy_and_blocking,
    reclaim_probs,
)

__all__ = ["ComparisonLine", "ValidationReport", "run_validation", "Z_LIMIT"]

Z_LIMIT = 3.0

_PMF_HEAD = 4  # compare Pr(H = 0..3) per grid point


@dataclass(frozen=True)
class ComparisonLine:
    """One analytic-versus-empirical comparison."""

    label: str
    analytic: float
    estimate: EmpiricalEstimate
    z: float
    tested: bool
    passed: bool

    def render(self) -> str:
        se = self.estimate.std_error
        status = "pass" if self.passed else "FAIL"
        if not self.tested:
            status = "info"
        z = f"{self.z:+7.2f}" if math.isfinite(self.z) else f"{self.z:>7}"
        return (
            f"{self.label:<52} analytic={self.analytic:<12.6g} "
            f"empirical={self.estimate.value:<12.6g} se={se:<10.3g} z={z}  {status}"
        )


@dataclass(frozen=True)
class ValidationReport:
    """Every comparison line, plus the sections they came from."""

    lines: tuple[ComparisonLine, ...]
    seed: int
    replications: int
    variant: str

    @property
    def tested(self) -> tuple[ComparisonLine, ...]:
        return tuple(line for line in self.lines if line.tested)

    @property
    def passed(self) -> bool:
        return all(line.passed for line in self.tested)

    def render(self) -> str:
        out = [
            f"validation: seed={self.seed} replications={self.replications} "
            f"variant={self.variant} z-limit={Z_LIMIT}",
            "",
        ]
        out.extend(line.render() for line in self.lines)
        tested = self.tested
        n_pass = sum(line.passed for line in tested)
        out.append("")
        verdict = "PASS" if self.passed else "FAIL"
        out.append(
            f"RESULT: {verdict} ({n_pass}/{len(tested)} tested comparisons "
            f"within |z| <= {Z_LIMIT}; {len(self.lines) - len(tested)} informational)"
        )
        return "\n".join(out)


def _z(analytic: float, est: EmpiricalEstimate) -> float:
    if est.std_error > 0.0:
        return (est.value - analytic) / est.std_error
    return 0.0 if est.value == analytic else math.inf


def _line(label: str, analytic: float, est: EmpiricalEstimate, tested: bool = True) -> ComparisonLine:
    z = _z(analytic, est)
    tested = tested and not est.insufficient
    return ComparisonLine(
        label=label,
        analytic=analytic,
        estimate=est,
        z=z,
        tested=tested,
        passed=(abs(z) <= Z_LIMIT) if tested else True,
    )


def _span_points(span: tuple[float, float]) -> tuple[float, float, float]:
    lo, hi = span
    return lo, (lo + hi) / 2.0, hi


def run_validation(
    scenario: Scenario, cfg: SimulationConfig, variant: str = VARIANT_NORMALIZED
) -> ValidationReport:
    """Compare analytic results against the simulators over a grid.

    Occupancy, blocking and reclaim run at the corners and center of
    the (arrival, PU service) rate spans; handoff counts add the user
    service rate as a third axis.  The coupled simulator runs once at
    the center point, informationally.
    """
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")
    lines: list[ComparisonLine] = []
    n = scenario.band.n_channels
    lam_lo, lam_mid, lam_hi = _span_points(scenario.spans.arrival_rate)
    mup_lo, mup_mid, mup_hi = _span_points(scenario.spans.pu_service_rate)
    mus_lo, mus_mid, mus_hi = _span_points(scenario.spans.su_service_rate)

    rate_points = [
        (lam_lo, mup_lo), (lam_lo, mup_hi), (lam_hi, mup_lo), (lam_hi, mup_hi),
        (lam_mid, mup_mid),
    ]
    for point, (lam, mup) in enumerate(rate_points):
        params = PuTrafficParams(lam, mup)
        tag = f"lam={lam:g} mu_cp={mup:g}"
        dist, p_block = occupancy_and_blocking(params, scenario.band)
        occ = simulate_occupancy(params, scenario.band, cfg, run=point)
        for i in range(n + 1):
            lines.append(_line(f"occupancy {tag} pi[{i}]", dist.pi[i], occ.pi[i]))
        lines.append(_line(f"blocking  {tag} p_b", p_block, occ.blocking))
        p_reclaim, _ = reclaim_probs(dist)
        lines.append(
            _line(
                f"reclaim   {tag} p_l",
                p_reclaim,
                simulate_reclaim(params, scenario.band, cfg, run=point),
            )
        )

    handoff_points = [
        (lam, mup, mus)
        for lam in (lam_lo, lam_hi)
        for mup in (mup_lo, mup_hi)
        for mus in (mus_lo, mus_hi)
    ] + [(lam_mid, mup_mid, mus_mid)]
    for point, (lam, mup, mus) in enumerate(handoff_points):
        params = PuTrafficParams(lam, mup)
        model = ServiceTimeModel(mus)
        outcome = handoff_outcome_probs(params, scenario.band)
        tag = f"lam={lam:g} mu_cp={mup:g} mu_mcr={mus:g}"
        sim = simulate_handoff_counts(model, outcome, lam, cfg, run=point)
        try:
            ana = distribution(model, outcome, lam, variant=variant)
        except NonConvergenceError:
            # an untruncatable distribution is a failure, not a crash
            broken = EmpiricalEstimate(math.nan, 0.0, 0, insufficient=False)
            lines.append(
                ComparisonLine(
                    label=f"handoff   {tag} pmf truncation",
                    analytic=math.nan,
                    estimate=broken,
                    z=math.inf,
                    tested=True,
                    passed=False,
                )
            )
            continue
        for k in range(min(_PMF_HEAD, len(sim.probs))):
            analytic_k = ana.probs[k] if k < len(ana.probs) else 0.0
            lines.append(_line(f"handoff   {tag} Pr(H={k})", analytic_k, sim.probs[k]))
        lines.append(_line(f"handoff   {tag} E(H)", expected_handoffs(model, outcome, lam), sim.mean))
        if variant == VARIANT_AS_PRINTED:
            # the printed form is not normalized; show how much mass it loses
            deficit = EmpiricalEstimate(ana.total_mass, 0.0, 0, insufficient=False)
            lines.append(_line(f"handoff   {tag} printed-form mass", 1.0, deficit, tested=False))

    center_params = PuTrafficParams(lam_mid, mup_mid)
    center_model = ServiceTimeModel(mus_mid)
    center_outcome = handoff_outcome_probs(center_params, scenario.band)
    tag = f"lam={lam_mid:g} mu_cp={mup_mid:g} mu_mcr={mus_mid:g}"
    coupled = simulate_handoff_counts_coupled(center_params, scenario.band, center_model, cfg)
    ana = distribution(center_model, center_outcome, lam_mid, variant=VARIANT_NORMALIZED)
    for k in range(min(_PMF_HEAD, len(coupled.probs))):
        analytic_k = ana.probs[k] if k < len(ana.probs) else 0.0
        lines.append(_line(f"coupled   {tag} Pr(H={k})", analytic_k, coupled.probs[k], tested=False))
    lines.append(
        _line(
            f"coupled   {tag} E(H)",
            expected_handoffs(center_model, center_outcome, lam_mid),
            coupled.mean,
            tested=False,
        )
    )
    return ValidationReport(
        lines=tuple(lines), seed=cfg.seed, replications=cfg.replications, variant=variant
    )
