"""Spectrum mobility models for multi-interface cognitive-radio terminals.

Analytic results (channel occupancy, forced spectrum-handoff outcome
and count distributions, MIPv6 handover latency), Monte-Carlo
simulators that cross-check them, a scenario/sweep layer, and a CLI.
"""

from .errors import NonConvergenceError, ScenarioError, UnsupportedDistributionError
from .handoff_dist import (
    VARIANT_AS_PRINTED,
    VARIANT_NORMALIZED,
    HandoffCountDistribution,
    ServiceTimeModel,
    distribution,
    expected_handoffs,
    laplace_derivative,
    prob_k_handoffs,
    prob_zero_handoffs,
)
from .link_delay import (
    WiredLinkParams,
    WirelessLinkParams,
    expected_frame_delay,
    frames_per_packet,
    wired_delay,
    wireless_delay,
)
from .mipv6 import (
    DUAL_INTER,
    DUAL_INTRA,
    SCENARIOS,
    SINGLE_INTER,
    SINGLE_INTRA,
    LatencyBreakdown,
    MessageCatalog,
    NetworkTopology,
    TimerSet,
    movement_detection_delay,
    reduction_percent,
    registration_delay,
    spectrum_mobility_delay,
    total_latency,
)
from .montecarlo import (
    EmpiricalEstimate,
    HandoffCountEstimates,
    OccupancyEstimates,
    SimulationConfig,
    simulate_handoff_counts,
    simulate_handoff_counts_coupled,
    simulate_occupancy,
    simulate_reclaim,
    substream,
)
from .scenario import (
    ParameterSpans,
    Scenario,
    ScenarioMetadata,
    SweepSpec,
    default_scenario,
    load_scenario,
    scenario_from_mapping,
)
from .sweep import CSV_COLUMNS, SweepRow, emit_csv, grid_values, run_sweep
from .traffic import (
    HandoffOutcomeProbs,
    HandoffTypeProbs,
    OccupancyDistribution,
    PuTrafficParams,
    SpectrumBandConfig,
    erlang_b_blocking,
    handoff_outcome_probs,
    handoff_type_probs,
    occupancy_and_blocking,
    reclaim_probs,
    steady_state_activity,
)
from .validate import ComparisonLine, ValidationReport, run_validation

__version__ = "0.1.0"
