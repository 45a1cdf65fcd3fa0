"""Checks for the Monte-Carlo simulators.

Statistical assertions run at pinned seeds, so they are deterministic;
the 3-sigma agreement checks were verified to hold for these exact
configurations.
"""

import math

import pytest

from specmob.handoff_dist import ServiceTimeModel, distribution, expected_handoffs
from specmob.montecarlo import (
    EmpiricalEstimate,
    SimulationConfig,
    simulate_handoff_counts,
    simulate_handoff_counts_coupled,
    simulate_occupancy,
    simulate_reclaim,
    substream,
)
from specmob.traffic import (
    PuTrafficParams,
    SpectrumBandConfig,
    handoff_outcome_probs,
    occupancy_and_blocking,
    reclaim_probs,
)

BAND5 = SpectrumBandConfig(5)
CFG = SimulationConfig(seed=42, replications=200_000, horizon=2e5)


def zscore(analytic: float, est: EmpiricalEstimate) -> float:
    if est.std_error == 0.0:
        return 0.0 if est.value == analytic else math.inf
    return (est.value - analytic) / est.std_error


class TestConfig:
    def test_rejects_bad_values(self):
        with pytest.raises(ValueError):
            SimulationConfig(seed=-1)
        with pytest.raises(ValueError):
            SimulationConfig(replications=0)
        with pytest.raises(ValueError):
            SimulationConfig(horizon=0.0)
        with pytest.raises(ValueError):
            SimulationConfig(warmup_frac=1.0)
        with pytest.raises(ValueError):
            SimulationConfig(n_batches=1)


class TestSubstreams:
    def test_distinct_streams_differ(self):
        a = substream(42, 0, 0, 0).random(4)
        b = substream(42, 0, 0, 1).random(4)
        c = substream(42, 1, 0, 0).random(4)
        d = substream(43, 0, 0, 0).random(4)
        assert not (a == b).all()
        assert not (a == c).all()
        assert not (a == d).all()

    def test_same_stream_reproduces(self):
        assert (substream(7, 2, 1, 3).random(8) == substream(7, 2, 1, 3).random(8)).all()


class TestOccupancySim:
    def test_agrees_with_analytic(self):
        params = PuTrafficParams(1.0, 1.0)
        dist, p_b = occupancy_and_blocking(params, BAND5)
        occ = simulate_occupancy(params, BAND5, CFG)
        for i, est in enumerate(occ.pi):
            assert abs(zscore(dist.pi[i], est)) <= 3.0
        assert abs(zscore(p_b, occ.blocking)) <= 3.0
        assert not occ.blocking.insufficient

    def test_fractions_sum_to_one(self):
        occ = simulate_occupancy(PuTrafficParams(2.0, 1.0), BAND5, CFG)
        assert math.fsum(e.value for e in occ.pi) == pytest.approx(1.0, abs=1e-9)

    def test_deterministic_across_runs(self):
        params = PuTrafficParams(1.5, 1.0)
        assert simulate_occupancy(params, BAND5, CFG) == simulate_occupancy(params, BAND5, CFG)

    def test_seed_changes_results(self):
        params = PuTrafficParams(1.5, 1.0)
        other = SimulationConfig(seed=43, replications=CFG.replications, horizon=CFG.horizon)
        assert simulate_occupancy(params, BAND5, CFG) != simulate_occupancy(params, BAND5, other)

    def test_no_arrivals_flagged_insufficient(self):
        occ = simulate_occupancy(PuTrafficParams(0.0, 1.0), BAND5, CFG)
        assert occ.pi[0].value == 1.0
        assert occ.blocking.insufficient
        assert occ.blocking.count == 0


class TestReclaimSim:
    def test_agrees_with_analytic(self):
        params = PuTrafficParams(1.0, 1.0)
        dist, _ = occupancy_and_blocking(params, BAND5)
        p_l, _ = reclaim_probs(dist)
        est = simulate_reclaim(params, BAND5, CFG)
        assert abs(zscore(p_l, est)) <= 3.0

    def test_single_channel_hits_every_time(self):
        est = simulate_reclaim(PuTrafficParams(1.0, 1.0), SpectrumBandConfig(1), CFG)
        assert est.value == 1.0
        assert est.std_error == 0.0
        assert not est.insufficient


class TestHandoffSim:
    def test_agrees_with_analytic(self):
        params = PuTrafficParams(1.0, 1.0)
        model = ServiceTimeModel(1.0)
        outcome = handoff_outcome_probs(params, BAND5)
        sim = simulate_handoff_counts(model, outcome, 1.0, CFG)
        ana = distribution(model, outcome, 1.0)
        for k in range(4):
            assert abs(zscore(ana.probs[k], sim.probs[k])) <= 3.0
        assert abs(zscore(expected_handoffs(model, outcome, 1.0), sim.mean)) <= 3.0

    def test_histogram_is_exact(self):
        params = PuTrafficParams(2.0, 1.0)
        outcome = handoff_outcome_probs(params, BAND5)
        sim = simulate_handoff_counts(ServiceTimeModel(0.8), outcome, 2.0, CFG)
        assert math.fsum(e.value for e in sim.probs) == pytest.approx(1.0, abs=1e-12)
        assert sim.replications == CFG.replications

    def test_block_partition_is_part_of_the_protocol(self):
        # same seed, same replication count, different block size:
        # different substreams, so a different (but equally valid) draw
        params = PuTrafficParams(1.0, 1.0)
        outcome = handoff_outcome_probs(params, BAND5)
        model = ServiceTimeModel(1.0)
        small = SimulationConfig(seed=42, replications=10_000, block_size=1000)
        big = SimulationConfig(seed=42, replications=10_000, block_size=10_000)
        a = simulate_handoff_counts(model, outcome, 1.0, small)
        b = simulate_handoff_counts(model, outcome, 1.0, big)
        assert a != b
        assert simulate_handoff_counts(model, outcome, 1.0, small) == a

    def test_ragged_final_block(self):
        params = PuTrafficParams(1.0, 1.0)
        outcome = handoff_outcome_probs(params, BAND5)
        cfg = SimulationConfig(seed=5, replications=2_500, block_size=1000)
        sim = simulate_handoff_counts(ServiceTimeModel(1.0), outcome, 1.0, cfg)
        assert sim.mean.count == 2_500

    def test_no_arrivals_means_all_zero(self):
        params = PuTrafficParams(1.0, 1.0)
        outcome = handoff_outcome_probs(params, BAND5)
        cfg = SimulationConfig(seed=1, replications=1_000)
        sim = simulate_handoff_counts(ServiceTimeModel(1.0), outcome, 0.0, cfg)
        assert sim.probs[0].value == 1.0
        assert sim.mean.value == 0.0


class TestCoupledSim:
    def test_histogram_is_exact(self):
        params = PuTrafficParams(3.5, 1.95)
        cfg = SimulationConfig(seed=42, replications=50_000)
        sim = simulate_handoff_counts_coupled(params, BAND5, ServiceTimeModel(1.8), cfg)
        assert math.fsum(e.value for e in sim.probs) == pytest.approx(1.0, abs=1e-12)
        assert all(e.value >= 0.0 for e in sim.probs)

    def test_deterministic(self):
        params = PuTrafficParams(3.5, 1.95)
        cfg = SimulationConfig(seed=42, replications=20_000)
        a = simulate_handoff_counts_coupled(params, BAND5, ServiceTimeModel(1.8), cfg)
        b = simulate_handoff_counts_coupled(params, BAND5, ServiceTimeModel(1.8), cfg)
        assert a == b

    def test_single_channel_exact_law(self):
        # with one channel every arrival reclaims the user's channel
        # and drops it, so H is Bernoulli: P(H=1) = lam / (lam + mu)
        lam, mu = 2.0, 1.0
        params = PuTrafficParams(lam, 3.0)
        cfg = SimulationConfig(seed=42, replications=100_000)
        sim = simulate_handoff_counts_coupled(
            params, SpectrumBandConfig(1), ServiceTimeModel(mu), cfg
        )
        p1 = lam / (lam + mu)
        assert len(sim.probs) == 2
        assert abs(zscore(1.0 - p1, sim.probs[0])) <= 3.0
        assert abs(zscore(p1, sim.mean)) <= 3.0

    def test_documents_the_independence_gap(self):
        # the coupled count sits below the independent model at the
        # reference point; the gap is the assumption being measured
        params = PuTrafficParams(3.5, 1.95)
        cfg = SimulationConfig(seed=42, replications=100_000)
        model = ServiceTimeModel(1.8)
        sim = simulate_handoff_counts_coupled(params, BAND5, model, cfg)
        outcome = handoff_outcome_probs(params, BAND5)
        ana = expected_handoffs(model, outcome, params.arrival_rate)
        assert sim.mean.value < ana
        assert sim.mean.value == pytest.approx(ana, rel=0.25)
