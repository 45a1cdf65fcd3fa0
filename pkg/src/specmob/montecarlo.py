"""Monte-Carlo cross-checks for the analytic probability results.

Three simulators, all mechanical (no result formula is reused):

* a continuous-time loss-system run over a long horizon, measuring
  time-in-state fractions and the blocked-arrival ratio, with standard
  errors from batch means over the post-warmup window;
* the same run with a tagged channel: at every admitted arrival the
  cognitive user's channel and the arriving PU's pick are drawn
  uniformly among the idle channels, estimating the reclaim
  probability as a hit ratio;
* a per-service-period replication sim for the handoff count, where
  reclaims arrive as a thinned Poisson stream over an exponential
  service time and each reclaim drops the connection with the
  full-band probability.

A fourth, coupled simulator re-runs the handoff count with the band
state evolved jointly with the user instead of drawn independently at
every reclaim; it quantifies the independence assumption and is meant
for informational reporting, not tolerance checks.

Reproducibility protocol: all randomness comes from numpy's Philox
counter-based generator.  Substream (op, run, block) under master
seed s is ``Generator(Philox(SeedSequence(s, spawn_key=(op, run,
block))))``; operations are numbered 0 occupancy, 1 reclaim,
2 handoff counts, 3 coupled, and ``run`` distinguishes independent
runs of the same operation (e.g. grid points of a validation).
Replications are partitioned into fixed-size blocks and block b
consumes only substream (op, run, b), so estimates are bit-identical
for a given seed and block size regardless of how blocks are
scheduled.  Within a block, draws are consumed in documented index
order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numba import njit

from .errors import NonConvergenceError
from .handoff_dist import ServiceTimeModel
from .traffic import (
    HandoffOutcomeProbs,
    PuTrafficParams,
    SpectrumBandConfig,
    occupancy_and_blocking,
)

__all__ = [
    "SimulationConfig",
    "EmpiricalEstimate",
    "OccupancyEstimates",
    "HandoffCountEstimates",
    "substream",
    "simulate_occupancy",
    "simulate_reclaim",
    "simulate_handoff_counts",
    "simulate_handoff_counts_coupled",
]

OP_OCCUPANCY = 0
OP_RECLAIM = 1
OP_HANDOFF = 2
OP_COUPLED = 3

_CHUNK = 1 << 20
_MIN_EVENTS = 100
_MAX_ROUNDS = 1_000_000


@dataclass(frozen=True)
class SimulationConfig:
    """Knobs shared by every simulator.

    ``horizon``/``warmup_frac``/``n_batches`` drive the loss-system
    runs (one long run, batch-means errors); ``replications`` and
    ``block_size`` drive the per-service-period sims.
    """

    seed: int = 42
    replications: int = 100_000
    horizon: float = 1e6
    warmup_frac: float = 0.1
    n_batches: int = 32
    block_size: int = 65_536

    def __post_init__(self) -> None:
        if self.seed < 0:
            raise ValueError(f"seed must be >= 0, got {self.seed}")
        if self.replications < 1:
            raise ValueError(f"replications must be >= 1, got {self.replications}")
        if not self.horizon > 0.0:
            raise ValueError(f"horizon must be > 0, got {self.horizon}")
        if not 0.0 <= self.warmup_frac < 1.0:
            raise ValueError(f"warmup_frac must be in [0, 1), got {self.warmup_frac}")
        if self.n_batches < 2:
            raise ValueError(f"n_batches must be >= 2, got {self.n_batches}")
        if self.block_size < 1:
            raise ValueError(f"block_size must be >= 1, got {self.block_size}")


@dataclass(frozen=True)
class EmpiricalEstimate:
    """A point estimate with its standard error.

    ``count`` is the number of units the error is computed from
    (batches or replications).  ``insufficient`` marks estimates whose
    error bar cannot be trusted (too few events); consumers should not
    run tolerance tests on those.
    """

    value: float
    std_error: float
    count: int
    insufficient: bool = False


@dataclass(frozen=True)
class OccupancyEstimates:
    pi: tuple[EmpiricalEstimate, ...]
    blocking: EmpiricalEstimate


@dataclass(frozen=True)
class HandoffCountEstimates:
    """Histogram of per-service-period handoff counts plus its mean."""

    probs: tuple[EmpiricalEstimate, ...]
    mean: EmpiricalEstimate
    replications: int


def substream(seed: int, op: int, run: int, block: int) -> np.random.Generator:
    """Named Philox substream (op, run, block) of the master seed."""
    key = np.random.SeedSequence(seed, spawn_key=(op, run, block))
    return np.random.Generator(np.random.Philox(key))


@njit(cache=True)
def _loss_kernel(
    u, lam, mu, n, state, t, warmup, horizon, batch_len, n_batches, tagged,
    time_in, arrivals, blocked, reclaim_events, reclaim_hits,
):
    # Consumes uniforms from u in index order: one for the exponential
    # event gap, one for the event type, two more (tagged runs only)
    # for the user/PU channel picks at an admitted arrival.  Stops when
    # fewer than 4 draws remain; the caller supplies the next chunk.
    i = 0
    m = u.shape[0]
    while t < horizon and i + 4 <= m:
        rate = lam + state * mu
        dt = -np.log1p(-u[i]) / rate
        i += 1
        te = t + dt
        if te > horizon:
            te = horizon
        # attribute the sojourn [t, te) to batches, splitting at batch edges
        seg = t if t > warmup else warmup
        while seg < te:
            b = int((seg - warmup) / batch_len)
            if b >= n_batches:
                b = n_batches - 1
            edge = warmup + (b + 1) * batch_len
            if b == n_batches - 1 or edge > te:
                edge = te
            time_in[b, state] += edge - seg
            seg = edge
        t = te
        if t >= horizon:
            break
        v = u[i] * rate
        i += 1
        past = t > warmup
        b = 0
        if past:
            b = int((t - warmup) / batch_len)
            if b >= n_batches:
                b = n_batches - 1
        if v < lam:
            # PU arrival; empty-state iterations always land here
            if past:
                arrivals[b] += 1
                if state == n:
                    blocked[b] += 1
            if state < n:
                if tagged == 1:
                    free = n - state
                    su = int(u[i] * free)
                    pu = int(u[i + 1] * free)
                    i += 2
                    if past:
                        reclaim_events[b] += 1
                        if su == pu:
                            reclaim_hits[b] += 1
                state += 1
        else:
            state -= 1
    return state, t


def _run_loss(lam, mu, n, cfg, tagged, op, run):
    warmup = cfg.horizon * cfg.warmup_frac
    batch_len = (cfg.horizon - warmup) / cfg.n_batches
    time_in = np.zeros((cfg.n_batches, n + 1))
    arrivals = np.zeros(cfg.n_batches, dtype=np.int64)
    blocked = np.zeros(cfg.n_batches, dtype=np.int64)
    events = np.zeros(cfg.n_batches, dtype=np.int64)
    hits = np.zeros(cfg.n_batches, dtype=np.int64)
    if lam == 0.0:
        # nothing ever arrives; the whole window sits in the empty state
        time_in[:, 0] = batch_len
        return time_in, arrivals, blocked, events, hits
    rng = substream(cfg.seed, op, run, 0)
    state = 0
    t = 0.0
    while t < cfg.horizon:
        u = rng.random(_CHUNK)
        state, t = _loss_kernel(
            u, lam, mu, n, state, t, warmup, cfg.horizon, batch_len,
            cfg.n_batches, 1 if tagged else 0,
            time_in, arrivals, blocked, events, hits,
        )
    return time_in, arrivals, blocked, events, hits


def _ratio_estimate(numer: np.ndarray, denom: np.ndarray) -> EmpiricalEstimate:
    """Pooled ratio with a batch-means standard error."""
    total = int(denom.sum())
    if total == 0:
        return EmpiricalEstimate(0.0, 0.0, 0, insufficient=True)
    live = denom > 0
    ratios = numer[live] / denom[live]
    value = float(numer.sum()) / total
    if live.sum() >= 2:
        se = float(np.std(ratios, ddof=1)) / math.sqrt(live.sum())
    else:
        se = 0.0
    return EmpiricalEstimate(value, se, total, insufficient=total < _MIN_EVENTS)


def simulate_occupancy(
    params: PuTrafficParams, band: SpectrumBandConfig, cfg: SimulationConfig, run: int = 0
) -> OccupancyEstimates:
    """Estimate the occupancy distribution and blocking probability.

    One long run; the post-warmup window is cut into equal batches and
    the per-state time fractions of each batch give the standard
    errors.  Uses substream (0, run, 0).
    """
    time_in, arrivals, blocked, _, _ = _run_loss(
        params.arrival_rate, params.service_rate, band.n_channels, cfg,
        tagged=False, op=OP_OCCUPANCY, run=run,
    )
    durations = time_in.sum(axis=1)
    frac = time_in / durations[:, None]
    values = frac.mean(axis=0)
    ses = frac.std(axis=0, ddof=1) / math.sqrt(cfg.n_batches)
    pi = tuple(
        EmpiricalEstimate(float(values[i]), float(ses[i]), cfg.n_batches)
        for i in range(band.n_channels + 1)
    )
    return OccupancyEstimates(pi=pi, blocking=_ratio_estimate(blocked, arrivals))


def simulate_reclaim(
    params: PuTrafficParams, band: SpectrumBandConfig, cfg: SimulationConfig, run: int = 0
) -> EmpiricalEstimate:
    """Estimate the reclaim probability with a tagged channel.

    At every admitted arrival the user's channel and the PU's pick are
    drawn uniformly among the idle channels; the reclaim probability is
    the fraction of picks that hit the user.  Uses substream
    (1, run, 0).
    """
    _, _, _, events, hits = _run_loss(
        params.arrival_rate, params.service_rate, band.n_channels, cfg,
        tagged=True, op=OP_RECLAIM, run=run,
    )
    return _ratio_estimate(hits, events)


def _histogram_estimates(
    counts: np.ndarray, reps: int, sum_h: int, sum_h2: int
) -> tuple[tuple[EmpiricalEstimate, ...], EmpiricalEstimate]:
    probs = []
    for c in counts:
        v = c / reps
        se = math.sqrt(v * (1.0 - v) / (reps - 1)) if reps > 1 else 0.0
        probs.append(
            EmpiricalEstimate(v, se, reps, insufficient=min(c, reps - c) < 10)
        )
    mean = sum_h / reps
    if reps > 1:
        var = max(sum_h2 - reps * mean * mean, 0.0) / (reps - 1)
        mse = math.sqrt(var / reps)
    else:
        mse = 0.0
    return tuple(probs), EmpiricalEstimate(mean, mse, reps, insufficient=reps < _MIN_EVENTS)


def _merge_counts(total: np.ndarray, extra: np.ndarray) -> np.ndarray:
    if extra.size > total.size:
        total = np.concatenate([total, np.zeros(extra.size - total.size, dtype=np.int64)])
    total[: extra.size] += extra
    return total


def simulate_handoff_counts(
    model: ServiceTimeModel,
    outcome: HandoffOutcomeProbs,
    arrival_rate: float,
    cfg: SimulationConfig,
    run: int = 0,
) -> HandoffCountEstimates:
    """Replicate service periods and histogram the handoff count.

    Per replication: an exponential service time, reclaim gaps at rate
    arrival_rate * p_reclaim, and a drop draw (probability p_over) per
    reclaim.  Block b of replications uses substream (2, run, b);
    inside a
    block the service times are drawn first, then per-round gap and
    drop draws in replication order.
    """
    if not arrival_rate >= 0.0:
        raise ValueError(f"arrival_rate must be >= 0, got {arrival_rate}")
    reclaim_rate = arrival_rate * outcome.p_reclaim
    counts = np.zeros(1, dtype=np.int64)
    sum_h = 0
    sum_h2 = 0
    n_blocks = -(-cfg.replications // cfg.block_size)
    for b in range(n_blocks):
        size = min(cfg.block_size, cfg.replications - b * cfg.block_size)
        rng = substream(cfg.seed, OP_HANDOFF, run, b)
        h = _handoff_block(rng, model.rate, reclaim_rate, outcome.p_block, size)
        counts = _merge_counts(counts, np.bincount(h))
        sum_h += int(h.sum())
        sum_h2 += int((h * h).sum())
    probs, mean = _histogram_estimates(counts, cfg.replications, sum_h, sum_h2)
    return HandoffCountEstimates(probs=probs, mean=mean, replications=cfg.replications)


def _handoff_block(
    rng: np.random.Generator,
    service_rate: float,
    reclaim_rate: float,
    p_drop: float,
    size: int,
) -> np.ndarray:
    t_service = rng.exponential(1.0 / service_rate, size)
    h = np.zeros(size, dtype=np.int64)
    if reclaim_rate == 0.0:
        return h
    t = np.zeros(size)
    alive = np.ones(size, dtype=bool)
    for _ in range(_MAX_ROUNDS):
        idx = np.nonzero(alive)[0]
        if idx.size == 0:
            return h
        t[idx] += rng.exponential(1.0 / reclaim_rate, idx.size)
        hit = idx[t[idx] < t_service[idx]]
        # a reclaim before the service ends is a handoff; it drops the
        # connection with probability p_drop, else the service goes on
        h[hit] += 1
        alive[:] = False
        if hit.size:
            u = rng.random(hit.size)
            alive[hit[u >= p_drop]] = True
    raise NonConvergenceError("handoff replications did not all absorb")


def simulate_handoff_counts_coupled(
    params: PuTrafficParams,
    band: SpectrumBandConfig,
    model: ServiceTimeModel,
    cfg: SimulationConfig,
    run: int = 0,
) -> HandoffCountEstimates:
    """Handoff counts with the band state evolved jointly with the user.

    The analytic model draws the band state independently at every
    reclaim; here the occupancy moves through arrivals and departures
    between reclaims, so the difference to the analytic distribution
    measures that independence assumption.  Informational: report the
    numbers, do not tolerance-test them.

    Initial occupancy is drawn from the analytic steady state
    conditioned on a free channel for the user.  Uses substream
    (3, run, 0) with, per round, one event-type and one channel-pick
    uniform per live replication, in replication order.
    """
    lam = params.arrival_rate
    mu_p = params.service_rate
    mu_s = model.rate
    n = band.n_channels
    reps = cfg.replications
    rng = substream(cfg.seed, OP_COUPLED, run, 0)

    dist, _ = occupancy_and_blocking(params, band)
    admit = np.array(dist.pi[:n])
    cum = np.cumsum(admit / admit.sum())
    occupied = np.searchsorted(cum, rng.random(reps)).astype(np.int64)

    h = np.zeros(reps, dtype=np.int64)
    alive = np.ones(reps, dtype=bool)
    for _ in range(_MAX_ROUNDS):
        idx = np.nonzero(alive)[0]
        if idx.size == 0:
            counts = np.bincount(h, minlength=1)
            sum_h = int(h.sum())
            sum_h2 = int((h * h).sum())
            probs, mean = _histogram_estimates(counts, reps, sum_h, sum_h2)
            return HandoffCountEstimates(probs=probs, mean=mean, replications=reps)
        occ = occupied[idx]
        total_rate = lam + occ * mu_p + mu_s
        u_type = rng.random(idx.size)
        u_pick = rng.random(idx.size)
        p_arrival = lam / total_rate
        p_departure = occ * mu_p / total_rate
        is_arrival = u_type < p_arrival
        is_departure = ~is_arrival & (u_type < p_arrival + p_departure)
        is_completion = ~is_arrival & ~is_departure
        # while the user lives, occ <= n - 1, so at least one channel
        # (the user's) is PU-free; slot 0 of the free set is the user's
        free = n - occ
        pick = np.floor(u_pick * free).astype(np.int64)
        reclaim = is_arrival & (pick == 0)
        h[idx[reclaim]] += 1
        dropped = reclaim & (free == 1)
        relocated = reclaim & (free > 1)
        missed = is_arrival & (pick != 0)
        occupied[idx[missed | relocated]] += 1
        occupied[idx[is_departure]] -= 1
        alive[idx[is_completion | dropped]] = False
    raise NonConvergenceError("coupled handoff replications did not all absorb")
