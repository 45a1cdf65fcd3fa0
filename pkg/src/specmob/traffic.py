"""Channel occupancy and spectrum-handoff outcome probabilities.

Licensed-user (PU) traffic on a band of N channels is a loss system:
Poisson arrivals, exponential holding times, arrivals finding every
channel busy are lost.  A cognitive-radio user parked on one of the
idle channels is forced into a spectrum handoff whenever an arriving
PU reclaims exactly that channel; the handoff succeeds if another
idle channel exists and fails otherwise.  This module derives the
steady-state occupancy distribution and the per-reclaim outcome
probabilities that the handoff-count distribution is built on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

__all__ = [
    "PuTrafficParams",
    "SpectrumBandConfig",
    "OccupancyDistribution",
    "HandoffOutcomeProbs",
    "HandoffTypeProbs",
    "steady_state_activity",
    "erlang_b_blocking",
    "occupancy_and_blocking",
    "reclaim_probs",
    "handoff_outcome_probs",
    "handoff_type_probs",
]

_SUM_TOL = 1e-12


@dataclass(frozen=True)
class PuTrafficParams:
    """Licensed-user arrival and service rates, in events per unit time.

    ``arrival_rate`` may be zero (a band with no licensed traffic);
    ``service_rate`` must be positive so the offered load is defined.
    """

    arrival_rate: float
    service_rate: float

    def __post_init__(self) -> None:
        if not self.arrival_rate >= 0.0:
            raise ValueError(f"arrival_rate must be >= 0, got {self.arrival_rate}")
        if not self.service_rate > 0.0:
            raise ValueError(f"service_rate must be > 0, got {self.service_rate}")

    @property
    def intensity(self) -> float:
        """Offered load in Erlangs (arrival rate over service rate)."""
        return self.arrival_rate / self.service_rate


@dataclass(frozen=True)
class SpectrumBandConfig:
    """A licensed band holding ``n_channels`` equal-width channels."""

    n_channels: int

    def __post_init__(self) -> None:
        if not isinstance(self.n_channels, int) or isinstance(self.n_channels, bool):
            raise ValueError(f"n_channels must be an int, got {self.n_channels!r}")
        if self.n_channels < 1:
            raise ValueError(f"n_channels must be >= 1, got {self.n_channels}")


@dataclass(frozen=True)
class OccupancyDistribution:
    """Steady-state distribution of the number of PU-held channels.

    ``pi[i]`` is the long-run fraction of time exactly i of the
    ``n_channels`` channels are busy; ``pi[-1]`` is therefore the
    blocking probability of the band.
    """

    pi: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.pi) < 2:
            raise ValueError("pi needs at least states 0 and 1")
        for i, p in enumerate(self.pi):
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"pi[{i}]={p} outside [0, 1]")
        total = math.fsum(self.pi)
        if abs(total - 1.0) > _SUM_TOL:
            raise ValueError(f"pi sums to {total}, not 1")

    @property
    def n_channels(self) -> int:
        return len(self.pi) - 1

    @property
    def blocking(self) -> float:
        return self.pi[-1]


@dataclass(frozen=True)
class HandoffOutcomeProbs:
    """Probability bundle for a single forced spectrum handoff.

    p_off/p_on       licensed user idle / transmitting
    p_block          arriving PU finds every channel busy
    p_under/p_over   band under-loaded / fully loaded (p_over == p_block)
    p_reclaim        an arriving PU lands on the cognitive user's channel
    p_no_reclaim     complement of p_reclaim
    p_success        reclaim with a spare idle channel to move to
    p_failure        reclaim with nowhere to go (connection drops)
    """

    p_off: float
    p_on: float
    p_block: float
    p_under: float
    p_over: float
    p_reclaim: float
    p_no_reclaim: float
    p_success: float
    p_failure: float

    def __post_init__(self) -> None:
        for name in self.__dataclass_fields__:
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"{name}={v} outside [0, 1]")
        pairs = [
            ("p_off", "p_on", self.p_off + self.p_on, 1.0),
            ("p_under", "p_over", self.p_under + self.p_over, 1.0),
            ("p_reclaim", "p_no_reclaim", self.p_reclaim + self.p_no_reclaim, 1.0),
            ("p_success", "p_failure", self.p_success + self.p_failure, self.p_reclaim),
        ]
        for a, b, got, want in pairs:
            if abs(got - want) > _SUM_TOL:
                raise ValueError(f"{a} + {b} = {got}, expected {want}")


class HandoffTypeProbs(NamedTuple):
    """Handoff classification for a dual-interface cognitive user.

    ``intercell_interpool_raw`` is the plain sum of the full-band and
    PU-active probabilities; the events overlap, so the sum can exceed
    one.  ``intercell_interpool`` clamps it to a valid probability.
    """

    intracell_intrapool: float
    intercell_interpool_raw: float
    intercell_interpool: float


def steady_state_activity(params: PuTrafficParams) -> tuple[float, float]:
    """Long-run (idle, transmitting) fractions of a two-state licensed user.

    An off/on renewal process with exponential idle and busy periods
    spends service/(service+arrival) of its time idle.
    """
    total = params.service_rate + params.arrival_rate
    return params.service_rate / total, params.arrival_rate / total


def erlang_b_blocking(intensity: float, n_channels: int) -> float:
    """Blocking probability of an ``n_channels``-server loss system.

    Uses the standard recurrence B(0) = 1, B(i) = a B(i-1) / (i + a B(i-1)),
    which stays finite for loads and channel counts where the factorial
    form overflows.

    Args:
        intensity: offered load in Erlangs, >= 0.
        n_channels: number of channels, >= 1.
    """
    if not intensity >= 0.0:
        raise ValueError(f"intensity must be >= 0, got {intensity}")
    if n_channels < 1:
        raise ValueError(f"n_channels must be >= 1, got {n_channels}")
    b = 1.0
    for i in range(1, n_channels + 1):
        ab = intensity * b
        b = ab / (i + ab)
    return b


def occupancy_and_blocking(
    params: PuTrafficParams, band: SpectrumBandConfig
) -> tuple[OccupancyDistribution, float]:
    """Steady-state occupancy distribution and blocking probability.

    The occupancy weights delta^i / i! are built as a running product
    and renormalized whenever the partial sum grows large, so the
    distribution is finite for any load/channel count the recurrence
    form of the blocking probability can handle.
    """
    delta = params.intensity
    n = band.n_channels
    weights = [1.0]
    w = 1.0
    total = 1.0
    for i in range(1, n + 1):
        w *= delta / i
        weights.append(w)
        total += w
        if total > 1e300:
            # rescale before the running sum can overflow
            inv = 1.0 / total
            weights = [x * inv for x in weights]
            w *= inv
            total = 1.0
    pi = tuple(x / total for x in weights)
    return OccupancyDistribution(pi), erlang_b_blocking(delta, n)


def reclaim_probs(dist: OccupancyDistribution) -> tuple[float, float]:
    """(reclaim, no-reclaim) probabilities given an under-loaded band.

    A cognitive user sits on one of the n - i idle channels when i are
    busy; an admitted PU arrival picks an idle channel uniformly, so it
    lands on the user's channel with probability 1/(n - i).  Both
    results condition on the band not being full.
    """
    pi = dist.pi
    n = dist.n_channels
    # the under-load mass as a literal sum, so the n = 1 ratio is
    # exactly 1 instead of 1 + eps
    p_under = math.fsum(pi[:n])
    if not p_under > 0.0:
        raise ValueError("degenerate occupancy: all mass on the full-band state")
    hit = math.fsum(pi[i] / (n - i) for i in range(n))
    miss = math.fsum(pi[i] * (1.0 - 1.0 / (n - i)) for i in range(n))
    return hit / p_under, miss / p_under


def handoff_outcome_probs(
    params: PuTrafficParams, band: SpectrumBandConfig
) -> HandoffOutcomeProbs:
    """Assemble the full outcome bundle for one forced spectrum handoff.

    A reclaim succeeds when the band is under-loaded (a spare idle
    channel exists) and fails when the band is full, so the success and
    failure probabilities split p_reclaim by the occupancy state.
    """
    p_off, p_on = steady_state_activity(params)
    dist, p_block = occupancy_and_blocking(params, band)
    p_reclaim, p_no_reclaim = reclaim_probs(dist)
    p_under = 1.0 - p_block
    return HandoffOutcomeProbs(
        p_off=p_off,
        p_on=p_on,
        p_block=p_block,
        p_under=p_under,
        p_over=p_block,
        p_reclaim=p_reclaim,
        p_no_reclaim=p_no_reclaim,
        p_success=p_reclaim * p_under,
        p_failure=p_reclaim * p_block,
    )


def handoff_type_probs(outcome: HandoffOutcomeProbs) -> HandoffTypeProbs:
    """Classify a dual-interface user's next handoff.

    Staying inside the cell and the channel pool requires a successful
    spectrum handoff while the licensed user is transmitting; leaving
    both combines the full-band and PU-active events.  Those events are
    not disjoint, so the raw sum is reported alongside a clamped value.
    """
    intra = outcome.p_success * outcome.p_on
    raw = outcome.p_over + outcome.p_on
    return HandoffTypeProbs(intra, raw, min(1.0, raw))
