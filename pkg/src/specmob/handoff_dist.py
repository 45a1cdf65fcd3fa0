"""Distribution of forced spectrum handoffs during one service period.

Reclaims of the cognitive user's channel arrive as a thinned Poisson
stream while the user's service time runs.  Each reclaim either forces
a successful handoff (service continues on another channel) or drops
the connection; the count of handoffs completed before the service
ends has a geometric-flavoured distribution driven by the service
time's Laplace transform.

Two published forms of the per-count probability circulate: one whose
terms are dimensionally consistent and sum to one (``normalized``) and
one with a stray service-rate factor on the failure term
(``as_printed``), kept so the discrepancy can be reproduced and
measured.  The expected count has a single closed form and is
implemented through the transform's complement to stay accurate when
the failure probability is tiny.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NonConvergenceError, UnsupportedDistributionError
from .traffic import HandoffOutcomeProbs

__all__ = [
    "ServiceTimeModel",
    "HandoffCountDistribution",
    "VARIANT_NORMALIZED",
    "VARIANT_AS_PRINTED",
    "VARIANTS",
    "laplace_derivative",
    "prob_zero_handoffs",
    "prob_k_handoffs",
    "expected_handoffs",
    "distribution",
]

VARIANT_NORMALIZED = "normalized"
VARIANT_AS_PRINTED = "as_printed"
VARIANTS = (VARIANT_NORMALIZED, VARIANT_AS_PRINTED)

_MAX_TERMS = 1_000_000


@dataclass(frozen=True)
class ServiceTimeModel:
    """Service-time distribution of the cognitive user's connection.

    Only the exponential family is built in.  The Laplace-transform
    methods are the extension surface: every consumer below touches the
    distribution exclusively through them, so another family needs only
    a model exposing the same methods.
    """

    rate: float
    kind: str = "exponential"

    def __post_init__(self) -> None:
        if self.kind != "exponential":
            raise UnsupportedDistributionError(
                f"service-time family {self.kind!r} is not implemented"
            )
        if not self.rate > 0.0:
            raise ValueError(f"rate must be > 0, got {self.rate}")

    @property
    def mean(self) -> float:
        return 1.0 / self.rate

    def laplace(self, s: float) -> float:
        """E[exp(-s T)] for the service time T, s >= 0."""
        if not s >= 0.0:
            raise ValueError(f"s must be >= 0, got {s}")
        return self.rate / (self.rate + s)

    def laplace_complement(self, s: float) -> float:
        """1 - laplace(s), computed directly.

        The subtraction cancels catastrophically for s near zero; the
        closed form s/(rate + s) does not.
        """
        if not s >= 0.0:
            raise ValueError(f"s must be >= 0, got {s}")
        return s / (self.rate + s)

    def laplace_derivative(self, s: float, k: int) -> float:
        """k-th derivative of the transform at s.

        For the exponential family this is
        (-1)^k k! rate / (rate + s)^(k+1).
        """
        if not s >= 0.0:
            raise ValueError(f"s must be >= 0, got {s}")
        if not isinstance(k, int) or isinstance(k, bool) or k < 0:
            raise ValueError(f"derivative order must be an int >= 0, got {k!r}")
        sign = -1.0 if k % 2 else 1.0
        return sign * math.factorial(k) * self.rate / (self.rate + s) ** (k + 1)


@dataclass(frozen=True)
class HandoffCountDistribution:
    """Truncated handoff-count distribution plus its exact mean.

    ``probs[k]`` is Pr(exactly k handoffs) under the chosen variant;
    the tuple is truncated once the remaining tail (of the normalized
    form) is below the tolerance used to build it.  ``mean`` is the
    closed-form expectation, not the truncated sum.
    """

    probs: tuple[float, ...]
    mean: float
    variant: str

    def __post_init__(self) -> None:
        if self.variant not in VARIANTS:
            raise ValueError(f"variant must be one of {VARIANTS}, got {self.variant!r}")
        if not self.probs:
            raise ValueError("probs must be non-empty")

    @property
    def total_mass(self) -> float:
        return math.fsum(self.probs)

    @property
    def mass_deficit(self) -> float:
        """1 - total_mass; nonzero for the as_printed variant."""
        return 1.0 - self.total_mass


def _check_variant(variant: str) -> None:
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")


def _reclaim_rate(outcome: HandoffOutcomeProbs, arrival_rate: float) -> float:
    if not arrival_rate >= 0.0:
        raise ValueError(f"arrival_rate must be >= 0, got {arrival_rate}")
    return arrival_rate * outcome.p_reclaim


def laplace_derivative(model: ServiceTimeModel, s: float, k: int) -> float:
    """Function spelling of ``model.laplace_derivative(s, k)``."""
    return model.laplace_derivative(s, k)


def prob_zero_handoffs(
    model: ServiceTimeModel, outcome: HandoffOutcomeProbs, arrival_rate: float
) -> float:
    """Probability the service period sees no reclaim at all.

    Reclaims hit the user's channel at rate arrival_rate * p_reclaim;
    zero hits before the service ends is the transform of the service
    time at that rate.
    """
    return model.laplace(_reclaim_rate(outcome, arrival_rate))


def prob_k_handoffs(
    model: ServiceTimeModel,
    outcome: HandoffOutcomeProbs,
    arrival_rate: float,
    k: int,
    variant: str = VARIANT_NORMALIZED,
) -> float:
    """Probability of exactly k >= 1 spectrum handoffs in one service period.

    The first term covers k successful handoffs with the service
    outliving them all; the second covers k - 1 successes followed by a
    dropping reclaim.  ``as_printed`` scales the second term by the
    service rate, which is the published form but not normalized.
    """
    _check_variant(variant)
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise ValueError(f"k must be an int >= 1 (k = 0 is prob_zero_handoffs), got {k!r}")
    s = _reclaim_rate(outcome, arrival_rate)
    denom = model.rate + s
    succ_ratio = arrival_rate * outcome.p_success / denom
    fail_factor = arrival_rate * outcome.p_failure / denom
    if variant == VARIANT_AS_PRINTED:
        fail_factor *= model.rate
    return model.laplace(s) * succ_ratio**k + succ_ratio ** (k - 1) * fail_factor


def expected_handoffs(
    model: ServiceTimeModel, outcome: HandoffOutcomeProbs, arrival_rate: float
) -> float:
    """Expected number of spectrum handoffs in one service period.

    Closed form (p_success + p_failure) (1 - L(arrival_rate * p_failure))
    / p_failure, evaluated through the transform complement so the
    result keeps full precision when p_failure is near zero.  At
    p_failure == 0 the ratio is a removable singularity whose limit is
    arrival_rate * p_reclaim * E[T].
    """
    if not arrival_rate >= 0.0:
        raise ValueError(f"arrival_rate must be >= 0, got {arrival_rate}")
    p_l = outcome.p_success + outcome.p_failure
    if outcome.p_failure == 0.0:
        return arrival_rate * p_l * -model.laplace_derivative(0.0, 1)
    x = arrival_rate * outcome.p_failure
    return p_l * model.laplace_complement(x) / outcome.p_failure


def distribution(
    model: ServiceTimeModel,
    outcome: HandoffOutcomeProbs,
    arrival_rate: float,
    variant: str = VARIANT_NORMALIZED,
    tail_tol: float = 1e-12,
) -> HandoffCountDistribution:
    """Handoff-count probabilities out to a tail below ``tail_tol``.

    Truncation is decided on the normalized form for both variants, so
    the two truncate at the same count and stay comparable term by
    term.  Raises NonConvergenceError if the tail has not cleared the
    tolerance after a million terms (possible only for pathological
    tolerances).
    """
    _check_variant(variant)
    if not 0.0 < tail_tol < 1.0:
        raise ValueError(f"tail_tol must be in (0, 1), got {tail_tol}")
    s = _reclaim_rate(outcome, arrival_rate)
    denom = model.rate + s
    zero = model.laplace(s)
    succ_ratio = arrival_rate * outcome.p_success / denom
    fail_norm = arrival_rate * outcome.p_failure / denom
    fail_out = fail_norm * model.rate if variant == VARIANT_AS_PRINTED else fail_norm

    probs = [zero]
    mass = zero  # normalized-variant mass, drives truncation in both variants
    head = zero  # laplace(s) * succ_ratio^k
    prev = 1.0  # succ_ratio^(k-1)
    for _ in range(_MAX_TERMS):
        if 1.0 - mass < tail_tol:
            return HandoffCountDistribution(
                probs=tuple(probs),
                mean=expected_handoffs(model, outcome, arrival_rate),
                variant=variant,
            )
        head *= succ_ratio
        probs.append(head + prev * fail_out)
        mass += head + prev * fail_norm
        prev *= succ_ratio
    raise NonConvergenceError(
        f"handoff-count tail still above {tail_tol} after {_MAX_TERMS} terms"
    )
