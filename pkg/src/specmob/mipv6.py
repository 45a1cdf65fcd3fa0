"""Handover latency of a mobile IPv6 node with cognitive-radio links.

Total interruption time is assembled from movement detection (router
solicitation/advertisement over the wireless hop), spectrum-mobility
overhead (sensing, decision and reconfiguration timers), duplicate
address detection, and the binding registration exchange with the home
agent and correspondent.  Four scenarios are covered: a single- or
dual-interface terminal crossing either a channel pool inside its cell
or a cell boundary.  The dual-interface terminal keeps the old link up
while the new one is prepared, which removes the link-layer and
spectrum-mobility components from the critical path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .link_delay import WiredLinkParams, WirelessLinkParams, wired_delay, wireless_delay

__all__ = [
    "MessageCatalog",
    "NetworkTopology",
    "TimerSet",
    "LatencyBreakdown",
    "SINGLE_INTRA",
    "DUAL_INTRA",
    "SINGLE_INTER",
    "DUAL_INTER",
    "SCENARIOS",
    "movement_detection_delay",
    "spectrum_mobility_delay",
    "registration_delay",
    "total_latency",
    "reduction_percent",
]

SINGLE_INTRA = "single_intra"
DUAL_INTRA = "dual_intra"
SINGLE_INTER = "single_inter"
DUAL_INTER = "dual_inter"
SCENARIOS = (SINGLE_INTRA, DUAL_INTRA, SINGLE_INTER, DUAL_INTER)

_TOTAL_TOL = 1e-9


@dataclass(frozen=True)
class MessageCatalog:
    """Signalling message sizes in bytes.

    ``frame_payload`` mirrors the wireless frame payload so a catalog
    is self-describing about the fragmentation its sizes imply.
    """

    router_solicitation: int = 52
    router_advertisement: int = 80
    binding_update_ha: int = 56
    binding_ack_ha: int = 56
    binding_update_cn: int = 66
    home_test_init: int = 64
    care_of_test_init: int = 64
    home_test: int = 74
    care_of_test: int = 74
    data_packet: int = 120
    frame_payload: int = 19

    def __post_init__(self) -> None:
        for name in self.__dataclass_fields__:
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1, got {getattr(self, name)}")


@dataclass(frozen=True)
class NetworkTopology:
    """Backbone hop counts between the fixed nodes.

    Paths through the access router are composed from the gateway legs;
    ``hops_ar_bs`` and ``hops_ar_ar`` are carried for completeness but
    no latency expression consumes them.
    """

    hops_cn_ha: int = 4
    hops_cn_gw: int = 6
    hops_ha_gw: int = 4
    hops_gw_ar: int = 4
    hops_ar_bs: int = 1

    def __post_init__(self) -> None:
        for name in self.__dataclass_fields__:
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be >= 0, got {getattr(self, name)}")

    @property
    def hops_ha_ar(self) -> int:
        """Home agent to access router, through the gateway."""
        return self.hops_ha_gw + self.hops_gw_ar

    @property
    def hops_cn_ar(self) -> int:
        """Correspondent to access router, through the gateway."""
        return self.hops_cn_gw + self.hops_gw_ar

    @property
    def hops_ar_ar(self) -> float:
        """Neighbouring access routers; geometric mean of the gateway legs."""
        return math.sqrt(self.hops_gw_ar)


@dataclass(frozen=True)
class TimerSet:
    """Fixed timer components of the handover, in ms."""

    link_layer_ms: float = 45.35
    dad_ms: float = 1000.0
    preparation_ms: float = 100.0
    rf_reconfig_ms: float = 300.0
    sensing_sync_ms: float = 25.0
    sensing_ms: float = 25.0
    decision_ms: float = 25.0
    tx_sync_ms: float = 25.0

    def __post_init__(self) -> None:
        for name in self.__dataclass_fields__:
            if getattr(self, name) < 0.0:
                raise ValueError(f"{name} must be >= 0, got {getattr(self, name)}")


@dataclass(frozen=True)
class LatencyBreakdown:
    """Handover latency split into its additive components, in ms.

    Components that a scenario skips are zero; ``total`` is always the
    sum of the five components.
    """

    scenario: str
    t_l2: float
    t_sm: float
    t_md: float
    t_dad: float
    t_reg: float
    total: float

    def __post_init__(self) -> None:
        if self.scenario not in SCENARIOS:
            raise ValueError(f"scenario must be one of {SCENARIOS}, got {self.scenario!r}")
        for name in ("t_l2", "t_sm", "t_md", "t_dad", "t_reg"):
            if getattr(self, name) < 0.0:
                raise ValueError(f"{name} must be >= 0, got {getattr(self, name)}")
        parts = self.t_l2 + self.t_sm + self.t_md + self.t_dad + self.t_reg
        if abs(parts - self.total) > _TOTAL_TOL:
            raise ValueError(f"total {self.total} != component sum {parts}")


def movement_detection_delay(catalog: MessageCatalog, wireless: WirelessLinkParams) -> float:
    """Router solicitation plus advertisement over the wireless hop, in ms."""
    return wireless_delay(catalog.router_solicitation, wireless) + wireless_delay(
        catalog.router_advertisement, wireless
    )


def spectrum_mobility_delay(timers: TimerSet, include_rf_reconfig: bool = True) -> float:
    """Spectrum handoff overhead, in ms.

    Covers preparation, sensing synchronization, sensing, decision and
    transmission synchronization; radio reconfiguration is skipped when
    the handoff stays on the same radio front end.
    """
    total = (
        timers.preparation_ms
        + timers.sensing_sync_ms
        + timers.sensing_ms
        + timers.decision_ms
        + timers.tx_sync_ms
    )
    if include_rf_reconfig:
        total += timers.rf_reconfig_ms
    return total


def registration_delay(
    catalog: MessageCatalog,
    topology: NetworkTopology,
    wireless: WirelessLinkParams,
    wired: WiredLinkParams,
) -> float:
    """Binding registration latency, in ms.

    Sequence: binding update and acknowledgement with the home agent,
    then the home and care-of address tests (run concurrently, so the
    slower pair is on the critical path), then the binding update to
    the correspondent answered by a first data packet.
    """

    def trip(size: int, hops: int) -> float:
        return wireless_delay(size, wireless) + wired_delay(size, hops, wired)

    ha_hops = topology.hops_ha_ar
    home_path = topology.hops_cn_ha + topology.hops_ha_ar
    cn_hops = topology.hops_cn_ar
    bu_ha = trip(catalog.binding_update_ha, ha_hops)
    ba_ha = trip(catalog.binding_ack_ha, ha_hops)
    home_test = trip(catalog.home_test_init, home_path) + trip(catalog.home_test, home_path)
    care_of_test = trip(catalog.care_of_test_init, cn_hops) + trip(catalog.care_of_test, cn_hops)
    bu_cn = trip(catalog.binding_update_cn, cn_hops) + trip(catalog.data_packet, cn_hops)
    return bu_ha + ba_ha + max(home_test, care_of_test) + bu_cn


def total_latency(
    scenario: str,
    timers: TimerSet,
    catalog: MessageCatalog,
    topology: NetworkTopology,
    wireless: WirelessLinkParams,
    wired: WiredLinkParams,
) -> LatencyBreakdown:
    """Latency breakdown for one handover scenario.

    Intra-cell moves never leave the IP subnet, so movement detection,
    address configuration and registration drop out; the dual-interface
    terminal additionally hides the components its second radio
    prepares in the background.
    """
    if scenario not in SCENARIOS:
        raise ValueError(f"scenario must be one of {SCENARIOS}, got {scenario!r}")
    t_l2 = t_sm = t_md = t_dad = t_reg = 0.0
    if scenario == SINGLE_INTRA:
        # same radio front end: reconfiguration is not paid
        t_sm = spectrum_mobility_delay(timers, include_rf_reconfig=False)
    elif scenario == SINGLE_INTER:
        t_l2 = timers.link_layer_ms
        t_sm = spectrum_mobility_delay(timers, include_rf_reconfig=True)
        t_md = movement_detection_delay(catalog, wireless)
        t_dad = timers.dad_ms
        t_reg = registration_delay(catalog, topology, wireless, wired)
    elif scenario == DUAL_INTER:
        t_md = movement_detection_delay(catalog, wireless)
        t_dad = timers.dad_ms
        t_reg = registration_delay(catalog, topology, wireless, wired)
    # dual_intra: the idle interface is already tuned, nothing is paid
    total = t_l2 + t_sm + t_md + t_dad + t_reg
    return LatencyBreakdown(
        scenario=scenario, t_l2=t_l2, t_sm=t_sm, t_md=t_md, t_dad=t_dad, t_reg=t_reg, total=total
    )


def reduction_percent(single_ms: float, dual_ms: float) -> float:
    """Relative latency saving of the dual-interface terminal, in percent."""
    if not single_ms > 0.0:
        raise ValueError(f"single_ms must be > 0, got {single_ms}")
    return 100.0 * (single_ms - dual_ms) / single_ms
