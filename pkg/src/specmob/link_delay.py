"""Per-message delay over the wireless hop and the wired backbone.

The wireless hop retransmits a corrupted frame up to a retry limit, so
the expected per-frame delay is the one-way link delay scaled by the
mean number of attempts of a truncated geometric.  Messages longer
than one frame payload pay an inter-frame gap per extra frame.  The
wired side is a store-and-forward path: serialization per hop plus a
single propagation allowance.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "WirelessLinkParams",
    "WiredLinkParams",
    "frames_per_packet",
    "expected_frame_delay",
    "wireless_delay",
    "wired_delay",
]


@dataclass(frozen=True)
class WirelessLinkParams:
    """Wireless-hop characteristics.

    frame_error_rate    probability a frame transmission fails, in [0, 1)
    max_retransmissions retries after the first attempt, >= 0
    inter_frame_ms      gap between successive frames of one message
    link_delay_ms       one-way delay of a single frame attempt
    frame_bytes         payload carried per frame
    """

    frame_error_rate: float = 0.2
    max_retransmissions: int = 3
    inter_frame_ms: float = 30.0
    link_delay_ms: float = 25.0
    frame_bytes: int = 19

    def __post_init__(self) -> None:
        if not 0.0 <= self.frame_error_rate < 1.0:
            raise ValueError(
                f"frame_error_rate must be in [0, 1), got {self.frame_error_rate}"
            )
        if self.max_retransmissions < 0:
            raise ValueError(
                f"max_retransmissions must be >= 0, got {self.max_retransmissions}"
            )
        if self.inter_frame_ms < 0.0:
            raise ValueError(f"inter_frame_ms must be >= 0, got {self.inter_frame_ms}")
        if not self.link_delay_ms > 0.0:
            raise ValueError(f"link_delay_ms must be > 0, got {self.link_delay_ms}")
        if self.frame_bytes < 1:
            raise ValueError(f"frame_bytes must be >= 1, got {self.frame_bytes}")


@dataclass(frozen=True)
class WiredLinkParams:
    """Backbone link characteristics: per-hop bandwidth and a propagation allowance."""

    bandwidth_bps: float = 1e8
    prop_delay_ms: float = 0.5

    def __post_init__(self) -> None:
        if not self.bandwidth_bps > 0.0:
            raise ValueError(f"bandwidth_bps must be > 0, got {self.bandwidth_bps}")
        if self.prop_delay_ms < 0.0:
            raise ValueError(f"prop_delay_ms must be >= 0, got {self.prop_delay_ms}")


def frames_per_packet(packet_bytes: int, frame_bytes: int) -> int:
    """Number of frames needed to carry ``packet_bytes`` of payload."""
    if packet_bytes < 1:
        raise ValueError(f"packet_bytes must be >= 1, got {packet_bytes}")
    if frame_bytes < 1:
        raise ValueError(f"frame_bytes must be >= 1, got {frame_bytes}")
    return -(-packet_bytes // frame_bytes)


def expected_frame_delay(params: WirelessLinkParams) -> float:
    """Expected wireless delay of one frame, retransmissions included.

    With failure probability q and up to n retries, the number of
    attempts is a geometric truncated at n + 1, whose mean is
    (1 - q^(n+1)) / (1 - q); q = 0 collapses to a single attempt.
    """
    q = params.frame_error_rate
    if q == 0.0:
        return params.link_delay_ms
    attempts = (1.0 - q ** (params.max_retransmissions + 1)) / (1.0 - q)
    return params.link_delay_ms * attempts


def wireless_delay(packet_bytes: int, params: WirelessLinkParams) -> float:
    """Expected wireless-hop delay, in ms, of a ``packet_bytes`` message.

    Every frame pays the expected per-frame delay once (attempts
    pipeline into the same slot); each frame after the first adds the
    inter-frame gap.
    """
    frames = frames_per_packet(packet_bytes, params.frame_bytes)
    return expected_frame_delay(params) + (frames - 1) * params.inter_frame_ms


def wired_delay(packet_bytes: int, hops: int, params: WiredLinkParams) -> float:
    """Wired-path delay, in ms, over ``hops`` store-and-forward links.

    Serialization of the packet repeats at every hop; propagation is a
    single additive allowance for the whole path.
    """
    if packet_bytes < 1:
        raise ValueError(f"packet_bytes must be >= 1, got {packet_bytes}")
    if hops < 0:
        raise ValueError(f"hops must be >= 0, got {hops}")
    serialization_s = packet_bytes * 8.0 * hops / params.bandwidth_bps
    return serialization_s * 1000.0 + params.prop_delay_ms
