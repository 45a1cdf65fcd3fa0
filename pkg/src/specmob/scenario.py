"""Scenario configuration: defaults, YAML loading, validation.

A scenario bundles every parameter the latency and probability models
consume.  All keys are optional in the YAML file; anything omitted
falls back to the built-in defaults, which reproduce the reference
operating point (five licensed channels, 100 Mb/s backbone, midpoint
wireless conditions).  Unknown sections or keys are rejected with the
offending name so config typos cannot silently fall back to defaults.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Any

import yaml

from .errors import ScenarioError
from .handoff_dist import ServiceTimeModel
from .link_delay import WiredLinkParams, WirelessLinkParams
from .mipv6 import MessageCatalog, NetworkTopology, TimerSet
from .traffic import PuTrafficParams, SpectrumBandConfig

__all__ = [
    "SweepSpec",
    "ParameterSpans",
    "ScenarioMetadata",
    "Scenario",
    "SWEEP_VARIABLES",
    "default_scenario",
    "scenario_from_mapping",
    "load_scenario",
]

SWEEP_VARIABLES = ("sigma_f", "d_wl")

_SWEEP_DEFAULTS = {
    "sigma_f": (0.0, 0.4, 0.05),
    "d_wl": (10.0, 40.0, 2.5),
}


@dataclass(frozen=True)
class SweepSpec:
    """Grid for one swept wireless variable: lo, lo+step, ..., up to hi."""

    variable: str
    lo: float
    hi: float
    step: float

    def __post_init__(self) -> None:
        if self.variable not in SWEEP_VARIABLES:
            raise ValueError(
                f"variable must be one of {SWEEP_VARIABLES}, got {self.variable!r}"
            )
        if not self.step > 0.0:
            raise ValueError(f"step must be > 0, got {self.step}")
        if self.hi < self.lo:
            raise ValueError(f"hi must be >= lo, got lo={self.lo} hi={self.hi}")


def sweep_default(variable: str) -> SweepSpec:
    """Built-in grid for a swept variable."""
    if variable not in _SWEEP_DEFAULTS:
        raise ValueError(f"variable must be one of {SWEEP_VARIABLES}, got {variable!r}")
    lo, hi, step = _SWEEP_DEFAULTS[variable]
    return SweepSpec(variable, lo, hi, step)


@dataclass(frozen=True)
class ParameterSpans:
    """Operating ranges of the traffic rates, used by validation grids."""

    arrival_rate: tuple[float, float] = (1.0, 6.0)
    pu_service_rate: tuple[float, float] = (0.9, 3.0)
    su_service_rate: tuple[float, float] = (0.6, 3.0)

    def __post_init__(self) -> None:
        for name in self.__dataclass_fields__:
            lo, hi = getattr(self, name)
            if not (lo <= hi and lo >= 0.0):
                raise ValueError(f"{name} span must satisfy 0 <= lo <= hi, got {lo}, {hi}")


@dataclass(frozen=True)
class ScenarioMetadata:
    """Mobility context carried with a scenario.

    Nothing downstream consumes these; they document the regime the
    defaults were chosen for.
    """

    velocity_mps: tuple[float, float] = (10.0, 30.0)
    ba_radius_m: float = 750.0
    ea_radius_m: float = 1500.0


@dataclass(frozen=True)
class Scenario:
    """Complete parameter bundle for one study."""

    traffic: PuTrafficParams = field(default_factory=lambda: PuTrafficParams(3.5, 1.95))
    band: SpectrumBandConfig = field(default_factory=lambda: SpectrumBandConfig(5))
    service: ServiceTimeModel = field(default_factory=lambda: ServiceTimeModel(1.8))
    wireless: WirelessLinkParams = field(default_factory=WirelessLinkParams)
    wired: WiredLinkParams = field(default_factory=WiredLinkParams)
    messages: MessageCatalog = field(default_factory=MessageCatalog)
    topology: NetworkTopology = field(default_factory=NetworkTopology)
    timers: TimerSet = field(default_factory=TimerSet)
    sweep: SweepSpec = field(default_factory=lambda: sweep_default("sigma_f"))
    spans: ParameterSpans = field(default_factory=ParameterSpans)
    metadata: ScenarioMetadata = field(default_factory=ScenarioMetadata)


def default_scenario() -> Scenario:
    """The built-in reference scenario."""
    return Scenario()


# yaml key -> (constructor kwarg, converter); converters raise ValueError
# on the wrong shape and the loader rewrites that as section.key


def _num(v: Any) -> float:
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise ValueError(f"expected a number, got {v!r}")
    return float(v)


def _int(v: Any) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise ValueError(f"expected an integer, got {v!r}")
    return v


def _pair(v: Any) -> tuple[float, float]:
    if not isinstance(v, (list, tuple)) or len(v) != 2:
        raise ValueError(f"expected a [lo, hi] pair, got {v!r}")
    return (_num(v[0]), _num(v[1]))


def _str(v: Any) -> str:
    if not isinstance(v, str):
        raise ValueError(f"expected a string, got {v!r}")
    return v


_SECTIONS: dict[str, dict[str, tuple[str, Any]]] = {
    "traffic": {
        "lambda": ("arrival_rate", _num),
        "mu_cp": ("service_rate", _num),
    },
    "band": {
        "n_channels": ("n_channels", _int),
    },
    "service": {
        "mu_mcr": ("rate", _num),
        "kind": ("kind", _str),
    },
    "wireless": {
        "sigma_f": ("frame_error_rate", _num),
        "n_retx": ("max_retransmissions", _int),
        "zeta_ms": ("inter_frame_ms", _num),
        "d_wl_ms": ("link_delay_ms", _num),
        "l_f": ("frame_bytes", _int),
    },
    "wired": {
        "bw_bps": ("bandwidth_bps", _num),
        "d_wd_ms": ("prop_delay_ms", _num),
    },
    "messages": {
        "rs": ("router_solicitation", _int),
        "ra": ("router_advertisement", _int),
        "bu_ha": ("binding_update_ha", _int),
        "ba_ha": ("binding_ack_ha", _int),
        "bu_cn": ("binding_update_cn", _int),
        "hoti": ("home_test_init", _int),
        "coti": ("care_of_test_init", _int),
        "hot": ("home_test", _int),
        "cot": ("care_of_test", _int),
        "data": ("data_packet", _int),
    },
    "topology": {
        "h_c_h": ("hops_cn_ha", _int),
        "h_c_g": ("hops_cn_gw", _int),
        "h_h_g": ("hops_ha_gw", _int),
        "h_g_a": ("hops_gw_ar", _int),
        "h_a_bs": ("hops_ar_bs", _int),
    },
    "timers": {
        "t_l2": ("link_layer_ms", _num),
        "t_dad": ("dad_ms", _num),
        "t_prep": ("preparation_ms", _num),
        "t_rcfg": ("rf_reconfig_ms", _num),
        "t_syn_sen": ("sensing_sync_ms", _num),
        "t_sen": ("sensing_ms", _num),
        "t_dec": ("decision_ms", _num),
        "t_syn_tx": ("tx_sync_ms", _num),
    },
    "sweep": {
        "variable": ("variable", _str),
        "min": ("lo", _num),
        "max": ("hi", _num),
        "step": ("step", _num),
    },
    "spans": {
        "lambda": ("arrival_rate", _pair),
        "mu_cp": ("pu_service_rate", _pair),
        "mu_mcr": ("su_service_rate", _pair),
    },
    "metadata": {
        "v_mps": ("velocity_mps", _pair),
        "l_ba_m": ("ba_radius_m", _num),
        "l_ea_m": ("ea_radius_m", _num),
    },
}

_SECTION_FIELDS = {
    "traffic": "traffic",
    "band": "band",
    "service": "service",
    "wireless": "wireless",
    "wired": "wired",
    "messages": "messages",
    "topology": "topology",
    "timers": "timers",
    "sweep": "sweep",
    "spans": "spans",
    "metadata": "metadata",
}


def _section_kwargs(section: str, mapping: Any) -> dict[str, Any]:
    if mapping is None:
        return {}
    if not isinstance(mapping, dict):
        raise ScenarioError(f"section {section!r} must be a mapping, got {mapping!r}")
    keys = _SECTIONS[section]
    kwargs: dict[str, Any] = {}
    for key, value in mapping.items():
        if key not in keys:
            known = ", ".join(sorted(keys))
            raise ScenarioError(f"unknown key {key!r} in section {section!r} (known: {known})")
        kwarg, convert = keys[key]
        try:
            kwargs[kwarg] = convert(value)
        except ValueError as exc:
            raise ScenarioError(f"{section}.{key}: {exc}") from exc
    return kwargs


def scenario_from_mapping(data: dict[str, Any]) -> Scenario:
    """Build a scenario from a parsed mapping, defaulting omitted keys.

    Raises ScenarioError naming the section/key for unknown names,
    wrong types, or out-of-range values.
    """
    if not isinstance(data, dict):
        raise ScenarioError(f"scenario must be a mapping, got {data!r}")
    scenario = default_scenario()
    updates: dict[str, Any] = {}
    for section, mapping in data.items():
        if section not in _SECTIONS:
            known = ", ".join(sorted(_SECTIONS))
            raise ScenarioError(f"unknown section {section!r} (known: {known})")
        kwargs = _section_kwargs(section, mapping)
        if not kwargs:
            continue
        current = getattr(scenario, _SECTION_FIELDS[section])
        try:
            updates[_SECTION_FIELDS[section]] = replace(current, **kwargs)
        except ValueError as exc:
            # constructor messages start with the kwarg name; translate
            # it back to the yaml key so the error points at the file
            msg = str(exc)
            rev = {kw: key for key, (kw, _) in _SECTIONS[section].items()}
            kwarg = msg.split(" ", 1)[0]
            if kwarg in rev:
                raise ScenarioError(f"{section}.{rev[kwarg]}: {msg}") from exc
            raise ScenarioError(f"in section {section!r}: {msg}") from exc
    if "wireless" in updates and "l_f" in (data.get("wireless") or {}):
        # keep the catalog's fragmentation hint in step with the link
        frame = updates["wireless"].frame_bytes
        messages = updates.get("messages", scenario.messages)
        updates["messages"] = replace(messages, frame_payload=frame)
    return replace(scenario, **updates)


def load_scenario(path: str) -> Scenario:
    """Load a scenario from a YAML file; an empty file means defaults."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = yaml.safe_load(fh)
    except yaml.YAMLError as exc:
        raise ScenarioError(f"{path}: invalid YAML: {exc}") from exc
    if data is None:
        data = {}
    if not isinstance(data, dict):
        raise ScenarioError(f"{path}: scenario must be a mapping at top level")
    return scenario_from_mapping(data)
