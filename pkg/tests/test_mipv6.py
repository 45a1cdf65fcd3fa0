"""Checks for the handover-latency assembly."""

import pytest

from specmob.link_delay import WiredLinkParams, WirelessLinkParams
from specmob.mipv6 import (
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

DEFAULTS = (TimerSet(), MessageCatalog(), NetworkTopology(), WirelessLinkParams(), WiredLinkParams())


def breakdown(scenario, *, wireless=None):
    timers, catalog, topo, wl, wd = DEFAULTS
    return total_latency(scenario, timers, catalog, topo, wireless or wl, wd)


class TestTopology:
    def test_composed_paths(self):
        topo = NetworkTopology()
        assert topo.hops_ha_ar == 8
        assert topo.hops_cn_ar == 10
        assert topo.hops_cn_ha + topo.hops_ha_ar == 12
        assert topo.hops_ar_ar == pytest.approx(2.0)

    def test_rejects_negative_hops(self):
        with pytest.raises(ValueError):
            NetworkTopology(hops_cn_ha=-1)


class TestComponents:
    def test_movement_detection(self):
        assert movement_detection_delay(MessageCatalog(), WirelessLinkParams()) == pytest.approx(
            242.4, abs=1e-9
        )

    def test_movement_detection_error_free(self):
        wl = WirelessLinkParams(frame_error_rate=0.0)
        assert movement_detection_delay(MessageCatalog(), wl) == pytest.approx(230.0, abs=1e-9)

    def test_spectrum_mobility_with_reconfiguration(self):
        assert spectrum_mobility_delay(TimerSet()) == pytest.approx(500.0, abs=1e-12)

    def test_spectrum_mobility_same_radio(self):
        assert spectrum_mobility_delay(TimerSet(), include_rf_reconfig=False) == pytest.approx(
            200.0, abs=1e-12
        )

    def test_registration(self):
        timers, catalog, topo, wl, wd = DEFAULTS
        assert registration_delay(catalog, topo, wl, wd) == pytest.approx(760.55296, abs=1e-9)

    def test_registration_error_free(self):
        timers, catalog, topo, _, wd = DEFAULTS
        wl = WirelessLinkParams(frame_error_rate=0.0)
        assert registration_delay(catalog, topo, wl, wd) == pytest.approx(
            723.3529599999999, abs=1e-9
        )

    def test_registration_home_branch_dominates(self):
        # the home-address test crosses 12 hops, the care-of test 10;
        # the max() must pick the home branch at the defaults
        timers, catalog, topo, wl, wd = DEFAULTS
        base = registration_delay(catalog, topo, wl, wd)
        shorter_home = NetworkTopology(hops_cn_ha=0)
        assert registration_delay(catalog, shorter_home, wl, wd) < base

    def test_registration_care_of_branch_pins_the_max(self):
        # hops_cn_ha moves only the home-test path; once that path is
        # below the 10-hop care-of path, shrinking it further must not
        # move the total
        timers, catalog, topo, wl, wd = DEFAULTS
        at_one = registration_delay(catalog, NetworkTopology(hops_cn_ha=1), wl, wd)
        at_zero = registration_delay(catalog, NetworkTopology(hops_cn_ha=0), wl, wd)
        assert at_one == at_zero


class TestTotals:
    def test_four_scenarios(self):
        assert breakdown(SINGLE_INTER).total == pytest.approx(2548.30296, abs=1e-9)
        assert breakdown(DUAL_INTER).total == pytest.approx(2002.95296, abs=1e-9)
        assert breakdown(SINGLE_INTRA).total == 200.0
        assert breakdown(DUAL_INTRA).total == 0.0

    def test_component_layout(self):
        b = breakdown(SINGLE_INTER)
        assert b.t_l2 == pytest.approx(45.35, abs=1e-12)
        assert b.t_sm == pytest.approx(500.0, abs=1e-12)
        assert b.t_md == pytest.approx(242.4, abs=1e-9)
        assert b.t_dad == pytest.approx(1000.0, abs=1e-12)
        assert b.t_reg == pytest.approx(760.55296, abs=1e-9)
        d = breakdown(DUAL_INTER)
        assert d.t_l2 == 0.0 and d.t_sm == 0.0
        assert d.t_md == b.t_md and d.t_reg == b.t_reg and d.t_dad == b.t_dad

    def test_dual_advantage_is_the_hidden_overhead(self):
        single = breakdown(SINGLE_INTER)
        dual = breakdown(DUAL_INTER)
        assert single.total - dual.total == pytest.approx(545.35, abs=1e-9)

    def test_unknown_scenario_rejected(self):
        timers, catalog, topo, wl, wd = DEFAULTS
        with pytest.raises(ValueError, match="scenario"):
            total_latency("triple_inter", timers, catalog, topo, wl, wd)

    def test_all_scenarios_enumerate(self):
        assert set(SCENARIOS) == {SINGLE_INTRA, DUAL_INTRA, SINGLE_INTER, DUAL_INTER}


class TestBreakdownType:
    def test_total_must_match_components(self):
        with pytest.raises(ValueError, match="total"):
            LatencyBreakdown(
                scenario=SINGLE_INTER, t_l2=1.0, t_sm=2.0, t_md=3.0, t_dad=4.0, t_reg=5.0,
                total=99.0,
            )

    def test_rejects_negative_component(self):
        with pytest.raises(ValueError):
            LatencyBreakdown(
                scenario=DUAL_INTRA, t_l2=-1.0, t_sm=0.0, t_md=0.0, t_dad=0.0, t_reg=0.0,
                total=-1.0,
            )


class TestReduction:
    def test_reference_point(self):
        assert reduction_percent(2548.30296, 2002.95296) == pytest.approx(
            21.400516679539546, rel=1e-12
        )

    def test_rejects_nonpositive_baseline(self):
        with pytest.raises(ValueError):
            reduction_percent(0.0, 0.0)
