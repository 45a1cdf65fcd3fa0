"""Command-line front end.

Subcommands:

* ``probe``     analytic probabilities and handoff-count head at one
                operating point
* ``report``    latency breakdown of the four handover scenarios
* ``sweep``     latency sweep over a wireless variable, written as CSV
* ``validate``  Monte-Carlo cross-check of the analytic results

Exit codes: 0 success, 1 validation failure, 2 bad arguments or
scenario errors.
"""

from __future__ import annotations

import argparse
import sys

from . import handoff_dist, mipv6
from .errors import NonConvergenceError, ScenarioError, UnsupportedDistributionError
from .montecarlo import SimulationConfig
from .scenario import SWEEP_VARIABLES, Scenario, default_scenario, load_scenario
from .sweep import emit_csv, run_sweep
from .traffic import PuTrafficParams, SpectrumBandConfig, handoff_outcome_probs, handoff_type_probs
from .validate import run_validation

__all__ = ["main"]


def _scenario_for(args: argparse.Namespace) -> Scenario:
    if getattr(args, "scenario", None):
        return load_scenario(args.scenario)
    return default_scenario()


def _cmd_probe(args: argparse.Namespace) -> int:
    scenario = _scenario_for(args)
    lam = args.lam if args.lam is not None else scenario.traffic.arrival_rate
    mu_cp = args.mu_cp if args.mu_cp is not None else scenario.traffic.service_rate
    mu_mcr = args.mu_mcr if args.mu_mcr is not None else scenario.service.rate
    channels = args.channels if args.channels is not None else scenario.band.n_channels
    params = PuTrafficParams(lam, mu_cp)
    band = SpectrumBandConfig(channels)
    model = handoff_dist.ServiceTimeModel(mu_mcr)
    outcome = handoff_outcome_probs(params, band)
    types = handoff_type_probs(outcome)
    dist = handoff_dist.distribution(model, outcome, lam, variant=args.variant)
    print(f"point: lambda={lam:g} mu_cp={mu_cp:g} mu_mcr={mu_mcr:g} n_channels={channels}")
    print(f"  p_off={outcome.p_off:.6g}  p_on={outcome.p_on:.6g}")
    print(f"  p_b={outcome.p_block:.6g}  p_under={outcome.p_under:.6g}  p_over={outcome.p_over:.6g}")
    print(f"  p_l={outcome.p_reclaim:.6g}  p_nl={outcome.p_no_reclaim:.6g}")
    print(f"  p_succ={outcome.p_success:.6g}  p_fail={outcome.p_failure:.6g}")
    print(
        "  type probs: intracell_intrapool="
        f"{types.intracell_intrapool:.6g}  intercell_interpool_raw={types.intercell_interpool_raw:.6g}"
        f"  intercell_interpool={types.intercell_interpool:.6g}"
    )
    head = ", ".join(f"Pr({k})={p:.6g}" for k, p in enumerate(dist.probs[:5]))
    print(f"  handoff count [{args.variant}]: {head}")
    print(f"  terms={len(dist.probs)}  mass={dist.total_mass:.12g}  mean={dist.mean:.6g}")
    return 0


def _cmd_report(args: argparse.Namespace) -> int:
    scenario = _scenario_for(args)
    parts = (scenario.timers, scenario.messages, scenario.topology, scenario.wireless, scenario.wired)
    rows = [mipv6.total_latency(tag, *parts) for tag in mipv6.SCENARIOS]
    print(f"{'scenario':<14} {'t_l2':>9} {'t_sm':>9} {'t_md':>9} {'t_dad':>9} {'t_reg':>9} {'total':>10}")
    for row in rows:
        print(
            f"{row.scenario:<14} {row.t_l2:>9.4g} {row.t_sm:>9.4g} {row.t_md:>9.4g}"
            f" {row.t_dad:>9.4g} {row.t_reg:>9.4g} {row.total:>10.6g}"
        )
    single = next(r for r in rows if r.scenario == mipv6.SINGLE_INTER)
    dual = next(r for r in rows if r.scenario == mipv6.DUAL_INTER)
    print(f"inter-cell latency reduction: {mipv6.reduction_percent(single.total, dual.total):.4g} %")
    return 0


def _cmd_sweep(args: argparse.Namespace) -> int:
    scenario = _scenario_for(args)
    rows = run_sweep(scenario, variable=args.var)
    emit_csv(rows, args.out)
    print(f"wrote {len(rows)} rows to {args.out}")
    return 0


def _cmd_validate(args: argparse.Namespace) -> int:
    scenario = _scenario_for(args)
    cfg = SimulationConfig(
        seed=args.seed,
        replications=args.reps,
        horizon=args.horizon,
        n_batches=args.batches,
    )
    report = run_validation(scenario, cfg, variant=args.variant)
    print(report.render())
    return 0 if report.passed else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="specmob",
        description="spectrum-handoff probabilities and handover latency for cognitive-radio terminals",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    probe = sub.add_parser("probe", help="analytic probabilities at one operating point")
    probe.add_argument("--scenario", help="YAML scenario file")
    probe.add_argument("--lambda", dest="lam", type=float, default=None, help="PU arrival rate")
    probe.add_argument("--mu-cp", dest="mu_cp", type=float, default=None, help="PU service rate")
    probe.add_argument("--mu-mcr", dest="mu_mcr", type=float, default=None, help="user service rate")
    probe.add_argument("--channels", type=int, default=None, help="channels in the band")
    probe.add_argument(
        "--variant",
        choices=handoff_dist.VARIANTS,
        default=handoff_dist.VARIANT_NORMALIZED,
        help="handoff-count form",
    )
    probe.set_defaults(func=_cmd_probe)

    report = sub.add_parser("report", help="latency breakdown of the four scenarios")
    report.add_argument("--scenario", help="YAML scenario file")
    report.set_defaults(func=_cmd_report)

    swp = sub.add_parser("sweep", help="latency sweep over a wireless variable")
    swp.add_argument("--scenario", help="YAML scenario file")
    swp.add_argument("--var", choices=SWEEP_VARIABLES, default=None, help="variable to sweep")
    swp.add_argument("--out", required=True, help="output CSV path")
    swp.set_defaults(func=_cmd_sweep)

    val = sub.add_parser("validate", help="Monte-Carlo cross-check of the analytic results")
    val.add_argument("--scenario", help="YAML scenario file")
    val.add_argument("--seed", type=int, default=42, help="master seed")
    val.add_argument("--reps", type=int, default=100_000, help="replications per simulated point")
    val.add_argument("--horizon", type=float, default=1e6, help="loss-system run length")
    val.add_argument("--batches", type=int, default=32, help="batch count for error bars")
    val.add_argument(
        "--variant",
        choices=handoff_dist.VARIANTS,
        default=handoff_dist.VARIANT_NORMALIZED,
        help="handoff-count form",
    )
    val.set_defaults(func=_cmd_validate)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ScenarioError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except UnsupportedDistributionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NonConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
