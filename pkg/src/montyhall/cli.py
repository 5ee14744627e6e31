"""Command-line surface: analyze, simulate, verify, sweep.

Exit codes: 0 success, 1 verification found a counterexample, 2 usage or
config validation error, 3 runtime failure (rejection limit). Standard
output carries only the machine-readable document (JSON or CSV);
diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import secrets
import sys
from fractions import Fraction

from .analytic import (
    informed_probabilities,
    random_host_likelihoods,
    random_probabilities,
)
from .core import (
    HostModel,
    ProblemConfig,
    Strategy,
    ValidationError,
    decimal_string,
    validate,
)
from .oracle import OracleError, enumerate_worlds, oracle_probabilities
from .rng import MASK64
from .simulate import RejectionLimitError, simulate_worlds
from .stats import make_trace, theoretical_outcome, trace_csv, wilson_interval
from .svg import render_convergence_svg

SEED_ENV = "MONTYHALL_SEED"

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_RUNTIME = 3


def _add_config_flags(parser: argparse.ArgumentParser, required: bool = True) -> None:
    parser.add_argument("--doors", type=int, required=required, help="total doors N")
    parser.add_argument("--prizes", type=int, required=required, help="prize doors m")
    parser.add_argument("--opened", type=int, required=required,
                        help="doors the host opens k")
    parser.add_argument("--revealed", type=int, required=required,
                        help="prizes among the opened doors r")
    parser.add_argument("--host", choices=["informed", "random"], required=required,
                        help="host behavior")


def _config_from_args(args: argparse.Namespace) -> ProblemConfig:
    return validate(
        ProblemConfig(
            doors=args.doors,
            prizes=args.prizes,
            opened=args.opened,
            revealed=args.revealed,
            host=HostModel(args.host),
        )
    )


def _config_doc(config: ProblemConfig) -> dict:
    return {
        "doors": config.doors,
        "prizes": config.prizes,
        "opened": config.opened,
        "revealed": config.revealed,
        "host": config.host.value,
    }


def _prob_doc(value: Fraction, places: int = 5) -> dict:
    return {"fraction": str(value), "decimal": decimal_string(value, places)}


def _emit(doc: dict) -> None:
    print(json.dumps(doc, indent=2))


def cmd_analyze(args: argparse.Namespace) -> int:
    config = _config_from_args(args)
    places = args.precision
    if config.host is HostModel.INFORMED:
        outcome = informed_probabilities(config)
    else:
        outcome = random_probabilities(config)
    doc = {
        "schema": "montyhall.analyze/1",
        "config": _config_doc(config),
        "stay": _prob_doc(outcome.stay, places),
        "switch": _prob_doc(outcome.switch, places),
    }
    if config.host is HostModel.RANDOM:
        lk = random_host_likelihoods(config)
        doc["likelihoods"] = {
            "given_prize": _prob_doc(lk.given_prize, places),
            "given_no_prize": _prob_doc(lk.given_no_prize, places),
            "marginal": _prob_doc(lk.marginal, places),
        }
    _emit(doc)
    return EXIT_OK


def _resolve_seed(args: argparse.Namespace) -> int:
    if args.seed is not None:
        seed = args.seed
    elif os.environ.get(SEED_ENV):
        try:
            seed = int(os.environ[SEED_ENV])
        except ValueError:
            raise ValidationError("SEED_RANGE", f"{SEED_ENV} must be an integer")
    else:
        seed = secrets.randbits(64)
        print(f"note: no seed given, drew {seed}; pass --seed {seed} to reproduce",
              file=sys.stderr)
    if not 0 <= seed <= MASK64:
        raise ValidationError("SEED_RANGE", f"seed must be in [0, 2^64), got {seed}")
    return seed


def cmd_simulate(args: argparse.Namespace) -> int:
    config = _config_from_args(args)
    if args.trials < 1:
        raise ValidationError("TRIALS_RANGE", f"--trials must be >= 1, got {args.trials}")
    if args.workers < 1:
        raise ValidationError("WORKERS_RANGE", f"--workers must be >= 1, got {args.workers}")
    seed = _resolve_seed(args)
    strategies = {
        "stay": [Strategy.STAY],
        "switch": [Strategy.SWITCH],
        "both": [Strategy.STAY, Strategy.SWITCH],
    }[args.strategy]

    sample = simulate_worlds(
        config, args.trials, seed, workers=args.workers, backend=args.backend
    )
    stay_exact, switch_exact = theoretical_outcome(config)
    exact = {Strategy.STAY: stay_exact, Strategy.SWITCH: switch_exact}

    doc = {
        "schema": "montyhall.simulate/1",
        "config": _config_doc(config),
        "trials": args.trials,
        "seed": seed,
        "strategies": {},
    }
    for strategy in strategies:
        summary = sample.summary(strategy)
        low, high = wilson_interval(summary.wins, summary.accepted_trials)
        doc["strategies"][strategy.value] = {
            "wins": summary.wins,
            "trials": summary.accepted_trials,
            "win_rate": summary.win_rate,
            "wilson_ci": [low, high],
            "rejected_worlds": summary.rejected_trials,
            "acceptance_rate": summary.acceptance_rate,
            "theoretical": _prob_doc(exact[strategy]),
            "difference": f"{abs(float(exact[strategy]) - summary.win_rate):.5f}",
        }
    if config.host is HostModel.RANDOM:
        doc["event_probability"] = _prob_doc(random_host_likelihoods(config).marginal)

    outputs = {}
    if args.trace or args.svg:
        traces = [
            make_trace(
                sample.stay_won if s is Strategy.STAY else sample.switch_won,
                strategy=s,
                host=config.host,
            )
            for s in strategies
        ]
        if args.trace:
            with open(args.trace, "w", newline="") as fh:
                fh.write(trace_csv(traces))
            outputs["trace_csv"] = args.trace
        if args.svg:
            references = {s.value: exact[s] for s in strategies}
            markup = render_convergence_svg(
                traces,
                references,
                log_x=not args.linear,
                title=f"{config.host.value} host: {config.describe()}",
            )
            with open(args.svg, "w") as fh:
                fh.write(markup)
            outputs["svg"] = args.svg
    if outputs:
        doc["outputs"] = outputs

    _emit(doc)
    return EXIT_OK


def _conservation_holds(config: ProblemConfig, stay: Fraction, switch: Fraction) -> bool:
    n, m, k, r = config.doors, config.prizes, config.opened, config.revealed
    if config.host is HostModel.INFORMED:
        # contestant door expectation + revealed prizes + switch-pool expectation
        return Fraction(m, n) + r + (n - k - 1) * switch == m
    return (n - k) * stay + r == m


def cmd_verify(args: argparse.Namespace) -> int:
    if not 3 <= args.max_doors <= 8:
        print("error: --max-doors must be between 3 and 8", file=sys.stderr)
        return EXIT_USAGE

    checked = {"informed": 0, "random": 0}
    failure = None
    for n in range(2, args.max_doors + 1):
        for m in range(1, n):
            for k in range(0, n - 1):
                for r in range(0, k + 1):
                    for host in (HostModel.INFORMED, HostModel.RANDOM):
                        config = ProblemConfig(n, m, k, r, host)
                        try:
                            validate(config)
                        except ValidationError:
                            continue
                        if host is HostModel.INFORMED:
                            closed = informed_probabilities(config)
                        else:
                            closed = random_probabilities(config)
                        brute = oracle_probabilities(config)
                        problems = []
                        if brute.stay != closed.stay:
                            problems.append(
                                f"stay: oracle {brute.stay} != analytic {closed.stay}"
                            )
                        if brute.switch != closed.switch:
                            problems.append(
                                f"switch: oracle {brute.switch} != analytic {closed.switch}"
                            )
                        if not _conservation_holds(config, closed.stay, closed.switch):
                            problems.append("expectation conservation identity failed")
                        if host is HostModel.RANDOM:
                            marginal = random_host_likelihoods(config).marginal
                            observed = enumerate_worlds(config).event_probability()
                            if observed != marginal:
                                problems.append(
                                    f"event probability: oracle {observed} != "
                                    f"analytic {marginal}"
                                )
                        checked[host.value] += 1
                        if problems and failure is None:
                            failure = {
                                "config": _config_doc(config),
                                "problems": problems,
                            }
                    if failure:
                        break
                if failure:
                    break
            if failure:
                break
        if failure:
            break

    doc = {
        "schema": "montyhall.verify/1",
        "max_doors": args.max_doors,
        "configs_checked": checked["informed"] + checked["random"],
        "informed_checked": checked["informed"],
        "random_checked": checked["random"],
        "passed": failure is None,
        "failure": failure,
    }
    _emit(doc)
    if failure:
        print(f"verification failed on {failure['config']}", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    return EXIT_OK


SWEEP_CSV_HEADER = "param_value,host,stay,switch,stay_decimal,switch_decimal"


def cmd_sweep(args: argparse.Namespace) -> int:
    if args.host is None:
        print("error: --host is required", file=sys.stderr)
        return EXIT_USAGE
    base = {
        "doors": args.doors,
        "prizes": args.prizes,
        "opened": args.opened,
        "revealed": args.revealed,
    }
    for name, value in base.items():
        if name != args.vary and value is None:
            print(f"error: --{name} is required unless it is the varied parameter",
                  file=sys.stderr)
            return EXIT_USAGE
    if args.sweep_from > args.sweep_to:
        print("error: --from must be <= --to", file=sys.stderr)
        return EXIT_USAGE

    lines = [SWEEP_CSV_HEADER]
    valid_points = 0
    for value in range(args.sweep_from, args.sweep_to + 1):
        fields = dict(base)
        fields[args.vary] = value
        config = ProblemConfig(host=HostModel(args.host), **fields)
        try:
            validate(config)
        except ValidationError as exc:
            lines.append(f"{value},{args.host},{exc.code},,,")
            continue
        if config.host is HostModel.INFORMED:
            outcome = informed_probabilities(config)
        else:
            outcome = random_probabilities(config)
        lines.append(
            f"{value},{args.host},{outcome.stay},{outcome.switch},"
            f"{decimal_string(outcome.stay)},{decimal_string(outcome.switch)}"
        )
        valid_points += 1

    if valid_points == 0:
        print("error: no valid configuration in the sweep range", file=sys.stderr)
        return EXIT_USAGE
    print("\n".join(lines))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="montyhall",
        description="Exact analysis, brute-force verification, and Monte Carlo "
                    "simulation of generalized Monty Hall games.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="exact stay/switch probabilities")
    _add_config_flags(p_analyze)
    p_analyze.add_argument("--precision", type=int, default=5,
                           help="decimal places in rendered probabilities")
    p_analyze.set_defaults(func=cmd_analyze)

    p_sim = sub.add_parser("simulate", help="seeded Monte Carlo simulation")
    _add_config_flags(p_sim)
    p_sim.add_argument("--trials", type=int, required=True, help="accepted trials to run")
    p_sim.add_argument("--seed", type=int, default=None,
                       help=f"64-bit master seed (default: ${SEED_ENV} or a fresh "
                            f"random seed, printed to stderr)")
    p_sim.add_argument("--strategy", choices=["stay", "switch", "both"], default="both")
    p_sim.add_argument("--trace", metavar="PATH", default=None,
                       help="write the convergence trace CSV here")
    p_sim.add_argument("--svg", metavar="PATH", default=None,
                       help="write a convergence plot SVG here")
    p_sim.add_argument("--linear", action="store_true",
                       help="linear trial axis in the SVG (default: log)")
    p_sim.add_argument("--workers", type=int, default=1,
                       help="worker threads (never changes results)")
    p_sim.add_argument("--backend", choices=["numba", "numpy"], default=None,
                       help="kernel backend (default: $MONTYHALL_BACKEND or best available)")
    p_sim.set_defaults(func=cmd_simulate)

    p_verify = sub.add_parser(
        "verify", help="exhaustively check closed forms against brute-force enumeration"
    )
    p_verify.add_argument("--max-doors", type=int, default=7,
                          help="check all valid configs up to this many doors (3..8)")
    p_verify.set_defaults(func=cmd_verify)

    p_sweep = sub.add_parser("sweep", help="exact probabilities over a parameter range")
    _add_config_flags(p_sweep, required=False)
    p_sweep.add_argument("--vary", choices=["doors", "prizes", "opened", "revealed"],
                         required=True)
    p_sweep.add_argument("--from", dest="sweep_from", type=int, required=True,
                         metavar="A", help="first value of the varied parameter")
    p_sweep.add_argument("--to", dest="sweep_to", type=int, required=True,
                         metavar="B", help="last value of the varied parameter")
    p_sweep.set_defaults(func=cmd_sweep)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OracleError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RejectionLimitError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
