#!/usr/bin/env python3

# Copyright (c) 2026 infoaging developers
# Released under the MIT License, see __init__.py for the full text.

"""
infoaging <acf|entropy-curve|epsilon|markov-bound|validate> [options]

Every command writes CSV (17 significant digits, "\\n" line endings) to
stdout or --out. Exit codes: 0 success, 2 config/model error, 3 validation
failure. Errors are reported as one JSON line on stderr.

validate reports batch-means standard errors by default; --stderr iid
switches to the plain gamma_hat(0)*sqrt(2/n) and sd/sqrt(n) formulas.
"""

import sys
import csv
import json
import logging
import argparse
import dataclasses
import contextlib
from .util import Util
from .ar_model import REFERENCE_AR4, load_model_file, autocovariance, required_max_lag, check_yule_walker
from .gaussian_information import entropy_curve, g1_curve
from .epsilon_markov import EpsilonQuery, epsilon_l, DEFAULT_SEARCH_BOUND
from .monte_carlo_oracle import simulate, compare_with_closed_form, GENERATOR, DEFAULT_BURN_IN, DEFAULT_SAMPLES, DEFAULT_Z_MAX
from . import errors


EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_VALIDATION = 3

DEFAULT_LENGTHS = "1..5"
DEFAULT_VALIDATION_LENGTHS = "1,2,4"
DEFAULT_VALIDATION_AOI = "0,1,4,8,12"
DEFAULT_MAX_AOI = 30
DEFAULT_MAX_LAG = 50

log = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class RunConfig:

    command: str
    model: object
    lengths: tuple = ()
    max_aoi: int = DEFAULT_MAX_AOI
    max_lag: int = DEFAULT_MAX_LAG
    loss: str = Util.lossQuadratic
    base: str = Util.baseNatural
    search_bound: int = DEFAULT_SEARCH_BOUND
    measure: str = Util.measureEpsilon
    samples: int = DEFAULT_SAMPLES
    seed: int = 0
    burn_in: int = DEFAULT_BURN_IN
    aoi_list: tuple = ()
    stderr: str = Util.stderrBatchMeans
    z_max: float = DEFAULT_Z_MAX
    out: str = "-"

    def __post_init__(self):
        if any(l < 1 for l in self.lengths):
            raise errors.ConfigError("--lengths", "feature lengths must be at least 1")
        for option, value in [("--max-aoi", self.max_aoi), ("--max-lag", self.max_lag), ("--search-bound", self.search_bound),
                              ("--seed", self.seed), ("--burn-in", self.burn_in)]:
            if value < 0:
                raise errors.ConfigError(option, "%s must not be negative" % (option))
        if self.samples < 1:
            raise errors.ConfigError("--samples", "--samples must be at least 1")
        if not self.z_max > 0:
            raise errors.ConfigError("--z-max", "--z-max must be positive")


class _ArgumentParser(argparse.ArgumentParser):

    def error(self, message):
        raise errors.ConfigError(None, message)


def build_parser():
    common = _ArgumentParser(add_help=False)
    common.add_argument("--model", metavar="FILE", help="AR model JSON file (default: the reference AR(4) model)")
    common.add_argument("--out", metavar="FILE", default="-", help="CSV destination, '-' for stdout")
    common.add_argument("-v", "--verbose", action="store_true", help="log debug messages to stderr")

    parser = _ArgumentParser(prog="infoaging", description="Remote-estimation error of noisy Gaussian AR(p) sources versus AoI.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    p = sub.add_parser("acf", parents=[common], help="stationary autocovariances")
    p.add_argument("--max-lag", type=int, default=DEFAULT_MAX_LAG)

    for name, helpText in [("entropy-curve", "L-conditional entropy versus AoI"),
                           ("markov-bound", "L-conditional entropy next to the Markov bound curve g1")]:
        p = sub.add_parser(name, parents=[common], help=helpText)
        p.add_argument("--lengths", default=DEFAULT_LENGTHS, help="feature lengths, a..b or a,b,c")
        p.add_argument("--max-aoi", type=int, default=DEFAULT_MAX_AOI)
        p.add_argument("--loss", choices=Util.lossList, default=Util.lossQuadratic)
        p.add_argument("--base", default="e", help="log base for log loss, e or 2")

    p = sub.add_parser("epsilon", parents=[common], help="epsilon-Markov divergence epsilon(l)")
    p.add_argument("--lengths", default=DEFAULT_LENGTHS, help="feature lengths, a..b or a,b,c")
    p.add_argument("--search-bound", type=int, default=DEFAULT_SEARCH_BOUND, help="grid limit M on mu and nu")
    p.add_argument("--base", default=None, help="log base of the underlying CMI, e or 2 (log2-ratio is always base 2)")
    p.add_argument("--measure", choices=Util.measureList, default=Util.measureEpsilon,
                   help="epsilon (square root of the CMI) or log2-ratio (2 I in bits)")

    p = sub.add_parser("validate", parents=[common], help="closed form against the Monte Carlo oracle")
    p.add_argument("--lengths", default=DEFAULT_VALIDATION_LENGTHS, help="feature lengths, a..b or a,b,c")
    p.add_argument("--aoi-list", default=DEFAULT_VALIDATION_AOI, help="AoI values, a..b or a,b,c")
    p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--burn-in", type=int, default=DEFAULT_BURN_IN)
    p.add_argument("--stderr", choices=Util.stderrList, default=Util.stderrBatchMeans,
                   help="standard error method (default batch-means; iid is the plain sd/sqrt(n) formula)")
    p.add_argument("--z-max", type=float, default=DEFAULT_Z_MAX)

    return parser


def parse_config(argv):
    args = build_parser().parse_args(argv)

    if args.model is None:
        model = REFERENCE_AR4
    else:
        model = load_model_file(args.model)

    kwargs = {
        "command": args.command,
        "model": model,
        "out": args.out,
    }
    try:
        if hasattr(args, "lengths"):
            kwargs["lengths"] = tuple(Util.parseIntList(args.lengths))
        if hasattr(args, "aoi_list"):
            kwargs["aoi_list"] = tuple(Util.parseIntList(args.aoi_list))
        if hasattr(args, "base"):
            kwargs["base"] = Util.normalizeBase("e" if args.base is None else args.base)
    except ValueError as e:
        raise errors.ConfigError(None, str(e))

    # log2-ratio is defined in bits
    if getattr(args, "measure", None) == Util.measureLog2Ratio and args.base is not None and kwargs["base"] != Util.baseTwo:
        raise errors.ConfigError("--base", "--measure log2-ratio is always base 2, got --base %s" % (args.base))

    for name in ["max_aoi", "max_lag", "loss", "search_bound", "measure", "samples", "seed", "burn_in", "stderr", "z_max"]:
        if hasattr(args, name):
            kwargs[name] = getattr(args, name)
    return RunConfig(**kwargs), args.verbose


def cmd_acf(config, out):
    acf = autocovariance(config.model, config.max_lag)
    check_yule_walker(config.model, acf, error_callback=lambda code, message: log.warning(message))
    writer = _csvWriter(out)
    writer.writerow(["lag", "gamma"])
    for k in range(0, acf.max_lag + 1):
        writer.writerow([k, Util.formatFloat(acf[k])])
    return EXIT_OK


def cmd_entropy_curve(config, out):
    model = config.model
    acf = autocovariance(model, required_max_lag(model.order, config.max_aoi, max(config.lengths)))
    curves = [entropy_curve(acf, model.sigma2_n, config.loss, l, config.max_aoi, config.base) for l in config.lengths]

    writer = _csvWriter(out)
    writer.writerow(["delta", "l", "loss", "base", "H"])
    for delta in range(0, config.max_aoi + 1):
        for curve in curves:
            writer.writerow([delta, curve.l, config.loss, curve.base or "", Util.formatFloat(curve.values[delta])])
    return EXIT_OK


def cmd_markov_bound(config, out):
    model = config.model
    acf = autocovariance(model, required_max_lag(model.order, config.max_aoi + 1, max(config.lengths)))
    pairs = []
    for l in config.lengths:
        pairs.append((entropy_curve(acf, model.sigma2_n, config.loss, l, config.max_aoi, config.base),
                      g1_curve(acf, model.sigma2_n, config.loss, l, config.max_aoi, config.base)))

    writer = _csvWriter(out)
    writer.writerow(["delta", "l", "loss", "base", "H", "g1", "gap"])
    for delta in range(0, config.max_aoi + 1):
        for curve, bound in pairs:
            h, g = curve.values[delta], bound.values[delta]
            writer.writerow([delta, curve.l, config.loss, curve.base or "",
                             Util.formatFloat(h), Util.formatFloat(g), Util.formatFloat(g - h)])
    return EXIT_OK


def cmd_epsilon(config, out):
    model = config.model
    acf = autocovariance(model, required_max_lag(model.order, max_length=max(config.lengths), search_bound=config.search_bound))
    baseField = Util.baseTwo if config.measure == Util.measureLog2Ratio else config.base

    writer = _csvWriter(out)
    writer.writerow(["l", "epsilon", "argmax_mu", "argmax_nu", "base"])
    for l in config.lengths:
        report = epsilon_l(acf, model.sigma2_n, EpsilonQuery(l, config.search_bound, config.base, config.measure))
        writer.writerow([l, Util.formatFloat(report.epsilon), report.argmax_mu, report.argmax_nu, baseField])
    return EXIT_OK


def cmd_validate(config, out, closed_form=None):
    model = config.model
    log.info("oracle run: generator=%s, seed=%d, samples=%d, burn_in=%d, stderr=%s",
             GENERATOR, config.seed, config.samples, config.burn_in, config.stderr)
    traj = simulate(model, config.samples, config.burn_in, config.seed)

    failures = []
    points = [(delta, l) for delta in config.aoi_list for l in config.lengths]
    rows = compare_with_closed_form(model, traj, points, config.stderr, closed_form, config.z_max,
                                    error_callback=lambda code, message: failures.append(message))

    writer = _csvWriter(out)
    writer.writerow(["delta", "l", "closed_form", "empirical", "stderr", "z"])
    for row in rows:
        writer.writerow([row.delta, row.l, Util.formatFloat(row.closed_form), Util.formatFloat(row.empirical),
                         Util.formatFloat(row.stderr), Util.formatFloat(row.z)])

    for message in failures:
        log.warning(message)
    return EXIT_VALIDATION if failures else EXIT_OK


_COMMANDS = {
    "acf": cmd_acf,
    "entropy-curve": cmd_entropy_curve,
    "markov-bound": cmd_markov_bound,
    "epsilon": cmd_epsilon,
    "validate": cmd_validate,
}


def main(argv=None):
    try:
        config, verbose = parse_config(sys.argv[1:] if argv is None else argv)
    except errors.InfoAgingError as e:
        return _reportError(e)

    logging.basicConfig(stream=sys.stderr, level=(logging.DEBUG if verbose else logging.WARNING),
                        format="%(name)s: %(levelname)s: %(message)s")
    if verbose:
        logging.getLogger().setLevel(logging.DEBUG)

    try:
        with _openOutput(config.out) as out:
            return _COMMANDS[config.command](config, out)
    except (errors.InfoAgingError, ValueError) as e:
        return _reportError(e)
    except OSError as e:
        return _reportError(errors.ConfigError("--out", str(e)))


def _errorKind(e):
    if isinstance(e, errors.ConfigError):
        return "config"
    if isinstance(e, errors.NonStationaryModelError):
        return "non-stationary-model"
    if isinstance(e, errors.InvalidModelError):
        return "invalid-model"
    if isinstance(e, errors.DegenerateModelError):
        return "degenerate-model"
    if isinstance(e, errors.InfoAgingError):
        return "numerical"
    return "config"


def _reportError(e):
    message = getattr(e, "message", None) or str(e)
    sys.stderr.write(json.dumps({"error": _errorKind(e), "message": " ".join(message.split())}) + "\n")
    return EXIT_CONFIG


def _csvWriter(out):
    return csv.writer(out, lineterminator="\n")


@contextlib.contextmanager
def _openOutput(path):
    if path == "-":
        yield sys.stdout
    else:
        with open(path, "w", newline="") as f:
            yield f


if __name__ == "__main__":
    sys.exit(main())
