# Copyright 2026 The anomalab Authors.

"""
Command-line front end: ``anomalab <experiment> [flags]``.

Flags are generated from the parameters of each experiment.  Results go to
CSV and JSON files under --out (default anomalab-results/<experiment>),
check lines go to standard output and diagnostics to standard error.  Exit
codes: 0 success, 2 invalid input, 3 numerical failure, 4 failed check.
"""

import argparse
import inspect
import logging
import os
import re
import sys

from anomalab import __version__, experiments
from anomalab.engine import start_workbench
from anomalab.errors import AnomalabError, CheckFailure, ValidationError
from anomalab.messages import get_message
from anomalab.output import compare_golden, write_result
from anomalab.runconfig import RunConfig, parse_eps_sweep

logger = logging.getLogger(__name__)

DEFAULT_OUT = "anomalab-results"


def _str_list(text):
    return [item.strip() for item in text.split(",") if item.strip()]


def _eps_sweep(text):
    try:
        return parse_eps_sweep(text)
    except ValidationError as err:
        raise argparse.ArgumentTypeError(err.message)


_INT = ("samples", "seed", "k_max", "k", "points_per_eps", "p", "slices", "depth")
_FLOAT = ("center", "radius", "eps", "c", "threshold", "tau", "T", "L", "tol", "h", "cfl",
          "lo", "hi", "shift")
_BOOL = ("model_product", "refine", "trichotomy", "anomaly")
_LIST = ("speeds", "seeds", "mollifiers")

_HELP = {
    "check": "identity to verify, or all",
    "eps_list": "eps values: start:stop:geometric or a comma-separated list",
    "speeds": "comma-separated characteristic speeds; rationals stay exact",
    "seeds": "comma-separated initial singular points",
    "mollifiers": "comma-separated mollifier names",
    "alpha": "coefficient of x in the argument (rational)",
    "gamma": "shift of the argument (rational)",
    "a": "left end of the seed interval (rational)",
    "b": "right end of the seed interval (rational)",
    "t_max": "time horizon of the forecast (rational)",
}

_COMMANDS = {
    "identities": ("Exact identities of the boundary-value algebra.",
                   "identities.csv: check, status"),
    "fourier": ("Fourier transforms of e_k.",
                "fourier.csv: k, degree, coefficient, rational, pi_power, i_power"),
    "pair": ("Pairing <e_k, phi> and, with --model-product, mollified products.",
             "pair.csv: k, re_pairing, im_pairing; model_<m>.csv, model_vp_<m>.csv, "
             "tillmann.csv: eps, re_pairing, im_pairing"),
    "blowup": ("Blow-up times of the Friedrichs-regularized Riccati problem.",
               "blowup.csv: eps, t_measured, t_pred, location"),
    "evolve": ("Characteristic evolution of stationary data.",
               "evolve.csv: t, x, re_u, im_u; evolve_error.csv: t, sup_error"),
    "wave": ("Leapfrog for the semilinear wave equation with energy tracking.",
             "wave.csv: x, u0, u_T; wave_energy.csv: t, energy"),
    "pseudofun": ("Weak residuals of the radial stationary solutions.",
                  "pseudofun.csv: example, kind, testfn_id, residual, quad_error"),
    "weakasym": ("Weak asymptotic residuals and L^1_loc convergence.",
                 "weakasym.csv: example, eps, value; weakasym_lp.csv: example, m, eps, distance; "
                 "weakasym_terms.csv: example, eps, laplacian, power, error, identity_residual"),
    "growth": ("Growth orders, classification and singular support of a net.",
               "growth.csv: region, alpha, b, stderr, fit_residual; growth_support.csv: t, lo, hi; "
               "with --trichotomy: trichotomy.csv: p, eps, re_pairing, im_pairing; "
               "split.csv: term, eps, re_pairing, im_pairing"),
    "forecast": ("Classical singularity forecast and anomaly scoring.",
                 "forecast.csv: t, x; forecast_lines.json; with --anomaly: anomaly.csv: scenario, t, distance"),
    "report": ("Run every acceptance experiment and bundle the checks.",
               "report.csv: command, params, passed"),
}

_NEGATIVE_VALUE = re.compile(r"^-[0-9.]")


def _flag(name):
    return "--" + name.replace("_", "-")


def _add_param(parser, name):
    flag = _flag(name) if name != "eps_list" else "--eps-sweep"
    help_text = _HELP.get(name)
    if name in _BOOL:
        parser.add_argument(flag, dest=name, action=argparse.BooleanOptionalAction, default=None,
                            help=help_text)
    elif name in _INT:
        parser.add_argument(flag, dest=name, type=int, help=help_text)
    elif name in _FLOAT:
        parser.add_argument(flag, dest=name, type=float, help=help_text)
    elif name in _LIST:
        parser.add_argument(flag, dest=name, type=_str_list, help=help_text)
    elif name == "eps_list":
        parser.add_argument(flag, dest=name, type=_eps_sweep, help=help_text)
    else:
        parser.add_argument(flag, dest=name, help=help_text)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON configuration file; flags override its values")
    common.add_argument("--out", help="output directory (default %s/<experiment>)" % DEFAULT_OUT)
    common.add_argument("--plot", action="store_true", default=None, help="also write SVG figures")
    common.add_argument("--verbose", action="store_true", default=None, help="debug logging")
    common.add_argument("--no-assert", dest="assertion", action="store_false", default=None,
                        help="report failed checks without a nonzero exit code")
    common.add_argument("--golden", help="compare the outputs byte for byte with the files in this "
                        "directory, recording missing ones")

    parser = argparse.ArgumentParser(prog="anomalab", description=__doc__.strip().splitlines()[0])
    parser.add_argument("--version", action="version", version="%(prog)s " + __version__)
    sub = parser.add_subparsers(dest="command", metavar="experiment")
    sub.required = True
    for name in experiments.experiment_names():
        description, columns = _COMMANDS[name]
        cmd = sub.add_parser(name, parents=[common], help=description, description=description,
                             epilog="CSV columns: " + columns)
        for param in inspect.signature(experiments.get_experiment(name)).parameters:
            _add_param(cmd, param)
    return parser


def _attach_negative_values(argv):
    """--seeds -1,1 becomes --seeds=-1,1 so argparse does not read -1,1 as a flag."""
    out, i = [], 0
    while i < len(argv):
        token = argv[i]
        if (token.startswith("--") and "=" not in token and i + 1 < len(argv)
                and _NEGATIVE_VALUE.match(argv[i + 1])):
            out.append(token + "=" + argv[i + 1])
            i += 2
            continue
        out.append(token)
        i += 1
    return out


_GLOBAL = ("command", "config", "out", "plot", "verbose", "assertion", "golden")


def execute(config):
    """Run the configured experiment on a workbench and write its files."""
    with start_workbench(max_workers=1) as wb:
        result = getattr(wb, config.command)(**config.params)
    for check in result.checks:
        print(check.line())
    out_dir = config.out or os.path.join(DEFAULT_OUT, config.command)
    paths = write_result(result, out_dir, config)
    if config.plot:
        from anomalab.plotting import write_figures

        paths.extend(write_figures(result, out_dir))
    for path in paths:
        logger.info("wrote %s", path)
    if config.assertion and not result.passed:
        failed = next(c for c in result.checks if not c.passed)
        raise CheckFailure(get_message('CheckFailed', failed.label))
    if config.golden:
        differ = compare_golden(paths, config.golden)
        if differ and config.assertion:
            raise CheckFailure(get_message('GoldenMismatch', ", ".join(differ)))
    return result


def run(argv=None):
    """
    Parse argv, run the experiment and return the process exit code.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(_attach_negative_values(list(sys.argv[1:] if argv is None else argv)))
    except SystemExit as exit_:
        return exit_.code
    values = vars(args)
    logging.basicConfig(stream=sys.stderr, level=logging.DEBUG if values["verbose"] else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    params = {k: v for k, v in values.items() if k not in _GLOBAL and v is not None}
    try:
        config = RunConfig.build(values["command"], params, values["config"], values["out"],
                                 values["plot"], values["verbose"], values["assertion"],
                                 values["golden"])
        if config.verbose:
            logging.getLogger().setLevel(logging.DEBUG)
        execute(config)
    except AnomalabError as err:
        print("anomalab: %s" % err.message, file=sys.stderr)
        return err.exit_code
    return 0


def main():
    sys.exit(run())
