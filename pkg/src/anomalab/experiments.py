# Copyright 2026 The anomalab Authors.

"""
The registered experiments.  Each one runs a module operation end to end and
returns an ExperimentResult: CSV tables, a JSON summary, pass/fail checks
and optional figures.  The command line and the Workbench both dispatch
here by name.
"""

import inspect
import logging
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from anomalab import engine, settings
from anomalab.distcore import (
    AffineArg, DistExpr, PdeSpec, collect, conv_fourier, decompose, diff, fourier,
    hormander_compatible, mul, pair as pair_dist, pair_classical, pde_residual, to_json)
from anomalab.errors import FitDegenerate, ValidationError
from anomalab.messages import get_message
from anomalab.netlab import (
    EpsNet, Region, classify, growth_fit, lp_convergence, pairing_sweep, singular_power_pairing,
    singular_support, split_real_imag_limits, sweep_report, term_consistency,
    weak_asymptotic_residual)
from anomalab.pseudofun import (
    example_names, get_example, nemytskii_power, regularized_laplacian_identity,
    self_similarity_defect, stationary_wave_residual, weak_laplacian_residual)
from anomalab.regularize import (
    RegFamily, blowup_constant, friedrichs_reg, get_mollifier, model_product_sweep,
    tillmann_product_sweep)
from anomalab.singpred import (
    CharacteristicFan, Domain, anomaly_score, build_forecast, measured_support, slice_times,
    trace)
from anomalab.solvers import (
    ReactionSpec, WaveConfig, WaveNonlinearity, closed_form_cubic, closed_form_riccati,
    foot_grid, solve_characteristics, solve_wave_leapfrog, verify_energy_identity)
from anomalab.testfn import TestFn, radial_profiles

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Check:
    label: str
    passed: bool
    detail: str = ""
    exact: bool = False

    def line(self):
        if self.passed:
            status = "EXACT PASS" if self.exact else "PASS"
        else:
            status = "FAIL"
        return "%s : %s%s" % (self.label, status, " (%s)" % self.detail if self.detail else "")


@dataclass(frozen=True)
class Figure:
    name: str
    title: str
    xlabel: str
    ylabel: str
    series: tuple
    logx: bool = False
    logy: bool = False


@dataclass
class ExperimentResult:
    """
    Attributes
        tables: dict name -> (header, rows), one CSV file each.
        summary: dict written as <name>.json together with the checks.
        documents: dict name -> JSON-ready object, one JSON file each.
    """
    name: str
    tables: dict = field(default_factory=dict)
    summary: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)
    documents: dict = field(default_factory=dict)
    figures: list = field(default_factory=list)

    @property
    def passed(self):
        return all(c.passed for c in self.checks)


_EXPERIMENTS = {}


def experiment(name):
    def register(func):
        _EXPERIMENTS[name] = func
        return func
    return register


def experiment_names():
    return sorted(_EXPERIMENTS)


def get_experiment(name):
    if name not in _EXPERIMENTS:
        raise ValidationError(get_message('UnknownExperiment', name))
    return _EXPERIMENTS[name]


def check_params(name, params):
    """Reject parameters the experiment does not take."""
    accepted = inspect.signature(get_experiment(name)).parameters
    for key in params:
        if key not in accepted:
            raise ValidationError(get_message('UnsupportedParam', name, key))


def _within(value, target, tol):
    return bool(np.isfinite(value) and abs(value - target) <= tol)


# identities and Fourier side

def _e1():
    return DistExpr.basis(1)


def _fourier_homomorphism(k_max):
    """F(e_j e_l) == F e_j * F e_l for all j + l <= k_max."""
    failures = []
    for j in range(1, k_max):
        for l in range(1, k_max - j + 1):
            product = fourier(mul(DistExpr.basis(j), DistExpr.basis(l)))
            conv = collect([conv_fourier(f, g) for f in fourier(DistExpr.basis(j))
                            for g in fourier(DistExpr.basis(l))])
            if product != conv:
                failures.append((j, l))
    return failures


def _fourier_checks(k_max):
    failures = _fourier_homomorphism(k_max)
    f1 = fourier(_e1())[0]
    square = conv_fourier(f1, f1)
    square_ok = square.m == 1 and square.as_parts() == (-4, 2, 0)
    return [
        Check("F(e_j e_l) == F e_j * F e_l (j + l <= %d)" % k_max, not failures,
              "" if not failures else "fails for %s" % failures, exact=True),
        Check("(F u0 * F u0)(xi) == -4 pi^2 xi H", square_ok,
              "" if square_ok else "got %r" % (square,), exact=True),
    ]


def _anomalous_speed_checks(samples, seed):
    rng = np.random.default_rng(seed)
    zero_ok, nonzero_ok = True, True
    for _ in range(samples):
        a = Fraction(int(rng.integers(-9, 10)), int(rng.integers(1, 10)))
        c = Fraction(int(rng.choice([-1, 1]) * rng.integers(1, 10)), int(rng.integers(1, 10)))
        pde = PdeSpec.advection_riccati(c)
        u = DistExpr.basis(1, AffineArg.traveling(a, 1 - a, c))
        zero_ok &= pde_residual(u, pde).is_zero
        shift = Fraction(int(rng.integers(1, 10)), int(rng.integers(1, 10)))
        v = DistExpr.basis(1, AffineArg.traveling(a, 1 - a + shift, c))
        nonzero_ok &= not pde_residual(v, pde).is_zero
    return [
        Check("residual(1/(ax + bct + i0)) == 0 for a + b == 1 (%d samples)" % samples,
              bool(zero_ok), exact=True),
        Check("residual(1/(ax + bct + i0)) != 0 for a + b != 1 (%d samples)" % samples,
              bool(nonzero_ok), exact=True),
    ]


def _identity_checks(name, samples, seed):
    e1 = _e1()
    if name == "u0sq":
        return [Check("u0^2 == -u0'", mul(e1, e1) == -diff(e1, "x"), exact=True)]
    if name == "u0cube":
        return [Check("2 u0^3 == u0''", 2 * e1 ** 3 == diff(diff(e1, "x"), "x"), exact=True)]
    if name == "fourier":
        return _fourier_checks(8)
    if name == "anomalous-speed":
        return _anomalous_speed_checks(samples, seed)
    if name == "wave-cubic":
        return [Check("u0 solves (1/c^2) u_tt - u_xx + 2 u^3 = 0",
                      pde_residual(e1, PdeSpec.wave_cubic(1)).is_zero, exact=True)]
    if name == "hormander":
        flipped = DistExpr.basis(1, AffineArg(-1, 0, 0))
        ok = hormander_compatible(e1, e1) and not hormander_compatible(e1, flipped)
        return [Check("e1(x) e1(x) admissible, e1(x) e1(-x) not", ok, exact=True)]
    raise ValidationError(get_message('UnknownCheck', name, ", ".join(IDENTITY_CHECKS)))


IDENTITY_CHECKS = ("u0sq", "u0cube", "fourier", "anomalous-speed", "wave-cubic", "hormander")


@experiment("identities")
def identities(check="all", samples=20, seed=0):
    names = IDENTITY_CHECKS if check == "all" else (check,)
    checks = [c for name in names for c in _identity_checks(name, samples, seed)]
    rows = [(c.label, "PASS" if c.passed else "FAIL") for c in checks]
    return ExperimentResult("identities", {"identities": (("check", "status"), rows)},
                            {"checks_run": list(names)}, checks)


@experiment("fourier")
def fourier_table(k_max=8):
    rows = []
    for k in range(1, k_max + 1):
        mono = fourier(DistExpr.basis(k))[0]
        rational, pi_power, i_power = mono.as_parts()
        rows.append((k, mono.m, str(mono.c), str(rational), pi_power, i_power))
    header = ("k", "degree", "coefficient", "rational", "pi_power", "i_power")
    return ExperimentResult("fourier", {"fourier": (header, rows)}, {"k_max": k_max},
                            _fourier_checks(k_max))


# pairings and products

def _relative(value, exact):
    return abs(value - exact) / abs(exact)


def _model_product(phi, mollifiers, eps_list, exact):
    e1 = _e1()
    tables, checks, summary, figures = {}, [], {}, []
    limits = {}
    header = ("eps", "re_pairing", "im_pairing")
    for name in mollifiers:
        full = model_product_sweep(e1, e1, name, phi, eps_list)
        vp = model_product_sweep(e1, e1, name, phi, eps_list, part="vp")
        tables["model_%s" % name] = (header, full.rows())
        tables["model_vp_%s" % name] = (header, vp.rows())
        i = int(np.argmin(np.abs(np.log(np.asarray(full.eps) / 1e-3))))
        err = _relative(full.values[i], exact)
        limits[name] = full.values[i]
        checks.append(Check("model product [%s] -> <e2, phi> within 2%% at eps=%.3g" % (name, full.eps[i]),
                            err <= 0.02, "relative error %.3g" % err))
        report = sweep_report(vp.eps, vp.values)
        checks.append(Check("vp-only square [%s] diverges with rho = 1 +/- 0.1" % name,
                            report.verdict == "power-divergent" and _within(report.rho, 1.0, 0.1),
                            "%s, rho %.4f" % (report.verdict, report.rho)))
        summary[name] = {"relative_error": err, "vp_rho": report.rho, "vp_verdict": report.verdict}
        figures.append(Figure("model_%s" % name, "model product, %s" % name, "eps", "|pairing|",
                              (("full", full.eps, [abs(v) for v in full.values]),
                               ("vp only", vp.eps, [abs(v) for v in vp.values])), True, True))
    if len(limits) > 1:
        values = list(limits.values())
        spread = max(abs(a - b) for a in values for b in values) / abs(exact)
        checks.append(Check("model product limits agree across mollifiers within 4%",
                            spread <= 0.04, "spread %.3g" % spread))
    tillmann = tillmann_product_sweep(e1, e1, phi, eps_list)
    tables["tillmann"] = (header, tillmann.rows())
    err = _relative(tillmann.values[-1], exact)
    checks.append(Check("Tillmann product -> <e2, phi> within 2%", err <= 0.02,
                        "relative error %.3g" % err))
    return tables, checks, summary, figures


@experiment("pair")
def pair(k=2, center=0.0, radius=1.0, alpha=1, gamma=0, model_product=False,
         mollifiers=("poly4", "smooth"), eps_list=None):
    phi = TestFn.bump(center, radius)
    u = DistExpr.basis(k, AffineArg(alpha, 0, gamma))
    value = pair_dist(u, phi)
    part = decompose(u)
    classical = pair_classical(part, phi)
    gap = abs(value - classical)
    result = ExperimentResult("pair")
    result.tables["pair"] = (("k", "re_pairing", "im_pairing"), [(k, value.real, value.imag)])
    result.documents["classical_part"] = to_json(part)
    result.summary.update({"k": k, "pairing": [value.real, value.imag]})
    result.checks.append(Check("<e_k, phi> == <classical part, phi>", gap <= 1e-8,
                               "difference %.3g" % gap))
    if model_product:
        if eps_list is None:
            eps_list = settings.default_model_eps()
        exact = pair_dist(DistExpr.basis(2), phi)
        tables, checks, summary, figures = _model_product(phi, mollifiers, eps_list, exact)
        result.tables.update(tables)
        result.checks.extend(checks)
        result.summary["model_product"] = summary
        result.summary["exact_e2"] = [exact.real, exact.imag]
        result.figures.extend(figures)
    return result


# evolution

@experiment("blowup")
def blowup(mollifier="poly4", c=1.0, eps_list=None, eps=None, threshold=None, points_per_eps=16):
    """
    Friedrichs-regularized Riccati data on the foot grid [-4 eps, 4 eps],
    integrated to twice the predicted blow-up time.  ``eps`` runs a single
    value; the slope and intercept checks need two or more.
    """
    if eps is not None:
        eps_list = [eps]
    elif eps_list is None:
        eps_list = [0.1, 0.05, 0.025, 0.0125]
    m = get_mollifier(mollifier)
    prediction = blowup_constant(m)
    reaction = ReactionSpec.riccati(c)
    e1 = _e1()

    def run(eps):
        t_pred = prediction.t_pred(eps, c)
        grid = foot_grid(eps, 4 * eps, points_per_eps)
        data = friedrichs_reg(e1, m, eps, grid)
        field = solve_characteristics(reaction, data, grid, 2 * t_pred, t_pred / 100, threshold)
        if field.blowup is None:
            return eps, np.nan, t_pred, np.nan
        return eps, field.blowup.time, t_pred, field.blowup.location

    rows = engine.map_keys(run, eps_list)
    eps = np.array([r[0] for r in rows])
    measured = np.array([r[1] for r in rows])
    predicted = np.array([r[2] for r in rows])
    result = ExperimentResult("blowup")
    result.tables["blowup"] = (("eps", "t_measured", "t_pred", "location"), rows)
    finite = np.isfinite(measured)
    result.checks.append(Check("blow-up detected for every eps", bool(finite.all())))
    slope = intercept = np.nan
    if finite.sum() >= 2:
        slope, log_intercept = np.polyfit(np.log(eps[finite]), np.log(measured[finite]), 1)
        intercept = float(np.exp(log_intercept))
    expected = 1.0 / (c * prediction.C_phi)
    result.checks.append(Check("blow-up time slope 1 +/- 0.05", _within(slope, 1.0, 0.05),
                               "slope %.4f" % slope))
    result.checks.append(Check("intercept within 10% of 1/(c C_phi)",
                               _within(intercept / expected, 1.0, 0.1),
                               "intercept %.4f, 1/(c C_phi) %.4f" % (intercept, expected)))
    late = measured > 1.05 * predicted
    result.checks.append(Check("t_measured <= 1.05 t_pred", bool(finite.all() and not late.any())))
    result.summary.update({
        "C_phi": prediction.C_phi, "C_phi_exact": str(prediction.exact) if prediction.exact is not None else None,
        "provenance": prediction.provenance, "slope": float(slope), "intercept": intercept,
        "blowup_time": [float(v) for v in measured], "t_blowup": float(measured[-1]),
        "mollifier": m.name, "c": c})
    result.figures.append(Figure("blowup", "blow-up time", "eps", "t",
                                 (("measured", eps, measured), ("eps/(c C_phi)", eps, predicted)),
                                 True, True))
    return result


def _stationary_oracle(reaction, eps, c, p):
    """Closed-form solution u(x, t) whose data is stationary for the reaction."""
    if reaction == "riccati":
        return lambda x, t: closed_form_riccati(eps, c, x, t)
    if reaction == "cubic_x":
        v0 = RegFamily.chi(2)
        return lambda x, t: closed_form_cubic(lambda y: v0(y, eps), c, x, t)
    family = RegFamily.chi(p)
    return lambda x, t: family(x, eps)


@experiment("evolve")
def evolve(reaction="riccati", eps=0.1, c=1.0, tau=1e-3, T=1.0, L=1.0, p=2, threshold=None,
           tol=1e-8, points_per_eps=16):
    spec = ReactionSpec.from_name(reaction, c, p)
    oracle = _stationary_oracle(reaction, eps, c, p)
    grid = foot_grid(eps, L, points_per_eps)
    field = solve_characteristics(spec, oracle(grid, 0.0), grid, T, tau, threshold)
    errors = [float(np.max(np.abs(u - oracle(x, t)))) for t, x, u in field.slices()]
    error = max(errors)
    result = ExperimentResult("evolve")
    stride = max(1, (len(field.t) - 1) // 4)
    rows = []
    for j in range(0, len(field.t), stride):
        for x, u in zip(field.positions(j), field.u[j]):
            rows.append((field.t[j], x, u.real, u.imag))
    result.tables["evolve"] = (("t", "x", "re_u", "im_u"), rows)
    result.tables["evolve_error"] = (("t", "sup_error"), list(zip(field.t, errors)))
    result.checks.append(Check("characteristics reproduce the stationary solution",
                               error <= tol, "sup error %.3g" % error))
    result.summary.update({"reaction": reaction, "eps": eps, "sup_error": error,
                           "blowup_time": field.blowup.time if field.blowup else None})
    return result


@experiment("wave")
def wave(eps=0.5, L=5.0, h=2.5e-3, cfl=0.9, T=1.0, c=1.0, refine=True):
    g = WaveNonlinearity.cubic_quintic()
    u0 = RegFamily.chi(2)

    def run(step):
        cfg = WaveConfig(c, g, lambda x: u0(x, eps), lambda x: 0.0 * x, L, step, cfl * step / c, T)
        return solve_wave_leapfrog(cfg)

    field = run(h)
    initial = field.u[0]
    deviation = float(np.max(np.abs(field.u - initial)) / np.max(np.abs(initial)))
    drift = field.energy.drift
    result = ExperimentResult("wave")
    result.checks.append(Check("d/dt E_d = 0 for (1/c^2) u_tt - u_xx + g = 0",
                               verify_energy_identity(g), exact=True))
    result.checks.append(Check("stationary net: sup deviation <= 1e-3 ||u0||", deviation <= 1e-3,
                               "relative deviation %.3g" % deviation))
    result.checks.append(Check("energy drift <= 1e-3", drift <= 1e-3, "drift %.3g" % drift))
    result.summary.update({"energy_drift": drift, "deviation": deviation, "blowup_time": None})
    if refine:
        fine = run(h / 2)
        ratio = drift / fine.energy.drift if fine.energy.drift > 0 else np.inf
        result.checks.append(Check("halving h reduces the drift by >= 3", ratio >= 3,
                                   "ratio %.3g" % ratio))
        result.summary.update({"energy_drift_refined": fine.energy.drift, "drift_ratio": ratio})
    result.tables["wave_energy"] = (("t", "energy"), list(zip(field.energy.times, field.energy.series)))
    stride = max(1, len(field.x) // 400)
    result.tables["wave"] = (("x", "u0", "u_T"), list(zip(field.x[::stride], initial[::stride],
                                                         field.u[-1][::stride])))
    result.figures.append(Figure("wave_energy", "discrete energy", "t", "E_d",
                                 (("E_d", field.energy.times, field.energy.series),)))
    return result


# pseudofunctions and weak asymptotics

def _examples(example):
    return example_names() if example == "all" else [example]


@experiment("pseudofun")
def pseudofun(example="all"):
    rows, checks, summary = [], [], {}
    for name in _examples(example):
        ex = get_example(name)
        worst = 0.0
        for phi in radial_profiles():
            weak = weak_laplacian_residual(ex.solution(), phi)
            stationary = stationary_wave_residual(ex, phi)
            rows.append((name, "weak_laplacian", phi.name, weak.residual, weak.quad_error))
            rows.append((name, "stationary_wave", phi.name, stationary.residual, stationary.quad_error))
            worst = max(worst, abs(weak), abs(stationary))
        checks.append(Check("%s residuals vanish within 1e-7 (5 profiles)" % name, worst <= 1e-7,
                            "max residual %.3g" % worst))
        power = nemytskii_power(ex.solution(), ex.p)
        checks.append(Check("%s: u0 in L^%d_loc" % (name, ex.p), power.in_lp_loc,
                            "lambda p = %s" % power.lam_p, exact=True))
        checks.append(Check("%s: Laplacian of the regularized profile" % name,
                            regularized_laplacian_identity(ex.n, ex.lam / 2), exact=True))
        defect = self_similarity_defect(ex.p, ex.n)
        checks.append(Check("%s: self-similar under mu^(2/(p-1)) u(mu x)" % name, defect <= 1e-12,
                            "defect %.3g" % defect))
        summary[name] = {"max_residual": worst, "lambda_p": str(power.lam_p),
                         "in_lp_loc": power.in_lp_loc}
    header = ("example", "kind", "testfn_id", "residual", "quad_error")
    return ExperimentResult("pseudofun", {"pseudofun": (header, rows)}, summary, checks)


def _profile(name):
    profiles = {phi.name: phi for phi in radial_profiles()}
    if name not in profiles:
        raise ValidationError(get_message('UnknownProfile', name, ", ".join(sorted(profiles))))
    return profiles[name]


@experiment("weakasym")
def weakasym(example="all", profile="poly3", eps_list=None):
    phi = _profile(profile)
    result = ExperimentResult("weakasym")
    residual_rows, lp_rows, term_rows = [], [], []
    for name in _examples(example):
        ex = get_example(name)
        expected = float(ex.lam * ex.p + ex.n)
        report = weak_asymptotic_residual(name + "e", phi, eps_list)
        residual_rows.extend((name + "e", e, v) for e, v in report.rows())
        result.checks.append(Check("%se: error term decays like eps^%.2g" % (name, expected),
                                   report.weak_asymptotic and _within(report.exponent, expected, 0.05),
                                   "exponent %.4f" % report.exponent))
        lp = lp_convergence(name, phi)
        for row in lp.rows:
            lp_rows.extend((name, row.m, e, v) for e, v in zip(row.eps, row.values))
        first, power = lp.row(1), lp.row(ex.p)
        result.checks.append(Check("%s: u_eps -> u in L^1_loc below 1e-4" % name,
                                   first.monotone and first.below_tol,
                                   "distance %.3g at eps=%.3g" % (first.values[-1], first.eps[-1])))
        result.checks.append(Check("%s: u_eps^%d -> u^%d in L^1_loc at rate eps^%.2g" % (
            name, ex.p, ex.p, expected), power.monotone and _within(power.rate, expected, 0.05),
            "rate %.4f" % power.rate))
        terms = term_consistency(name + "e", phi, eps_list)
        for row in zip(terms.eps, terms.laplacian_terms, terms.power_terms, terms.error_terms,
                       terms.identity_residuals):
            term_rows.append((name + "e",) + row)
        identity = max(abs(r) for r in terms.identity_residuals)
        result.checks.append(Check("%se: regularized identity holds weakly at every eps" % name,
                                   identity <= 1e-6, "max residual %.3g" % identity))
        result.summary[name + "e"] = {"exponent": report.exponent, "expected": expected,
                                      "lp_rates": {str(r.m): r.rate for r in lp.rows},
                                      "laplacian_limit": terms.laplacian_limit,
                                      "power_limit": terms.power_limit}
    result.tables["weakasym"] = (("example", "eps", "value"), residual_rows)
    result.tables["weakasym_lp"] = (("example", "m", "eps", "distance"), lp_rows)
    result.tables["weakasym_terms"] = (
        ("example", "eps", "laplacian", "power", "error", "identity_residual"), term_rows)
    return result


# nets

def _growth_orders(net, k_max, eps_list):
    rows, checks = [], []
    origin, outer = Region.point(0.0), Region(0.5, 1.0)
    for alpha in range(k_max + 1):
        for region in (origin, outer):
            try:
                fit = growth_fit(net, region, alpha, eps_list)
                rows.append((str(region), alpha, fit.b, fit.stderr, fit.residual))
            except FitDegenerate:
                rows.append((str(region), alpha, float("-inf"), 0.0, 0.0))
    if net.name == "chi_2":
        for region_name, alpha, b, _, _ in rows:
            if region_name == str(origin) and alpha % 2 == 0:
                checks.append(Check("b(alpha=%d) at x=0 is %d +/- 0.05" % (alpha, alpha + 1),
                                    _within(b, alpha + 1, 0.05), "b %.4f" % b))
        outer_b = max(r[2] for r in rows if r[0] == str(outer))
        checks.append(Check("b <= 0.05 on [0.5, 1] for alpha <= %d" % k_max, outer_b <= 0.05,
                            "max b %.4f" % outer_b))
    return rows, checks


@experiment("growth")
def growth(net="chi_2", k_max=6, eps_list=None, h=0.05, lo=-1.0, hi=1.0, T=1.0, slices=2,
           trichotomy=False, center=0.0, radius=1.0, shift=0.3):
    if trichotomy:
        return _trichotomy(center, radius, shift, eps_list)
    u = EpsNet.from_name(net)
    result = ExperimentResult("growth")
    rows, checks = _growth_orders(u, k_max, eps_list)
    result.tables["growth"] = (("region", "alpha", "b", "stderr", "fit_residual"), rows)
    result.checks.extend(checks)
    report = classify(u, [Region.cell(0.0, h), Region(0.5, 1.0)], k_max, eps_list)
    result.summary["classification"] = report.classification
    result.summary["certified"] = report.certified
    result.summary["regions"] = [
        {"region": str(e.region), "b": list(e.b), "moderate": e.moderate,
         "negligible": e.negligible, "g_infinity": e.g_infinity} for e in report.regions]
    support_rows = []
    ok = True
    for t in [0.0] + slice_times(T, slices):
        intervals = singular_support(u, lo, hi, h, eps_list=eps_list, t=t)
        support_rows.extend((t, a, b) for a, b in intervals)
        ok &= bool(intervals) and all(-h <= a and b <= h for a, b in intervals)
    result.tables["growth_support"] = (("t", "lo", "hi"), support_rows)
    if net == "chi_2":
        cell, outer = report.regions
        result.checks.append(Check("moderate, G-infinity on [0.5, 1] but not at 0",
                                   report.classification == "moderate" and outer.g_infinity
                                   and not cell.g_infinity))
        result.checks.append(Check("G-infinity singular support is {0} within one cell", ok))
    return result


def _trichotomy(center, radius, shift, eps_list):
    phi = TestFn.bump(center, radius)
    result = ExperimentResult("growth")
    rows, summary = [], {}
    for p in (1, 2, 3):
        report = pairing_sweep(EpsNet.chi(p), phi, eps_list)
        rows.extend((p,) + row for row in report.rows())
        summary["chi_%d" % p] = {"verdict": report.verdict, "rho": report.rho,
                                 "r_squared": report.r_squared, "ratio": report.ratio}
        if p == 1:
            ok = report.verdict == "power-divergent" and _within(report.rho, 1.0, 0.05)
            result.checks.append(Check("p=1 power-divergent, rho = 1 +/- 0.05", ok,
                                       "%s, rho %.4f" % (report.verdict, report.rho)))
        elif p == 2:
            ok = report.verdict == "log-divergent" and report.r_squared >= 0.99
            result.checks.append(Check("p=2 log-divergent", ok,
                                       "%s, R^2 %.5f" % (report.verdict, report.r_squared)))
        else:
            exact = singular_power_pairing(phi, 2.0 / 3.0)
            limit = report.limit if report.limit is not None else complex(np.nan)
            err = abs(limit - exact) / abs(exact)
            result.checks.append(Check("p=3 convergent to <|x|^(-2/3), phi>",
                                       report.verdict == "convergent" and err <= 1e-3,
                                       "%s, relative error %.3g" % (report.verdict, err)))
            summary["chi_3"]["limit"] = limit.real
            summary["chi_3"]["exact"] = exact
    result.tables["trichotomy"] = (("p", "eps", "re_pairing", "im_pairing"), rows)

    split = split_real_imag_limits(eps_list or settings.default_sweep_eps(),
                                   TestFn.bump(shift, radius))
    split_rows = []
    for name, report in (("v2", split.v_squared), ("w2", split.w_squared), ("-2vw", split.cross)):
        split_rows.extend((name,) + row for row in report.rows())
    for name, report in (("v_eps^2", split.v_squared), ("w_eps^2", split.w_squared)):
        result.checks.append(Check("%s diverges with rho = 1" % name,
                                   report.verdict == "power-divergent" and _within(report.rho, 1.0, 0.05),
                                   "rho %.4f" % report.rho))
    cross = split.cross.values[-1].real
    err = abs(cross - split.target) / abs(split.target)
    result.checks.append(Check("-2 v_eps w_eps -> pi phi'(0) within 1%", err <= 0.01,
                               "relative error %.3g" % err))
    result.tables["split"] = (("term", "eps", "re_pairing", "im_pairing"), split_rows)
    summary["split"] = {"target": split.target, "cross": cross}
    result.summary.update(summary)
    return result


# forecasts

@experiment("forecast")
def forecast(speeds=("1", "-1"), seeds=("0",), depth=None, a=None, b=None, t_max=None,
             slices=10, anomaly=False, c=1.0, T=1.0, h=0.05, net="chi_2"):
    fan = CharacteristicFan(speeds, seeds, depth)
    domain = Domain.around(fan)
    if a is not None or b is not None or t_max is not None:
        domain = Domain(fan.number(a if a is not None else domain.a),
                        fan.number(b if b is not None else domain.b),
                        fan.number(t_max if t_max is not None else domain.t_max))
    fc = build_forecast(fan, domain)
    result = ExperimentResult("forecast")
    result.documents["forecast_lines"] = fc.as_dict()
    rows = []
    for t in [0.0] + slice_times(float(domain.t_max), slices):
        rows.extend((t, x) for x in trace(fc, t))
    result.tables["forecast"] = (("t", "x"), rows)
    result.summary.update({"lines": len(fc.closure),
                           "generations": [len(g) for g in fc.generations]})
    if anomaly:
        _anomaly(result, depth, c, T, h, net, slices)
    return result


def _anomaly(result, depth, c, T, h, net, slices):
    fan = CharacteristicFan([float(c)], [0.0], depth)
    fc = build_forecast(fan, Domain.around(fan, t_max=max(2.0, T)))
    times = slice_times(T, slices)
    lo, hi = min(0.0, c * T) - 0.5, max(0.0, c * T) + 0.5
    scenarios = (
        ("stationary", EpsNet.from_name(net), "anomalous"),
        ("linear", EpsNet.scaled_bump().advect(c), "classical"),
    )
    rows = []
    for name, u, expected in scenarios:
        measured = measured_support(u, times, lo, hi, h)
        report = anomaly_score(fc, measured, h)
        rows.extend((name, t, d) for t, d in report.rows())
        result.checks.append(Check("%s %s: verdict %s" % (name, u.name, expected),
                                   report.verdict == expected,
                                   "got %s, max distance %.3g" % (report.verdict, report.max_distance)))
        result.summary[name] = {"verdict": report.verdict, "max_distance": report.max_distance,
                                "mean_distance": report.mean_distance, "note": report.note}
    result.tables["anomaly"] = (("scenario", "t", "distance"), rows)


# bundle

ACCEPTANCE_RUNS = (
    ("identities", {"check": "all"}),
    ("blowup", {}),
    ("evolve", {}),
    ("pseudofun", {}),
    ("weakasym", {}),
    ("growth", {}),
    ("growth", {"trichotomy": True}),
    ("wave", {}),
    ("pair", {"model_product": True}),
    ("forecast", {"anomaly": True}),
)


@experiment("report")
def report():
    from anomalab.engine import start_workbench

    result = ExperimentResult("report")
    with start_workbench(max_workers=2) as wb:
        futures = [(name, params, getattr(wb, name)(background=True, **params))
                   for name, params in ACCEPTANCE_RUNS]
        runs = []
        for name, params, future in futures:
            outcome = future.result()
            runs.append({"command": name, "params": params, "passed": outcome.passed,
                         "checks": [c.line() for c in outcome.checks]})
            result.checks.extend(outcome.checks)
    result.summary["runs"] = runs
    result.tables["report"] = (("command", "params", "passed"),
                               [(r["command"], repr(r["params"]), r["passed"]) for r in runs])
    return result
