"""Batch command-line front end.

Subcommands: spectrum | evolve | sweep | mesh | peaks | selftest | plot.
Model input comes either from direct couplings (--g1/--g2/--rddi, g0 units)
or from atom-1 position (--x1, waist units) through the geometry layer;
mixing the two modes in one invocation is a usage error.  Flag values
override config-file keys, which override defaults.

Exit codes: 0 success, 2 configuration or usage error, 3 numerical-contract
violation.  CSV output uses 17 significant digits and LF line endings so
repeated runs are byte-identical.
"""

import argparse
import math
import sys

import numpy as np

from .dynamics import (
    InitialState,
    concurrence_series,
    evolve,
    peak_height,
    peak_report,
    peak_times,
    reduced_density,
    scan_peak_optimum,
)
from .entanglement import wootters_concurrence, xstate_concurrence
from .errors import DegenerateModel, NumericalContractError, ParameterError
from .geometry import CavityGeometry, mesh, params_at, sweep_position
from .model import ModelParams, analytic_spectrum, build_effective_h, build_single_excitation_h
from .qmath import evolve_spectral, hermitian_eigendecompose, rk4_schrodinger
from .svgplot import line_plot, raster_plot

FLOAT_KEYS = {
    "g1", "g2", "rddi", "x1",
    "alpha_re", "alpha_im", "beta_re", "beta_im",
    "t_max", "x1_min", "x1_max",
    "g0_mhz", "w0_um", "lambda_um", "x2", "gamma_ref_hz", "r_ref",
    "rddi_a", "rddi_b", "rddi_c3",
}
INT_KEYS = {"t_steps", "x1_steps"}
STR_KEYS = {"scan_rddi", "out", "format", "kind"}
BOOL_KEYS = {"standing_wave", "numeric_peaks"}
KNOWN_KEYS = FLOAT_KEYS | INT_KEYS | STR_KEYS | BOOL_KEYS

GEOMETRY_KEYS = {
    "g0_mhz", "w0_um", "lambda_um", "x2", "standing_wave",
    "gamma_ref_hz", "r_ref", "rddi_a", "rddi_b", "rddi_c3",
}
DIRECT_KEYS = {"g1", "g2", "rddi"}

DEFAULT_X1 = -2.0
DEFAULT_T_STEPS = 1000
DEFAULT_MESH_T_STEPS = 200
DEFAULT_X1_MIN = -2.0
DEFAULT_X1_MAX = 2.0
DEFAULT_X1_STEPS = 101


def _fmt(value) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return "%.17g" % float(value)


def _csv(header, rows) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(_fmt(cell) for cell in row) for row in rows)
    return "\n".join(lines) + "\n"


def _parse_bool(text: str) -> bool:
    lowered = text.strip().lower()
    if lowered in {"1", "true", "yes", "on"}:
        return True
    if lowered in {"0", "false", "no", "off"}:
        return False
    raise ParameterError(f"not a boolean: {text!r}")


def _parse_config_file(path: str) -> dict:
    """Flat key=value file; blank lines and #-comments are skipped."""
    try:
        with open(path, encoding="utf-8") as handle:
            raw_lines = handle.readlines()
    except OSError as exc:
        raise ParameterError(f"cannot read config file {path!r}: {exc}") from exc
    values = {}
    for lineno, raw in enumerate(raw_lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ParameterError(f"{path}:{lineno}: expected key=value, got {line!r}")
        key, _, text = line.partition("=")
        key = key.strip()
        text = text.strip()
        if key not in KNOWN_KEYS:
            raise ParameterError(f"{path}:{lineno}: unknown key {key!r}")
        try:
            if key in FLOAT_KEYS:
                values[key] = float(text)
            elif key in INT_KEYS:
                values[key] = int(text)
            elif key in BOOL_KEYS:
                values[key] = _parse_bool(text)
            else:
                values[key] = text
        except ValueError as exc:
            raise ParameterError(f"{path}:{lineno}: bad value for {key}: {text!r}") from exc
    if "format" in values and values["format"] not in {"csv", "svg"}:
        raise ParameterError(f"format must be csv or svg, got {values['format']!r}")
    if "kind" in values and values["kind"] not in {"evolve", "sweep", "mesh"}:
        raise ParameterError(f"kind must be evolve, sweep or mesh, got {values['kind']!r}")
    return values


def _merge_config(args: argparse.Namespace) -> dict:
    """Apply precedence CLI > config file > defaults and enforce mode exclusivity.

    When the command line commits to one input mode, the other mode's
    config-file keys are dropped rather than mixed; a conflict within a
    single source is an error.
    """
    file_cfg = _parse_config_file(args.config) if args.config else {}
    cli_cfg = {key: getattr(args, key) for key in KNOWN_KEYS if getattr(args, key, None) is not None}

    cli_direct = bool(DIRECT_KEYS & cli_cfg.keys())
    cli_position = "x1" in cli_cfg
    if cli_direct and cli_position:
        raise ParameterError("--x1 cannot be combined with --g1/--g2/--rddi")
    if cli_direct:
        file_cfg.pop("x1", None)
    if cli_position:
        for key in DIRECT_KEYS:
            file_cfg.pop(key, None)
    if not (cli_direct or cli_position) and "x1" in file_cfg and DIRECT_KEYS & file_cfg.keys():
        raise ParameterError("config file sets x1 together with g1/g2/rddi")

    merged = dict(file_cfg)
    merged.update(cli_cfg)
    return merged


def _geometry(cfg: dict) -> CavityGeometry:
    return CavityGeometry(**{key: cfg[key] for key in GEOMETRY_KEYS if key in cfg})


def _initial_state(cfg: dict) -> InitialState:
    return InitialState(
        alpha=complex(cfg.get("alpha_re", 1.0), cfg.get("alpha_im", 0.0)),
        beta=complex(cfg.get("beta_re", 0.0), cfg.get("beta_im", 0.0)),
    )


def _model_params(cfg: dict) -> ModelParams:
    """Resolve (g1, g2, Gamma): direct couplings when any is given, else position."""
    if DIRECT_KEYS & cfg.keys():
        return ModelParams(
            g1=cfg.get("g1", 0.0),
            g2=cfg.get("g2", 0.0),
            rddi=cfg.get("rddi", 0.0),
        )
    return params_at(_geometry(cfg), cfg.get("x1", DEFAULT_X1))


def _time_grid(cfg: dict, params: ModelParams, default_steps: int = DEFAULT_T_STEPS) -> np.ndarray:
    steps = cfg.get("t_steps", default_steps)
    if steps < 1:
        raise ParameterError(f"t_steps = {steps} must be >= 1")
    t_max = cfg.get("t_max")
    if t_max is None:
        omega = math.hypot(params.g1, params.rddi)
        if omega == 0.0:
            raise DegenerateModel("g1 = rddi = 0: no default period, pass --t-max")
        t_max = 2.0 * math.pi / omega
    if not (math.isfinite(t_max) and t_max >= 0.0):
        raise ParameterError(f"t_max = {t_max!r} must be finite and non-negative")
    if steps > 1 and t_max == 0.0:
        raise ParameterError("t_max = 0 needs t_steps = 1")
    return np.linspace(0.0, t_max, steps)


def _x1_grid(cfg: dict) -> np.ndarray:
    lo = cfg.get("x1_min", DEFAULT_X1_MIN)
    hi = cfg.get("x1_max", DEFAULT_X1_MAX)
    steps = cfg.get("x1_steps", DEFAULT_X1_STEPS)
    if steps < 1:
        raise ParameterError(f"x1_steps = {steps} must be >= 1")
    if not (math.isfinite(lo) and math.isfinite(hi)) or (steps > 1 and hi <= lo):
        raise ParameterError(f"bad x1 range [{lo!r}, {hi!r}]")
    return np.linspace(lo, hi, steps)


def _parse_scan(text: str) -> np.ndarray:
    parts = text.split(":")
    if len(parts) != 3:
        raise ParameterError(f"--scan-rddi wants lo:hi:n, got {text!r}")
    try:
        lo, hi, n = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise ParameterError(f"--scan-rddi wants lo:hi:n, got {text!r}") from exc
    if not (math.isfinite(lo) and math.isfinite(hi)) or lo < 0.0 or hi <= lo or n < 2:
        raise ParameterError(f"--scan-rddi needs 0 <= lo < hi and n >= 2, got {text!r}")
    return np.linspace(lo, hi, n)


def _emit(cfg: dict, text: str) -> None:
    path = cfg.get("out")
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="") as handle:
        handle.write(text)


def _require_format(cfg: dict, wanted: str, command: str) -> None:
    chosen = cfg.get("format", wanted)
    if chosen != wanted:
        raise ParameterError(f"{command} emits {wanted} only, got --format {chosen}")


def _gauge_fix(vec: np.ndarray) -> np.ndarray:
    """Rotate the global phase so the first significant component is real positive.

    Matches the sign convention of the analytic eigenvectors, keeping the
    side-by-side CSV columns directly comparable.
    """
    magnitudes = np.abs(vec)
    pivot = vec[int(np.argmax(magnitudes > 1e-8 * magnitudes.max()))]
    if pivot != 0.0:
        vec = vec * np.conj(pivot / abs(pivot))
    return vec


def cmd_spectrum(cfg: dict) -> int:
    _require_format(cfg, "csv", "spectrum")
    params = _model_params(cfg)
    spectrum = analytic_spectrum(ModelParams(g1=params.g1, g2=0.0, rddi=params.rddi))
    h_full = build_single_excitation_h(params)
    decomp = hermitian_eigendecompose(h_full)

    analytic_pairs = [
        (-spectrum.omega, spectrum.bright_minus),
        (0.0, spectrum.dark),
        (spectrum.omega, spectrum.bright_plus),
    ]
    rows = []
    for i, (value, vec) in enumerate(analytic_pairs):
        num_value = decomp.eigenvalues[i]
        num_vec = _gauge_fix(decomp.eigenvectors[:, i].copy())
        res_analytic = float(np.linalg.norm(h_full @ vec - value * vec))
        res_numeric = float(np.linalg.norm(h_full @ num_vec - num_value * num_vec))
        rows.append(
            (i, value, num_value,
             vec[0], vec[1], vec[2],
             num_vec[0].real, num_vec[1].real, num_vec[2].real,
             res_analytic, res_numeric)
        )
    header = (
        "index", "eigenvalue_analytic", "eigenvalue_numeric",
        "photon_analytic", "atom1_analytic", "atom2_analytic",
        "photon_numeric", "atom1_numeric", "atom2_numeric",
        "residual_analytic", "residual_numeric",
    )
    _emit(cfg, _csv(header, rows))
    return 0


def cmd_evolve(cfg: dict) -> int:
    _require_format(cfg, "csv", "evolve")
    params = _model_params(cfg)
    init = _initial_state(cfg)
    grid = _time_grid(cfg, params)
    psi = np.atleast_2d(evolve(params, init, grid))
    norms = np.linalg.norm(psi, axis=1)
    concurrence = 2.0 * np.abs(psi[:, 1] * np.conj(psi[:, 2]))
    header = ("t", "photon_re", "photon_im", "atom1_re", "atom1_im",
              "atom2_re", "atom2_im", "norm", "concurrence")
    rows = [
        (t, p[0].real, p[0].imag, p[1].real, p[1].imag, p[2].real, p[2].imag, n, c)
        for t, p, n, c in zip(grid, psi, norms, concurrence)
    ]
    _emit(cfg, _csv(header, rows))
    return 0


def cmd_sweep(cfg: dict) -> int:
    _require_format(cfg, "csv", "sweep")
    result = sweep_position(_geometry(cfg), _x1_grid(cfg), numeric_peaks=cfg.get("numeric_peaks", False))
    header = ["x1", "g1", "rddi", "ratio", "c_peak", "t_peak", "period"]
    columns = [result.x1, result.g1, result.rddi, result.ratio,
               result.c_peak, result.t_peak, result.period]
    if result.c_peak_numeric is not None:
        header.append("c_peak_numeric")
        columns.append(result.c_peak_numeric)
    rows = list(zip(*columns))
    _emit(cfg, _csv(header, rows))
    return 0


def cmd_mesh(cfg: dict) -> int:
    _require_format(cfg, "csv", "mesh")
    geo = _geometry(cfg)
    x1_grid = _x1_grid(cfg)
    slowest = min(math.hypot(p.g1, p.rddi) for p in (params_at(geo, x1) for x1 in x1_grid))
    if slowest == 0.0 and "t_max" not in cfg:
        raise DegenerateModel("zero Omega on the grid: no default period, pass --t-max")
    grid_cfg = dict(cfg)
    grid_cfg.setdefault("t_max", 2.0 * math.pi / slowest if slowest > 0.0 else None)
    t_grid = _time_grid(grid_cfg, ModelParams(g1=1.0), default_steps=DEFAULT_MESH_T_STEPS)
    values = mesh(geo, x1_grid, t_grid)
    rows = [
        (x1, t, values[i, k])
        for i, x1 in enumerate(x1_grid)
        for k, t in enumerate(t_grid)
    ]
    _emit(cfg, _csv(("x1", "t", "concurrence"), rows))
    return 0


def cmd_peaks(cfg: dict) -> int:
    _require_format(cfg, "csv", "peaks")
    params = _model_params(cfg)
    analytic = ModelParams(g1=params.g1, g2=0.0, rddi=params.rddi)
    header = ("kind", "g1", "rddi", "ratio", "c_peak", "t_peak", "period")
    rows = []
    if cfg.get("scan_rddi") is None:
        report = peak_report(analytic)
        rows.append(("report", analytic.g1, analytic.rddi, report.ratio,
                     report.c_peak, report.t_peak, report.period))
    else:
        scan = _parse_scan(cfg["scan_rddi"])
        heights = np.array([peak_height(analytic.g1, r) for r in scan])
        for r, c in zip(scan, heights):
            omega = math.hypot(analytic.g1, r)
            rows.append(("scan", analytic.g1, r, r / analytic.g1, c,
                         2.0 * math.pi / (3.0 * omega), 2.0 * math.pi / omega))
        best = int(np.argmax(heights))
        rows.append(("argmax",) + rows[best][1:])
        r_opt, c_opt = scan_peak_optimum(analytic.g1)
        omega = math.hypot(analytic.g1, r_opt)
        rows.append(("optimum", analytic.g1, r_opt, r_opt / analytic.g1, c_opt,
                     2.0 * math.pi / (3.0 * omega), 2.0 * math.pi / omega))
    _emit(cfg, _csv(header, rows))
    return 0


def cmd_plot(cfg: dict) -> int:
    _require_format(cfg, "svg", "plot")
    kind = cfg.get("kind", "evolve")
    if kind == "evolve":
        params = _model_params(cfg)
        series = concurrence_series(params, _initial_state(cfg), _time_grid(cfg, params))
        text = line_plot(series.times, [series.values], ["C(t)"],
                         "t (1/g0)", "concurrence", "concurrence vs time")
    elif kind == "sweep":
        result = sweep_position(_geometry(cfg), _x1_grid(cfg))
        c_top = float(result.c_peak.max()) or 1.0
        p_top = float(result.period.max()) or 1.0
        text = line_plot(
            result.x1,
            [result.c_peak / c_top, result.period / p_top],
            [f"c_peak / {c_top:.6g}", f"period / {p_top:.6g}"],
            "x1 (w0)", "normalized", "peak concurrence and period vs position",
        )
    else:
        geo = _geometry(cfg)
        x1_grid = _x1_grid(cfg)
        slowest = min(math.hypot(p.g1, p.rddi) for p in (params_at(geo, x1) for x1 in x1_grid))
        if slowest == 0.0 and "t_max" not in cfg:
            raise DegenerateModel("zero Omega on the grid: no default period, pass --t-max")
        grid_cfg = dict(cfg)
        grid_cfg.setdefault("t_max", 2.0 * math.pi / slowest if slowest > 0.0 else None)
        t_grid = _time_grid(grid_cfg, ModelParams(g1=1.0), default_steps=DEFAULT_MESH_T_STEPS)
        values = mesh(geo, x1_grid, t_grid)
        text = raster_plot(values, (float(t_grid[0]), float(t_grid[-1])),
                           (float(x1_grid[0]), float(x1_grid[-1])),
                           "t (1/g0)", "x1 (w0)", "concurrence mesh")
    _emit(cfg, text)
    return 0


def _selftest_checks():
    rng = np.random.default_rng(20250823)

    def spectrum_oracle():
        for _ in range(50):
            g1, rddi = rng.uniform(0.05, 1.0, size=2)
            params = ModelParams(g1=g1, rddi=rddi)
            spectrum = analytic_spectrum(params)
            h = build_single_excitation_h(params)
            decomp = hermitian_eigendecompose(h)
            expected = np.array([-spectrum.omega, 0.0, spectrum.omega])
            if np.max(np.abs(decomp.eigenvalues - expected)) > 1e-12:
                return False
            if np.linalg.norm(h @ spectrum.dark) > 1e-12 * max(g1, rddi):
                return False
        return True

    def evolution_oracle():
        for _ in range(3):
            g1, rddi = rng.uniform(0.1, 1.0, size=2)
            params = ModelParams(g1=g1, rddi=rddi)
            omega = params.omega
            h = build_single_excitation_h(params)
            psi0 = np.array([1.0, 0.0, 0.0], dtype=complex)
            t_final = 10.0 / omega
            approx = rk4_schrodinger(h, psi0, t_final, 1e-3 / omega)
            exact = evolve_spectral(hermitian_eigendecompose(h), psi0, t_final)
            if np.max(np.abs(approx - exact)) > 1e-8:
                return False
            if abs(np.linalg.norm(exact) - 1.0) > 1e-12:
                return False
        return True

    def concurrence_equivalence():
        for _ in range(200):
            g1, rddi = rng.uniform(0.05, 1.0, size=2)
            t = rng.uniform(0.0, 20.0)
            psi = evolve(ModelParams(g1=g1, rddi=rddi), InitialState(), t)
            rho = reduced_density(psi)
            if abs(wootters_concurrence(rho) - xstate_concurrence(rho)) > 1e-10:
                return False
        return True

    def peak_placement():
        for _ in range(5):
            g1, rddi = rng.uniform(0.1, 1.0, size=2)
            params = ModelParams(g1=g1, rddi=rddi)
            omega = params.omega
            period = 2.0 * math.pi / omega
            grid = np.linspace(0.0, 3.0 * period, 3 * 10_000 + 1)
            series = concurrence_series(params, InitialState(), grid)
            step = grid[1] - grid[0]
            for t_formula in peak_times(g1, rddi, m_max=5):
                window = (grid > t_formula - period / 4.0) & (grid < t_formula + period / 4.0)
                local = np.where(window)[0]
                t_grid_peak = grid[local[np.argmax(series.values[local])]]
                if abs(t_grid_peak - t_formula) > step:
                    return False
        return True

    def effective_model():
        params = ModelParams(g1=1.0, rddi=0.3)
        grid = np.linspace(0.0, 100.0, 2001)
        psi0 = np.array([1.0, 0.0, 0.0], dtype=complex)
        decomp = hermitian_eigendecompose(build_effective_h(params))
        psi = evolve_spectral(decomp, psi0, grid)
        if np.max(2.0 * np.abs(psi[:, 1] * np.conj(psi[:, 2]))) > 1e-12:
            return False
        full = concurrence_series(params, InitialState(), grid)
        return bool(full.values.max() > 0.01)

    return (
        ("spectrum-oracle", spectrum_oracle),
        ("evolution-oracle", evolution_oracle),
        ("concurrence-equivalence", concurrence_equivalence),
        ("peak-placement", peak_placement),
        ("effective-model", effective_model),
    )


def cmd_selftest(cfg: dict) -> int:
    failures = 0
    for name, check in _selftest_checks():
        try:
            ok = check()
        except Exception as exc:  # a crashed check is a failed check
            print(f"FAIL {name}: {type(exc).__name__}: {exc}")
            failures += 1
            continue
        print(f"{'PASS' if ok else 'FAIL'} {name}")
        failures += 0 if ok else 1
    return 0 if failures == 0 else 3


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    model = shared.add_argument_group("model input (direct XOR position)")
    model.add_argument("--g1", type=float, help="atom-1 coupling, g0 units")
    model.add_argument("--g2", type=float, help="atom-2 coupling, g0 units")
    model.add_argument("--rddi", type=float, help="direct exchange strength, g0 units")
    model.add_argument("--x1", type=float, help="atom-1 position, waist units")

    state = shared.add_argument_group("initial state")
    state.add_argument("--alpha-re", type=float, dest="alpha_re")
    state.add_argument("--alpha-im", type=float, dest="alpha_im")
    state.add_argument("--beta-re", type=float, dest="beta_re")
    state.add_argument("--beta-im", type=float, dest="beta_im")

    grids = shared.add_argument_group("grids")
    grids.add_argument("--t-max", type=float, dest="t_max", help="default: one period 2 pi/Omega")
    grids.add_argument("--t-steps", type=int, dest="t_steps")
    grids.add_argument("--x1-min", type=float, dest="x1_min")
    grids.add_argument("--x1-max", type=float, dest="x1_max")
    grids.add_argument("--x1-steps", type=int, dest="x1_steps")
    grids.add_argument("--scan-rddi", dest="scan_rddi", metavar="LO:HI:N")

    geo = shared.add_argument_group("geometry overrides")
    geo.add_argument("--g0-mhz", type=float, dest="g0_mhz")
    geo.add_argument("--w0-um", type=float, dest="w0_um")
    geo.add_argument("--lambda-um", type=float, dest="lambda_um")
    geo.add_argument("--x2", type=float)
    geo.add_argument("--gamma-ref-hz", type=float, dest="gamma_ref_hz")
    geo.add_argument("--r-ref", type=float, dest="r_ref")
    geo.add_argument("--standing-wave", action="store_const", const=True, dest="standing_wave")

    output = shared.add_argument_group("output")
    output.add_argument("--config", help="flat key=value file, lower precedence than flags")
    output.add_argument("--out", help="output path, default standard output")
    output.add_argument("--format", choices=("csv", "svg"))
    output.add_argument("--numeric-peaks", action="store_const", const=True, dest="numeric_peaks",
                        help="sweep: add a full-g2 numeric peak column")
    output.add_argument("--kind", choices=("evolve", "sweep", "mesh"),
                        help="plot: which figure to draw")

    parser = argparse.ArgumentParser(
        prog="cavitypair",
        description="Single-excitation cavity pair dynamics: spectra, concurrence, sweeps.",
    )
    commands = parser.add_subparsers(dest="command", required=True)
    handlers = {
        "spectrum": cmd_spectrum,
        "evolve": cmd_evolve,
        "sweep": cmd_sweep,
        "mesh": cmd_mesh,
        "peaks": cmd_peaks,
        "selftest": cmd_selftest,
        "plot": cmd_plot,
    }
    for name, handler in handlers.items():
        sub = commands.add_parser(name, parents=[shared])
        sub.set_defaults(handler=handler)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = _merge_config(args)
        return args.handler(cfg)
    except NumericalContractError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    except (ParameterError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
