"""Command-line entry point ``zll``.

Subcommands: ``zeta eval``, ``ladder build|eval``, ``primes pi``,
``mvt scan|bounds``, ``aa run`` and ``report all``.  Options resolve as
built-in defaults < ``--config FILE`` (flat ``key = value`` lines, keys are
option names with dashes or underscores) < command-line flags.

Exit codes: 0 ok, 2 usage/config, 3 range/domain/precondition,
4 numeric non-convergence, 5 I/O.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import logging
import math
import os
import sys
import tempfile
from dataclasses import asdict

from . import __version__, _backend, aa, ladder, mvt, primes, zeta
from ._series import RS_TERM_FLOOR
from .errors import ConfigError, ZetaLadderError
from .svg import Chart, render

log = logging.getLogger("zll")

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_NUMERIC, EXIT_IO = 0, 2, 3, 4, 5
DEFAULT_U = "auto"
AUTO_U = ["lnln", 10.0, 100.0, 1000.0]


# ---------------------------------------------------------------------------
# output helpers


def atomic_write(path: str, text: str) -> None:
    """Write text to ``path`` through a temporary file and os.replace."""
    d = os.path.dirname(os.path.abspath(path)) or "."
    os.makedirs(d, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=".tmp-", dir=d)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def csv_text(header: list, rows: list) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([repr(float(v)) if isinstance(v, float) else v for v in row])
    return buf.getvalue()


def json_text(obj) -> str:
    return json.dumps(obj, indent=1, allow_nan=True) + "\n"


def _sha(path: str) -> str:
    with open(path, "rb") as fh:
        return hashlib.sha256(fh.read()).hexdigest()


def module_knobs(args) -> dict:
    """Every numeric knob the computation depends on, flattened."""
    knobs = {}
    quad = quad_config(args)
    for k, v in asdict(quad).items():
        knobs[f"quadrature.{k}"] = v
    mcfg = mvt_config(args)
    for k, v in asdict(mcfg).items():
        knobs[f"mvt.{k}"] = v
    for k, v in asdict(eval_config(args)).items():
        knobs[f"eval.{k}"] = v
    knobs.update({
        "ladder.t0": ladder.T0_LADDER,
        "ladder.newton_max_iter": ladder.NEWTON_MAX_ITER,
        "ladder.head_interval": "[0, 2]",
        "mvt.alpha": mvt.ALPHA_DEFAULT,
        "mvt.envelope_slack": mvt.ENVELOPE_SLACK,
        "mvt.bound_nmax": mvt.BOUND_NMAX,
        "aa.envelope_const": getattr(args, "A", aa.ENVELOPE_CONST),
        "aa.grid_m": getattr(args, "grid_m", aa.GRID_M),
        "aa.golden_xtol": aa.GOLDEN_XTOL,
        "primes.limit": getattr(args, "limit", primes.DEFAULT_LIMIT),
        "zeta.rs_term_floor": RS_TERM_FLOOR,
        "zeta.abel_plana_ratio": zeta.AP_RATIO,
        "zeta.abel_plana_pad": zeta.AP_PAD,
        "zeta.abel_plana_nodes": zeta.AP_NODES,
        "zeta.sigma_min_series": zeta.SIGMA_MIN_SERIES,
        "zeta.hardy_t_min": zeta.HARDY_T_MIN,
    })
    return knobs


def write_manifest(path: str, args, outputs: list[str]) -> None:
    lines = ["# zll run manifest", f"version = {__version__}", f"backend = {_backend.NAME}",
             f"command = {args.command} {args.action}"]
    for k in sorted(vars(args)):
        if k in ("func", "command", "action"):
            continue
        lines.append(f"arg.{k} = {getattr(args, k)!r}")
    for k, v in sorted(module_knobs(args).items()):
        lines.append(f"{k} = {v!r}")
    for out in outputs:
        lines.append(f"output.{os.path.basename(out)} = sha256:{_sha(out)}")
    atomic_write(path, "\n".join(lines) + "\n")


# ---------------------------------------------------------------------------
# configs from arguments


def quad_config(args) -> ladder.QuadratureConfig:
    d = ladder.DEFAULT_QUAD
    return ladder.QuadratureConfig(
        panel_scale=getattr(args, "panel_scale", d.panel_scale),
        nodes_per_panel=getattr(args, "nodes_per_panel", d.nodes_per_panel),
        abs_tol=getattr(args, "abs_tol", d.abs_tol),
        c0_offset=getattr(args, "c0_offset", d.c0_offset),
    )


def mvt_config(args) -> mvt.MVTConfig:
    d = mvt.DEFAULT_MVT
    return mvt.MVTConfig(
        nodes_per_panel=getattr(args, "mvt_nodes", d.nodes_per_panel),
        width_factor=getattr(args, "mvt_width_factor", d.width_factor),
        abs_tol=getattr(args, "mvt_abs_tol", d.abs_tol),
    )


def eval_config(args) -> zeta.EvalConfig:
    d = zeta.DEFAULT_EVAL
    return zeta.EvalConfig(tol=getattr(args, "tol", d.tol), max_terms=getattr(args, "max_terms", d.max_terms))


def parse_float_list(text: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise ConfigError(f"bad number list {text!r}") from exc


def parse_t_grid(text: str) -> list[float]:
    if ":" in text:
        return mvt.log_grid(text)
    return parse_float_list(text)


def parse_u_grid(text: str) -> list:
    if text == "auto":
        return list(AUTO_U)
    out = []
    for v in text.split(","):
        v = v.strip()
        if v == "lnln":
            out.append(v)
        elif v:
            try:
                out.append(float(v))
            except ValueError as exc:
                raise ConfigError(f"bad U value {v!r}") from exc
    return out


# ---------------------------------------------------------------------------
# commands


def cmd_zeta_eval(args) -> int:
    cfg = eval_config(args)
    route = args.route
    if route == "auto":
        route = zeta.dispatch_route(args.sigma, args.t)
    if route == "hardy":
        if args.sigma != 0.5:
            raise ConfigError("the hardy route needs --sigma 0.5")
        z = zeta.hardy_z(abs(args.t))
        th = float(zeta.theta([abs(args.t)])[0])
        val = complex(math.cos(th), -math.sin(th)) * z
        if args.t < 0:
            val = val.conjugate()
        sample = zeta.ZetaSample(0.5, args.t, val.real, val.imag, z * z, "riemann-siegel", 0, 0.0)
    elif route == "dirichlet":
        sample = zeta.zeta_dirichlet(args.sigma, args.t, cfg)
    else:
        sample = zeta.zeta_em(args.sigma, args.t, cfg)
    print(json.dumps(sample.to_dict()))
    return EXIT_OK


def cmd_ladder_build(args) -> int:
    cfg = quad_config(args)
    log.info("building ladder table on [%g, %g] with %d points", args.t_min, args.t_max, args.points)
    table = ladder.build_table(args.t_min, args.t_max, args.points, cfg, args.jobs)
    ladder.save_table(table, args.out)
    write_manifest(args.out + ".manifest", args, [args.out])
    print(json.dumps({"table": args.out, "n_points": table.n_points, "config_hash": cfg.digest()}))
    return EXIT_OK


def cmd_ladder_eval(args) -> int:
    table = ladder.load_table(args.table)
    out = {"t": args.t, "phi1": ladder.phi1(table, args.t)}
    if table.t_min < args.t < table.t_max:
        out["phi1_prime"] = ladder.phi1_prime(table, args.t)
    print(json.dumps(out))
    return EXIT_OK


def cmd_primes_pi(args) -> int:
    limit = max(2, int(args.limit))
    pc = primes.build_counter(limit)
    print(primes.prime_pi(pc, args.x))
    return EXIT_OK


MVT_COLUMNS = ["sigma", "T", "U", "integral", "zeta2sigma", "residual"]


def run_mvt_scan(args, sigmas, Ts, Us):
    report = mvt.uniformity_scan(sigmas, Ts, Us, mvt_config(args), args.jobs)
    rows = [[e.sigma, e.T, e.U, e.integral, e.zeta2sigma, e.residual] for e in report.entries]
    return report, csv_text(MVT_COLUMNS, rows)


def mvt_summary(report: mvt.MVTReport) -> dict:
    return {
        "entries": len(report.entries),
        "max_abs_residual": report.max_abs_residual,
        "trend_slope": report.trend_slope,
        "max_lnln_relative": report.max_lnln_relative(),
        "within_bound_sums": report.within_bounds(),
    }


def cmd_mvt_scan(args) -> int:
    sigmas = parse_float_list(args.sigmas)
    Ts = parse_t_grid(args.t)
    Us = parse_u_grid(args.u)
    report, text = run_mvt_scan(args, sigmas, Ts, Us)
    atomic_write(args.out, text)
    write_manifest(args.out + ".manifest", args, [args.out])
    print(json.dumps(mvt_summary(report)))
    return EXIT_OK


def cmd_mvt_bounds(args) -> int:
    rep = mvt.bound_report(args.sigma, args.nmax)
    d = rep.as_dict()
    d["s1_within_limit"] = rep.s1 <= rep.s1_limit
    d["s2_within_envelope"] = rep.s2 <= rep.s2_envelope
    print(json.dumps(d))
    return EXIT_OK


def _table_for_sequence(args, seq_T: float, K_last: float) -> ladder.LadderTable:
    t_min = seq_T
    t_max = float(math.ceil(K_last)) + 1.0
    n_points = max(64, int(math.ceil((t_max - t_min) / args.table_spacing)) + 1)
    log.info("building ladder table on [%g, %g] with %d points", t_min, t_max, n_points)
    return ladder.build_table(t_min, t_max, n_points, quad_config(args), args.jobs)


def aa_outputs(rows: list, sigma0: float) -> tuple[str, str]:
    csv_rows = [r.csv_fields() for r in rows]
    js = []
    for r in rows:
        d = dict(zip(aa.CSV_COLUMNS, r.csv_fields()))
        d["sigma0"] = sigma0
        d["product_lhs"] = r.sol.product_lhs
        js.append(d)
    return csv_text(aa.CSV_COLUMNS, csv_rows), json_text(js)


def residual_chart(rows: list, A: float) -> str:
    n = [r.sol.n for r in rows]
    ch = Chart("|R(u_n)| against the envelope", "n", "|R|", logy=True)
    ch.add("|R(u_n)|", n, [max(abs(r.sol.residual), 1e-300) for r in rows], markers=True)
    ch.add(f"{A:g} ln ln K_n / ln K_n", n, [A * r.sol.envelope for r in rows], dashed=True)
    return render(ch)


def rho_chart(rows: list) -> str:
    n = [r.sol.n for r in rows]
    ch = Chart("segment distance", "n", "distance")
    ch.add("rho = K_n - phi1(K_n+1)", n, [r.rho for r in rows], markers=True)
    ch.add("(1-c) pi(K_n)", n, [r.predicted_rho for r in rows], dashed=True)
    return render(ch)


def _needed_limit(K_last: float) -> int:
    return max(10**5, int(math.ceil(K_last)) + 1)


def cmd_aa_run(args) -> int:
    aa._check_sigma0(args.sigma0)
    seq = aa.k_sequence(args.t0, args.epsilon, args.n)
    if args.table:
        table = ladder.load_table(args.table)
        seq = aa.k_sequence(args.t0, args.epsilon, args.n, table)
    else:
        table = _table_for_sequence(args, seq.K[0], seq.K[-1])
    pc = primes.build_counter(_needed_limit(seq.K[-1]))
    rows = aa.run_aa(args.sigma0, seq, table, pc, args.grid_m, args.A, args.jobs, eval_config(args))
    csv_t, json_t = aa_outputs(rows, args.sigma0)
    outs = [args.out]
    atomic_write(args.out, csv_t)
    if args.json:
        atomic_write(args.json, json_t)
        outs.append(args.json)
    if args.svg:
        atomic_write(args.svg, residual_chart(rows, args.A))
        outs.append(args.svg)
    write_manifest(args.out + ".manifest", args, outs)
    flags = sum(1 for r in rows if r.flag)
    print(json.dumps({"intervals": len(rows), "flagged": flags,
                      "max_abs_residual": max((abs(r.sol.residual) for r in rows), default=0.0)}))
    return EXIT_OK


def cmd_report_all(args) -> int:
    out = args.out_dir
    os.makedirs(out, exist_ok=True)
    aa._check_sigma0(args.sigma0)
    seq = aa.k_sequence(args.t0, args.epsilon, args.n)
    table = _table_for_sequence(args, seq.K[0], seq.K[-1])
    paths = {k: os.path.join(out, v) for k, v in {
        "table": "ladder.tbl", "mvt": "mvt.csv", "aa": "aa.csv", "aa_json": "aa.json",
        "res_svg": "residuals.svg", "rho_svg": "rho.svg", "summary": "summary.json",
    }.items()}
    ladder.save_table(table, paths["table"])

    log.info("mean-value scan")
    report, mvt_csv = run_mvt_scan(args, parse_float_list(args.mvt_sigmas), parse_t_grid(args.mvt_t),
                                   parse_u_grid(args.mvt_u))
    atomic_write(paths["mvt"], mvt_csv)

    log.info("AA run over %d intervals", seq.N)
    pc = primes.build_counter(_needed_limit(seq.K[-1]))
    rows = aa.run_aa(args.sigma0, seq, table, pc, args.grid_m, args.A, args.jobs, eval_config(args))
    csv_t, json_t = aa_outputs(rows, args.sigma0)
    atomic_write(paths["aa"], csv_t)
    atomic_write(paths["aa_json"], json_t)
    atomic_write(paths["res_svg"], residual_chart(rows, args.A))
    atomic_write(paths["rho_svg"], rho_chart(rows))

    log.info("mean-value chain at T = %g", args.t0)
    chain = aa.verify_chain(args.sigma0, args.t0, table, args.epsilon, eval_config(args))
    faraday = []
    for r in rows:
        if r.sol.flag != "envelope-miss":
            fp = aa.faraday_pair(r.sol)
            faraday.append(max(fp["residual_half"], fp["residual_sigma0"]) <= fp["bound"])
    drift_t = float(args.t0)
    drift = (drift_t - ladder.phi1(table, drift_t)) / primes.expected_drift(pc, drift_t)
    summary = {
        "mvt": mvt_summary(report),
        "aa": {
            "intervals": len(rows),
            "envelope_miss": sum(1 for r in rows if "envelope-miss" in r.flag),
            "overlap": sum(1 for r in rows if "overlap" in r.flag),
            "max_abs_residual": max((abs(r.sol.residual) for r in rows), default=0.0),
            "rho_ratio_min": min((r.rho / r.predicted_rho for r in rows), default=math.nan),
            "rho_ratio_max": max((r.rho / r.predicted_rho for r in rows), default=math.nan),
            "rho_strictly_increasing": all(b.rho > a.rho for a, b in zip(rows, rows[1:])),
            "faraday_all_within_bound": all(faraday),
        },
        "chain": {**chain.as_dict(), "checks": {k: bool(v) for k, v in chain.checks().items()}},
        "drift_ratio_at_t0": drift,
        "table": {"t_min": table.t_min, "t_max": table.t_max, "n_points": table.n_points,
                  "config_hash": table.build_cfg.digest()},
    }
    atomic_write(paths["summary"], json_text(summary))
    outputs = [paths[k] for k in ("table", "mvt", "aa", "aa_json", "res_svg", "rho_svg", "summary")]
    write_manifest(os.path.join(out, "manifest.txt"), args, outputs)
    print(json.dumps({"out_dir": out, "files": [os.path.basename(p) for p in outputs]}))
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def _env_jobs() -> str:
    return os.environ.get("ZLL_JOBS", "1")


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from exc
    if v < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return v


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--jobs", type=_positive_int, default=_env_jobs(),
                   help="worker threads (default: $ZLL_JOBS or 1)")
    p.add_argument("--config", help="key = value file overriding defaults")
    p.add_argument("--log-level", default="WARNING", choices=["DEBUG", "INFO", "WARNING", "ERROR"])


def _add_quad(p: argparse.ArgumentParser) -> None:
    d = ladder.DEFAULT_QUAD
    p.add_argument("--panel-scale", type=float, default=d.panel_scale)
    p.add_argument("--nodes-per-panel", type=int, default=d.nodes_per_panel)
    p.add_argument("--abs-tol", type=float, default=d.abs_tol)
    p.add_argument("--c0-offset", type=float, default=d.c0_offset)


def _add_eval(p: argparse.ArgumentParser) -> None:
    d = zeta.DEFAULT_EVAL
    p.add_argument("--tol", type=float, default=d.tol)
    p.add_argument("--max-terms", type=int, default=d.max_terms)


def _add_mvt(p: argparse.ArgumentParser) -> None:
    d = mvt.DEFAULT_MVT
    p.add_argument("--mvt-nodes", type=int, default=d.nodes_per_panel)
    p.add_argument("--mvt-width-factor", type=float, default=d.width_factor)
    p.add_argument("--mvt-abs-tol", type=float, default=d.abs_tol)


def _add_aa(p: argparse.ArgumentParser) -> None:
    p.add_argument("--sigma0", type=float, default=2.0)
    p.add_argument("--t0", type=float, default=1e4)
    p.add_argument("--epsilon", type=float, default=aa.EPS_DEFAULT)
    p.add_argument("--n", type=int, default=50)
    p.add_argument("--grid-m", type=int, default=aa.GRID_M)
    p.add_argument("--A", type=float, default=aa.ENVELOPE_CONST, help="envelope constant")
    p.add_argument("--table-spacing", type=float, default=1.0,
                   help="grid spacing of a table built on the fly")


def build_parser() -> tuple[argparse.ArgumentParser, dict]:
    parser = argparse.ArgumentParser(prog="zll", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"zll {__version__} ({_backend.NAME} kernels)")
    top = parser.add_subparsers(dest="command", required=True)
    leaves = {}

    def leaf(group, name, func, help_):
        p = group.add_parser(name, help=help_)
        _add_common(p)
        p.set_defaults(func=func)
        return p

    g = top.add_parser("zeta", help="evaluate zeta").add_subparsers(dest="action", required=True)
    p = leaf(g, "eval", cmd_zeta_eval, "print one ZetaSample as JSON")
    p.add_argument("--sigma", type=float, required=True)
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--route", choices=["auto", "dirichlet", "em", "hardy"], default="auto")
    _add_eval(p)
    leaves["zeta eval"] = p

    g = top.add_parser("ladder", help="ladder tables").add_subparsers(dest="action", required=True)
    p = leaf(g, "build", cmd_ladder_build, "build and save a ladder table")
    p.add_argument("--t-min", type=float, required=True)
    p.add_argument("--t-max", type=float, required=True)
    p.add_argument("--points", type=int, required=True)
    p.add_argument("--out", required=True)
    _add_quad(p)
    leaves["ladder build"] = p
    p = leaf(g, "eval", cmd_ladder_eval, "evaluate phi1 from a saved table")
    p.add_argument("--table", required=True)
    p.add_argument("--t", type=float, required=True)
    leaves["ladder eval"] = p

    g = top.add_parser("primes", help="prime counting").add_subparsers(dest="action", required=True)
    p = leaf(g, "pi", cmd_primes_pi, "print pi(x)")
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--limit", type=int, default=primes.DEFAULT_LIMIT)
    leaves["primes pi"] = p

    g = top.add_parser("mvt", help="local mean values").add_subparsers(dest="action", required=True)
    p = leaf(g, "scan", cmd_mvt_scan, "uniformity scan to CSV")
    p.add_argument("--sigmas", default="1.2,1.5,2,3")
    p.add_argument("--t", default="1e3:1e6:log4", help="a:b:logK or a comma list")
    p.add_argument("--u", default=DEFAULT_U, help="'auto' or a comma list; lnln allowed")
    p.add_argument("--out", required=True)
    _add_mvt(p)
    leaves["mvt scan"] = p
    p = leaf(g, "bounds", cmd_mvt_bounds, "bound sums S1, S2 as JSON")
    p.add_argument("--sigma", type=float, required=True)
    p.add_argument("--nmax", type=int, default=10**4)
    leaves["mvt bounds"] = p

    g = top.add_parser("aa", help="approximate solutions").add_subparsers(dest="action", required=True)
    p = leaf(g, "run", cmd_aa_run, "search every interval K_n")
    _add_aa(p)
    p.add_argument("--table", help="saved ladder table (built on the fly when omitted)")
    p.add_argument("--out", required=True)
    p.add_argument("--json")
    p.add_argument("--svg")
    _add_quad(p)
    _add_eval(p)
    leaves["aa run"] = p

    g = top.add_parser("report", help="full bundle").add_subparsers(dest="action", required=True)
    p = leaf(g, "all", cmd_report_all, "every artifact of the acceptance bundle")
    _add_aa(p)
    p.add_argument("--out-dir", default="zll-report")
    p.add_argument("--mvt-sigmas", default="1.2,1.5,2,3")
    p.add_argument("--mvt-t", default="1e3:1e6:log4")
    p.add_argument("--mvt-u", default=DEFAULT_U)
    _add_quad(p)
    _add_eval(p)
    _add_mvt(p)
    leaves["report all"] = p
    return parser, leaves


def read_config_file(path: str) -> dict:
    vals = {}
    try:
        with open(path, encoding="utf-8") as fh:
            for num, line in enumerate(fh, 1):
                line = line.split("#", 1)[0].strip()
                if not line:
                    continue
                key, sep, val = line.partition("=")
                if not sep:
                    raise ConfigError(f"{path}:{num}: expected key = value")
                vals[key.strip().replace("-", "_")] = val.strip()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    return vals


def _config_path(argv: list[str]) -> str | None:
    for i, tok in enumerate(argv):
        if tok == "--config" and i + 1 < len(argv):
            return argv[i + 1]
        if tok.startswith("--config="):
            return tok.split("=", 1)[1]
    return None


def _apply_config(parser, leaves, argv) -> argparse.Namespace:
    """Config-file values become leaf defaults; flags on the command line still win."""
    argv = list(sys.argv[1:] if argv is None else argv)
    path = _config_path(argv)
    sub = leaves.get(" ".join(argv[:2]))
    if path and sub is not None:
        vals = read_config_file(path)
        known = {a.dest for a in sub._actions}
        unknown = sorted(set(vals) - known - {"config", "help"})
        if unknown:
            raise ConfigError(f"unknown config keys for '{' '.join(argv[:2])}': {', '.join(unknown)}")
        for act in sub._actions:
            if act.dest in vals:
                act.required = False
        sub.set_defaults(**vals)
    return parser.parse_args(argv)


def run(argv=None) -> int:
    parser, leaves = build_parser()
    try:
        args = _apply_config(parser, leaves, argv)
    except SystemExit as exc:  # argparse usage errors
        return int(exc.code or 0)
    except ZetaLadderError as exc:
        return _report_error(exc, exc.exit_code)
    logging.basicConfig(level=getattr(logging, args.log_level), stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except ZetaLadderError as exc:
        return _report_error(exc, exc.exit_code)
    except OSError as exc:
        return _report_error(exc, EXIT_IO)


def _report_error(exc: BaseException, code: int) -> int:
    payload = {"error": type(exc).__name__, "message": str(exc), "exit_code": code}
    diag = getattr(exc, "diagnostics", None)
    if diag:
        payload["diagnostics"] = {k: (v if isinstance(v, (int, float, str)) else repr(v)) for k, v in diag.items()}
    print(json.dumps(payload), file=sys.stderr)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
