"""The ladder phi1(T): integrals of Z^2 and the transcendental equation they feed.

phi1(T) is the root V of

    V ln V + (c - ln 2pi) V + c0_offset = I(T),   I(T) = int_0^T Z(t)^2 dt,

with c Euler's constant.  I(T) comes from Gauss-Legendre panels on [2, T]
plus a fixed head over [0, 2] computed with Euler-Maclaurin values.

Panels are laid out in blocks.  Block b starts at s_b (s_0 = 2), holds
``block_panels`` equal panels of width

    h_b = panel_scale * 2pi / ln(max(e, s_b + block_panels * h_b')),

h_b' being the same expression evaluated at s_b.  The layout depends only on
the config, so any integral is a fixed sum of fixed panel values.
"""

from __future__ import annotations

import bisect
import hashlib
import math
import os
import tempfile
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np
from scipy.interpolate import PchipInterpolator

from . import _backend
from ._series import EULER_GAMMA, LOG_2PI
from .errors import ConfigError, ConstraintError, DomainError, NonConvergence, RangeError, TableFormatError
from .zeta import HARDY_RS_MIN, EvalConfig, abs_zeta_sq_array, hardy_z, hardy_z_array, zeta_em

T_MIN_QUAD = 2.0
T0_LADDER = 1e3  # operational threshold for the ladder and everything built on it
MAX_TABLE_POINTS = 20_000_000
TABLE_MAGIC = "# zetaladder ladder table v1"
NEWTON_MAX_ITER = 100
SUBST_PANEL_GAPS = 1.0  # panel width of the change-of-variables quadrature, in zero gaps


@dataclass(frozen=True)
class QuadratureConfig:
    """Panel sizing for integrals of Z^2 and the ladder equation constants.

    ``abs_tol`` is the target absolute error per unit length; it bounds the
    head integral and is the threshold ``Z2Quadrature.estimate_error`` is
    compared against.  ``c0_offset`` is the constant term of the ladder
    equation (0 by default).
    """

    panel_scale: float = 0.5
    nodes_per_panel: int = 8
    abs_tol: float = 1e-6
    block_panels: int = 256
    head_nodes: int = 64
    c0_offset: float = 0.0

    def __post_init__(self):
        if not (0.0 < self.panel_scale <= 1.0):
            raise ConfigError(f"panel_scale must lie in (0, 1], got {self.panel_scale}")
        if self.nodes_per_panel < 4 or self.nodes_per_panel > 64:
            raise ConfigError(f"nodes_per_panel must lie in [4, 64], got {self.nodes_per_panel}")
        if not (self.abs_tol > 0.0):
            raise ConfigError(f"abs_tol must be positive, got {self.abs_tol}")
        if self.block_panels < 1:
            raise ConfigError("block_panels must be >= 1")
        if self.head_nodes < 8:
            raise ConfigError("head_nodes must be >= 8")
        if not math.isfinite(self.c0_offset):
            raise ConfigError("c0_offset must be finite")

    def as_text(self) -> str:
        return ";".join(f"{k}={v!r}" for k, v in sorted(asdict(self).items()))

    def digest(self) -> str:
        return hashlib.sha256(self.as_text().encode()).hexdigest()[:16]

    @classmethod
    def from_text(cls, text: str) -> "QuadratureConfig":
        kinds = {"panel_scale": float, "nodes_per_panel": int, "abs_tol": float,
                 "block_panels": int, "head_nodes": int, "c0_offset": float}
        vals = {}
        for item in text.split(";"):
            key, _, raw = item.partition("=")
            if key not in kinds:
                raise TableFormatError(f"unknown quadrature key {key!r}")
            vals[key] = kinds[key](raw)
        return cls(**vals)


DEFAULT_QUAD = QuadratureConfig()


class Z2Quadrature:
    """Integrals of Z(t)^2 on [2, inf) over a fixed block/panel layout.

    Below t = 20 the integrand comes from Euler-Maclaurin on fixed GL16
    panels; the Riemann-Siegel block layout starts at t = 20.

    ``jobs`` threads evaluate blocks concurrently; block values are always
    combined in block order, so results do not depend on ``jobs``.
    """

    def __init__(self, cfg: QuadratureConfig = DEFAULT_QUAD, jobs: int = 1):
        self.cfg = cfg
        self.jobs = max(1, int(jobs))
        self.x, self.w = np.polynomial.legendre.leggauss(cfg.nodes_per_panel)
        self._starts = [HARDY_RS_MIN]
        self._widths: list[float] = []
        self._head: float | None = None
        self._low: float | None = None

    # -- layout ---------------------------------------------------------
    def _width_at(self, s: float) -> float:
        c = self.cfg.panel_scale * 2.0 * math.pi
        h0 = c / math.log(max(math.e, s))
        return c / math.log(max(math.e, s + self.cfg.block_panels * h0))

    def _extend(self, x: float) -> None:
        B = self.cfg.block_panels
        while self._starts[-1] <= x:
            s = self._starts[-1]
            h = self._width_at(s)
            self._widths.append(h)
            self._starts.append(s + B * h)

    def locate(self, x: float) -> tuple[int, int]:
        """(block, panel) holding x, panel counted from the block start."""
        self._extend(x)
        b = bisect.bisect_right(self._starts, x) - 1
        h = self._widths[b]
        p = int(math.floor((x - self._starts[b]) / h))
        return b, min(max(p, 0), self.cfg.block_panels - 1)

    def panel_start(self, b: int, p: int) -> float:
        return self._starts[b] + p * self._widths[b]

    def block_start(self, b: int) -> float:
        while b >= len(self._widths):
            self._extend(self._starts[-1])
        return self._starts[b]

    def block_width(self, b: int) -> float:
        self.block_start(b)
        return self._widths[b]

    # -- kernels --------------------------------------------------------
    def block_panels(self, b: int, p0: int = 0, p1: int | None = None) -> np.ndarray:
        """Panel integrals p0 <= p < p1 of block b."""
        s = self.block_start(b)
        h = self._widths[b]
        p1 = self.cfg.block_panels if p1 is None else p1
        if p1 <= p0:
            return np.zeros(0)
        return _backend.z2_panels(s + p0 * h, h, p1 - p0, self.x, self.w)

    def _map(self, fn, items):
        items = list(items)
        if self.jobs == 1 or len(items) < 2:
            return [fn(i) for i in items]
        with ThreadPoolExecutor(max_workers=self.jobs) as pool:
            return list(pool.map(fn, items))

    def gauss(self, a: float, b: float) -> float:
        """One Gauss-Legendre panel on [a, b] (used for panel fragments)."""
        if b <= a:
            return 0.0
        half = 0.5 * (b - a)
        z = _backend.hardy_z_points(0.5 * (a + b) + half * self.x)
        return float(half * np.dot(self.w, z * z))

    def low(self, a: float, b: float) -> float:
        """int over [a, b] with [2, 20] of Z^2 from Euler-Maclaurin values (GL16, panels <= 0.25)."""
        lo, hi = max(a, T_MIN_QUAD), min(b, HARDY_RS_MIN)
        if hi <= lo:
            return 0.0
        full = lo == T_MIN_QUAD and hi == HARDY_RS_MIN
        if full and self._low is not None:
            return self._low
        val = _gauss_on_edges(lambda t: hardy_z_array(t) ** 2, _panelled(lo, hi, 0.25))
        if full:
            self._low = val
        return val

    # -- integrals ------------------------------------------------------
    def head(self) -> float:
        """int_0^2 |zeta(1/2 + it)|^2 dt by Gauss-Legendre on Euler-Maclaurin values."""
        if self._head is None:
            self._head = head_integral(self.cfg)
        return self._head

    def cumulative(self, points, chunk_blocks: int = 64) -> np.ndarray:
        """int_2^x Z^2 for each x of an ascending array ``points``."""
        pts = np.asarray(points, dtype=float)
        if pts.size == 0:
            return np.zeros(0)
        if np.any(np.diff(pts) < 0):
            raise DomainError("cumulative() needs ascending points")
        if pts[0] < T_MIN_QUAD:
            raise DomainError(f"integrals of Z^2 start at t = {T_MIN_QUAD}")
        out = np.empty(pts.size)
        j = int(np.searchsorted(pts, HARDY_RS_MIN, side="right"))
        for i in range(j):
            out[i] = self.low(T_MIN_QUAD, float(pts[i]))
        if j == pts.size:
            return out
        locs = [(-1, 0)] * j + [self.locate(float(x)) for x in pts[j:]]
        last = locs[-1][0]
        prefix = self.low(T_MIN_QUAD, HARDY_RS_MIN)
        for c0 in range(0, last + 1, chunk_blocks):
            blocks = range(c0, min(c0 + chunk_blocks, last + 1))
            vals = self._map(self.block_panels, blocks)
            for b, panels in zip(blocks, vals):
                while j < pts.size and locs[j][0] == b:
                    p = locs[j][1]
                    frag = self.gauss(self.panel_start(b, p), float(pts[j]))
                    out[j] = prefix + float(np.sum(panels[:p])) + frag
                    j += 1
                prefix += float(np.sum(panels))
        return out

    def integrate(self, a: float, b: float) -> float:
        """int_a^b Z(t)^2 dt for 2 <= a <= b."""
        a = float(a)
        b = float(b)
        if a < T_MIN_QUAD:
            raise DomainError(f"integrate_z_squared needs a >= {T_MIN_QUAD}, got {a}")
        if b < a:
            raise DomainError(f"integrate_z_squared needs a <= b, got ({a}, {b})")
        if b == a:
            return 0.0
        if a == T_MIN_QUAD:
            return float(self.cumulative([b])[0])
        low = self.low(a, b)
        if b <= HARDY_RS_MIN:
            return low
        a = max(a, HARDY_RS_MIN)
        ba, pa = self.locate(a)
        bb, pb = self.locate(b)
        if (ba, pa) == (bb, pb):
            return self.gauss(a, b) + low
        total = low + self.gauss(a, self.panel_start(ba, pa + 1))

        def piece(blk: int) -> float:
            lo = pa + 1 if blk == ba else 0
            hi = pb if blk == bb else self.cfg.block_panels
            return float(np.sum(self.block_panels(blk, lo, hi)))

        for v in self._map(piece, range(ba, bb + 1)):
            total += v
        return total + self.gauss(self.panel_start(bb, pb), b)

    def total(self, T: float) -> float:
        """I(T) = int_0^T Z^2 = head + int_2^T Z^2."""
        return self.head() + self.integrate(T_MIN_QUAD, T)

    def estimate_error(self, a: float, b: float) -> float:
        """|difference| between this layout and one with half the panel width."""
        fine = Z2Quadrature(
            QuadratureConfig(**{**asdict(self.cfg), "panel_scale": 0.5 * self.cfg.panel_scale}),
            self.jobs,
        )
        return abs(self.integrate(a, b) - fine.integrate(a, b))


def head_integral(cfg: QuadratureConfig = DEFAULT_QUAD) -> float:
    """int_0^2 |zeta(1/2+it)|^2 dt; two Gauss orders must agree to abs_tol."""
    ecfg = EvalConfig(tol=1e-13)

    def rule(m: int) -> float:
        x, w = np.polynomial.legendre.leggauss(m)
        t = 1.0 + x
        vals = np.array([zeta_em(0.5, float(ti), ecfg).abs_sq for ti in t])
        return float(np.dot(w, vals))

    fine = rule(cfg.head_nodes)
    coarse = rule(cfg.head_nodes // 2)
    if abs(fine - coarse) > cfg.abs_tol:
        raise NonConvergence("head integral over [0, 2] not converged",
                             {"fine": fine, "coarse": coarse})
    return fine


def integrate_z_squared(a: float, b: float, cfg: QuadratureConfig = DEFAULT_QUAD, jobs: int = 1) -> float:
    """int_a^b Z(t)^2 dt by Gauss-Legendre panels, 2 <= a <= b."""
    return Z2Quadrature(cfg, jobs).integrate(a, b)


def second_moment_main(T: float) -> float:
    """T ln(T/2pi) + (2c - 1) T, the classical main term of int_0^T Z^2."""
    return T * (math.log(T) - LOG_2PI) + (2.0 * EULER_GAMMA - 1.0) * T


# ---------------------------------------------------------------------------
# the transcendental equation


@dataclass(frozen=True)
class LadderSolution:
    T: float
    V: float
    integral: float
    residual: float
    iterations: int


def ladder_lhs(V: float, c0_offset: float = 0.0) -> float:
    return V * math.log(V) + (EULER_GAMMA - LOG_2PI) * V + c0_offset


def solve_for_integral(integral: float, T: float, c0_offset: float = 0.0) -> LadderSolution:
    """Newton iteration for V ln V + (c - ln 2pi) V + c0 = integral from V0 = T."""
    V = float(T)
    tiny = 4.0 * np.finfo(float).eps
    for it in range(1, NEWTON_MAX_ITER + 1):
        g = ladder_lhs(V, c0_offset) - integral
        dg = math.log(V) + 1.0 + EULER_GAMMA - LOG_2PI
        step = g / dg
        Vn = V - step
        if not (Vn > 0.0) or not math.isfinite(Vn):
            raise NonConvergence("Newton left the domain V > 0",
                                 {"T": T, "iteration": it, "V": V, "step": step})
        if abs(Vn - V) <= tiny * abs(Vn):
            res = ladder_lhs(Vn, c0_offset) - integral
            return LadderSolution(float(T), Vn, integral, res, it)
        V = Vn
    res = ladder_lhs(V, c0_offset) - integral
    if abs(res) <= 1e-6 * abs(integral):
        return LadderSolution(float(T), V, integral, res, NEWTON_MAX_ITER)
    raise NonConvergence("Newton did not converge in 100 iterations",
                         {"T": T, "V": V, "residual": res, "integral": integral})


def solve_ladder_detail(T: float, cfg: QuadratureConfig = DEFAULT_QUAD, quad: Z2Quadrature | None = None,
                        t0: float = T0_LADDER) -> LadderSolution:
    T = float(T)
    if T < t0:
        raise DomainError(f"solve_ladder needs T >= {t0:g}, got {T:g}")
    quad = quad or Z2Quadrature(cfg)
    sol = solve_for_integral(quad.total(T), T, quad.cfg.c0_offset)
    if abs(sol.residual) > 1e-6 * sol.integral:
        raise NonConvergence("ladder residual above 1e-6 relative", asdict(sol))
    if not (0.0 < sol.V < T):
        raise NonConvergence("ladder value outside (0, T)", asdict(sol))
    return sol


def solve_ladder(T: float, cfg: QuadratureConfig = DEFAULT_QUAD, quad: Z2Quadrature | None = None) -> float:
    """phi1(T) as the root of the transcendental equation, T >= 1e3."""
    return solve_ladder_detail(T, cfg, quad).V


# ---------------------------------------------------------------------------
# table


@dataclass(frozen=True)
class LadderTable:
    grid: np.ndarray
    phi1: np.ndarray
    t_min: float
    t_max: float
    build_cfg: QuadratureConfig
    integrals: np.ndarray | None = None
    _interp: PchipInterpolator = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        g = np.asarray(self.grid, dtype=float)
        v = np.asarray(self.phi1, dtype=float)
        if g.ndim != 1 or g.shape != v.shape or g.size < 2:
            raise ConfigError("grid and phi1 must be equal-length 1-d arrays")
        if np.any(np.diff(g) <= 0) or np.any(np.diff(v) <= 0):
            raise NonConvergence("ladder table is not strictly increasing")
        g.setflags(write=False)
        v.setflags(write=False)
        object.__setattr__(self, "grid", g)
        object.__setattr__(self, "phi1", v)
        object.__setattr__(self, "_interp", PchipInterpolator(g, v, extrapolate=False))

    @property
    def n_points(self) -> int:
        return int(self.grid.size)

    @property
    def spacing(self) -> float:
        return float(self.grid[1] - self.grid[0])

    def contains(self, a: float, b: float | None = None) -> bool:
        b = a if b is None else b
        return self.t_min <= a and b <= self.t_max

    def __call__(self, t):
        return phi1_array(self, t)


def build_table(t_min: float, t_max: float, n_points: int, cfg: QuadratureConfig = DEFAULT_QUAD,
                jobs: int = 1) -> LadderTable:
    """Solve the ladder equation on a uniform grid from one cumulative pass."""
    t_min = float(t_min)
    t_max = float(t_max)
    n_points = int(n_points)
    if t_min < T0_LADDER:
        raise DomainError(f"t_min must be >= {T0_LADDER:g}, got {t_min:g}")
    if not t_max > t_min:
        raise DomainError("t_max must exceed t_min")
    if n_points < 64:
        raise ConfigError(f"n_points must be >= 64, got {n_points}")
    if n_points > MAX_TABLE_POINTS:
        raise ConfigError(f"n_points={n_points} exceeds the memory cap {MAX_TABLE_POINTS}")
    grid = np.linspace(t_min, t_max, n_points)
    quad = Z2Quadrature(cfg, jobs)
    integ = quad.head() + quad.cumulative(grid)
    phi = np.array([solve_for_integral(I, T, cfg.c0_offset).V for I, T in zip(integ, grid)])
    return LadderTable(grid, phi, t_min, t_max, cfg, integ)


def _check_domain(table: LadderTable, t: np.ndarray, interior: bool = False) -> None:
    if t.size == 0:
        return
    lo, hi = float(np.min(t)), float(np.max(t))
    if interior:
        ok = table.t_min < lo and hi < table.t_max
    else:
        ok = table.t_min <= lo and hi <= table.t_max
    if not ok:
        kind = "interior of" if interior else "inside"
        raise RangeError(
            f"t in [{lo:.17g}, {hi:.17g}] not {kind} table domain [{table.t_min:g}, {table.t_max:g}]"
        )


def phi1_array(table: LadderTable, t) -> np.ndarray:
    t = np.asarray(t, dtype=float)
    _check_domain(table, t)
    out = np.asarray(table._interp(t), dtype=float)
    # return node values exactly at the nodes
    idx = np.searchsorted(table.grid, t)
    idx = np.clip(idx, 0, table.grid.size - 1)
    hit = table.grid[idx] == t
    return np.where(hit, table.phi1[idx], out)


def phi1(table: LadderTable, t: float) -> float:
    """Monotone (PCHIP) interpolation of the ladder table."""
    return float(phi1_array(table, np.array([float(t)]))[0])


def phi1_prime_array(table: LadderTable, t) -> np.ndarray:
    t = np.asarray(t, dtype=float)
    _check_domain(table, t, interior=True)
    return np.maximum(np.asarray(table._interp(t, 1), dtype=float), 0.0)


def phi1_prime(table: LadderTable, t: float) -> float:
    """Derivative of the monotone interpolant, at interior points only."""
    return float(phi1_prime_array(table, np.array([float(t)]))[0])


def z_tilde_sq(t: float) -> float:
    """Leading-order density Z(t)^2 / ln t, t >= 1e3."""
    t = float(t)
    if t < T0_LADDER:
        raise DomainError(f"z_tilde_sq needs t >= {T0_LADDER:g}, got {t:g}")
    z = hardy_z(t)
    return z * z / math.log(t)


def z_tilde_sq_array(t) -> np.ndarray:
    t = np.asarray(t, dtype=float)
    if t.size and float(t.min()) < T0_LADDER:
        raise DomainError(f"z_tilde_sq needs t >= {T0_LADDER:g}")
    z = _backend.hardy_z_points(t.ravel()).reshape(t.shape)
    return z * z / np.log(t)


def slope_tan_alpha(table: LadderTable, T: float, U: float) -> float:
    """2 (phi1(T+U) - phi1(T)) / U."""
    if not U > 0:
        raise DomainError("U must be positive")
    return 2.0 * (phi1(table, T + U) - phi1(table, T)) / U


# ---------------------------------------------------------------------------
# change of variables t -> phi1(t)


def _interp_breaks(table: LadderTable, a: float, b: float) -> np.ndarray:
    inner = table.grid[(table.grid > a) & (table.grid < b)]
    return np.concatenate(([a], inner, [b]))


def _panelled(a: float, b: float, width: float, breaks=None) -> np.ndarray:
    """Panel edges on [a, b], at most ``width`` apart, containing ``breaks``."""
    pts = np.array([a, b]) if breaks is None else np.asarray(breaks)
    edges = [pts[:1]]
    for lo, hi in zip(pts[:-1], pts[1:]):
        m = max(1, int(math.ceil((hi - lo) / width)))
        edges.append(lo + (hi - lo) * np.arange(1, m + 1) / m)
    e = np.concatenate(edges)
    e[-1] = b
    return e


def _gauss_on_edges(f, edges: np.ndarray, order: int = 16) -> float:
    x, w = np.polynomial.legendre.leggauss(order)
    lo, hi = edges[:-1], edges[1:]
    half = 0.5 * (hi - lo)
    nodes = (0.5 * (lo + hi))[:, None] + half[:, None] * x[None, :]
    vals = f(nodes.ravel()).reshape(nodes.shape)
    return float(np.sum(half * (vals @ w)))


def substitution_residual(f, table: LadderTable, T: float, U: float, density: str = "phi1_prime",
                          enforce_range: bool = True, gaps: float = SUBST_PANEL_GAPS) -> dict:
    """Both sides of int_T^{T+U} f(phi1(t)) w(t) dt = int_{phi1(T)}^{phi1(T+U)} f(x) dx.

    ``density`` selects w: "phi1_prime" (derivative of the interpolant; exact
    change of variables) or "z_tilde_sq" (the leading-order rule Z^2 / ln t).
    ``f`` maps an array of x to an array of values.  Both sides use GL16 on
    panels ``gaps`` mean zero gaps 2 pi / ln t wide.
    """
    T = float(T)
    U = float(U)
    if not U > 0:
        raise ConstraintError("U must be positive")
    if enforce_range and U > T / math.log(T):
        raise ConstraintError(f"U={U:g} exceeds T/ln T={T / math.log(T):g}")
    _check_domain(table, np.array([T, T + U]))
    a_x = phi1(table, T)
    b_x = phi1(table, T + U)
    width = gaps * 2.0 * math.pi / math.log(T + U)
    if density == "phi1_prime":
        def lhs_f(t):
            inner = np.clip(t, table.t_min * (1 + 1e-15), table.t_max * (1 - 1e-15))
            return f(phi1_array(table, t)) * phi1_prime_array(table, inner)
        breaks = _interp_breaks(table, T, T + U)
    elif density == "z_tilde_sq":
        def lhs_f(t):
            return f(phi1_array(table, t)) * z_tilde_sq_array(t)
        breaks = None
    else:
        raise ConfigError(f"unknown density {density!r}")
    lhs = _gauss_on_edges(lhs_f, _panelled(T, T + U, width, breaks))
    rhs = _gauss_on_edges(f, _panelled(a_x, b_x, width))
    return {"lhs": lhs, "rhs": rhs, "residual": abs(lhs - rhs) / abs(rhs), "phi_T": a_x, "phi_TU": b_x}


def substitution_identity_check(sigma0: float, T: float, U: float, table: LadderTable,
                                density: str = "phi1_prime", cfg: EvalConfig | None = None) -> float:
    """Relative residual of the change of variables with f(x) = |zeta(sigma0 + ix)|^2."""
    if not sigma0 > 1.0:
        raise DomainError("sigma0 must exceed 1")
    ecfg = cfg or EvalConfig()
    f = lambda x: abs_zeta_sq_array(sigma0, x, ecfg)  # noqa: E731
    return substitution_residual(f, table, T, U, density)["residual"]


# ---------------------------------------------------------------------------
# persistence


def _atomic_write_text(path: str, text: str) -> None:
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(prefix=".tmp-", dir=d)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def table_to_text(table: LadderTable) -> str:
    cfg = table.build_cfg
    lines = [
        TABLE_MAGIC,
        f"# t_min = {table.t_min!r}",
        f"# t_max = {table.t_max!r}",
        f"# n_points = {table.n_points}",
        f"# config_hash = {cfg.digest()}",
        f"# config = {cfg.as_text()}",
        "# columns: t phi1",
    ]
    lines += [f"{t!r} {v!r}" for t, v in zip(table.grid.tolist(), table.phi1.tolist())]
    return "\n".join(lines) + "\n"


def save_table(table: LadderTable, path: str) -> None:
    """Write the table atomically in the versioned text layout."""
    try:
        _atomic_write_text(path, table_to_text(table))
    except OSError as exc:
        raise TableFormatError(f"cannot write table {path}: {exc}") from exc


def load_table(path: str) -> LadderTable:
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise TableFormatError(f"cannot read table {path}: {exc}") from exc
    if not lines or lines[0] != TABLE_MAGIC:
        raise TableFormatError(f"{path}: not a ladder table (bad magic line)")
    head = {}
    k = 1
    while k < len(lines) and lines[k].startswith("#"):
        key, _, val = lines[k][1:].partition("=")
        head[key.strip()] = val.strip()
        k += 1
    try:
        cfg = QuadratureConfig.from_text(head["config"])
        n = int(head["n_points"])
        t_min = float(head["t_min"])
        t_max = float(head["t_max"])
        if cfg.digest() != head["config_hash"]:
            raise TableFormatError(f"{path}: config hash mismatch")
        rows = np.array([[float(v) for v in ln.split()] for ln in lines[k:] if ln.strip()])
    except (KeyError, ValueError) as exc:
        raise TableFormatError(f"{path}: malformed header or rows ({exc})") from exc
    if rows.shape != (n, 2):
        raise TableFormatError(f"{path}: expected {n} rows of 2 columns, got {rows.shape}")
    return LadderTable(rows[:, 0].copy(), rows[:, 1].copy(), t_min, t_max, cfg)
