"""Monte-Carlo trials of the semi-random split and the degree-bound maximisation.

Every trial draws a part graph (minimum degree at least ``k - 1`` on
``n >= 2k - 1`` vertices), runs :func:`semirandom_split`, builds the
multigraph ``H`` and edge-colours it.  Trial ``j`` for clique size ``k``
under master seed ``s`` draws all of its randomness from
``SeedSequence([s, k, j])``, so rows do not depend on scheduling.
"""

from __future__ import annotations

import csv
import io
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from statistics import median

import numpy as np
from scipy.optimize import minimize_scalar

from .edgecolor import edge_color, verify_proper
from .graphs import SimpleGraph
from .immersion.semirandom import SemiRandomConfig, degree_threshold, phi, semirandom_split
from .immersion.split import build_H

CSV_HEADER = ("k", "n", "seed", "delta_H", "mu_H", "colors", "ell",
              "ratio_delta", "ratio_mu", "ms")
DIAGNOSTIC_HEADER = ("claim1_excess", "claim2_excess", "flagged")
GENERATORS = ("near-regular", "threshold-heavy", "two-clique")
MAX_K = 2000


class GeneratorError(ValueError):
    pass


# -- generators --------------------------------------------------------------


@dataclass(frozen=True)
class GeneratorConfig:
    """``n`` defaults to ``2k - 1``; ``n_factor`` scales it (``n = ceil(n_factor * k)``).

    ``slack``: near-regular degrees are drawn from ``[k-1, k-1+slack]``.
    ``extra``: threshold-heavy lifts ``k - phi(k) + extra`` vertices to degree ``d``.
    ``p_cross``: edge probability between the two cliques of the blow-up.
    """

    kind: str = "near-regular"
    n_factor: float | None = None
    slack: int = 4
    extra: int = 0
    p_cross: float = 0.25
    rewire_scope: str = "high-degree"
    diagnostics: bool = False
    record_timing: bool = False

    def __post_init__(self):
        if self.kind not in GENERATORS:
            raise ValueError(f"unknown generator {self.kind!r}; expected one of {GENERATORS}")

    def part_size(self, k: int) -> int:
        if self.n_factor is None:
            return 2 * k - 1
        return max(2 * k - 1, math.ceil(self.n_factor * k))

    @classmethod
    def from_dict(cls, data: dict) -> "GeneratorConfig":
        known = {f for f in cls.__dataclass_fields__}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown generator options {sorted(unknown)}")
        return cls(**data)


def _raise_degrees(A: np.ndarray, targets: np.ndarray, order: np.ndarray,
                   rng: np.random.Generator) -> None:
    """Add edges until ``deg(v) >= targets[v]``, preferring partners still below target."""
    deg = A.sum(axis=1)
    for v in order:
        need = int(targets[v] - deg[v])
        if need <= 0:
            continue
        cand = np.flatnonzero(~A[v])
        cand = cand[cand != v]
        if cand.size < need:
            raise GeneratorError(f"vertex {v} cannot reach degree {targets[v]} on {len(A)} vertices")
        below = (deg[cand] < targets[cand]).astype(float)
        key = np.lexsort((rng.random(cand.size), deg[cand], -below))
        pick = cand[key[:need]]
        A[v, pick] = A[pick, v] = True
        deg[v] += need
        deg[pick] += 1


def near_regular_graph(n: int, k: int, slack: int, rng: np.random.Generator) -> SimpleGraph:
    if n < k:
        raise GeneratorError(f"need n >= k (n={n}, k={k})")
    A = np.zeros((n, n), dtype=bool)
    targets = np.minimum(rng.integers(k - 1, k + max(slack, 0), size=n, endpoint=False), n - 1)
    _raise_degrees(A, targets, rng.permutation(n), rng)
    return SimpleGraph.from_adjacency(A)


def threshold_heavy_graph(n: int, k: int, slack: int, extra: int,
                          rng: np.random.Generator) -> SimpleGraph:
    """Near-regular base plus at least ``k - phi(k)`` vertices of degree ``>= ceil(9k/8)``."""
    d = degree_threshold(k)
    if d > n - 1:
        raise GeneratorError(f"degree threshold {d} exceeds n-1 = {n - 1}")
    A = near_regular_graph(n, k, slack, rng).to_adjacency()
    heavy = rng.choice(n, size=min(n, max(k - phi(k), 0) + extra), replace=False)
    targets = np.zeros(n, dtype=np.int64)
    targets[heavy] = d
    _raise_degrees(A, targets, heavy, rng)
    return SimpleGraph.from_adjacency(A)


def two_clique_graph(n: int, k: int, p_cross: float, rng: np.random.Generator) -> SimpleGraph:
    """Cliques on ``ceil(n/2)`` and ``floor(n/2)`` vertices with random cross edges,
    topped up so every vertex has degree at least ``k - 1``."""
    a = (n + 1) // 2
    A = np.zeros((n, n), dtype=bool)
    A[:a, :a] = True
    A[a:, a:] = True
    cross = rng.random((a, n - a)) < p_cross
    A[:a, a:] = cross
    A[a:, :a] = cross.T
    np.fill_diagonal(A, False)
    _raise_degrees(A, np.full(n, k - 1), rng.permutation(n), rng)
    return SimpleGraph.from_adjacency(A)


def generate_part(cfg: GeneratorConfig, k: int, rng: np.random.Generator) -> SimpleGraph:
    n = cfg.part_size(k)
    if cfg.kind == "near-regular":
        return near_regular_graph(n, k, cfg.slack, rng)
    if cfg.kind == "threshold-heavy":
        return threshold_heavy_graph(n, k, cfg.slack, cfg.extra, rng)
    return two_clique_graph(n, k, cfg.p_cross, rng)


# -- trials ------------------------------------------------------------------


@dataclass(frozen=True)
class TrialStats:
    k: int
    n: int
    trial: int
    seed: int
    delta_H: int
    mu_H: int
    colors: int
    ell: int
    elapsed: float = field(compare=False)
    claim1_excess: float | None = None
    claim2_excess: float | None = None

    def __post_init__(self):
        if not self.delta_H >= self.mu_H >= 0:
            raise ValueError(f"Delta={self.delta_H}, mu={self.mu_H} violate Delta >= mu >= 0")
        cap = min(-(-3 * self.delta_H // 2), self.delta_H + self.mu_H)
        if self.colors > cap:
            raise ValueError(f"{self.colors} colours exceed min(ceil(3D/2), D+mu) = {cap}")

    @property
    def ratio_delta(self) -> float:
        return self.delta_H / self.k

    @property
    def ratio_mu(self) -> float:
        return self.mu_H / self.k

    @property
    def flagged(self) -> bool:
        return any(x is not None and x > 0 for x in (self.claim1_excess, self.claim2_excess))


def trial_seed(master_seed: int, k: int, trial: int) -> int:
    ss = np.random.SeedSequence([int(master_seed), int(k), int(trial)])
    return int(ss.generate_state(1, dtype=np.uint64)[0])


def _diagnostics(g: SimpleGraph, st, h) -> tuple[float | None, float | None]:
    """Largest raw excess over the expected-size bound on ``|U_w|`` and the
    concentration bound on ``deg_H(w)``, both without the lower-order slack."""
    k, d, ell = st.k, st.d, st.ell
    S = st.G_star.to_adjacency()
    W = np.array(st.W, dtype=np.int64)
    if W.size == 0:
        return None, None
    Uw = S[np.ix_(W, list(st.U))].sum(axis=1)
    lw = S[np.ix_(W, list(st.U_d))].sum(axis=1) if st.U_d else np.zeros(W.size, dtype=np.int64)
    if ell < k - st.phi_k:
        b1 = lw + (d - lw) * (k - ell) / (2 * k - ell - 1)
    else:
        b1 = lw + st.phi_k
    ex1 = float(np.max(Uw - b1))
    hdeg = np.array([h.degree(i) for i in range(len(W))])
    denom = d - 1 - Uw
    mask = (hdeg > k / 4) & (denom > 0)
    if not mask.any():
        return ex1, None
    b2 = Uw[mask] - lw[mask] * (d - 1 - k) / denom[mask]
    return ex1, float(np.max(hdeg[mask] - b2))


def run_trial(cfg: GeneratorConfig, k: int, trial: int, master_seed: int) -> TrialStats:
    seed = trial_seed(master_seed, k, trial)
    rng = np.random.default_rng(seed)
    g = generate_part(cfg, k, rng)
    t0 = time.perf_counter()
    st = semirandom_split(g, k, rng, SemiRandomConfig(rewire_scope=cfg.rewire_scope))
    h = build_H(st.as_split())
    col = edge_color(h)
    elapsed = time.perf_counter() - t0
    if not verify_proper(h, col):
        raise AssertionError(f"improper colouring in trial k={k}, j={trial}")
    if h.max_degree > k:
        raise AssertionError(f"Delta(H)={h.max_degree} > k={k} in trial k={k}, j={trial}")
    ex1, ex2 = _diagnostics(g, st, h) if cfg.diagnostics else (None, None)
    return TrialStats(k, g.vertex_count, trial, seed, h.max_degree, h.max_multiplicity,
                      col.colors_used, st.ell, elapsed, ex1, ex2)


def _run_task(args) -> TrialStats:
    return run_trial(*args)


def run_trials(generator_config: GeneratorConfig | dict, k_list, trials_per_k: int,
               master_seed: int, jobs: int = 1) -> list[TrialStats]:
    cfg = (generator_config if isinstance(generator_config, GeneratorConfig)
           else GeneratorConfig.from_dict(generator_config))
    ks = sorted(set(int(k) for k in k_list))
    if any(k < 2 or k > MAX_K for k in ks):
        raise ValueError(f"k values must lie in [2, {MAX_K}]")
    tasks = [(cfg, k, j, master_seed) for k in ks for j in range(trials_per_k)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_run_task, tasks))
    else:
        rows = [_run_task(t) for t in tasks]
    return sorted(rows, key=lambda r: (r.k, r.trial))


def _fmt(x: float | None) -> str:
    return "" if x is None else f"{x:.6f}"


def trials_to_csv(rows: list[TrialStats], diagnostics: bool = False,
                  record_timing: bool = False) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER + (DIAGNOSTIC_HEADER if diagnostics else ()))
    for r in rows:
        line = [r.k, r.n, r.seed, r.delta_H, r.mu_H, r.colors, r.ell,
                _fmt(r.ratio_delta), _fmt(r.ratio_mu),
                f"{r.elapsed * 1000:.3f}" if record_timing else ""]
        if diagnostics:
            line += [_fmt(r.claim1_excess), _fmt(r.claim2_excess), int(r.flagged)]
        w.writerow(line)
    return buf.getvalue()


def median_ratios(rows: list[TrialStats]) -> dict[int, dict[str, float]]:
    out = {}
    for k in sorted({r.k for r in rows}):
        rs = [r for r in rows if r.k == k]
        out[k] = {"median_ratio_delta": median(r.ratio_delta for r in rs),
                  "median_ratio_mu": median(r.ratio_mu for r in rs),
                  "trials": len(rs)}
    return out


def plot_ratios(rows: list[TrialStats], path) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    summary = median_ratios(rows)
    ks = list(summary)
    fig, ax = plt.subplots(figsize=(5, 3.5))
    ax.scatter([r.k for r in rows], [r.ratio_delta for r in rows], s=8, alpha=0.4, label="Delta(H)/k")
    ax.plot(ks, [summary[k]["median_ratio_delta"] for k in ks], "o-", label="median Delta(H)/k")
    ax.plot(ks, [summary[k]["median_ratio_mu"] for k in ks], "s--", label="median mu(H)/k")
    ax.axhline(9 / 16, color="grey", lw=0.8, ls=":")
    ax.set_xlabel("k")
    ax.set_ylabel("ratio")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


# -- degree-bound maximisation (claim3_*) ----------------------------------

_TOL = 1e-12


@dataclass(frozen=True)
class Claim3Instance:
    alpha: float
    beta: float
    gamma: float
    delta: float

    def __post_init__(self):
        a, b, g, d = self.alpha, self.beta, self.gamma, self.delta
        if not (-_TOL <= a <= b + _TOL and b <= 1 + _TOL):
            raise ValueError(f"need 0 <= alpha <= beta <= 1, got alpha={a}, beta={b}")
        if not -_TOL <= g <= gamma_max(a, b, d) + 1e-9:
            raise ValueError(f"gamma={g} outside [0, {gamma_max(a, b, d)}]")

    @property
    def eta(self) -> float:
        return 1 - (1 - self.beta) / (2 - self.beta)

    @property
    def value(self) -> float:
        return float(claim3_objective(self.alpha, self.gamma, self.delta))

    def to_dict(self) -> dict:
        return dict(asdict(self), eta=self.eta, value=self.value)


def gamma_max(alpha, beta, delta):
    return alpha + (delta - alpha) * (1 - beta) / (2 - beta)


def claim3_objective(alpha, gamma, delta):
    return gamma - alpha * (delta - 1) / (delta - gamma)


@dataclass
class Claim3Result:
    value: float
    argmax: Claim3Instance
    case: str
    cases: dict[str, dict]
    grid_value: float
    grid_argmax: Claim3Instance
    tolerance: float

    @property
    def agrees(self) -> bool:
        return self.grid_value <= self.value + 1e-9 and self.value - self.grid_value <= self.tolerance

    def to_dict(self) -> dict:
        return {"value": self.value, "case": self.case, "argmax": self.argmax.to_dict(),
                "cases": self.cases, "grid_value": self.grid_value,
                "grid_argmax": self.grid_argmax.to_dict(), "tolerance": self.tolerance,
                "agrees": self.agrees}


def _on_face(alpha: float, eta: float, delta: float) -> Claim3Instance:
    beta = 2 - 1 / eta
    return Claim3Instance(alpha, beta, eta * alpha + (1 - eta) * delta, delta)


def _face_value(alpha: float, eta: float, delta: float) -> float:
    return float(claim3_objective(alpha, eta * alpha + (1 - eta) * delta, delta))


def _maximize(fun, lo: float, hi: float) -> float:
    """argmax of a one-variable function on [lo, hi], endpoints included."""
    if hi - lo <= 0:
        return lo
    res = minimize_scalar(lambda x: -fun(x), bounds=(lo, hi), method="bounded",
                          options={"xatol": 1e-12})
    return max((lo, hi, float(res.x)), key=fun)


def claim3_analytic(delta: float) -> dict[str, dict]:
    """Case values of the constrained maximum.

    ``alpha = 0`` leaves ``gamma <= delta (1-beta)/(2-beta)``, best at ``beta = 0``.
    Otherwise ``gamma`` sits on its upper constraint; with ``eta = 1/(2-beta)``
    the objective is concave in ``alpha`` with stationary point
    ``alpha* = delta - sqrt(delta (delta-1)) / eta``, which is feasible
    (``alpha* <= beta``) iff ``eta >= eta0 = (1 - sqrt(delta (delta-1))) / (2 - delta)``.
    Below ``eta0`` the maximum is on ``alpha = beta = 2 - 1/eta``.
    """
    s = math.sqrt(delta * (delta - 1))
    cases = {"1": {"value": delta / 2, "argmax": Claim3Instance(0.0, 0.0, delta / 2, delta)}}
    eta0 = (1 - s) / (2 - delta) if delta < 2 else math.inf
    lo_a = max(0.5, eta0, s / delta)
    if lo_a <= 1:
        f = lambda e: _face_value(delta - s / e, e, delta)
        e = _maximize(f, lo_a, 1.0)
        cases["2a"] = {"value": f(e), "eta": e, "argmax": _on_face(delta - s / e, e, delta)}
    hi_b = min(1.0, eta0)
    if hi_b >= 0.5:
        f = lambda e: _face_value(2 - 1 / e, e, delta)
        e = _maximize(f, 0.5, hi_b)
        cases["2b"] = {"value": f(e), "eta": e, "argmax": _on_face(2 - 1 / e, e, delta)}
    # for delta near 1 or >= 2 alpha* can go negative: the face at alpha = 0 is case 1 territory
    if lo_a > max(0.5, eta0) and lo_a <= 1:
        f = lambda e: _face_value(0.0, e, delta)
        e = _maximize(f, max(0.5, eta0), lo_a)
        cases["2c"] = {"value": f(e), "eta": e, "argmax": _on_face(0.0, e, delta)}
    return cases


def claim3_grid(delta: float, resolution: float) -> tuple[float, Claim3Instance, float]:
    """(max, argmax, gradient bound) over a grid in ``beta``, ``alpha/beta`` and
    ``gamma/gamma_max``, each sampled with step ``resolution``."""
    m = int(math.ceil(1 / resolution)) + 1
    t = np.linspace(0.0, 1.0, m)
    B, S, T = np.meshgrid(t, t, t, indexing="ij")
    A = S * B
    G = T * gamma_max(A, B, delta)
    F = claim3_objective(A, G, delta)
    idx = np.unravel_index(int(np.argmax(F)), F.shape)
    step = t[1] - t[0]
    grads = np.gradient(F, step)
    L = float(max(np.max(np.abs(g)) for g in grads))
    inst = Claim3Instance(float(A[idx]), float(B[idx]), float(G[idx]), delta)
    return float(F[idx]), inst, L


def maximize_claim3(delta: float = 9 / 8, resolution: float = 0.01) -> Claim3Result:
    if not delta > 1:
        raise ValueError(f"delta must exceed 1, got {delta}")
    if not resolution > 0:
        raise ValueError("resolution must be positive")
    cases = claim3_analytic(delta)
    best = max(cases, key=lambda c: cases[c]["value"])
    gv, ginst, L = claim3_grid(delta, resolution)
    report = {c: {key: (v.to_dict() if isinstance(v, Claim3Instance) else v)
                  for key, v in info.items()} for c, info in cases.items()}
    return Claim3Result(cases[best]["value"], cases[best]["argmax"], best, report,
                        gv, ginst, 2 * resolution * L)
