"""Experiment driver: synthetic data, least-squares baseline, Monte-Carlo
risk estimation, bound-validity trials, and Lipschitz audits.

The data generator (features on the unit sphere or standard Gaussian,
costs linear in the features plus Gaussian noise, projected into the
declared cost domain) is an artifact choice: it exists so the bounds have
a concrete distribution to be tested against, and reports label it as
such.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ._rng import substream
from .bounds import (BoundInputs, bound_covering, bound_linear_polyhedral,
                     bound_margin, bound_margin_uniform)
from .geometry import (CostDomain, DagPathPolytope, FeasibleRegion, LqBall,
                       UnitSimplex, VertexPolytope, dual_norm_rows,
                       region_from_dict, vector_norm_rows)
from .losses import (LabeledSample, MarginParams, empirical_risk,
                     margin_spo_loss_batch, predict_batch, spo_loss_batch)

GENERATOR_NOTE = "gaussian-linear synthetic generator (artifact choice; not prescribed by the theory)"

_STREAM_SAMPLE = 1
_STREAM_RISK = 2
_STREAM_AUDIT = 3


@dataclass(eq=False)
class ExperimentConfig:
    """Inputs for one experiment: region, cost domain, true model, and sizes."""

    region: FeasibleRegion
    cost_domain: CostDomain
    b_star: np.ndarray
    noise: float = 0.0
    feature_dist: str = "sphere"  # sphere | gaussian
    ns: list[int] = field(default_factory=lambda: [100])
    trials: int = 1
    delta: float = 0.05
    gamma_grid: list[float] = field(default_factory=list)
    beta: float | None = None
    m_fresh: int = 100_000
    seed: int = 0

    def __post_init__(self):
        self.b_star = np.asarray(self.b_star, dtype=float)
        if self.b_star.ndim != 2 or self.b_star.shape[0] != self.region.dim:
            raise ValueError(f"b_star must have shape ({self.region.dim}, p)")
        if not np.all(np.isfinite(self.b_star)):
            raise ValueError("b_star must be finite")
        if self.noise < 0:
            raise ValueError("noise must be >= 0")
        if self.feature_dist not in ("sphere", "gaussian"):
            raise ValueError(f"unknown feature distribution: {self.feature_dist!r}")
        if isinstance(self.ns, int):
            self.ns = [self.ns]
        self.ns = [int(n) for n in self.ns]
        if not self.ns or any(n < 1 for n in self.ns):
            raise ValueError("ns must be positive sample sizes")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if not (0.0 < self.delta < 1.0):
            raise ValueError("delta must lie in (0, 1)")
        self.gamma_grid = [float(g) for g in self.gamma_grid]
        if any(g <= 0 for g in self.gamma_grid):
            raise ValueError("gamma grid must be positive")
        if any(a >= b for a, b in zip(self.gamma_grid, self.gamma_grid[1:])):
            raise ValueError("gamma grid must be strictly ascending")
        if self.m_fresh < 1:
            raise ValueError("m_fresh must be >= 1")
        if self.seed < 0:
            raise ValueError("seed must be non-negative")
        if self.beta is None:
            self.beta = 2.0 * float(np.linalg.norm(self.b_star)) + 1.0
        if self.beta <= 0:
            raise ValueError("beta must be positive")

    @property
    def d(self) -> int:
        return self.region.dim

    @property
    def p(self) -> int:
        return self.b_star.shape[1]

    @property
    def x_radius(self) -> float:
        """sup of the feature l2 norm; only bounded for sphere features."""
        if self.feature_dist == "sphere":
            return 1.0
        raise ValueError("gaussian features are unbounded; no finite x radius")

    @property
    def strongly_convex(self) -> bool:
        return self.region.mu is not None and self.region.mu > 0

    @property
    def polyhedral(self) -> bool:
        return isinstance(self.region, (VertexPolytope, UnitSimplex, DagPathPolytope))

    def to_dict(self) -> dict:
        return {
            "region": self.region.to_dict(),
            "cost_domain": self.cost_domain.to_dict(),
            "b_star": self.b_star.tolist(),
            "noise": self.noise,
            "feature_dist": self.feature_dist,
            "n": self.ns,
            "trials": self.trials,
            "delta": self.delta,
            "gamma_grid": self.gamma_grid,
            "beta": self.beta,
            "m_fresh": self.m_fresh,
            "seed": self.seed,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ExperimentConfig":
        region = region_from_dict(data["region"])
        return cls(
            region=region,
            cost_domain=CostDomain.from_dict(region, data["cost_domain"]),
            b_star=np.asarray(data["b_star"], dtype=float),
            noise=data.get("noise", 0.0),
            feature_dist=data.get("feature_dist", "sphere"),
            ns=data.get("n", [100]),
            trials=data.get("trials", 1),
            delta=data.get("delta", 0.05),
            gamma_grid=data.get("gamma_grid", []),
            beta=data.get("beta"),
            m_fresh=data.get("m_fresh", 100_000),
            seed=data.get("seed", 0),
        )


# ---------------------------------------------------------------------------
# data generation and fitting
# ---------------------------------------------------------------------------

def _draw_features(config: ExperimentConfig, rng: np.random.Generator,
                   n: int) -> np.ndarray:
    X = rng.standard_normal((n, config.p))
    if config.feature_dist == "sphere":
        norms = np.linalg.norm(X, axis=1)
        norms[norms == 0] = 1.0
        X /= norms[:, None]
    return X


def _draw_pairs(config: ExperimentConfig, rng: np.random.Generator,
                n: int) -> tuple[np.ndarray, np.ndarray]:
    X = _draw_features(config, rng, n)
    C = X @ config.b_star.T
    if config.noise > 0:
        C = C + config.noise * rng.standard_normal((n, config.d))
    return X, config.cost_domain.project(C)


def generate_sample(config: ExperimentConfig, trial_seed: int,
                    n: int | None = None) -> LabeledSample:
    """Draw a labeled sample; identical (config, trial_seed) gives identical
    bits.  Costs are projected into the declared cost domain so its radius
    and gap stay valid."""
    rng = substream(config.seed, _STREAM_SAMPLE, trial_seed)
    X, C = _draw_pairs(config, rng, config.ns[0] if n is None else n)
    return LabeledSample(xs=X, cs=C)


def fit_least_squares(sample: LabeledSample, ridge: float = 1e-8) -> np.ndarray:
    """Ridge-stabilized least-squares fit of ``c ~ B x``; returns B (d x p)."""
    X, C = sample.xs, sample.cs
    gram = X.T @ X + ridge * np.eye(sample.p)
    return np.linalg.solve(gram, X.T @ C).T


def clip_frobenius(B: np.ndarray, beta: float) -> np.ndarray:
    """Project a matrix onto the Frobenius ball of radius beta."""
    norm = float(np.linalg.norm(B))
    if norm <= beta:
        return B
    return B * (beta / norm)


def true_risk_mc(region: FeasibleRegion, predictor, config: ExperimentConfig,
                 m_fresh: int = 100_000, seed: int = 0) -> tuple[float, float]:
    """Fresh-sample Monte-Carlo estimate of the expected decision loss.

    Returns ``(estimate, std_error)``.
    """
    if m_fresh < 1:
        raise ValueError("m_fresh must be >= 1")
    rng = substream(config.seed, _STREAM_RISK, seed)
    X, C = _draw_pairs(config, rng, m_fresh)
    losses = spo_loss_batch(region, predict_batch(predictor, X), C)
    est = float(losses.mean())
    se = 0.0 if m_fresh < 2 else float(losses.std(ddof=1) / math.sqrt(m_fresh))
    return est, se


class RiskEvaluator:
    """One fresh evaluation sample shared by every trial of a run.

    The sample is independent of all training draws (separate stream), so
    each trial's estimate stays an unbiased fresh-sample MC estimate of its
    predictor's risk; sharing it just avoids regenerating and re-solving
    ``m_fresh`` points per trial.  The true-cost oracle decisions are
    precomputed once.
    """

    def __init__(self, config: ExperimentConfig):
        rng = substream(config.seed, _STREAM_RISK)
        self.region = config.region
        self.X, self.C = _draw_pairs(config, rng, config.m_fresh)
        opt = self.region.linopt_batch(self.C)
        self._opt_cost = (opt * self.C).sum(axis=1)

    def true_risk(self, predictor) -> tuple[float, float]:
        decisions = self.region.linopt_batch(predict_batch(predictor, self.X))
        losses = (decisions * self.C).sum(axis=1) - self._opt_cost
        m = losses.size
        est = float(losses.mean())
        se = 0.0 if m < 2 else float(losses.std(ddof=1) / math.sqrt(m))
        return est, se


# ---------------------------------------------------------------------------
# bound-validity experiment
# ---------------------------------------------------------------------------

@dataclass
class TrialRecord:
    """Per-trial risks, bound values, and violation flags."""

    trial: int
    n: int
    gamma_star: float | None
    emp_spo: float
    emp_margin: dict[float, float]
    true_risk: float
    true_risk_stderr: float
    bounds: dict[str, float]
    violations: dict[str, bool]


@dataclass
class BoundValidityResult:
    config: ExperimentConfig
    records: list[TrialRecord]
    summary: dict

    def columns(self) -> list[str]:
        cols = ["trial", "n", "gamma_star", "emp_spo"]
        cols += [f"emp_margin@{g!r}" for g in self.config.gamma_grid
                 if self.config.strongly_convex]
        cols += ["true_risk", "true_risk_stderr"]
        bound_ids = _bound_ids(self.config)
        cols += [f"bound@{b}" for b in bound_ids]
        cols += [f"violation@{b}" for b in bound_ids]
        return cols

    def trials_csv(self) -> str:
        lines = [",".join(self.columns())]
        for rec in self.records:
            row = [str(rec.trial), str(rec.n),
                   "" if rec.gamma_star is None else repr(rec.gamma_star),
                   repr(rec.emp_spo)]
            if self.config.strongly_convex:
                row += [repr(rec.emp_margin[g]) for g in self.config.gamma_grid]
            row += [repr(rec.true_risk), repr(rec.true_risk_stderr)]
            bound_ids = _bound_ids(self.config)
            row += [repr(rec.bounds[b]) for b in bound_ids]
            row += [str(int(rec.violations[b])) for b in bound_ids]
            lines.append(",".join(row))
        return "\n".join(lines) + "\n"

    def plot_frames(self) -> dict[str, list[tuple[int, float, float]]]:
        """Per bound id: rows of (n, mean bound value, mean true risk)."""
        frames: dict[str, list[tuple[int, float, float]]] = {}
        for bound_id in _bound_ids(self.config):
            rows = []
            for n in self.config.ns:
                recs = [r for r in self.records if r.n == n]
                rows.append((n,
                             float(np.mean([r.bounds[bound_id] for r in recs])),
                             float(np.mean([r.true_risk for r in recs]))))
            frames[bound_id] = rows
        return frames


def _bound_ids(config: ExperimentConfig) -> list[str]:
    ids: list[str] = []
    if config.polyhedral:
        ids.append("linear_polyhedral")
    ids.append("covering")
    if config.strongly_convex:
        ids += [f"margin@{g!r}" for g in config.gamma_grid]
        ids.append("margin_uniform")
    return ids


def _margin_risk(config: ExperimentConfig, predictor, sample: LabeledSample,
                 gamma: float) -> float:
    return empirical_risk(config.region, predictor, sample, "margin",
                          MarginParams(gamma=gamma))


def run_trial(config: ExperimentConfig, n: int, n_idx: int, trial: int,
              evaluator: RiskEvaluator | None = None) -> TrialRecord:
    region, domain = config.region, config.cost_domain
    trial_seed = n_idx * config.trials + trial
    sample = generate_sample(config, trial_seed, n=n)
    predictor = fit_least_squares(sample)
    if config.strongly_convex:
        predictor = clip_frobenius(predictor, config.beta)

    emp_spo = empirical_risk(region, predictor, sample, "spo")
    bounds_vals: dict[str, float] = {}
    common = dict(n=n, delta=config.delta, omega=domain.omega, rho2_C=domain.rho2,
                  d=config.d, p=config.p)
    if config.polyhedral:
        inputs = BoundInputs(empirical_risk=emp_spo, rho2_S=region.radius(2.0),
                             card_S=region.extreme_point_count(), **common)
        bounds_vals["linear_polyhedral"] = bound_linear_polyhedral(inputs).value
        bounds_vals["covering"] = bound_covering(inputs).value
    else:
        inputs = BoundInputs(empirical_risk=emp_spo, rho2_S=region.radius(2.0),
                             **common)
        bounds_vals["covering"] = bound_covering(inputs).value

    emp_margin: dict[float, float] = {}
    gamma_star = None
    if config.strongly_convex:
        # closed-form multivariate complexity bound for the clipped predictor
        rad = config.x_radius * config.beta * math.sqrt(2.0 * config.d / n)
        for g in config.gamma_grid:
            emp_margin[g] = _margin_risk(config, predictor, sample, g)
            inputs = BoundInputs(empirical_risk=emp_margin[g], mu=region.mu,
                                 gamma=g, rad=rad, **common)
            bounds_vals[f"margin@{g!r}"] = bound_margin(inputs, "expected").value
        # data-driven gamma via the uniform bound, capped at the largest
        # prediction norm seen in training
        preds = predict_batch(predictor, sample.xs)
        gamma_bar = max(float(np.linalg.norm(preds, axis=1).max()), 1e-12)
        candidates = [g for g in config.gamma_grid if g <= gamma_bar] or [gamma_bar]
        best_val, best_gamma = math.inf, candidates[0]
        for g in candidates:
            risk = emp_margin.get(g)
            if risk is None:
                risk = _margin_risk(config, predictor, sample, g)
            inputs = BoundInputs(empirical_risk=risk, mu=region.mu, gamma=g,
                                 gamma_bar=gamma_bar, rad=rad, **common)
            val = bound_margin_uniform(inputs, "expected").value
            if val < best_val:
                best_val, best_gamma = val, g
        bounds_vals["margin_uniform"] = best_val
        gamma_star = best_gamma

    if evaluator is None:
        true_est, true_se = true_risk_mc(region, predictor, config,
                                         config.m_fresh, trial_seed)
    else:
        true_est, true_se = evaluator.true_risk(predictor)
    violations = {key: bool(true_est - 3.0 * true_se > val)
                  for key, val in bounds_vals.items()}
    return TrialRecord(trial=trial, n=n, gamma_star=gamma_star, emp_spo=emp_spo,
                       emp_margin=emp_margin, true_risk=true_est,
                       true_risk_stderr=true_se, bounds=bounds_vals,
                       violations=violations)


def run_bound_validity(config: ExperimentConfig) -> BoundValidityResult:
    """Run the full trial grid and check every applicable bound against a
    fresh-sample estimate of the true risk (violation = estimate minus
    three standard errors still exceeds the bound)."""
    if config.strongly_convex:
        if not config.gamma_grid:
            raise ValueError("margin bounds need a gamma grid")
        config.x_radius  # raises for unbounded feature distributions
    evaluator = RiskEvaluator(config)
    records = []
    for n_idx, n in enumerate(config.ns):
        for t in range(config.trials):
            records.append(run_trial(config, n, n_idx, t, evaluator))

    bound_ids = _bound_ids(config)
    per_bound = {}
    for bound_id in bound_ids:
        count = sum(r.violations[bound_id] for r in records)
        per_bound[bound_id] = {
            "trials": len(records),
            "violations": count,
            "frequency": count / len(records),
            "min_bound": min(r.bounds[bound_id] for r in records),
            "max_true_risk": max(r.true_risk for r in records),
        }
    summary = {
        "config": config.to_dict(),
        "generator": GENERATOR_NOTE,
        "bounds": per_bound,
        "delta": config.delta,
        "total_trials": len(records),
        "any_violation": any(v["violations"] for v in per_bound.values()),
    }
    return BoundValidityResult(config=config, records=records, summary=summary)


# ---------------------------------------------------------------------------
# Lipschitz audits
# ---------------------------------------------------------------------------

@dataclass
class LipschitzAuditReport:
    """Worst observed ratios of each Lipschitz inequality's two sides."""

    gamma: float
    n_pairs: int
    max_ratio_oracle: float
    witness_ratio: float | None
    max_ratio_margin: float
    max_ratio_margin_sharp: float
    tol: float = 1e-7

    @property
    def ok(self) -> bool:
        limit = 1.0 + self.tol
        witness_ok = (self.witness_ratio is None
                      or abs(self.witness_ratio - 1.0) <= 1e-9)
        return (self.max_ratio_oracle <= limit and self.max_ratio_margin <= limit
                and self.max_ratio_margin_sharp <= limit and witness_ok)


def _log_uniform(rng: np.random.Generator, lo: float, hi: float, size: int) -> np.ndarray:
    return np.exp(rng.uniform(math.log(lo), math.log(hi), size))


def run_lipschitz_audit(config: ExperimentConfig,
                        n_pairs: int = 100_000) -> LipschitzAuditReport:
    """Sample cost-vector pairs on a strongly convex region and bound the
    observed ratio of both Lipschitz inequalities (oracle and margin loss)
    by 1 up to tolerance.  Degenerate pairs (zero difference) are skipped.
    """
    region = config.region
    if not config.strongly_convex:
        raise ValueError("lipschitz audit needs a region with mu > 0")
    if not config.gamma_grid:
        raise ValueError("lipschitz audit needs a gamma grid")
    gamma = config.gamma_grid[len(config.gamma_grid) // 2]
    mu = region.mu
    q = region.norm_exponent
    rng = substream(config.seed, _STREAM_AUDIT)
    d = region.dim

    def sample_costs(lo: float, hi: float) -> np.ndarray:
        G = rng.standard_normal((n_pairs, d))
        norms = np.linalg.norm(G, axis=1)
        norms[norms == 0] = 1.0
        return G / norms[:, None] * _log_uniform(rng, lo, hi, n_pairs)[:, None]

    # oracle: ||w*(c1) - w*(c2)|| * mu * min(||c1||*, ||c2||*) <= ||c1 - c2||*
    C1 = sample_costs(0.01, 10.0)
    C2 = sample_costs(0.01, 10.0)
    diff_star = dual_norm_rows(C1 - C2, q)
    keep = diff_star > 1e-12
    w_dist = vector_norm_rows(region.linopt_batch(C1) - region.linopt_batch(C2), q)
    min_star = np.minimum(dual_norm_rows(C1, q), dual_norm_rows(C2, q))
    ratio_oracle = (w_dist[keep] * mu * min_star[keep]) / diff_star[keep]
    max_ratio_oracle = float(ratio_oracle.max())

    witness_ratio = None
    if d >= 2 and q == 2.0:
        # c1 = e1, c2 = e2 attain the bound with equality on l2 balls
        e1, e2 = np.zeros(d), np.zeros(d)
        e1[0] = 1.0
        e2[1] = 1.0
        lhs = vector_norm_rows((region.linopt(e1) - region.linopt(e2))[None, :], q)[0]
        witness_ratio = float(lhs * mu * 1.0 / dual_norm_rows((e1 - e2)[None, :], q)[0])

    # margin loss: |l(c_hat1, c) - l(c_hat2, c)| <= L * ||c_hat1 - c_hat2||*
    CH1 = sample_costs(0.01 * gamma, 3.0 * gamma)
    CH2 = sample_costs(0.01 * gamma, 3.0 * gamma)
    C = sample_costs(0.1, 3.0)
    params = MarginParams(gamma=gamma, norm_q=q)
    lhs = np.abs(margin_spo_loss_batch(region, CH1, C, params)
                 - margin_spo_loss_batch(region, CH2, C, params))
    step = dual_norm_rows(CH1 - CH2, q)
    keep = step > 1e-12
    c_star = dual_norm_rows(C, q)
    lipschitz_5 = 5.0 * c_star / (gamma * mu)
    lipschitz_sharp = (c_star / mu + 2.0 * region.gap_batch(C)) / gamma
    max_ratio_margin = float((lhs[keep] / (lipschitz_5[keep] * step[keep])).max())
    max_ratio_sharp = float((lhs[keep] / (lipschitz_sharp[keep] * step[keep])).max())

    return LipschitzAuditReport(gamma=gamma, n_pairs=n_pairs,
                                max_ratio_oracle=max_ratio_oracle,
                                witness_ratio=witness_ratio,
                                max_ratio_margin=max_ratio_margin,
                                max_ratio_margin_sharp=max_ratio_sharp)


# ---------------------------------------------------------------------------
# default experiment suite
# ---------------------------------------------------------------------------

def default_suite(seed: int = 0, trials: int = 200,
                  m_fresh: int = 100_000) -> list[ExperimentConfig]:
    """The grid used by the acceptance experiment: l2-ball and simplex
    regions over d, p in {2, 5} and n in {50, 100, 400}."""
    configs = []
    for d in (2, 5):
        for p in (2, 5):
            rng = substream(seed, 17, d, p)
            b_star = rng.standard_normal((d, p))
            for kind in ("l2_ball", "simplex"):
                if kind == "l2_ball":
                    region: FeasibleRegion = LqBall(q=2.0, radius=1.0,
                                                    center=np.zeros(d), mu=1.0)
                    domain = CostDomain.ball(region, radius=1.0)
                    gamma_grid = [0.05, 0.1, 0.25, 0.5, 1.0]
                else:
                    region = UnitSimplex(d)
                    domain = CostDomain.ball(region, radius=1.0)
                    gamma_grid = []
                configs.append(ExperimentConfig(
                    region=region, cost_domain=domain, b_star=b_star,
                    noise=0.1, feature_dist="sphere", ns=[50, 100, 400],
                    trials=trials, delta=0.05, gamma_grid=gamma_grid,
                    beta=2.0 * float(np.linalg.norm(b_star)) + 1.0,
                    m_fresh=m_fresh, seed=seed))
    return configs


def config_label(config: ExperimentConfig) -> str:
    kind = {"LqBall": "l2_ball", "UnitSimplex": "simplex",
            "VertexPolytope": "polytope", "DagPathPolytope": "dag"}[config.region.kind]
    return f"{kind}_d{config.d}_p{config.p}"
