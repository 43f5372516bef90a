"""Decision-error losses for predict-then-optimize models.

The base loss is the excess cost of acting on a predicted cost vector:
``c @ (w*(c_hat) - w*(c))``.  The margin variants penalize predictions
whose dual norm falls below a confidence threshold ``gamma`` by
interpolating toward (or jumping to) the worst-case gap ``omega_S(c)``.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass

import numpy as np

from .geometry import FeasibleRegion, dual_norm, dual_norm_rows


@dataclass(frozen=True)
class MarginParams:
    """Margin threshold(s) and the norm whose dual measures predictions.

    ``gamma`` must be positive for the interpolated margin loss; the hard
    margin loss additionally accepts ``gamma = 0`` (the threshold then
    never binds for nonzero predictions).  ``gamma_bar`` is the cap used
    by uniform-over-gamma bounds and defaults to ``gamma``.
    """

    gamma: float
    gamma_bar: float | None = None
    norm_q: float = 2.0

    def __post_init__(self):
        if not (math.isfinite(self.gamma) and self.gamma >= 0):
            raise ValueError("gamma must be finite and >= 0")
        if self.gamma_bar is not None and self.gamma_bar < self.gamma:
            raise ValueError("gamma_bar must be >= gamma")
        if self.norm_q < 1:
            raise ValueError("norm_q must be >= 1")

    @property
    def effective_gamma_bar(self) -> float:
        return self.gamma if self.gamma_bar is None else self.gamma_bar


@dataclass(eq=False)
class LabeledSample:
    """n observations of (feature vector, realized cost vector)."""

    xs: np.ndarray
    cs: np.ndarray

    def __post_init__(self):
        self.xs = np.asarray(self.xs, dtype=float)
        self.cs = np.asarray(self.cs, dtype=float)
        if self.xs.ndim != 2 or self.cs.ndim != 2:
            raise ValueError("xs and cs must be 2-D arrays")
        if self.xs.shape[0] != self.cs.shape[0]:
            raise ValueError("xs and cs must have the same number of rows")
        if self.xs.shape[0] < 1:
            raise ValueError("sample must contain at least one observation")
        if not (np.all(np.isfinite(self.xs)) and np.all(np.isfinite(self.cs))):
            raise ValueError("sample entries must be finite")

    @property
    def n(self) -> int:
        return self.xs.shape[0]

    @property
    def p(self) -> int:
        return self.xs.shape[1]

    @property
    def d(self) -> int:
        return self.cs.shape[1]

    # -- serialization: one row per observation, x components then c components
    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([f"x{j}" for j in range(self.p)] + [f"c{j}" for j in range(self.d)])
        for x, c in zip(self.xs, self.cs):
            writer.writerow([repr(float(v)) for v in x] + [repr(float(v)) for v in c])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "LabeledSample":
        rows = list(csv.reader(io.StringIO(text)))
        if len(rows) < 2:
            raise ValueError("csv must contain a header and at least one row")
        header = rows[0]
        p = sum(1 for name in header if name.startswith("x"))
        d = len(header) - p
        if p < 1 or d < 1:
            raise ValueError("csv header must list x columns then c columns")
        data = np.array([[float(v) for v in row] for row in rows[1:]])
        return cls(xs=data[:, :p], cs=data[:, p:])

    def to_json(self) -> str:
        return json.dumps({"xs": self.xs.tolist(), "cs": self.cs.tolist()})

    @classmethod
    def from_json(cls, text: str) -> "LabeledSample":
        data = json.loads(text)
        return cls(xs=np.asarray(data["xs"]), cs=np.asarray(data["cs"]))


# ---------------------------------------------------------------------------
# pointwise losses
# ---------------------------------------------------------------------------

def spo_loss(region: FeasibleRegion, c_hat, c) -> float:
    """Excess cost of deciding with ``c_hat`` when the true cost is ``c``."""
    c = region._check_cost(c)
    w_hat = region.linopt(c_hat)
    w_opt = region.linopt(c)
    return float(c @ (w_hat - w_opt))


def spo_loss_batch(region: FeasibleRegion, C_hat, C) -> np.ndarray:
    C = region._check_cost_batch(C)
    W_hat = region.linopt_batch(C_hat)
    W_opt = region.linopt_batch(C)
    return ((W_hat - W_opt) * C).sum(axis=1)


def margin_spo_loss(region: FeasibleRegion, c_hat, c, params: MarginParams) -> float:
    """Margin loss: equals the base loss when the prediction's dual norm
    exceeds ``gamma``, else interpolates between it and the gap
    ``omega_S(c)`` with weight ``||c_hat||_* / gamma``."""
    if params.gamma <= 0:
        raise ValueError("margin loss requires gamma > 0")
    c_hat = region._check_cost(c_hat)
    base = spo_loss(region, c_hat, c)
    weight = min(dual_norm(c_hat, params.norm_q) / params.gamma, 1.0)
    if weight >= 1.0:
        return base
    return weight * base + (1.0 - weight) * region.gap(c)


def margin_spo_loss_batch(region: FeasibleRegion, C_hat, C,
                          params: MarginParams) -> np.ndarray:
    if params.gamma <= 0:
        raise ValueError("margin loss requires gamma > 0")
    C_hat = region._check_cost_batch(C_hat)
    base = spo_loss_batch(region, C_hat, C)
    weight = np.minimum(dual_norm_rows(C_hat, params.norm_q) / params.gamma, 1.0)
    return weight * base + (1.0 - weight) * region.gap_batch(C)


def hard_margin_spo_loss(region: FeasibleRegion, c_hat, c, params: MarginParams) -> float:
    """Hard margin loss: the gap ``omega_S(c)`` whenever the prediction's
    dual norm is at most ``gamma``, else the base loss."""
    c_hat = region._check_cost(c_hat)
    if dual_norm(c_hat, params.norm_q) > params.gamma:
        return spo_loss(region, c_hat, c)
    return region.gap(c)


def hard_margin_spo_loss_batch(region: FeasibleRegion, C_hat, C,
                               params: MarginParams) -> np.ndarray:
    C_hat = region._check_cost_batch(C_hat)
    above = dual_norm_rows(C_hat, params.norm_q) > params.gamma
    return np.where(above, spo_loss_batch(region, C_hat, C), region.gap_batch(C))


# ---------------------------------------------------------------------------
# empirical risk
# ---------------------------------------------------------------------------

def predict_batch(predictor, xs: np.ndarray) -> np.ndarray:
    """Evaluate a predictor (a d x p matrix or a callable) on feature rows."""
    xs = np.asarray(xs, dtype=float)
    if callable(predictor):
        return np.stack([np.asarray(predictor(x), dtype=float) for x in xs])
    B = np.asarray(predictor, dtype=float)
    if B.ndim != 2 or B.shape[1] != xs.shape[1]:
        raise ValueError(f"predictor matrix has shape {B.shape}, expected (d, {xs.shape[1]})")
    return xs @ B.T


def empirical_risk(region: FeasibleRegion, predictor, sample: LabeledSample,
                   kind: str = "spo", params: MarginParams | None = None) -> float:
    """Mean loss of the predictor over the sample.

    ``kind`` is one of ``"spo"``, ``"margin"`` or ``"hard"``; the margin
    kinds require ``params``.
    """
    preds = predict_batch(predictor, sample.xs)
    if kind == "spo":
        losses = spo_loss_batch(region, preds, sample.cs)
    elif kind == "margin":
        if params is None:
            raise ValueError("margin risk requires MarginParams")
        losses = margin_spo_loss_batch(region, preds, sample.cs, params)
    elif kind == "hard":
        if params is None:
            raise ValueError("hard-margin risk requires MarginParams")
        losses = hard_margin_spo_loss_batch(region, preds, sample.cs, params)
    else:
        raise ValueError(f"unknown loss kind: {kind!r}")
    return float(losses.mean())
