"""Closed-form generalization-bound calculators with per-term breakdowns.

Every calculator returns a :class:`BoundReport` whose ``value`` is the
exact sum of its named additive ``terms``.  Natural logarithms are used
throughout; base 2 appears only inside the uniform-margin uniformity
term.  When both a Monte-Carlo complexity estimate and a closed-form
complexity bound are available, callers should pass the closed form in
``rad`` (it is a valid upper bound; an MC estimate is advisory only).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, asdict, fields

VARIANTS = ("expected", "empirical")

THEOREM_IDS = (
    "rademacher",
    "natarajan",
    "linear_polyhedral",
    "covering",
    "margin",
    "margin_uniform",
)


@dataclass(frozen=True)
class BoundInputs:
    """Inputs shared by the bound calculators; leave unused ones as None."""

    n: int
    delta: float
    empirical_risk: float = 0.0
    omega: float | None = None
    rho2_C: float | None = None
    rho2_S: float | None = None
    mu: float | None = None
    gamma: float | None = None
    gamma_bar: float | None = None
    d_N: int | None = None
    card_S: int | None = None
    d: int | None = None
    p: int | None = None
    rad: float | None = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if not (0.0 < self.delta < 1.0):
            raise ValueError("delta must lie in (0, 1)")
        for name in ("empirical_risk", "omega", "rho2_C", "rho2_S", "rad"):
            val = getattr(self, name)
            if val is not None and (not math.isfinite(val) or val < 0):
                raise ValueError(f"{name} must be finite and >= 0")
        for name in ("mu", "gamma", "gamma_bar"):
            val = getattr(self, name)
            if val is not None and (not math.isfinite(val) or val <= 0):
                raise ValueError(f"{name} must be finite and > 0")
        if self.d_N is not None and self.d_N < 0:
            raise ValueError("d_N must be >= 0")
        for name in ("card_S", "d", "p"):
            val = getattr(self, name)
            if val is not None and val < 1:
                raise ValueError(f"{name} must be >= 1")

    def to_dict(self) -> dict:
        return {k: v for k, v in asdict(self).items() if v is not None}

    @classmethod
    def from_dict(cls, data: dict) -> "BoundInputs":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown bound inputs: {sorted(unknown)}")
        return cls(**data)

    def replace(self, **kwargs) -> "BoundInputs":
        merged = asdict(self)
        merged.update(kwargs)
        return BoundInputs(**merged)


@dataclass
class BoundReport:
    """A computed bound: its identifier, value, additive terms, and inputs."""

    theorem_id: str
    value: float
    terms: dict[str, float]
    inputs: dict

    def to_dict(self) -> dict:
        return {"theorem_id": self.theorem_id, "value": self.value,
                "terms": dict(self.terms), "inputs": dict(self.inputs)}


def _report(theorem_id: str, terms: dict[str, float], inputs: BoundInputs,
            variant: str | None = None) -> BoundReport:
    echo = inputs.to_dict()
    if variant is not None:
        echo["variant"] = variant
    for name, val in terms.items():
        if val < 0:
            raise ValueError(f"term {name!r} is negative: {val}")
    return BoundReport(theorem_id, math.fsum(terms.values()), terms, echo)


def _require(inputs: BoundInputs, *names: str) -> None:
    missing = [name for name in names if getattr(inputs, name) is None]
    if missing:
        raise ValueError(f"missing bound inputs: {missing}")


def _check_variant(variant: str) -> None:
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")


def _deviation(omega: float, delta: float, n: int, variant: str) -> float:
    """High-probability deviation term: one-sided for the expected-complexity
    variant, tripled two-sided for the empirical-complexity variant."""
    if variant == "expected":
        return omega * math.sqrt(math.log(1.0 / delta) / (2.0 * n))
    return 3.0 * omega * math.sqrt(math.log(2.0 / delta) / (2.0 * n))


# ---------------------------------------------------------------------------
# calculators
# ---------------------------------------------------------------------------

def bound_rademacher(inputs: BoundInputs, variant: str = "empirical") -> BoundReport:
    """Risk bound from a (supplied) Rademacher complexity of the loss class:
    ``R_hat + 2 * rad + deviation``."""
    _check_variant(variant)
    _require(inputs, "omega", "rad")
    terms = {
        "empirical_risk": inputs.empirical_risk,
        "complexity": 2.0 * inputs.rad,
        "deviation": _deviation(inputs.omega, inputs.delta, inputs.n, variant),
    }
    return _report("rademacher", terms, inputs, variant)


def bound_natarajan(inputs: BoundInputs) -> BoundReport:
    """Combinatorial bound for polyhedral regions:
    ``R_hat + 2 * omega * sqrt(2 * d_N * ln(n * |S|^2) / n) + omega * sqrt(ln(1/delta) / (2n))``."""
    _require(inputs, "omega", "d_N", "card_S")
    log_arg = inputs.n * inputs.card_S ** 2
    if log_arg <= 1:
        raise ValueError("n * card_S**2 must exceed 1")
    terms = {
        "empirical_risk": inputs.empirical_risk,
        "complexity": 2.0 * inputs.omega
        * math.sqrt(2.0 * inputs.d_N * math.log(log_arg) / inputs.n),
        "deviation": _deviation(inputs.omega, inputs.delta, inputs.n, "expected"),
    }
    return _report("natarajan", terms, inputs)


def bound_linear_polyhedral(inputs: BoundInputs) -> BoundReport:
    """Natarajan bound with the linear-class dimension cap ``d_N = d * p``."""
    _require(inputs, "d", "p")
    report = bound_natarajan(inputs.replace(d_N=inputs.d * inputs.p))
    report.theorem_id = "linear_polyhedral"
    return report


def bound_covering(inputs: BoundInputs) -> BoundReport:
    """Covering-argument bound for linear predictors over any compact convex
    region, including the explicit O(1/n) remainder."""
    _require(inputs, "omega", "rho2_C", "rho2_S", "d", "p")
    log_arg = 2.0 * inputs.n * inputs.rho2_S * inputs.d
    if log_arg <= 1:
        raise ValueError("2 * n * rho2_S * d must exceed 1")
    root = math.sqrt(2.0 * inputs.p * math.log(log_arg) / inputs.n)
    terms = {
        "empirical_risk": inputs.empirical_risk,
        "complexity": 4.0 * inputs.d * inputs.omega * root,
        "deviation": 3.0 * inputs.omega
        * math.sqrt(math.log(2.0 / inputs.delta) / (2.0 * inputs.n)),
        "remainder": 2.0 * (2.0 * inputs.rho2_C / inputs.n) * (1.0 + 2.0 * inputs.d * root),
    }
    return _report("covering", terms, inputs)


def margin_rad_bound(rho2_C: float, rad: float, gamma: float, mu: float) -> float:
    """Margin-loss Rademacher complexity from the multivariate complexity of
    the prediction class: ``5 * sqrt(2) * rho2_C * rad / (gamma * mu)``."""
    if gamma <= 0 or mu <= 0:
        raise ValueError("gamma and mu must be positive")
    if rho2_C < 0 or rad < 0:
        raise ValueError("rho2_C and rad must be >= 0")
    return 5.0 * math.sqrt(2.0) * rho2_C * rad / (gamma * mu)


def bound_margin(inputs: BoundInputs, variant: str = "empirical") -> BoundReport:
    """Margin bound for strongly convex regions:
    ``R_hat_gamma + 10 * sqrt(2) * rho2_C * rad / (gamma * mu) + deviation``."""
    _check_variant(variant)
    _require(inputs, "omega", "rho2_C", "mu", "gamma", "rad")
    terms = {
        "empirical_risk": inputs.empirical_risk,
        "complexity": 2.0 * margin_rad_bound(inputs.rho2_C, inputs.rad,
                                             inputs.gamma, inputs.mu),
        "deviation": _deviation(inputs.omega, inputs.delta, inputs.n, variant),
    }
    return _report("margin", terms, inputs, variant)


def bound_margin_uniform(inputs: BoundInputs, variant: str = "empirical") -> BoundReport:
    """Margin bound holding uniformly over gamma in (0, gamma_bar]; doubles
    the complexity factor and adds a ``ln(log2(2 gamma_bar / gamma))``
    uniformity term."""
    _check_variant(variant)
    _require(inputs, "omega", "rho2_C", "mu", "gamma", "gamma_bar", "rad")
    if inputs.gamma > inputs.gamma_bar:
        raise ValueError("gamma must satisfy gamma <= gamma_bar")
    uniformity = inputs.omega * math.sqrt(
        math.log(math.log2(2.0 * inputs.gamma_bar / inputs.gamma)) / inputs.n)
    if variant == "expected":
        deviation = inputs.omega * math.sqrt(
            math.log(2.0 / inputs.delta) / (2.0 * inputs.n))
    else:
        deviation = 3.0 * inputs.omega * math.sqrt(
            math.log(4.0 / inputs.delta) / (2.0 * inputs.n))
    terms = {
        "empirical_risk": inputs.empirical_risk,
        "complexity": 4.0 * margin_rad_bound(inputs.rho2_C, inputs.rad,
                                             inputs.gamma, inputs.mu),
        "uniformity": uniformity,
        "deviation": deviation,
    }
    return _report("margin_uniform", terms, inputs, variant)


def evaluate(theorem_id: str, inputs: BoundInputs,
             variant: str = "empirical") -> BoundReport:
    """Evaluate one bound by identifier."""
    if theorem_id == "rademacher":
        return bound_rademacher(inputs, variant)
    if theorem_id == "natarajan":
        return bound_natarajan(inputs)
    if theorem_id == "linear_polyhedral":
        return bound_linear_polyhedral(inputs)
    if theorem_id == "covering":
        return bound_covering(inputs)
    if theorem_id == "margin":
        return bound_margin(inputs, variant)
    if theorem_id == "margin_uniform":
        return bound_margin_uniform(inputs, variant)
    raise ValueError(f"unknown theorem id: {theorem_id!r}")


def evaluate_all(inputs: BoundInputs) -> list[BoundReport]:
    """Evaluate every bound whose inputs are present, both variants where
    applicable; bounds with missing inputs are skipped."""
    reports = []
    for theorem_id in THEOREM_IDS:
        for variant in VARIANTS:
            if variant == "expected" and theorem_id in ("natarajan", "linear_polyhedral",
                                                        "covering"):
                continue
            try:
                reports.append(evaluate(theorem_id, inputs, variant))
            except ValueError:
                continue
    return reports
