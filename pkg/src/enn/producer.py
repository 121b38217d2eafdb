"""Closed-form Cobb-Douglas producer math and its artificial-neuron form.

A price-taking producer with a decreasing-returns Cobb-Douglas technology,
facing the inverse demand curve 1/(1+Y), has a closed-form profit maximum.
Expressed in logs, the price of her output is an affine map of the log
prices of her inputs pushed through a reflected-softplus activation, i.e.
exactly a standard artificial neuron.  This module implements both views
and the conversion between them.

All functions are pure; parameter objects are immutable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "ALPHA_FLOOR",
    "PHI_MARGIN",
    "ProducerParams",
    "NeuronCoeffs",
    "softplus",
    "activation",
    "inverse_demand",
    "inverse_demand_inverse",
    "optimal_input_bundle",
    "log_output_from_prices",
    "output_from_prices",
    "profit",
    "to_neuron",
    "neuron_forward",
    "output_gradient_wrt_exponents",
]

# Exponents at or below this floor make the first-order conditions
# numerically meaningless; construction rejects them.
ALPHA_FLOOR = 1e-12
# Exponent sums this close to 1 (or above) break decreasing returns to
# scale, and with it the closed-form profit maximum.
PHI_MARGIN = 1e-9


def softplus(x: float) -> float:
    """ln(1 + e^x), numerically stable on both tails.

    For x > 0 uses the identity ln(1+e^x) = x + ln(1+e^-x) so that large
    arguments neither overflow nor lose precision.
    """
    if x > 0.0:
        return x + math.log1p(math.exp(-x))
    return math.log1p(math.exp(x))


def activation(x: float) -> float:
    """Reflected softplus -ln(1 + e^x): strictly decreasing, always < 0."""
    return -softplus(x)


def inverse_demand(quantity: float) -> float:
    """Unit price 1/(1+Y) fetched by output quantity Y.

    The curve has a fixed maximum price of 1 at Y = 0, decreases strictly,
    and approaches zero asymptotically.
    """
    if not quantity >= 0.0:
        raise ValueError(f"quantity must be >= 0, got {quantity}")
    return 1.0 / (1.0 + quantity)


def inverse_demand_inverse(price: float) -> float:
    """Quantity at which the demand curve yields `price`.

    Prices above the curve's maximum of 1 are mapped to quantity 0.
    """
    if not price > 0.0:
        raise ValueError(f"price must be > 0, got {price}")
    return max(0.0, 1.0 / price - 1.0)


@dataclass(frozen=True, eq=False)
class ProducerParams:
    """One Cobb-Douglas producer: Y = A * prod_m x_m ** alpha_m.

    Attributes:
        A: technology scalar, > 0.
        alpha: exponent per input good; every entry > 0 and the sum Phi
            strictly below 1 (decreasing returns to scale).
        P: the output price the producer anticipates at decision time, > 0.
    """

    A: float
    alpha: np.ndarray
    P: float

    def __post_init__(self) -> None:
        alpha = np.atleast_1d(np.asarray(self.alpha, dtype=float)).copy()
        if alpha.ndim != 1 or alpha.size == 0:
            raise ValueError("alpha must be a nonempty 1-D vector")
        if not np.all(np.isfinite(alpha)) or np.any(alpha <= ALPHA_FLOOR):
            raise ValueError(f"every exponent must exceed {ALPHA_FLOOR}, got {alpha}")
        if float(alpha.sum()) >= 1.0 - PHI_MARGIN:
            raise ValueError(
                f"exponent sum {alpha.sum()} violates decreasing returns to scale"
            )
        if not (math.isfinite(self.A) and self.A > 0.0):
            raise ValueError(f"technology A must be positive and finite, got {self.A}")
        if not (math.isfinite(self.P) and self.P > 0.0):
            raise ValueError(f"anticipated price must be positive and finite, got {self.P}")
        alpha.setflags(write=False)
        object.__setattr__(self, "alpha", alpha)

    @property
    def Phi(self) -> float:
        """Sum of the exponents; < 1 by construction."""
        return float(self.alpha.sum())

    @property
    def eta(self) -> float:
        """Exponent sum less the first exponent."""
        return self.Phi - float(self.alpha[0])

    @property
    def n_inputs(self) -> int:
        return int(self.alpha.size)


@dataclass(frozen=True, eq=False)
class NeuronCoeffs:
    """The producer in neuron form: output = activation(omega . l + z).

    `omega` weights the vector of log input prices, `z` is the bias.
    Coefficients derived from a valid ProducerParams are strictly negative.
    """

    omega: np.ndarray
    z: float

    def __post_init__(self) -> None:
        omega = np.atleast_1d(np.asarray(self.omega, dtype=float)).copy()
        if omega.ndim != 1 or omega.size == 0:
            raise ValueError("omega must be a nonempty 1-D vector")
        if not np.all(np.isfinite(omega)) or not math.isfinite(self.z):
            raise ValueError("neuron coefficients must be finite")
        omega.setflags(write=False)
        object.__setattr__(self, "omega", omega)


def _validated_log_prices(params: ProducerParams, prices) -> np.ndarray:
    p = np.atleast_1d(np.asarray(prices, dtype=float))
    if p.shape != (params.n_inputs,):
        raise ValueError(
            f"expected {params.n_inputs} prices, got shape {p.shape}"
        )
    if not np.all(np.isfinite(p)) or np.any(p <= 0.0):
        raise ValueError(f"prices must be positive and finite, got {p}")
    return np.log(p)


def optimal_input_bundle(params: ProducerParams, prices) -> np.ndarray:
    """Profit-maximizing input quantities at the given input prices.

    Solves the first-order conditions in closed form: the first input
    quantity follows from the producer's technology and anticipated price,
    and every other quantity is proportional to it through the price and
    exponent ratios.  Computed in logs to stay stable for extreme
    parameters.
    """
    lnp = _validated_log_prices(params, prices)
    lna = np.log(params.alpha)
    phi = params.Phi
    denom = phi - 1.0
    s = float(params.alpha @ (lnp - lna))
    ln_x1 = (
        -(math.log(params.P) + math.log(params.A))
        + s
        + (1.0 - phi) * (lnp[0] - lna[0])
    ) / denom
    ln_x = ln_x1 + (lnp[0] - lnp) + (lna - lna[0])
    return np.exp(ln_x)


def log_output_from_prices(params: ProducerParams, prices) -> float:
    """ln of the profit-maximizing output, as a function of prices alone."""
    lnp = _validated_log_prices(params, prices)
    lna = np.log(params.alpha)
    s = float(params.alpha @ (lnp - lna))
    return (s - params.Phi * math.log(params.P) - math.log(params.A)) / (params.Phi - 1.0)


def output_from_prices(params: ProducerParams, prices) -> float:
    """Profit-maximizing output quantity at the given input prices."""
    return math.exp(log_output_from_prices(params, prices))


def profit(params: ProducerParams, prices, x, realized_price: float) -> float:
    """Revenue minus input cost: realized_price * A prod(x^alpha) - p . x.

    `x` need not be optimal; the function evaluates any feasible bundle.
    """
    xv = np.atleast_1d(np.asarray(x, dtype=float))
    pv = np.atleast_1d(np.asarray(prices, dtype=float))
    if xv.shape != (params.n_inputs,) or pv.shape != (params.n_inputs,):
        raise ValueError("prices and quantities must match the exponent count")
    if np.any(xv < 0.0):
        raise ValueError(f"input quantities must be >= 0, got {xv}")
    if np.all(xv > 0.0):
        output = math.exp(math.log(params.A) + float(params.alpha @ np.log(xv)))
    else:
        output = 0.0
    return realized_price * output - float(pv @ xv)


def to_neuron(params: ProducerParams) -> NeuronCoeffs:
    """Exact neuron coefficients of the producer.

    omega_m = alpha_m / (Phi - 1) and
    z = (Phi ln P + ln A + sum_m alpha_m ln alpha_m) / (1 - Phi).
    Every weight is strictly negative because 0 < alpha and Phi < 1.
    """
    phi = params.Phi
    omega = params.alpha / (phi - 1.0)
    z = (
        phi * math.log(params.P)
        + math.log(params.A)
        + float(params.alpha @ np.log(params.alpha))
    ) / (1.0 - phi)
    return NeuronCoeffs(omega=omega, z=z)


def neuron_forward(coeffs: NeuronCoeffs, log_prices) -> float:
    """Log output price: activation(log_prices . omega + z).

    Agrees with ln(inverse_demand(output_from_prices(...))) whenever the
    coefficients came from `to_neuron` of the same producer and
    `log_prices` is the elementwise log of the same input prices.
    """
    l = np.atleast_1d(np.asarray(log_prices, dtype=float))
    if l.shape != coeffs.omega.shape:
        raise ValueError(
            f"expected {coeffs.omega.size} log prices, got shape {l.shape}"
        )
    if not np.all(np.isfinite(l)):
        raise ValueError(f"log prices must be finite, got {l}")
    return activation(float(l @ coeffs.omega) + coeffs.z)


def output_gradient_wrt_exponents(output: float, x) -> np.ndarray:
    """Partial derivatives of output with respect to each exponent.

    Holds the realized input quantities fixed, so dY/dalpha_i = Y ln x_i.
    """
    xv = np.atleast_1d(np.asarray(x, dtype=float))
    if not output > 0.0:
        raise ValueError(f"output must be > 0, got {output}")
    if np.any(xv <= 0.0) or not np.all(np.isfinite(xv)):
        raise ValueError(f"input quantities must be positive and finite, got {xv}")
    return output * np.log(xv)
