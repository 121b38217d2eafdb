"""Boolean gates built from producers, verified under calibrated thresholds.

A two-input producer can be parameterized so that its output log price
separates the four input rows like an AND gate.  A switching producer that
can make exactly one of two products behaves as a NOT gate: raising the
price of her first input flips which product she makes, and with it the
price of the second product.  Chaining the two yields a NAND gate.

Wire signals are continuous log prices.  Booleans are read off each wire
with a calibrated threshold because the numeric levels differ from wire to
wire; logical inputs are injected at the canonical levels ln p in {0, 1}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .producer import (
    NeuronCoeffs,
    ProducerParams,
    activation,
    neuron_forward,
    to_neuron,
)

__all__ = [
    "FALSE_LEVEL",
    "TRUE_LEVEL",
    "SwitchingProducer",
    "WireThreshold",
    "GateThresholds",
    "NandNetwork",
    "CalibrationError",
    "and_gate",
    "not_gate",
    "optimal_log_profit",
    "switching_forward",
    "build_nand_network",
    "calibrate_thresholds",
    "nand_network_forward",
    "nand_trace",
    "verify_gates",
    "GateReport",
]

# Canonical log-price levels used to inject logical values into a gate.
FALSE_LEVEL = 0.0
TRUE_LEVEL = 1.0


class CalibrationError(ValueError):
    """Raised when a wire's TRUE and FALSE signal clusters cannot be separated."""

    def __init__(self, message: str, true_values, false_values):
        super().__init__(f"{message}: true={list(true_values)} false={list(false_values)}")
        self.true_values = list(true_values)
        self.false_values = list(false_values)


@dataclass(frozen=True, eq=False)
class SwitchingProducer:
    """A producer able to make exactly one of two single-input products.

    She computes the optimal output of each product at its input price,
    produces only the more profitable one, and forgoes the other entirely,
    so in every evaluation one of the two outputs is zero.
    """

    product3: ProducerParams
    product4: ProducerParams
    coeffs3: NeuronCoeffs = field(init=False)
    coeffs4: NeuronCoeffs = field(init=False)

    def __post_init__(self) -> None:
        if self.product3.n_inputs != 1 or self.product4.n_inputs != 1:
            raise ValueError("switching producer products take a single input")
        object.__setattr__(self, "coeffs3", to_neuron(self.product3))
        object.__setattr__(self, "coeffs4", to_neuron(self.product4))


@dataclass(frozen=True)
class WireThreshold:
    """Boolean read-out rule for one wire.

    `threshold` lies strictly between the TRUE-side and FALSE-side signal
    clusters, `margin` is the gap between the closest points of the two
    clusters, and `true_above` records which side encodes TRUE.
    """

    threshold: float
    margin: float
    true_above: bool

    def decode(self, value: float) -> bool:
        return (value > self.threshold) == self.true_above


@dataclass(frozen=True)
class GateThresholds:
    and_wire: WireThreshold
    output_wire: WireThreshold


@dataclass
class NandNetwork:
    """AND producer feeding the switching producer's first input.

    `ln_p4` is the assumed-constant log price of the switching producer's
    second input (0 by default, i.e. unit price).  `thresholds` is None
    until `calibrate_thresholds` runs.
    """

    and_params: ProducerParams
    and_coeffs: NeuronCoeffs
    psi: SwitchingProducer
    ln_p4: float = 0.0
    thresholds: GateThresholds | None = None


def and_gate() -> tuple[ProducerParams, NeuronCoeffs]:
    """The two-input producer whose output wire realizes AND.

    alpha_1 = alpha_2 = 20/41 with unit anticipated price and technology
    chosen so the neuron form is omega = (-20, -20), z = 30.
    """
    a = 20.0 / 41.0
    alpha = np.array([a, a])
    params = ProducerParams(A=math.exp(30.0 / 41.0) / a ** float(alpha.sum()), alpha=alpha, P=1.0)
    return params, to_neuron(params)


def not_gate() -> SwitchingProducer:
    """The switching producer whose second output wire realizes NOT.

    Product 3: alpha = 1/2, A = 3.  Product 4: alpha = 1 - e^-10 with
    technology normalized so its neuron bias is exactly 10.  Both products
    have unit anticipated price.
    """
    product3 = ProducerParams(A=3.0, alpha=np.array([0.5]), P=1.0)
    a4 = 1.0 - math.exp(-10.0)
    A4 = 1.0 / ((1.0 - a4) ** (1.0 - a4) * a4 ** a4)
    product4 = ProducerParams(A=A4, alpha=np.array([a4]), P=1.0)
    return SwitchingProducer(product3=product3, product4=product4)


def optimal_log_profit(params: ProducerParams, ln_price: float) -> float:
    """ln of a single-input producer's maximized profit at input price e^ln_price.

    At the optimum, profit equals p * x * (1 - alpha) / alpha; kept in logs
    because the quantities explode as alpha approaches 1.
    """
    if params.n_inputs != 1:
        raise ValueError("closed-form log profit requires a single-input producer")
    a = float(params.alpha[0])
    ln_x = (math.log(params.P * params.A * a) - ln_price) / (1.0 - a)
    return ln_price + ln_x + math.log1p(-a) - math.log(a)


def switching_forward(
    psi: SwitchingProducer, ln_p3: float, ln_p4: float
) -> tuple[float, float]:
    """Output log prices (L3, L4) of the switching producer.

    Produces only the product with the greater optimal profit (ties go to
    product 3).  The produced product's log price follows its neuron; the
    other product is not made, so its price sits at the demand curve
    maximum of 1, i.e. log price exactly 0.
    """
    if not (math.isfinite(ln_p3) and math.isfinite(ln_p4)):
        raise ValueError("input log prices must be finite")
    ln_profit3 = optimal_log_profit(psi.product3, ln_p3)
    ln_profit4 = optimal_log_profit(psi.product4, ln_p4)
    if ln_profit3 >= ln_profit4:
        return neuron_forward(psi.coeffs3, [ln_p3]), 0.0
    return 0.0, neuron_forward(psi.coeffs4, [ln_p4])


def build_nand_network(ln_p4: float = 0.0) -> NandNetwork:
    params, coeffs = and_gate()
    return NandNetwork(and_params=params, and_coeffs=coeffs, psi=not_gate(), ln_p4=ln_p4)


_ROWS = ((False, False), (False, True), (True, False), (True, True))


def _encode(value: bool) -> float:
    return TRUE_LEVEL if value else FALSE_LEVEL


def _fit_wire(values, truths, min_margin: float) -> WireThreshold:
    true_vals = [v for v, t in zip(values, truths) if t]
    false_vals = [v for v, t in zip(values, truths) if not t]
    if not true_vals or not false_vals:
        raise CalibrationError("wire carries a single cluster", true_vals, false_vals)
    if min(true_vals) > max(false_vals):
        margin = min(true_vals) - max(false_vals)
        threshold = (min(true_vals) + max(false_vals)) / 2.0
        true_above = True
    elif max(true_vals) < min(false_vals):
        margin = min(false_vals) - max(true_vals)
        threshold = (max(true_vals) + min(false_vals)) / 2.0
        true_above = False
    else:
        raise CalibrationError("clusters overlap", true_vals, false_vals)
    if margin < min_margin:
        raise CalibrationError(
            f"cluster separation {margin:.3g} is below the required {min_margin:.3g}",
            true_vals,
            false_vals,
        )
    return WireThreshold(threshold=threshold, margin=margin, true_above=true_above)


def calibrate_thresholds(network: NandNetwork, min_margin: float = 1.0) -> GateThresholds:
    """Fit one threshold per wire from the four input rows.

    The AND wire is calibrated first from the AND producer's outputs; its
    threshold then drives the switching stage so the output wire can be
    calibrated in turn.  Each threshold sits at the midpoint of the gap
    between the wire's TRUE and FALSE clusters.  Raises CalibrationError,
    with the offending cluster values attached, if a wire's clusters are
    not separated by at least `min_margin`.
    """
    and_values = [
        neuron_forward(network.and_coeffs, [_encode(a), _encode(b)]) for a, b in _ROWS
    ]
    and_truth = [a and b for a, b in _ROWS]
    and_wire = _fit_wire(and_values, and_truth, min_margin)

    out_values = []
    for value in and_values:
        ln_p3 = _encode(and_wire.decode(value))
        _, l4 = switching_forward(network.psi, ln_p3, network.ln_p4)
        out_values.append(l4)
    nand_truth = [not t for t in and_truth]
    output_wire = _fit_wire(out_values, nand_truth, min_margin)

    thresholds = GateThresholds(and_wire=and_wire, output_wire=output_wire)
    network.thresholds = thresholds
    return thresholds


def nand_trace(network: NandNetwork, in1: bool, in2: bool) -> dict:
    """One forward pass with every wire value, for verification and display."""
    if network.thresholds is None:
        raise ValueError("network is uncalibrated; run calibrate_thresholds first")
    lnp1, lnp2 = _encode(in1), _encode(in2)
    and_value = neuron_forward(network.and_coeffs, [lnp1, lnp2])
    and_bool = network.thresholds.and_wire.decode(and_value)
    ln_p3 = _encode(and_bool)
    l3, l4 = switching_forward(network.psi, ln_p3, network.ln_p4)
    out_bool = network.thresholds.output_wire.decode(l4)
    return {
        "ln_p1": lnp1,
        "ln_p2": lnp2,
        "and_value": and_value,
        "and_bool": and_bool,
        "ln_p3": ln_p3,
        "ln_p4": network.ln_p4,
        "L3": l3,
        "L4": l4,
        "output": out_bool,
    }


def nand_network_forward(network: NandNetwork, in1: bool, in2: bool) -> bool:
    """Boolean NAND through the two-producer network."""
    return bool(nand_trace(network, in1, in2)["output"])


@dataclass(frozen=True)
class GateReport:
    """Verification record: every truth-table row with its wire values."""

    and_rows: list
    nand_rows: list
    thresholds: GateThresholds
    passed: bool


def verify_gates(ln_p4: float = 0.0) -> GateReport:
    """Build, calibrate, and check both truth tables.

    AND rows are (in1, in2, wire value, decoded, expected); NAND rows carry
    the full trace.  `passed` is True only if every decoded boolean matches
    its expected value on both tables.
    """
    network = build_nand_network(ln_p4=ln_p4)
    thresholds = calibrate_thresholds(network)

    and_rows = []
    ok = True
    for a, b in _ROWS:
        value = neuron_forward(network.and_coeffs, [_encode(a), _encode(b)])
        decoded = thresholds.and_wire.decode(value)
        expected = a and b
        ok = ok and decoded == expected
        and_rows.append(
            {"in1": a, "in2": b, "value": value, "decoded": decoded, "expected": expected}
        )

    nand_rows = []
    for a, b in _ROWS:
        trace = nand_trace(network, a, b)
        trace["expected"] = not (a and b)
        ok = ok and trace["output"] == trace["expected"]
        nand_rows.append(trace)

    return GateReport(and_rows=and_rows, nand_rows=nand_rows, thresholds=thresholds, passed=ok)


def gate_output_is_true(value: float, wire: WireThreshold) -> bool:
    """Convenience alias for decoding a wire value."""
    return wire.decode(value)


# The paper-facing claim behind the NOT construction: there is an input
# price increase that raises a product's output.  Exposed for tests.
def switch_point_ln_price(psi: SwitchingProducer, ln_p4: float = 0.0) -> float:
    """ln input price at which the switching producer changes products.

    Closed form from equating the two optimal log profits as functions of
    ln_p3; profits are monotone in opposite directions around it.
    """
    a3 = float(psi.product3.alpha[0])
    # ln pi_3(ln_p3) is affine: slope -(a3/(1-a3)), intercept at ln_p3 = 0.
    slope = 1.0 - 1.0 / (1.0 - a3)
    intercept = optimal_log_profit(psi.product3, 0.0)
    target = optimal_log_profit(psi.product4, ln_p4)
    return (target - intercept) / slope
