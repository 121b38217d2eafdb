"""Layered feed-forward economies of producer neurons.

Economies are strict feed-forward DAGs: a producer consumes only goods
produced by the immediately previous layer.  The module ships the four
single-hidden-layer hot-dog-vendor models (a raw material feeding up to
ten intermediate/leisure producers feeding a labor good and a leisure
good) and the log-price sweep machinery that exposes their erratic
labor/leisure behavior.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .producer import NeuronCoeffs, ProducerParams, neuron_forward, to_neuron

__all__ = [
    "Role",
    "ProducerNode",
    "LayeredEconomy",
    "SweepCurve",
    "RatioOverflowError",
    "SWEEP_RANGE",
    "DEFAULT_SWEEP_POINTS",
    "HOTDOG_MODELS",
    "build_layered_economy",
    "build_hotdog_model",
    "forward",
    "labor_leisure_ratio",
    "sweep",
    "derivative_sign_changes",
]

SWEEP_RANGE = (-10.0, 10.0)
DEFAULT_SWEEP_POINTS = 2001


class Role(enum.Enum):
    INTERMEDIATE = "intermediate"
    LEISURE = "leisure"


class RatioOverflowError(ArithmeticError):
    """Labor/leisure ratio cannot be represented (leisure output vanished)."""


@dataclass(frozen=True, eq=False)
class ProducerNode:
    """One producer in a layer: parameters, cached neuron, and wiring."""

    params: ProducerParams
    coeffs: NeuronCoeffs
    inputs: tuple[int, ...]
    role: Role | None = None


@dataclass(frozen=True, eq=False)
class LayeredEconomy:
    """Feed-forward layers of producers over `n_inputs` exogenous goods."""

    n_inputs: int
    layers: tuple[tuple[ProducerNode, ...], ...]

    def __post_init__(self) -> None:
        n_goods = self.n_inputs
        for li, layer in enumerate(self.layers):
            for node in layer:
                if len(node.inputs) != node.params.n_inputs:
                    raise ValueError(
                        f"layer {li}: wiring width does not match exponent count"
                    )
                if any(i < 0 or i >= n_goods for i in node.inputs):
                    raise ValueError(f"layer {li}: wiring index out of range")
            n_goods = len(layer)


def build_layered_economy(n_inputs: int, spec: list[list[tuple]]) -> LayeredEconomy:
    """Assemble an economy from (params, input_indices[, role]) tuples per layer."""
    layers = []
    for layer_spec in spec:
        nodes = []
        for entry in layer_spec:
            params, inputs = entry[0], tuple(entry[1])
            role = entry[2] if len(entry) > 2 else None
            nodes.append(
                ProducerNode(params=params, coeffs=to_neuron(params), inputs=inputs, role=role)
            )
        layers.append(tuple(nodes))
    return LayeredEconomy(n_inputs=n_inputs, layers=tuple(layers))


# Hidden-layer producers are (A, alpha) on the sole raw material; the two
# final producers consume the intermediate and leisure goods respectively.
HOTDOG_MODELS: dict[int, dict] = {
    1: {
        "intermediate": [(9.0, 0.675), (0.022, 0.954), (0.389, 0.964), (5066.0, 0.265), (2.2, 0.53)],
        "leisure": [(11.0, 0.53), (0.083, 0.974), (2.399, 0.964), (85.516, 0.742), (22.0, 0.53)],
        "out_A": (1.684, 1.5),
        "out_alpha": (
            [0.091, 0.091, 0.13, 0.091, 0.01],
            [0.01, 0.083, 0.091, 0.001, 0.142],
        ),
    },
    2: {
        "intermediate": [(0.002, 0.909), (50.0, 0.95), (0.383, 0.98)],
        "leisure": [(0.406, 0.968), (0.002, 0.98)],
        "out_A": (1.6, 1.5),
        "out_alpha": ([0.375, 0.01, 0.057], [0.091, 0.091]),
    },
    3: {
        "intermediate": [(0.005, 0.909), (41.389, 0.909), (41.389, 0.909)],
        "leisure": [(0.439, 0.909), (34_600_299.0, 0.909)],
        "out_A": (847.277, 0.1),
        "out_alpha": ([0.111, 0.067, 0.067], [0.111, 0.067]),
    },
    4: {
        "intermediate": [(47.275, 0.476), (41.389, 0.455), (2105.0, 0.417), (0.003, 0.49), (0.541, 0.484)],
        "leisure": [(34_600_299.0, 0.455), (2.707, 0.455), (0.002, 0.455), (0.383, 0.49), (5530.0, 0.476)],
        "out_A": (6.009, 1.5),
        "out_alpha": (
            [0.01, 0.01, 0.01, 0.048, 0.038],
            [0.01, 0.02, 0.231, 0.029, 0.005],
        ),
    },
}


def build_hotdog_model(model_id: int) -> LayeredEconomy:
    """One of the four hot-dog-vendor economies.

    A single raw material feeds a hidden layer of single-input producers
    (ten in models 1 and 4, five in models 2 and 3); the labor-good
    producer consumes the intermediate goods and the leisure-good producer
    consumes the leisure goods.  Anticipated prices default to 1
    throughout.
    """
    if model_id not in HOTDOG_MODELS:
        raise ValueError(f"unknown model {model_id}; choose from {sorted(HOTDOG_MODELS)}")
    table = HOTDOG_MODELS[model_id]

    hidden = []
    for A, a in table["intermediate"]:
        hidden.append((ProducerParams(A=A, alpha=np.array([a]), P=1.0), (0,), Role.INTERMEDIATE))
    for A, a in table["leisure"]:
        hidden.append((ProducerParams(A=A, alpha=np.array([a]), P=1.0), (0,), Role.LEISURE))

    n_int = len(table["intermediate"])
    int_idx = tuple(range(n_int))
    leis_idx = tuple(range(n_int, len(hidden)))
    alpha_labor, alpha_leisure = table["out_alpha"]
    labor = (
        ProducerParams(A=table["out_A"][0], alpha=np.array(alpha_labor), P=1.0),
        int_idx,
        Role.INTERMEDIATE,
    )
    leisure = (
        ProducerParams(A=table["out_A"][1], alpha=np.array(alpha_leisure), P=1.0),
        leis_idx,
        Role.LEISURE,
    )
    return build_layered_economy(1, [hidden, [labor, leisure]])


def forward(economy: LayeredEconomy, input_log_prices) -> list[np.ndarray]:
    """Per-layer output log prices for the given input log prices."""
    current = np.atleast_1d(np.asarray(input_log_prices, dtype=float))
    if current.shape != (economy.n_inputs,):
        raise ValueError(
            f"expected {economy.n_inputs} input log prices, got shape {current.shape}"
        )
    outputs = []
    for layer in economy.layers:
        current = np.array(
            [neuron_forward(node.coeffs, current[list(node.inputs)]) for node in layer]
        )
        outputs.append(current)
    return outputs


def _final_log_quantities(economy: LayeredEconomy, ln_p: float) -> tuple[float, float]:
    if len(economy.layers) < 2 or len(economy.layers[-1]) != 2:
        raise ValueError("ratio requires an economy ending in exactly two producers")
    hidden_out = forward(economy, [ln_p])[-2]
    labor, leisure = economy.layers[-1]
    # The neuron pre-activation is exactly ln of the producer's optimal
    # output at those input prices, so the ratio stays in quantity units.
    t_labor = float(hidden_out[list(labor.inputs)] @ labor.coeffs.omega) + labor.coeffs.z
    t_leisure = float(hidden_out[list(leisure.inputs)] @ leisure.coeffs.omega) + leisure.coeffs.z
    return t_labor, t_leisure


def labor_leisure_ratio(economy: LayeredEconomy, ln_p: float) -> float:
    """Quantity ratio of the two final producers' outputs at one raw price."""
    t_labor, t_leisure = _final_log_quantities(economy, ln_p)
    if t_leisure < math.log(1e-300):
        raise RatioOverflowError(
            f"leisure output underflowed at ln_p={ln_p} (ln quantity {t_leisure:.1f})"
        )
    try:
        return math.exp(t_labor - t_leisure)
    except OverflowError as exc:
        raise RatioOverflowError(f"ratio overflowed at ln_p={ln_p}") from exc


@dataclass(frozen=True, eq=False)
class SweepCurve:
    """Labor/leisure ratio evaluated over a grid of raw-material log prices."""

    grid: np.ndarray
    ratio: np.ndarray

    def __post_init__(self) -> None:
        if self.grid.shape != self.ratio.shape:
            raise ValueError("grid and ratio lengths differ")
        if np.any(self.ratio <= 0.0):
            raise ValueError("ratios must be positive")


def sweep(economy: LayeredEconomy, grid) -> SweepCurve:
    """Evaluate the labor/leisure ratio pointwise over `grid`.

    Grid points must lie within the sweep range; ratio errors propagate
    with the offending grid point attached.
    """
    g = np.atleast_1d(np.asarray(grid, dtype=float))
    lo, hi = SWEEP_RANGE
    if np.any(g < lo - 1e-12) or np.any(g > hi + 1e-12):
        raise ValueError(f"grid must lie within [{lo}, {hi}]")
    ratios = np.array([labor_leisure_ratio(economy, float(p)) for p in g])
    return SweepCurve(grid=g, ratio=ratios)


def derivative_sign_changes(curve: SweepCurve) -> int:
    """Number of sign changes of the curve's first differences."""
    diffs = np.diff(curve.ratio)
    signs = np.sign(diffs)
    signs = signs[signs != 0]
    if signs.size < 2:
        return 0
    return int(np.count_nonzero(signs[1:] != signs[:-1]))
