"""Networks of profit-maximizing producers that compute like neural networks."""

__version__ = "0.1.0"

from .producer import (
    NeuronCoeffs,
    ProducerParams,
    activation,
    inverse_demand,
    inverse_demand_inverse,
    neuron_forward,
    optimal_input_bundle,
    output_from_prices,
    output_gradient_wrt_exponents,
    profit,
    softplus,
    to_neuron,
)
from .gates import (
    GateThresholds,
    NandNetwork,
    SwitchingProducer,
    and_gate,
    build_nand_network,
    calibrate_thresholds,
    nand_network_forward,
    not_gate,
    switching_forward,
    verify_gates,
)
from .network import (
    LayeredEconomy,
    SweepCurve,
    build_hotdog_model,
    forward,
    labor_leisure_ratio,
    sweep,
)
from .datasets import TrainingDataset, generate, label_point
from .islandia import (
    IslandiaEconomy,
    MarketConfig,
    PeriodRecord,
    compute_threshold,
    evaluate,
    init_economy,
    quantities_to_prices,
    run_period,
    run_trial,
    train,
    update_anticipated_price,
    update_exponents,
)
from .stats import TrialReport, accuracy, summarize

__all__ = [name for name in dir() if not name.startswith("_")]
