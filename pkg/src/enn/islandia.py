"""The Islandia economy: 33 producers learning from price feedback alone.

Five layers (four hidden layers of eight producers plus one final
producer) convert two imported raw materials into a single export good.
Each period every producer chooses her profit-maximizing input bundle at
currently posted prices, markets set realized prices by a single
demand/supply-scaled adjustment step of the inverse demand curve, and, in
learning periods, each producer updates her anticipated price by a moving
average and her exponents by one gradient-descent step driven by the
production error inferred from her pricing error.

A producer's information set is her own realized price and her own
realized input quantities, so demand signals travel upstream one layer
per period.  Because of that same delay, measuring the economy's response
to a single input requires letting prices propagate through all layers:
evaluation holds the input fixed for one adjustment step per layer on a
scratch copy of the posted prices, never touching the economy itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .datasets import TrainingDataset

__all__ = [
    "LAYER_SIZES",
    "LAYER_INPUTS",
    "N_PRODUCERS",
    "SETTLE_PERIODS",
    "MarketConfig",
    "IslandiaEconomy",
    "PeriodRecord",
    "PeriodError",
    "init_economy",
    "quantities_to_prices",
    "update_anticipated_price",
    "update_exponents",
    "run_period",
    "settled_output",
    "compute_threshold",
    "acclimatize",
    "train",
    "evaluate",
    "run_trial",
    "trial_seed_sequence",
    "check_invariants",
]

LAYER_SIZES = (8, 8, 8, 8, 1)
LAYER_INPUTS = (2, 8, 8, 8, 8)
N_PRODUCERS = sum(LAYER_SIZES)

# Price information crosses one layer per period, so an input needs this
# many adjustment steps to reach the final producer.
SETTLE_PERIODS = len(LAYER_SIZES)

# Hard floor on any exponent after projection, mirroring producer-level
# validity; far below the configured projection floor.
_ALPHA_MIN = 1e-9

# A market never rations below this trickle of supply, which keeps log
# quantities finite when an import is absent.
_MIN_SUPPLY = 1e-9


class PeriodError(ArithmeticError):
    """A producer's computation left the representable range."""

    def __init__(self, layer: int, producer: int, detail: str):
        super().__init__(f"layer {layer} producer {producer}: {detail}")
        self.layer = layer
        self.producer = producer


@dataclass(frozen=True)
class MarketConfig:
    """Market mechanism knobs.

    mu: gradient-descent learning rate.
    window: moving-average length for anticipated prices, in periods.
    delta: demand-shifter amplitude scaling the final good's price by
        (1 + delta) in high-demand periods and (1 - delta) otherwise.
    quantity_scale: import quantity at which a raw material's price halves.
    error_clamp: bound on the per-producer production error.
    projection_floor: exponent floor used by initialization and projection.
    adjust_speed: tatonnement damping; realized prices scale the inverse
        demand curve by (demand/supply) ** adjust_speed, so 1 is a full
        adjustment step and smaller values damp the price response.
    premium_cap: bound on that demand factor (and its reciprocal), i.e.
        the largest scarcity premium or glut discount one period can
        realize over the supply-implied price.
    step_clamp: bound on how far any single exponent may move in one
        period; the raw step E mu Y ln x is unbounded in Y, and descent
        needs bounded steps to stay off the projection boundary.
    price_cap / price_floor: bounds imposed on realized (posted) prices so
        every log price stays finite.
    """

    mu: float = 1e-4
    window: int = 10000
    error_window: int = 25
    delta: float = 0.5
    quantity_scale: float = 50.0
    error_clamp: float = 1.0
    projection_floor: float = 0.01
    adjust_speed: float = 0.05
    premium_cap: float = 1.5
    step_clamp: float = 1e-3
    price_cap: float = 3.0
    price_floor: float = 0.1

    def __post_init__(self) -> None:
        if not self.mu > 0:
            raise ValueError(f"mu must be > 0, got {self.mu}")
        if self.window < 1:
            raise ValueError(f"window must be >= 1, got {self.window}")
        if self.error_window < 1:
            raise ValueError(f"error_window must be >= 1, got {self.error_window}")
        # delta = 0 is allowed for diagnostics: it makes the final market
        # label-free so period prices reduce to the pure forward pass.
        if not 0.0 <= self.delta < 1.0:
            raise ValueError(f"delta must lie in [0, 1), got {self.delta}")
        if not self.quantity_scale > 0:
            raise ValueError(f"quantity_scale must be > 0, got {self.quantity_scale}")
        if not self.error_clamp > 0:
            raise ValueError(f"error_clamp must be > 0, got {self.error_clamp}")
        if not 0.0 < self.projection_floor <= 0.01:
            raise ValueError(
                f"projection_floor must lie in (0, 0.01], got {self.projection_floor}"
            )
        if not 0.0 < self.adjust_speed <= 1.0:
            raise ValueError(f"adjust_speed must lie in (0, 1], got {self.adjust_speed}")
        if not self.premium_cap >= 1.0:
            raise ValueError(f"premium_cap must be >= 1, got {self.premium_cap}")
        if not self.step_clamp > 0:
            raise ValueError(f"step_clamp must be > 0, got {self.step_clamp}")
        if not 0.0 < self.price_floor < 1.0 <= self.price_cap:
            raise ValueError("need 0 < price_floor < 1 <= price_cap")


@dataclass(eq=False)
class IslandiaEconomy:
    """Mutable state of one model economy.

    `tech` is the technology level shared by all producers of a layer.
    `alphas[k]` has one row of exponents per producer in layer k.
    `posted[k]` holds the posted prices of layer k's output goods; raw
    material prices are injected fresh each period from the dataset.
    `price_history[k]` is a ring buffer of realized prices feeding the
    moving-average price expectation.
    """

    config: MarketConfig
    seed: object
    tech: tuple[float, ...]
    alphas: list[np.ndarray]
    anticipated: list[np.ndarray]
    posted: list[np.ndarray]
    price_history: list[np.ndarray]
    error_history: list[np.ndarray]
    history_len: int = 0
    period: int = 0


@dataclass(frozen=True, eq=False)
class PeriodRecord:
    """Everything observable about a single period."""

    period: int
    q_steel: float
    q_brass: float
    label: bool
    output: float
    final_price: float
    pricing_error: np.ndarray
    production_error: np.ndarray


# Periods the economy runs under neutral demand at initialization, before
# anything is measured: the experiment starts from a settled market.
BURN_IN_PERIODS = 300

# Neutral-demand rounds on the experiment's own input distribution before
# the untrained measurement (see acclimatize).
ACCLIMATIZE_ROUNDS = 100

# Multiplier on the normalized technology level.  Hungry producers demand
# more of every input than the imports can deliver over most of the input
# square, so realized production is materials-limited there and the
# scarce-imports corner is where output collapses.
_TECH_HUNGER = 2.0


# Exponent sums are drawn from this band.  Below it the producers
# contract their price signals into nothing; above it the decreasing
# returns amplifier 1/(1 - Phi) drives outputs into the price bounds.
_PHI_RANGE = (0.55, 0.8)


def _draw_exponents(rng, size: int, n_in: int, eps: float) -> np.ndarray:
    """Random exponent rows with sums in the responsive band.

    Each row's sum is uniform on the band and its direction uniform on
    the simplex (exponential spacings), floored at eps per exponent.
    """
    g = rng.exponential(1.0, size=(size, n_in))
    w = g / g.sum(axis=1, keepdims=True)
    phi = rng.uniform(_PHI_RANGE[0], _PHI_RANGE[1], size=(size, 1))
    return eps + (phi - n_in * eps) * w


def init_economy(seed, config: MarketConfig | None = None) -> IslandiaEconomy:
    """Random economy: shared per-layer technology, per-producer exponents.

    Technology is log-uniform on [0.5, 2]; exponents are uniform over the
    valid decreasing-returns region.  Anticipated and posted prices start
    at 1 and are then equilibrated for a fixed number of neutral-demand
    periods so the experiment starts near the market's operating point
    rather than in its start-up transient.  Deterministic per seed.
    """
    config = config or MarketConfig()
    rng = np.random.default_rng(seed)
    eps = config.projection_floor

    tech = []
    alphas = []
    anticipated = []
    posted = []
    history = []
    error_history = []
    for size, n_in in zip(LAYER_SIZES, LAYER_INPUTS):
        level = float(np.exp(rng.uniform(math.log(0.8), math.log(1.25))))
        alpha = _draw_exponents(rng, size, n_in, eps)
        # Normalize the shared technology so the layer's typical producer
        # has unit output at balanced prices; otherwise outputs settle so
        # far from 1 that their prices saturate at one of the demand
        # curve's ends and stop carrying any signal.  The random level
        # multiplies on top and is kept narrow because decreasing returns
        # amplify it by 1/(1 - Phi).
        scale = float(np.exp(np.mean(-(alpha * np.log(alpha)).sum(axis=1))))
        tech.append(level * scale * _TECH_HUNGER)
        alphas.append(alpha)
        # ~rho(1): the demand curve's mid price, the consistent starting
        # point for producers designed to make about one unit.
        anticipated.append(np.full(size, 0.5))
        posted.append(np.full(size, 0.5))
        history.append(np.zeros((size, config.window)))
        error_history.append(np.zeros((size, config.error_window)))
    economy = IslandiaEconomy(
        config=config,
        seed=seed,
        tech=tuple(tech),
        alphas=alphas,
        anticipated=anticipated,
        posted=posted,
        price_history=history,
        error_history=error_history,
    )
    _equilibrate(economy, BURN_IN_PERIODS, rng)
    return economy


def _equilibrate(economy: IslandiaEconomy, periods: int, rng) -> None:
    """Run the economy to its neutral-demand operating point.

    Market periods (expectations and posted prices; exponents stay at
    their random draw) over uniformly drawn import quantities with no
    demand shifter: the state the island would be in before any
    demand-label experiment begins.
    """
    for _ in range(periods):
        q = rng.uniform(0.0, 100.0, size=2)
        outputs, ln_inputs, realized, supply_price = _simulate_period(
            economy.config,
            economy.tech,
            economy.alphas,
            economy.anticipated,
            economy.posted,
            float(q[0]),
            float(q[1]),
            label=None,
        )
        errors = _production_errors(economy.config, outputs, realized)
        _apply_learning(
            economy, outputs, ln_inputs, realized, supply_price, errors,
            update_exponents_too=False,
        )


def quantities_to_prices(q_steel: float, q_brass: float, config: MarketConfig) -> np.ndarray:
    """Posted raw material prices implied by the period's import quantities.

    p = 1 / (1 + q / s): scarce imports are expensive (price 1 at q = 0)
    and abundant ones cheap (1/3 at q = 100 for the default scale).
    """
    q = np.array([q_steel, q_brass], dtype=float)
    if np.any(q < 0.0) or np.any(q > 100.0):
        raise ValueError(f"quantities must lie in [0, 100], got {q}")
    return 1.0 / (1.0 + q / config.quantity_scale)


def update_anticipated_price(history, window: int) -> float:
    """Arithmetic mean of the last min(window, len(history)) realized prices."""
    h = np.atleast_1d(np.asarray(history, dtype=float))
    if h.size == 0:
        raise ValueError("price history is empty")
    return float(h[-min(window, h.size):].mean())


def _layer_plan(A: float, alpha: np.ndarray, P: np.ndarray, ln_prices: np.ndarray):
    """Vectorized closed-form production plan for one layer.

    Returns (lnY, lnx) where row i of lnx is producer i's optimal log
    input bundle and lnY[i] her log output, all at the given posted input
    prices and her own anticipated output price.
    """
    ln_alpha = np.log(alpha)
    phi = alpha.sum(axis=1)
    denom = phi - 1.0
    s = (alpha * (ln_prices[None, :] - ln_alpha)).sum(axis=1)
    ln_y = (s - phi * np.log(P) - math.log(A)) / denom
    ln_x1 = (-(np.log(P) + math.log(A)) + s + (1.0 - phi) * (ln_prices[0] - ln_alpha[:, 0])) / denom
    ln_x = ln_x1[:, None] + (ln_prices[0] - ln_prices[None, :]) + (ln_alpha - ln_alpha[:, 0][:, None])
    return ln_y, ln_x


def _simulate_period(
    config: MarketConfig,
    tech,
    alphas,
    anticipated,
    posted,
    q_steel: float,
    q_brass: float,
    label: bool,
):
    """One market step as a pure function of parameters and posted prices.

    Returns per layer: output quantities, log input bundles, realized
    prices (demand-scaled inverse demand, what producers are paid), and
    supply prices (the plain inverse-demand price that gets posted for
    next period's buyers).
    """
    n_layers = len(LAYER_SIZES)
    ln_in = np.log(quantities_to_prices(q_steel, q_brass, config))
    # Imports are the physical supply of the raw goods: first-layer
    # purchases above the delivered quantities are scaled back pro rata.
    # Intermediate goods are made to order within the period, so price,
    # not rationing, carries scarcity from one layer to the next.
    imports = np.maximum(np.array([q_steel, q_brass], dtype=float), _MIN_SUPPLY)

    outputs: list[np.ndarray] = []
    ln_inputs: list[np.ndarray] = []
    demand: list[np.ndarray] = []
    for k in range(n_layers):
        ln_y, ln_x = _layer_plan(tech[k], alphas[k], anticipated[k], ln_in)
        if not (np.all(np.isfinite(ln_y)) and np.all(np.isfinite(ln_x))):
            bad = int(np.argmax(~np.isfinite(ln_y)))
            raise PeriodError(k, bad, "non-finite production plan")
        desired = np.exp(ln_x)
        demand.append(desired.sum(axis=0))
        if k == 0:
            ration = np.minimum(1.0, imports / desired.sum(axis=0))
            ln_x = ln_x + np.log(ration)[None, :]
            ln_y = ln_y + (alphas[k] * np.log(ration)[None, :]).sum(axis=1)
        outputs.append(np.exp(ln_y))
        ln_inputs.append(ln_x)
        ln_in = np.log(posted[k])

    supply_price: list[np.ndarray] = []
    realized: list[np.ndarray] = []
    for k in range(n_layers):
        y = outputs[k]
        rho = 1.0 / (1.0 + y)
        supply_price.append(np.maximum(rho, config.price_floor))
        if k < n_layers - 1:
            step = np.clip(
                (demand[k + 1] / y) ** config.adjust_speed,
                1.0 / config.premium_cap,
                config.premium_cap,
            )
            price = np.clip(step * rho, config.price_floor, config.price_cap)
        else:
            # label None means neutral demand (no shifter), used by the
            # initialization burn-in.  High demand scales the price by
            # (1 + delta); normal demand by (1 + delta)/(1 + 2 delta), the
            # price whose implied demand-curve quantity is shifted by the
            # same amount in the opposite direction, so the two regimes
            # pull the production error symmetrically.
            if label is None:
                shift = 1.0
            elif label:
                shift = 1.0 + config.delta
            else:
                shift = (1.0 + config.delta) / (1.0 + 2.0 * config.delta)
            # The export price is never posted to any producer, so it needs
            # no market bounds; bounding it would erase the demand signal
            # exactly when the final producer runs at volume.
            price = shift * rho
        realized.append(price)
    return outputs, ln_inputs, realized, supply_price


def _project(alpha: np.ndarray, eps: float) -> np.ndarray:
    """Clamp exponents to the floor and rescale rows whose sum nears 1.

    Rows are rescaled to sum 1 - 10 eps, the same ceiling initialization
    guarantees, which keeps the log-output amplification 1/(1 - Phi)
    bounded and with it every price and quantity representable.
    """
    out = np.maximum(alpha, eps)
    ceiling = 1.0 - 10.0 * eps
    sums = out.sum(axis=1)
    over = sums >= ceiling
    if np.any(over):
        out[over] *= (ceiling / sums[over])[:, None]
        out = np.maximum(out, _ALPHA_MIN)
    return out


def update_exponents(
    params, production_error: float, x, mu: float, eps: float = 0.01,
    step_clamp: float = float("inf"),
):
    """One projected gradient-descent step on a producer's exponents.

    alpha_i' = alpha_i - E mu dY/dalpha_i with the gradient taken at the
    realized input quantities (dY/dalpha_i = Y ln x_i), then projected
    back into the valid region; the result is always a valid producer.
    """
    xv = np.atleast_1d(np.asarray(x, dtype=float))
    if np.any(xv <= 0.0) or not np.all(np.isfinite(xv)):
        raise ValueError(f"realized inputs must be positive and finite, got {xv}")
    ln_x = np.log(xv)
    output = math.exp(math.log(params.A) + float(params.alpha @ ln_x))
    step = np.clip(production_error * mu * output * ln_x, -step_clamp, step_clamp)
    return replace(params, alpha=_project((params.alpha - step)[None, :], eps)[0])


def _production_errors(cfg: MarketConfig, outputs, realized) -> list[np.ndarray]:
    errors = []
    for k in range(len(LAYER_SIZES)):
        # Vectorized inverse_demand_inverse(min(p, 1)): the quantity the
        # demand curve pairs with the realized price, minus actual output.
        target = 1.0 / np.minimum(realized[k], 1.0) - 1.0
        errors.append(np.clip(target - outputs[k], -cfg.error_clamp, cfg.error_clamp))
    return errors


def _apply_learning(
    economy, outputs, ln_inputs, realized, supply_price, production_error,
    update_exponents_too: bool = True,
):
    """Commit one period's expectation, exponent, and posted-price updates.

    The final producer's expectation tracks the unshifted supply price:
    the demand shifter is exactly the part of her price she cannot
    anticipate, and it reaches her decisions only through the production
    error.  Intermediate producers anticipate their realized prices.

    Exponents respond to the deviation of the production error from its
    own recent average.  The habitual component of the error reflects the
    market's standing imbalance, which the price channel already absorbs;
    reacting to it again would walk the exponents into the projection
    boundary and freeze learning.
    """
    cfg = economy.config
    slot = economy.history_len % cfg.window
    filled = min(economy.history_len + 1, cfg.window)
    err_slot = economy.history_len % cfg.error_window
    err_filled = min(economy.history_len + 1, cfg.error_window)
    last = len(LAYER_SIZES) - 1
    for k in range(len(LAYER_SIZES)):
        expected = supply_price[k] if k == last else realized[k]
        economy.price_history[k][:, slot] = expected
        economy.anticipated[k] = economy.price_history[k][:, :filled].mean(axis=1)
        economy.error_history[k][:, err_slot] = production_error[k]
        if update_exponents_too:
            usual = economy.error_history[k][:, :err_filled].mean(axis=1)
            surprise = production_error[k] - usual
            grad = outputs[k][:, None] * ln_inputs[k]
            step = np.clip(
                (cfg.mu * surprise)[:, None] * grad,
                -cfg.step_clamp,
                cfg.step_clamp,
            )
            economy.alphas[k] = _project(economy.alphas[k] - step, cfg.projection_floor)
        economy.posted[k] = supply_price[k]
    economy.history_len += 1


def run_period(
    economy: IslandiaEconomy,
    q_steel: float,
    q_brass: float,
    label: bool,
    learn: bool,
) -> PeriodRecord:
    """Simulate one period; mutates the economy only when `learn` is true.

    Production happens layer by layer at posted prices; demand for each
    intermediate good is the sum of next-layer input choices; realized
    prices scale the inverse demand curve by demand over supply (one
    price-adjustment step, so balanced markets reproduce the pure neuron
    forward pass), while the final good's price carries the demand
    shifter.  Each producer's production error is the gap between the
    quantity her demand curve pairs with the realized price and what she
    actually made.  Learning periods update expectations and exponents
    from the realized prices and post the plain inverse-demand price for
    next period; excess demand therefore feeds back through expectations,
    which keeps the posted-price cascade stable.
    """
    cfg = economy.config
    n_layers = len(LAYER_SIZES)
    outputs, ln_inputs, realized, supply_price = _simulate_period(
        cfg,
        economy.tech,
        economy.alphas,
        economy.anticipated,
        economy.posted,
        q_steel,
        q_brass,
        label,
    )

    pricing_error = np.concatenate(
        [realized[k] - economy.anticipated[k] for k in range(n_layers)]
    )
    production_error = _production_errors(cfg, outputs, realized)

    if learn:
        _apply_learning(economy, outputs, ln_inputs, realized, supply_price, production_error)
        economy.period += 1

    return PeriodRecord(
        period=economy.period,
        q_steel=float(q_steel),
        q_brass=float(q_brass),
        label=bool(label),
        output=float(outputs[-1][0]),
        final_price=float(realized[-1][0]),
        pricing_error=pricing_error,
        production_error=np.concatenate(production_error),
    )


def settled_output(
    economy: IslandiaEconomy,
    q_steel: float,
    q_brass: float,
    steps: int = SETTLE_PERIODS,
) -> float:
    """Final output once the input's price signal has crossed every layer.

    Holds the import quantities fixed for `steps` price-adjustment steps
    on a scratch copy of the posted prices (no learning, no mutation of
    the economy) and returns the final producer's output at the last step.
    The demand shifter plays no role because realized final prices never
    feed back into production.
    """
    cfg = economy.config
    posted = [p.copy() for p in economy.posted]
    output = math.nan
    for _ in range(steps):
        outputs, _, _, supply_price = _simulate_period(
            cfg,
            economy.tech,
            economy.alphas,
            economy.anticipated,
            posted,
            q_steel,
            q_brass,
            label=False,
        )
        posted = supply_price
        output = float(outputs[-1][0])
    return output


def compute_threshold(economy: IslandiaEconomy, dataset: TrainingDataset) -> float:
    """Mean settled final output over the dataset; never mutates the economy."""
    if len(dataset) == 0:
        raise ValueError("dataset is empty")
    outputs = [
        settled_output(economy, float(s), float(b))
        for s, b in zip(dataset.q_steel, dataset.q_brass)
    ]
    return float(np.mean(outputs))


def evaluate(economy: IslandiaEconomy, dataset: TrainingDataset, threshold: float) -> float:
    """Fraction of periods whose thresholded settled output matches the label."""
    if len(dataset) == 0:
        raise ValueError("dataset is empty")
    matches = 0
    for s, b, label in zip(dataset.q_steel, dataset.q_brass, dataset.labels):
        out = settled_output(economy, float(s), float(b))
        matches += (out > threshold) == bool(label)
    return matches / len(dataset)


def acclimatize(
    economy: IslandiaEconomy,
    dataset: TrainingDataset,
    rounds: int,
    rng: np.random.Generator,
) -> IslandiaEconomy:
    """Run neutral-demand rounds over the dataset's inputs.

    Prices, expectations, and production scales settle onto the
    operating point of this input distribution before anything is
    measured.  Demand labels are never seen, so the economy stays
    untrained in the one sense that matters: it knows nothing about
    which demand regime any input belongs to.
    """
    for _ in range(rounds):
        i = int(rng.integers(len(dataset)))
        for _ in range(SETTLE_PERIODS):
            outputs, ln_inputs, realized, supply_price = _simulate_period(
                economy.config,
                economy.tech,
                economy.alphas,
                economy.anticipated,
                economy.posted,
                float(dataset.q_steel[i]),
                float(dataset.q_brass[i]),
                label=None,
            )
            errors = _production_errors(economy.config, outputs, realized)
            _apply_learning(
                economy, outputs, ln_inputs, realized, supply_price, errors,
            )
    return economy


def train(
    economy: IslandiaEconomy,
    dataset: TrainingDataset,
    rounds: int,
    rng: np.random.Generator,
) -> tuple[IslandiaEconomy, list[PeriodRecord]]:
    """Train on `rounds` examples drawn uniformly with replacement.

    Each round holds its example for one learning period per layer, the
    time a price signal needs to cross the network.  Producers still make
    exactly one adjustment per period from purely local information; the
    hold is what lets an example's input pattern and its demand label
    coexist anywhere in the network at all, since examples are drawn
    independently.
    """
    if rounds < 0:
        raise ValueError(f"rounds must be >= 0, got {rounds}")
    log = []
    for _ in range(rounds):
        i = int(rng.integers(len(dataset)))
        for _ in range(SETTLE_PERIODS):
            log.append(
                run_period(
                    economy,
                    float(dataset.q_steel[i]),
                    float(dataset.q_brass[i]),
                    bool(dataset.labels[i]),
                    learn=True,
                )
            )
    return economy, log


def trial_seed_sequence(master_seed: int, trial: int) -> np.random.SeedSequence:
    """Independent, deterministic stream id for one trial of a campaign."""
    return np.random.SeedSequence((int(master_seed), int(trial)))


def run_trial(
    kind: int,
    periods: int,
    dataset_seed: int,
    master_seed: int,
    trial: int,
    rounds: int,
    config: MarketConfig,
) -> tuple[float, float]:
    """One independent trial: (initial accuracy, final accuracy).

    The threshold is fixed from the untrained economy and reused after
    training, so improvement measures movement of the outputs themselves.
    Self-contained so campaigns can fan trials out across processes.
    """
    from . import datasets  # local import keeps workers cheap to spawn

    dataset = datasets.generate(kind, periods, dataset_seed)
    econ_seed, acclim_seed, train_seed = trial_seed_sequence(master_seed, trial).spawn(3)
    economy = init_economy(econ_seed, config)
    acclimatize(economy, dataset, ACCLIMATIZE_ROUNDS, np.random.default_rng(acclim_seed))

    untrained = [
        settled_output(economy, float(s), float(b))
        for s, b in zip(dataset.q_steel, dataset.q_brass)
    ]
    threshold = float(np.mean(untrained))
    labels = dataset.labels.astype(bool)
    initial = float(np.mean((np.array(untrained) > threshold) == labels))

    train(economy, dataset, rounds, np.random.default_rng(train_seed))
    final = evaluate(economy, dataset, threshold)
    return initial, final


def check_invariants(economy: IslandiaEconomy) -> None:
    """Assert structural validity; raises AssertionError on any breach."""
    from .producer import ProducerParams

    assert sum(a.shape[0] for a in economy.alphas) == N_PRODUCERS
    for k, (size, n_in) in enumerate(zip(LAYER_SIZES, LAYER_INPUTS)):
        assert economy.alphas[k].shape == (size, n_in)
        for i in range(size):
            ProducerParams(
                A=economy.tech[k],
                alpha=economy.alphas[k][i],
                P=float(economy.anticipated[k][i]),
            )
        posted = economy.posted[k]
        assert np.all(posted > 0.0) and np.all(posted <= economy.config.price_cap)
