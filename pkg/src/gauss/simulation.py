from concurrent.futures import ThreadPoolExecutor
from math import sqrt
from typing import List, NamedTuple, Optional, Sequence

import numpy as np
import pandas as pd

from src.ddifc import sum_log_sizes
from src.equiv import class_search
from src.errors import IfcError, InfeasibleDepth
from src.gauss.depth import choose_depth, choose_modulus
from src.gauss.lattice import build_nested_pair, centered_mod
from src.gauss.rates import h_diff, normalize_channel, theoretical_sum_rate, z_add
from src.layered import layered_decode, layered_encode
from src.schemas import ClassSearchResult, GaussSimConfig, RealChannelMatrix, SearchBounds, SimResult
from src.settings import settings
from src.utils.logger import get_logger

logger = get_logger(__name__)

TRIAL_BLOCK = 256
DITHER_STREAM = 1


class BlockTally(NamedTuple):
    errors: List[int]
    clean_trials: int
    noise_energy: List[float]


def _trial_rng(seed: int, trial: int, *stream: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(trial, *stream)))


def channel_for(cfg: GaussSimConfig) -> RealChannelMatrix:
    """
    The matrix the scheme runs on. With per-user powers or noises it is the
    equal-power, equal-noise equivalent at the reference levels (power, noise).
    """
    if not cfg.normalized:
        return RealChannelMatrix.coerce(cfg.matrix)
    K = len(cfg.matrix)
    powers = cfg.powers or [cfg.power] * K
    noises, reference = (cfg.noises, cfg.noise) if cfg.noises else ([1.0] * K, 1.0)
    return RealChannelMatrix(entries=normalize_channel(cfg.matrix, powers, noises, cfg.power, reference))


def search_for(cfg: GaussSimConfig) -> ClassSearchResult:
    """Class search on the integer part of the configured channel."""
    H = channel_for(cfg).floor()
    return class_search(H, SearchBounds(r_max=cfg.r_max, s_cap=cfg.s_cap))


class GaussSimulation:
    """
    Monte-Carlo run of the layered lattice scheme on one channel at one noise level.

    Integer mode sends the transferred layered code on H directly. Dithered mode
    works against floor(H): every transmitter subtracts a shared dither U, each
    receiver adds floor(H) U back, and the fractional gains become extra noise.
    """

    def __init__(self, cfg: GaussSimConfig, result: Optional[ClassSearchResult] = None):
        real = channel_for(cfg)
        mode = cfg.mode
        if mode == "auto":
            mode = "integer" if real.is_integral() else "dithered"
        if mode == "integer" and not real.is_integral():
            raise ValueError("integer mode needs an integer channel matrix")

        self.cfg = cfg
        self.mode = mode
        self.H = real.floor()
        self.diff = h_diff(real)
        self.z_eff = cfg.noise if mode == "integer" else z_add(real, cfg.power, cfg.noise)

        # 1. Code, layers and modulus
        self.result = result or search_for(cfg)
        self.choice = choose_depth(self.H, self.result, cfg.power, self.z_eff, cfg.n, cfg.depth)
        self.modulus = choose_modulus(self.choice, cfg.power, self.z_eff, cfg.n)
        self.code = self.choice.code

        # 2. Lattice pair; G2 comes from the root stream, trials from spawned ones
        self.pair = build_nested_pair(
            cfg.n, self.modulus.q, cfg.power,
            rng=np.random.default_rng(np.random.SeedSequence(cfg.seed)),
            decoder=cfg.decoder,
        )

    def run_trial(self, trial: int):
        """Per-user success flags and per-receiver effective-noise energy for one trial."""
        cfg, pair, code = self.cfg, self.pair, self.code
        K, n, q = self.H.K, cfg.n, pair.q
        rng = _trial_rng(cfg.seed, trial)

        # 1. Layer messages and digits
        sent = []
        points = []
        for j, values in enumerate(code.primary.sets):
            picks = rng.integers(0, len(values), size=code.depth)
            layers = [values[int(k)] for k in picks]
            sent.append([code.r[j] * message for message in layers])
            points.append(pair.coordinates(layered_encode(code, j, layers)))

        # 2. Channel noise in fine-grid units
        noise = rng.standard_normal((K, n)) * (sqrt(cfg.noise) / pair.scale)

        if self.mode == "dithered":
            dither = _trial_rng(cfg.seed, trial, DITHER_STREAM).uniform(-q / 2, q / 2, size=n)
            sent_points = [centered_mod(np.asarray(v, dtype=float) - dither, q) for v in points]

        ok, energy = [], []
        for i in range(K):
            row = self.H.row(i)
            # floor(H) (x_j + U) = floor(H) v_j (mod q), kept exact
            clean = [centered_mod(sum(row[j] * points[j][k] for j in range(K)), q) for k in range(n)]
            effective = noise[i].copy()
            if self.mode == "dithered":
                for j in range(K):
                    effective += self.diff[i][j] * sent_points[j]
            energy.append(float(np.sum((effective * pair.scale) ** 2)))

            target = centered_mod(np.asarray(clean, dtype=float) + effective, q)
            u = pair.nearest(target)[0] % q
            try:
                ok.append(layered_decode(code, i, u) == sent[i])
            except IfcError:
                ok.append(False)
        return ok, energy

    def run_block(self, start: int) -> BlockTally:
        K = self.H.K
        errors, clean, energy = [0] * K, 0, [0.0] * K
        for trial in range(start, min(start + TRIAL_BLOCK, self.cfg.trials)):
            ok, trial_energy = self.run_trial(trial)
            clean += all(ok)
            for i in range(K):
                errors[i] += not ok[i]
                energy[i] += trial_energy[i]
        return BlockTally(errors, clean, energy)

    def run(self, workers: Optional[int] = None) -> SimResult:
        cfg = self.cfg
        workers = settings.workers if workers is None else max(1, workers)
        starts = list(range(0, cfg.trials, TRIAL_BLOCK))

        # Blocks are summed in order, so the thread count never changes the result
        if workers == 1:
            tallies = [self.run_block(start) for start in starts]
        else:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                tallies = list(pool.map(self.run_block, starts))

        K = self.H.K
        errors, clean, energy = [0] * K, 0, [0.0] * K
        for tally in tallies:
            clean += tally.clean_trials
            for i in range(K):
                errors[i] += tally.errors[i]
                energy[i] += tally.noise_energy[i]

        l = self.choice.l
        rate = (l / cfg.n) * sum_log_sizes(self.code.primary)
        outcome = SimResult(
            snr_db=cfg.snr_db,
            mode=self.mode,
            n=cfg.n,
            l=l,
            q=self.modulus.q,
            w_tilde=self.choice.w_tilde,
            eff=self.result.efficiency,
            rate_theoretical=theoretical_sum_rate(cfg.power, self.z_eff, self.result.efficiency),
            rate_empirical=rate,
            goodput=rate * clean / cfg.trials,
            error_rates=[count / cfg.trials for count in errors],
            trials=cfg.trials,
            seed=cfg.seed,
            z_effective=self.z_eff,
            cond_q_holds=self.modulus.cond_q_holds,
            modulus_adjusted=self.modulus.modulus_adjusted,
            goodness=self.modulus.goodness,
            noise_variance=[value / (cfg.trials * cfg.n) for value in energy],
        )
        logger.info(
            f"📡 [GaussSim] {self.mode} snr={cfg.snr_db:.2f} dB: l={l}, q={outcome.q}, z={self.z_eff:.4g}, "
            f"errors={[round(value, 4) for value in outcome.error_rates]}"
        )
        return outcome


def simulate(cfg: GaussSimConfig, result: Optional[ClassSearchResult] = None) -> SimResult:
    return GaussSimulation(cfg, result).run()


def simulate_integer(cfg: GaussSimConfig, result: Optional[ClassSearchResult] = None) -> SimResult:
    return simulate(cfg.model_copy(update={"mode": "integer"}), result)


def simulate_dithered(cfg: GaussSimConfig, result: Optional[ClassSearchResult] = None) -> SimResult:
    return simulate(cfg.model_copy(update={"mode": "dithered"}), result)


def csv_columns(K: int, normalized: bool = False) -> List[str]:
    columns = (["snr_db", "n", "l", "q", "eff", "rate_theoretical", "rate_empirical"]
               + [f"err_u{i + 1}" for i in range(K)] + ["trials", "seed"])
    return columns + ["z_add"] if normalized else columns


def sweep(cfg: GaussSimConfig, snr_db: Optional[Sequence[float]] = None) -> pd.DataFrame:
    """
    One row per SNR point (P fixed, Z = P 10^(-snr/10)); without points, the
    configured noise gives a single row. Infeasible points keep empty rate fields.
    With per-user powers or noises each point is a reference noise level, so the
    equivalent channel and its noise budget Z_add (last column) change along the sweep.
    """
    K = len(cfg.matrix)
    noises = [cfg.noise] if snr_db is None else [cfg.power * 10 ** (-value / 10) for value in snr_db]
    searched = {}

    rows = []
    for noise in noises:
        point = cfg.model_copy(update={"noise": noise})
        row = {"snr_db": point.snr_db, "n": point.n, "trials": point.trials, "seed": point.seed}
        key = channel_for(point).floor().key()
        if key not in searched:
            searched[key] = search_for(point)
        try:
            outcome = simulate(point, searched[key])
        except InfeasibleDepth as exc:
            logger.warning(f"⚠️ [GaussSim] snr={point.snr_db:.2f} dB skipped: {exc}")
            rows.append(row)
            continue
        row.update(l=outcome.l, q=outcome.q, eff=outcome.eff, z_add=outcome.z_effective,
                   rate_theoretical=outcome.rate_theoretical, rate_empirical=outcome.rate_empirical)
        row.update({f"err_u{i + 1}": rate for i, rate in enumerate(outcome.error_rates)})
        rows.append(row)

    df = pd.DataFrame(rows, columns=csv_columns(K, cfg.normalized))
    for column in ("n", "l", "q", "trials", "seed"):
        df[column] = df[column].astype("Int64")
    return df


def write_csv(df: pd.DataFrame, path) -> None:
    df.to_csv(path, index=False, float_format="%.10g")
