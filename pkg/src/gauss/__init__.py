from src.gauss.depth import DepthChoice, ModulusChoice, choose_depth, choose_modulus
from src.gauss.lattice import (
    NestedLatticePair,
    build_nested_pair,
    centered_mod,
    encode_point,
    recover_digit,
    remove_noise,
)
from src.gauss.rates import h_diff, h_dmax, normalize_channel, theoretical_sum_rate, z_add
from src.gauss.reduction import LatticeDecoder, lll_reduce
from src.gauss.simulation import (
    GaussSimulation,
    channel_for,
    csv_columns,
    search_for,
    simulate,
    simulate_dithered,
    simulate_integer,
    sweep,
    write_csv,
)

__all__ = [
    "DepthChoice",
    "GaussSimulation",
    "LatticeDecoder",
    "ModulusChoice",
    "NestedLatticePair",
    "build_nested_pair",
    "centered_mod",
    "channel_for",
    "choose_depth",
    "choose_modulus",
    "csv_columns",
    "encode_point",
    "h_diff",
    "h_dmax",
    "lll_reduce",
    "normalize_channel",
    "recover_digit",
    "remove_noise",
    "search_for",
    "simulate",
    "simulate_dithered",
    "simulate_integer",
    "sweep",
    "theoretical_sum_rate",
    "write_csv",
]
