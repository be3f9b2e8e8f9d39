config = {
    # Exhaustive enumeration limit: product of codebook sizes per decodability check
    "enumeration_cap": 10_000_000,

    # Equivalence-class search bounds
    "r_max": 12,
    "s_cap": 10_000,
    "time_budget_secs": None,

    # Codebook size (T) used for a user that sees no interference: C_i = {0..T}
    "isolated_size": 2,

    # Layered codes
    "max_depth": 64,

    # Lattice scheme
    "integrality_tolerance": 1e-6,
    # Largest modulus q (in bits) the float decoder handles without losing the integer grid
    "max_modulus_bits": 40,
    "lattice_dim": 4,
    "power": 1.0,
    "trials": 1000,
    "seed": 0,

    # Certificates: stated vs recomputed efficiency
    "efficiency_tolerance": 1e-12,
}
