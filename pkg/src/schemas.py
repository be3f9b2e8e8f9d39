from fractions import Fraction
from math import floor, inf, isfinite, log10
from typing import Annotated, List, Literal, Optional, Tuple

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    PositiveFloat,
    WithJsonSchema,
    field_serializer,
    field_validator,
    model_validator,
)

from src.config import config
from src.exactmath import as_rational, format_rational


# --- Channels ---

class ChannelMatrix(BaseModel):
    model_config = ConfigDict(frozen=True)

    entries: List[List[int]] = Field(
        ...,
        examples=[[[1, 4, 3], [2, 1, 3], [6, 2, 1]]],
        description="K x K non-negative integer gains; row i is what receiver i hears",
    )

    @field_validator("entries")
    @classmethod
    def _check_entries(cls, entries: List[List[int]]) -> List[List[int]]:
        k = len(entries)
        if k < 2:
            raise ValueError(f"need at least 2 users, got {k}")
        for i, row in enumerate(entries):
            if len(row) != k:
                raise ValueError(f"row {i + 1} has {len(row)} entries, expected {k}")
            if any(value < 0 for value in row):
                raise ValueError(f"row {i + 1} has a negative gain")
            if row[i] < 1:
                raise ValueError(f"diagonal entry {i + 1} must be at least 1")
        return entries

    @property
    def K(self) -> int:
        return len(self.entries)

    def row(self, i: int) -> List[int]:
        return self.entries[i]

    def off_diagonal(self, i: int) -> List[int]:
        return [value for j, value in enumerate(self.entries[i]) if j != i]

    def key(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(row) for row in self.entries)

    @classmethod
    def coerce(cls, value) -> "ChannelMatrix":
        return value if isinstance(value, cls) else cls(entries=value)


class RealChannelMatrix(BaseModel):
    model_config = ConfigDict(frozen=True)

    entries: List[List[float]] = Field(..., description="K x K non-negative real gains")

    @field_validator("entries")
    @classmethod
    def _check_entries(cls, entries: List[List[float]]) -> List[List[float]]:
        k = len(entries)
        if k < 2:
            raise ValueError(f"need at least 2 users, got {k}")
        for i, row in enumerate(entries):
            if len(row) != k:
                raise ValueError(f"row {i + 1} has {len(row)} entries, expected {k}")
            if not all(isfinite(value) for value in row):
                raise ValueError(f"row {i + 1} has a non-finite gain")
            if any(value < 0 for value in row):
                raise ValueError(f"row {i + 1} has a negative gain")
        return entries

    @property
    def K(self) -> int:
        return len(self.entries)

    def is_integral(self) -> bool:
        return all(float(value).is_integer() for row in self.entries for value in row)

    def floor(self) -> ChannelMatrix:
        """Integer part of every gain; the diagonal must stay at least 1."""
        return ChannelMatrix(entries=[[floor(value) for value in row] for row in self.entries])

    def remainder(self) -> List[List[float]]:
        return [[value - floor(value) for value in row] for row in self.entries]

    @classmethod
    def coerce(cls, value) -> "RealChannelMatrix":
        if isinstance(value, cls):
            return value
        if isinstance(value, ChannelMatrix):
            return cls(entries=[[float(v) for v in row] for row in value.entries])
        return cls(entries=value)


# --- Codebooks ---

class Codebook(BaseModel):
    model_config = ConfigDict(frozen=True)

    sets: List[List[int]] = Field(
        ...,
        examples=[[[0, 1, 2, 3, 4, 5], [0, 3], [0, 2, 4]]],
        description="One ascending set of non-negative integers per transmitter, each containing 0",
    )

    @field_validator("sets")
    @classmethod
    def _check_sets(cls, sets: List[List[int]]) -> List[List[int]]:
        cleaned = []
        for i, values in enumerate(sets):
            if not values:
                raise ValueError(f"codebook {i + 1} is empty")
            if len(set(values)) != len(values):
                raise ValueError(f"codebook {i + 1} has repeated codewords")
            if any(value < 0 for value in values):
                raise ValueError(f"codebook {i + 1} has a negative codeword")
            if 0 not in values:
                raise ValueError(f"codebook {i + 1} must contain 0")
            cleaned.append(sorted(values))
        return cleaned

    @property
    def K(self) -> int:
        return len(self.sets)

    @property
    def sizes(self) -> List[int]:
        return [len(values) for values in self.sets]

    def key(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(values) for values in self.sets)

    @classmethod
    def coerce(cls, value) -> "Codebook":
        return value if isinstance(value, cls) else cls(sets=value)


# --- Reports ---

class EfficiencyReport(BaseModel):
    sum_log_sizes: float = Field(..., description="sum of log2|C_i| in bits")
    w_max: int = Field(..., description="one plus the largest channel output")
    efficiency: float = Field(..., description="sum_log_sizes / log2(w_max)")


class DecodabilityReport(BaseModel):
    decodable: bool
    receiver: Optional[int] = Field(None, description="first receiver (0-based) that cannot decode")
    witness: Optional[Tuple[List[int], List[int]]] = Field(
        None, description="two message tuples giving the same output at that receiver"
    )


class AnalysisReport(BaseModel):
    decodable: bool
    w_max: int
    efficiency: Optional[float] = None
    receiver: Optional[int] = None
    witness: Optional[Tuple[List[int], List[int]]] = None


# --- Arithmetic-progression codes ---

class RowGcdProfile(BaseModel):
    g: List[int] = Field(..., description="gcd of each full row")
    g_hat: List[int] = Field(..., description="gcd of each row without its diagonal entry, 0 for isolated rows")
    s: List[int] = Field(..., description="g_hat / g, the progression length per user, 0 for isolated rows")

    @property
    def isolated(self) -> List[int]:
        return [i for i, value in enumerate(self.g_hat) if value == 0]


class ApCode(BaseModel):
    model_config = ConfigDict(frozen=True)

    r: List[int] = Field(..., description="step size per user")
    s: List[int] = Field(..., description="number of codewords per user")
    verified: bool = Field(True, description="False when the brute-force check was skipped")

    @model_validator(mode="after")
    def _check(self) -> "ApCode":
        if len(self.r) != len(self.s):
            raise ValueError("r and s must have the same length")
        if any(value < 1 for value in self.r) or any(value < 1 for value in self.s):
            raise ValueError("step sizes and set sizes must be positive")
        return self

    @property
    def codebook(self) -> Codebook:
        return Codebook(sets=[[step * m for m in range(size)] for step, size in zip(self.r, self.s)])


# --- Equivalence ---

RationalField = Annotated[Fraction, WithJsonSchema({"type": "string", "examples": ["3/2"]})]


class EquivalenceTransform(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    r: List[int] = Field(..., description="column scaling, positive integers")
    d: List[RationalField] = Field(..., description="row divisors, positive rationals")

    @field_validator("d", mode="before")
    @classmethod
    def _parse_d(cls, values):
        return [as_rational(value) for value in values]

    @model_validator(mode="after")
    def _check(self) -> "EquivalenceTransform":
        if len(self.r) != len(self.d):
            raise ValueError("r and d must have the same length")
        if any(value < 1 for value in self.r):
            raise ValueError("every r_i must be a positive integer")
        if any(value <= 0 for value in self.d):
            raise ValueError("every d_i must be positive")
        return self

    @field_serializer("d")
    def _dump_d(self, values: List[Fraction]) -> List[str]:
        return [format_rational(value) for value in values]

    @classmethod
    def identity(cls, k: int) -> "EquivalenceTransform":
        return cls(r=[1] * k, d=[1] * k)


class SearchBounds(BaseModel):
    r_max: int = Field(config["r_max"], ge=1)
    s_cap: int = Field(config["s_cap"], ge=1)
    time_budget_secs: Optional[float] = Field(config["time_budget_secs"], gt=0)
    divide_rows: bool = Field(True, description="also try row divisors d_i > 1")
    isolated_size: int = Field(config["isolated_size"], ge=1)


class ClassSearchResult(BaseModel):
    source: ChannelMatrix
    best_matrix: ChannelMatrix
    transform: EquivalenceTransform
    code: ApCode
    efficiency: float
    candidates_examined: int
    truncated: bool = Field(False, description="True when the time budget stopped the search")


class Certificate(BaseModel):
    source: List[List[int]]
    matrix: List[List[int]]
    transform: EquivalenceTransform
    codebook: List[List[int]]
    w_max: int
    efficiency: float


# --- Layered codes ---

class LayeredCode(BaseModel):
    model_config = ConfigDict(frozen=True)

    primary: Codebook
    bin_size: int = Field(..., ge=2)
    depth: int = Field(..., ge=1)
    source: Optional[ChannelMatrix] = Field(None, description="matrix the primary code is decoded on")
    transform: Optional[EquivalenceTransform] = Field(None, description="maps the target channel to source")

    @model_validator(mode="after")
    def _check_depth(self) -> "LayeredCode":
        if self.depth > config["max_depth"]:
            raise ValueError(f"depth {self.depth} exceeds the limit of {config['max_depth']}")
        if self.transform is not None and len(self.transform.r) != self.primary.K:
            raise ValueError("transform and codebook disagree on the number of users")
        return self

    @property
    def sizes(self) -> List[int]:
        return [size ** self.depth for size in self.primary.sizes]

    @property
    def r(self) -> List[int]:
        return list(self.transform.r) if self.transform else [1] * self.primary.K

    @property
    def d(self) -> List[Fraction]:
        return list(self.transform.d) if self.transform else [Fraction(1)] * self.primary.K


# --- Gaussian scheme ---

Mode = Literal["auto", "integer", "dithered"]
Decoder = Literal["sphere", "nearest_plane"]


class GaussSimConfig(BaseModel):
    matrix: List[List[float]]
    power: float = Field(config["power"], gt=0)
    noise: float = Field(..., ge=0, description="noise variance Z per dimension")
    n: int = Field(config["lattice_dim"], ge=1)
    depth: Optional[int] = Field(None, ge=1, description="force the number of layers")
    trials: int = Field(config["trials"], ge=1)
    mode: Mode = "auto"
    seed: int = config["seed"]
    r_max: int = Field(config["r_max"], ge=1)
    s_cap: int = Field(config["s_cap"], ge=1)
    decoder: Decoder = "sphere"
    powers: Optional[List[PositiveFloat]] = Field(
        None, description="per-transmitter power limits; `power` is then the common reference level"
    )
    noises: Optional[List[PositiveFloat]] = Field(
        None, description="per-receiver noise variances; `noise` is then the common reference level"
    )

    @model_validator(mode="after")
    def _check_per_user(self) -> "GaussSimConfig":
        for name, values in (("powers", self.powers), ("noises", self.noises)):
            if values is not None and len(values) != len(self.matrix):
                raise ValueError(f"{name} needs one value per user, got {len(values)}")
        if self.noises is not None and self.noise == 0:
            raise ValueError("per-receiver noises need a positive reference noise")
        return self

    @property
    def normalized(self) -> bool:
        return self.powers is not None or self.noises is not None

    @property
    def snr_db(self) -> float:
        return inf if self.noise == 0 else 10 * log10(self.power / self.noise)


class SimResult(BaseModel):
    snr_db: float
    mode: Literal["integer", "dithered"]
    n: int
    l: int
    q: int
    w_tilde: int = Field(..., description="largest layered channel output plus one")
    eff: float
    rate_theoretical: float
    rate_empirical: float
    goodput: float = Field(..., description="rate_empirical times the fraction of error-free trials")
    error_rates: List[float]
    trials: int
    seed: int
    z_effective: float = Field(..., description="Z, or Z_add in dithered mode")
    cond_q_holds: bool = Field(..., description="W~ < q < 2 W~")
    modulus_adjusted: bool = Field(..., description="q was enlarged past the largest true output")
    goodness: bool = Field(..., description="q^(2/n) <= P/Z")
    noise_variance: Optional[List[float]] = Field(None, description="measured effective noise per receiver")


class SimulationFile(BaseModel):
    """Key = value simulation config after parsing."""
    matrix: str
    power: float = Field(config["power"], gt=0)
    snr_db: List[float] = Field(default_factory=list)
    noise: Optional[float] = Field(None, ge=0)
    n: int = Field(config["lattice_dim"], ge=1)
    depth: Optional[int] = Field(None, ge=1)
    trials: int = Field(config["trials"], ge=1)
    seed: int = config["seed"]
    mode: Mode = "auto"
    r_max: int = Field(config["r_max"], ge=1)
    s_cap: int = Field(config["s_cap"], ge=1)
    decoder: Decoder = "sphere"
    powers: Optional[List[PositiveFloat]] = None
    noises: Optional[List[PositiveFloat]] = None

    @model_validator(mode="after")
    def _check_points(self) -> "SimulationFile":
        if not self.snr_db and self.noise is None:
            raise ValueError("give snr_db values or an explicit noise variance")
        if self.noises is not None and not self.snr_db and self.noise == 0:
            raise ValueError("per-receiver noises need a positive reference noise")
        return self
