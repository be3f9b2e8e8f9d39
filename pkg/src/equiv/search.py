import time
from concurrent.futures import ThreadPoolExecutor
from itertools import product
from math import log2, prod
from typing import List, NamedTuple, Optional, Tuple

from src.apcodes import ap_design, ap_efficiency
from src.config import config
from src.ddifc import check_efficiency_bound
from src.equiv.transform import apply_transform
from src.errors import EmptySearch
from src.exactmath import divisors, gcd_all
from src.schemas import ChannelMatrix, ClassSearchResult, EquivalenceTransform, SearchBounds
from src.settings import settings
from src.utils.logger import get_logger

logger = get_logger(__name__)


class Candidate(NamedTuple):
    efficiency: float
    r: Tuple[int, ...]
    d: Tuple[int, ...]


class ChunkResult(NamedTuple):
    best: Optional[Candidate]
    examined: int
    truncated: bool


def _better(new: Candidate, old: Optional[Candidate], tolerance: float) -> bool:
    """Strictly higher efficiency wins; within tolerance the lexicographically smaller (r, d) wins."""
    if old is None:
        return True
    if new.efficiency > old.efficiency + tolerance:
        return True
    if new.efficiency < old.efficiency - tolerance:
        return False
    return (new.r, new.d) < (old.r, old.d)


class ClassSearch:
    """
    Bounded search over D(d^-1) H D(r) with r_i in [1, r_max] and d_i dividing the
    gcd of row i of H D(r), scoring every candidate by its unit-step progression code.
    """

    def __init__(self, H: ChannelMatrix, bounds: SearchBounds):
        self.H = ChannelMatrix.coerce(H)
        self.bounds = bounds
        self.tolerance = config["efficiency_tolerance"]
        self.isolated = [i for i in range(self.H.K) if gcd_all(self.H.off_diagonal(i)) == 0]
        self.deadline = None if bounds.time_budget_secs is None else time.monotonic() + bounds.time_budget_secs

    def score(self, r: Tuple[int, ...]) -> Tuple[Optional[Candidate], int]:
        """
        Best d for one column scaling r and the number of (r, d) pairs it stands for.

        s only depends on H D(r), since dividing a row by d_i scales both of its gcds.
        The largest output of row i is W_i / d_i, so the smallest d_i that keeps every
        row under the minimum achievable maximum gives the lexicographically first best d.
        """
        scaled = [[gain * r[j] for j, gain in enumerate(row)] for row in self.H.entries]
        row_gcds = [gcd_all(row) for row in scaled]
        choices = [divisors(g) if self.bounds.divide_rows else [1] for g in row_gcds]
        count = prod(len(options) for options in choices)

        # 1. Progression lengths of H D(r)
        s = []
        for i, row in enumerate(scaled):
            if i in self.isolated:
                s.append(self.bounds.isolated_size + 1)
            else:
                off = gcd_all([value for j, value in enumerate(row) if j != i])
                s.append(off // row_gcds[i])
        if max(s) > self.bounds.s_cap:
            return None, count

        # 2. Row maxima before division
        tops = [sum(gain * (size - 1) for gain, size in zip(row, s)) for row in scaled]
        target = max(top // options[-1] for top, options in zip(tops, choices))

        # 3. Smallest divisor per row reaching the target
        d = tuple(next(option for option in options if top // option <= target)
                  for top, options in zip(tops, choices))

        bits = log2(prod(s))
        efficiency = bits / log2(target + 1) if bits > 0 else 0.0
        return Candidate(efficiency=efficiency, r=r, d=d), count

    def run_chunk(self, first: int) -> ChunkResult:
        """All r with r_1 = first, in lexicographic order."""
        best, examined = None, 0
        rest = product(range(1, self.bounds.r_max + 1), repeat=self.H.K - 1)
        for tail in rest:
            if self.deadline is not None and time.monotonic() > self.deadline:
                return ChunkResult(best, examined, True)
            candidate, count = self.score((first, *tail))
            examined += count
            if candidate is not None and _better(candidate, best, self.tolerance):
                best = candidate
        return ChunkResult(best, examined, False)

    def run(self, workers: Optional[int] = None) -> ClassSearchResult:
        workers = settings.workers if workers is None else max(1, workers)
        firsts = list(range(1, self.bounds.r_max + 1))

        # 1. Chunks over r_1; reduction order is fixed so thread count never changes the result
        if workers == 1:
            chunks: List[ChunkResult] = [self.run_chunk(first) for first in firsts]
        else:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                chunks = list(pool.map(self.run_chunk, firsts))

        best, examined, truncated = None, 0, False
        for chunk in chunks:
            examined += chunk.examined
            truncated = truncated or chunk.truncated
            if chunk.best is not None and _better(chunk.best, best, self.tolerance):
                best = chunk.best

        if best is None:
            raise EmptySearch(f"no candidate within r_max={self.bounds.r_max}, s_cap={self.bounds.s_cap}")

        # 2. Materialize and verify the winner
        transform = EquivalenceTransform(r=list(best.r), d=list(best.d))
        matrix = apply_transform(self.H, transform)
        code = ap_design(matrix, isolated_size=self.bounds.isolated_size)
        efficiency = ap_efficiency(matrix, code.s)
        if abs(efficiency - best.efficiency) > self.tolerance:
            raise AssertionError(f"search scored {best.efficiency}, rebuilt code gives {efficiency}")
        check_efficiency_bound(efficiency, self.H.K)

        suffix = " (time budget hit)" if truncated else ""
        logger.info(
            f"🔎 [ClassSearch] examined {examined} candidates, best eff={efficiency:.6f} "
            f"at r={list(best.r)}, d={list(best.d)}{suffix}"
        )
        return ClassSearchResult(
            source=self.H,
            best_matrix=matrix,
            transform=transform,
            code=code,
            efficiency=efficiency,
            candidates_examined=examined,
            truncated=truncated,
        )


def class_search(H: ChannelMatrix, bounds: Optional[SearchBounds] = None, *,
                 workers: Optional[int] = None) -> ClassSearchResult:
    return ClassSearch(H, bounds or SearchBounds()).run(workers)

