from functools import lru_cache, reduce
from math import log2
from typing import Dict, Optional

from src.ddifc.tools.bounds import check_efficiency_bound, sum_log_sizes
from src.ddifc.tools.scan import check_capacity, receiver_outputs, own_message_index, scan_injectivity
from src.ddifc.tools.sumsets import minkowski_sum, scaled
from src.errors import NotDecodable, NotInImage
from src.schemas import AnalysisReport, ChannelMatrix, Codebook, DecodabilityReport, EfficiencyReport
from src.utils.logger import get_logger

logger = get_logger(__name__)


def _check_pair(H: ChannelMatrix, C: Codebook) -> None:
    if H.K != C.K:
        raise ValueError(f"matrix has {H.K} users but the codebook has {C.K}")


def interference_set(H: ChannelMatrix, C: Codebook, i: int) -> list:
    """S_i: sumset of the scaled interfering codebooks seen by receiver i."""
    _check_pair(H, C)
    terms = [scaled(C.sets[j], H.row(i)[j]) for j in range(C.K) if j != i]
    return reduce(minkowski_sum, terms, [0])


def output_set(H: ChannelMatrix, C: Codebook, i: int) -> list:
    """Y_i: every value receiver i can observe."""
    return minkowski_sum(scaled(C.sets[i], H.row(i)[i]), interference_set(H, C, i))


def w_max(H: ChannelMatrix, C: Codebook) -> int:
    """One plus the largest output over all receivers and message tuples."""
    _check_pair(H, C)
    tops = [max(values) for values in C.sets]
    return 1 + max(sum(gain * top for gain, top in zip(row, tops)) for row in H.entries)


def is_decodable(H: ChannelMatrix, C: Codebook, *, cap: Optional[int] = None) -> DecodabilityReport:
    """
    Receiver i decodes iff |H(i,i) C_i + S_i| = |C_i| |S_i|.
    On failure the witness comes from the direct scan of message tuples.
    """
    _check_pair(H, C)
    check_capacity(C, cap)

    for i in range(C.K):
        interference = interference_set(H, C, i)
        outputs = minkowski_sum(scaled(C.sets[i], H.row(i)[i]), interference)
        if len(outputs) != len(C.sets[i]) * len(interference):
            witness = scan_injectivity(H, C, i, cap)
            logger.debug(f"❌ [Decodability] receiver {i + 1}: {witness[0]} and {witness[1]} collide")
            return DecodabilityReport(decodable=False, receiver=i, witness=witness)

    return DecodabilityReport(decodable=True)


@lru_cache(maxsize=64)
def _decoding_table(H_key: tuple, C_key: tuple, i: int) -> Dict[int, Optional[int]]:
    H = ChannelMatrix(entries=[list(row) for row in H_key])
    C = Codebook(sets=[list(values) for values in C_key])

    outputs = receiver_outputs(H, C, i).tolist()
    own = own_message_index(C, i).tolist()

    # None marks outputs shared by different own messages
    table: Dict[int, Optional[int]] = {}
    for y, k in zip(outputs, own):
        x = C.sets[i][k]
        if y in table and table[y] != x:
            table[y] = None
        else:
            table.setdefault(y, x)
    return table


def decode_by_table(H: ChannelMatrix, C: Codebook, i: int, y: int) -> int:
    """The unique X_i in C_i consistent with output y at receiver i."""
    _check_pair(H, C)
    check_capacity(C)
    table = _decoding_table(H.key(), C.key(), i)
    if y not in table:
        raise NotInImage(f"{y} is not an output of receiver {i + 1}")
    x = table[y]
    if x is None:
        raise NotDecodable(f"output {y} at receiver {i + 1} is shared by different codewords")
    return x


def efficiency(H: ChannelMatrix, C: Codebook, *, cap: Optional[int] = None) -> EfficiencyReport:
    """sum_i log2|C_i| / log2(W_max) for a decodable code."""
    report = is_decodable(H, C, cap=cap)
    if not report.decodable:
        raise NotDecodable(f"receiver {report.receiver + 1} cannot decode: {report.witness}")

    bits = sum_log_sizes(C)
    w = w_max(H, C)
    value = bits / log2(w) if bits > 0 else 0.0
    check_efficiency_bound(value, C.K)
    return EfficiencyReport(sum_log_sizes=bits, w_max=w, efficiency=value)


def analyze(H: ChannelMatrix, C: Codebook) -> AnalysisReport:
    """Decodability verdict with either the efficiency or the colliding witness."""
    report = is_decodable(H, C)
    if not report.decodable:
        return AnalysisReport(decodable=False, w_max=w_max(H, C), receiver=report.receiver, witness=report.witness)
    result = efficiency(H, C)
    return AnalysisReport(decodable=True, w_max=result.w_max, efficiency=result.efficiency)
