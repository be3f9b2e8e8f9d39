from math import prod
from typing import Optional

from src.apcodes.tools.profile import row_gcd_profile
from src.config import config
from src.ddifc import is_decodable
from src.errors import IsolatedRow, NotDecodable, NotDivisible
from src.exactmath import gcd_all, mod_inverse
from src.schemas import ApCode, ChannelMatrix
from src.utils.logger import get_logger

logger = get_logger(__name__)


def ap_design(H: ChannelMatrix, *, isolated_size: Optional[int] = None,
              verify: bool = True, cap: Optional[int] = None) -> ApCode:
    """
    Unit-step progression code with s_i = gcd of the off-diagonal entries of row i
    over the gcd of the whole row.

    A row without interference has no finite s_i: it raises IsolatedRow unless
    `isolated_size` (T) is given, in which case that user gets {0..T}.
    """
    H = ChannelMatrix.coerce(H)
    profile = row_gcd_profile(H)

    # 1. Lengths from the gcd profile
    s = list(profile.s)
    for i in profile.isolated:
        if isolated_size is None:
            raise IsolatedRow(i)
        s[i] = isolated_size + 1

    code = ApCode(r=[1] * H.K, s=s)

    # 2. Brute-force confirmation while the enumeration stays under the cap
    cap = config["enumeration_cap"] if cap is None else cap
    if not verify or prod(s) > cap:
        if verify:
            logger.warning(f"⚠️ [ApDesign] {prod(s)} tuples exceed the cap, s={s} left unverified")
        return code.model_copy(update={"verified": False})

    report = is_decodable(H, code.codebook, cap=cap)
    if not report.decodable:
        raise NotDecodable(f"progression code s={s} collides at receiver {report.receiver + 1}")
    return code


def ap_decode(H: ChannelMatrix, i: int, y: int) -> int:
    """
    Message index of user i from receiver i's output under the unit-step code:
    (h_i * y / g_i) mod s_i with h_i the inverse of H(i,i)/g_i modulo s_i.
    """
    H = ChannelMatrix.coerce(H)
    diagonal = H.row(i)[i]
    g = gcd_all(H.row(i))
    g_hat = gcd_all(H.off_diagonal(i))

    if y % g != 0:
        raise NotDivisible(f"{y} is not a multiple of the row gcd {g} of receiver {i + 1}")

    # Interference-free receiver
    if g_hat == 0:
        return y // diagonal

    s = g_hat // g
    if s == 1:
        return 0
    h = mod_inverse(diagonal // g, s)
    return h * (y // g) % s
