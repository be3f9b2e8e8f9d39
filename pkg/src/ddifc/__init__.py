from src.ddifc.core import (
    analyze,
    decode_by_table,
    efficiency,
    interference_set,
    is_decodable,
    output_set,
    w_max,
)
from src.ddifc.tools.bounds import check_efficiency_bound, sum_log_sizes, sumset_bound
from src.ddifc.tools.quality import is_good_code, log_ratio
from src.ddifc.tools.scan import scan_injectivity
from src.ddifc.tools.single_user import single_user_code
from src.ddifc.tools.sumsets import minkowski_sum

__all__ = [
    "analyze",
    "check_efficiency_bound",
    "decode_by_table",
    "efficiency",
    "interference_set",
    "is_decodable",
    "is_good_code",
    "log_ratio",
    "minkowski_sum",
    "output_set",
    "scan_injectivity",
    "single_user_code",
    "sum_log_sizes",
    "sumset_bound",
    "w_max",
]
