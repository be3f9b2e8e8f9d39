from src.layered.core import (
    asymptotic_efficiency,
    build_layered,
    layered_decode,
    layered_efficiency,
    layered_encode,
    layered_sets,
    max_output,
    transferred_code,
)

__all__ = [
    "asymptotic_efficiency",
    "build_layered",
    "layered_decode",
    "layered_efficiency",
    "layered_encode",
    "layered_sets",
    "max_output",
    "transferred_code",
]
