from src.equiv.certificate import build_certificate, load_certificate, save_certificate, verify_certificate
from src.equiv.families import pairwise_coprime_family, six_parameter_family
from src.equiv.search import ClassSearch, class_search
from src.equiv.transform import (
    apply_transform,
    compose_transforms,
    invert_transform,
    is_scalar_identity,
    transfer_code,
    unit_step_equivalent,
)

__all__ = [
    "ClassSearch",
    "apply_transform",
    "build_certificate",
    "class_search",
    "compose_transforms",
    "invert_transform",
    "is_scalar_identity",
    "load_certificate",
    "pairwise_coprime_family",
    "save_certificate",
    "six_parameter_family",
    "transfer_code",
    "unit_step_equivalent",
]
