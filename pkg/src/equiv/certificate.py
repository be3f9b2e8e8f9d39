from pathlib import Path
from typing import Optional

from src.config import config
from src.ddifc import efficiency, w_max
from src.equiv.transform import apply_transform, transfer_code
from src.errors import CapacityExceeded, CertificateMismatch, IfcError
from src.schemas import Certificate, ChannelMatrix, ClassSearchResult, Codebook, EfficiencyReport
from src.utils.logger import get_logger

logger = get_logger(__name__)


def build_certificate(result: ClassSearchResult) -> Certificate:
    codebook = result.code.codebook
    return Certificate(
        source=result.source.entries,
        matrix=result.best_matrix.entries,
        transform=result.transform,
        codebook=codebook.sets,
        w_max=w_max(result.best_matrix, codebook),
        efficiency=result.efficiency,
    )


def verify_certificate(certificate: Certificate, *, cap: Optional[int] = None) -> EfficiencyReport:
    """
    Re-derives every claim of a certificate without trusting the search:
    the transform maps source to matrix, the codebook passes the brute-force
    oracle on matrix, its transfer decodes on source, and W_max and efficiency match.
    """
    try:
        source = ChannelMatrix(entries=certificate.source)
        matrix = ChannelMatrix(entries=certificate.matrix)
        codebook = Codebook(sets=certificate.codebook)

        # 1. Transform
        if apply_transform(source, certificate.transform) != matrix:
            raise CertificateMismatch("transform does not map the source matrix to the stated matrix")

        # 2. Oracle on the transformed channel
        report = efficiency(matrix, codebook, cap=cap)

        # 3. Transferred code on the source channel
        efficiency(source, transfer_code(codebook, certificate.transform), cap=cap)
    except (CertificateMismatch, CapacityExceeded):
        raise
    except (IfcError, ValueError) as exc:
        raise CertificateMismatch(str(exc)) from exc

    # 4. Stated figures
    if report.w_max != certificate.w_max:
        raise CertificateMismatch(f"stated W_max {certificate.w_max}, recomputed {report.w_max}")
    if abs(report.efficiency - certificate.efficiency) > config["efficiency_tolerance"]:
        raise CertificateMismatch(
            f"stated efficiency {certificate.efficiency}, recomputed {report.efficiency}"
        )

    logger.info(f"✅ [Certificate] verified: W_max={report.w_max}, eff={report.efficiency:.6f}")
    return report


def save_certificate(certificate: Certificate, path: Path) -> None:
    Path(path).write_text(certificate.model_dump_json(indent=2) + "\n")


def load_certificate(path: Path) -> Certificate:
    return Certificate.model_validate_json(Path(path).read_text())
