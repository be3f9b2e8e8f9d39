from typing import List, Optional

from fastapi import APIRouter, HTTPException
from pydantic import BaseModel, Field, ValidationError

from src.apcodes import ap_design, ap_efficiency, ap_w_max
from src.ddifc import analyze
from src.equiv import build_certificate, class_search
from src.errors import IfcError
from src.schemas import AnalysisReport, Certificate, ChannelMatrix, Codebook, SearchBounds
from src.utils.logger import get_logger

logger = get_logger(__name__)

router = APIRouter(
    prefix="/codes",
    tags=["Codes"]
)


# --- Request / response bodies ---

class AnalyzeRequest(BaseModel):
    matrix: List[List[int]] = Field(..., examples=[[[1, 4, 3], [2, 1, 3], [6, 2, 1]]])
    codebook: List[List[int]] = Field(..., examples=[[[0, 1, 2, 3, 4, 5], [0, 3], [0, 2, 4]]])


class DesignRequest(BaseModel):
    matrix: List[List[int]] = Field(..., examples=[[[1, 12, 6], [2, 3, 6], [3, 3, 1]]])
    isolated_size: Optional[int] = Field(None, ge=1, description="codebook {0..T} for interference-free users")


class DesignResponse(BaseModel):
    r: List[int]
    s: List[int]
    codebook: List[List[int]]
    w_max: int
    efficiency: float
    verified: bool


class SearchRequest(BaseModel):
    matrix: List[List[int]] = Field(..., examples=[[[1, 4, 3], [2, 1, 3], [6, 2, 1]]])
    bounds: SearchBounds = Field(default_factory=SearchBounds)


class SearchResponse(BaseModel):
    certificate: Certificate
    candidates_examined: int
    truncated: bool


def _validated(model, **data):
    try:
        return model(**data)
    except ValidationError as exc:
        raise HTTPException(status_code=422, detail=exc.errors()[0]["msg"]) from None


def _domain_error(exc: IfcError) -> HTTPException:
    logger.error(f"❌ [API] {type(exc).__name__}: {exc}")
    return HTTPException(status_code=422, detail=f"{type(exc).__name__}: {exc}")


@router.post(
    "/analyze",
    response_model=AnalysisReport,
    summary="Check a Codebook",
    description="Brute-force decodability check, W_max and efficiency of a codebook on an integer channel.",
)
def analyze_codebook(body: AnalyzeRequest):
    H = _validated(ChannelMatrix, entries=body.matrix)
    C = _validated(Codebook, sets=body.codebook)
    if H.K != C.K:
        raise HTTPException(status_code=422, detail=f"matrix has {H.K} users, codebook has {C.K}")
    try:
        return analyze(H, C)
    except IfcError as exc:
        raise _domain_error(exc)


@router.post(
    "/design",
    response_model=DesignResponse,
    summary="Design a Progression Code",
    description="Unit-step arithmetic-progression code from the row gcds of the matrix.",
)
def design_code(body: DesignRequest):
    H = _validated(ChannelMatrix, entries=body.matrix)
    try:
        code = ap_design(H, isolated_size=body.isolated_size)
    except IfcError as exc:
        raise _domain_error(exc)
    return DesignResponse(
        r=code.r,
        s=code.s,
        codebook=code.codebook.sets,
        w_max=ap_w_max(H, code.s),
        efficiency=ap_efficiency(H, code.s),
        verified=code.verified,
    )


@router.post(
    "/search",
    response_model=SearchResponse,
    summary="Search the Equivalence Class",
    description="""
    Scans column scalings r and row divisors d within the bounds and returns a
    certificate for the best progression code found. The certificate can be
    re-verified offline with `python -m src.cli verify`.
    """,
)
def search_class(body: SearchRequest):
    H = _validated(ChannelMatrix, entries=body.matrix)
    logger.info(f"🔍 [API] Search request: K={H.K}, r_max={body.bounds.r_max}")
    try:
        result = class_search(H, body.bounds)
    except IfcError as exc:
        raise _domain_error(exc)
    return SearchResponse(
        certificate=build_certificate(result),
        candidates_examined=result.candidates_examined,
        truncated=result.truncated,
    )
