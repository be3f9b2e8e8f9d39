from contextlib import asynccontextmanager

from fastapi import FastAPI

from src.config import config
from src.routers import codes
from src.settings import settings
from src.utils.logger import get_logger

logger = get_logger(__name__)

# --- Metadata for Documentation ---
tags_metadata = [
    {
        "name": "Codes",
        "description": "Decodability checks, progression-code design and equivalence-class search.",
    },
    {
        "name": "Health",
        "description": "Liveness and the search limits this instance runs with.",
    },
]

description = """
# Alignment Codes API 📡

Algebraic interference-alignment codes for K-user interference channels.

* **Analyze** a codebook on an integer channel: exact decodability proof, W_max and efficiency.
* **Design** the arithmetic-progression code fixed by the row gcds of a matrix.
* **Search** the equivalence class D(d^-1) H D(r) for the most efficient progression code,
  returned as a certificate that can be re-verified offline.

Monte-Carlo simulation of the lattice scheme is exposed through the CLI (`python -m src.cli simulate`).
"""


@asynccontextmanager
async def lifespan(app: FastAPI):
    logger.info(f"🚀 [API] Alignment Codes up: {settings.workers} worker thread(s), cap {config['enumeration_cap']:,}")
    yield
    logger.info("🛑 [API] Alignment Codes stopped")


app = FastAPI(
    title="Alignment Codes API",
    description=description,
    version="1.0.0",
    openapi_tags=tags_metadata,
    lifespan=lifespan
)

app.include_router(codes.router)


@app.get("/", tags=["Health"])
async def root():
    """Liveness check; also reports the enumeration cap and worker threads in effect."""
    return {
        "status": "ok",
        "service": "Alignment Codes",
        "enumeration_cap": config["enumeration_cap"],
        "threads": settings.workers,
    }
