from fastapi import FastAPI, Request
from fastapi.middleware.gzip import GZipMiddleware
from contextlib import asynccontextmanager
from slowapi.errors import RateLimitExceeded
from slowapi.middleware import SlowAPIMiddleware
import uvicorn
from datetime import datetime
import logging

from . import __version__
from .commands import cmd_catalan_like, cmd_check, cmd_gen
from .config import settings
from .errors import RiordanTPError, SizeCapExceeded
from .middleware import (
    error_handling_middleware,
    limiter,
    logging_middleware,
    rate_limit_handler,
    riordan_error_handler,
    size_cap_handler,
)
from .riordan import NAMED_TRIANGLES
from .schemas import CatalanLikeRequest, CheckRequest, GenRequest, OutputDocument

# Configure logging
logging.basicConfig(
    level=settings.log_level,
    format=settings.log_format
)
logger = logging.getLogger(__name__)


@asynccontextmanager
async def lifespan(app: FastAPI):
    logger.info(
        f"riordantp API {__version__} starting "
        f"(window {settings.default_window}, size cap {settings.tp_size_cap})"
    )
    yield
    logger.info("Application shutdown")

app = FastAPI(
    title=settings.api_title,
    description="Riordan arrays, total positivity checks and Catalan-like numbers in exact arithmetic",
    version=__version__,
    debug=settings.debug,
    lifespan=lifespan
)

app.state.limiter = limiter
app.add_exception_handler(RateLimitExceeded, rate_limit_handler)
app.add_exception_handler(SizeCapExceeded, size_cap_handler)
app.add_exception_handler(RiordanTPError, riordan_error_handler)

app.add_middleware(SlowAPIMiddleware)
app.add_middleware(GZipMiddleware, minimum_size=1000)
app.middleware("http")(logging_middleware)
app.middleware("http")(error_handling_middleware)


# Routes
@app.get("/")
@limiter.exempt
async def root():
    return {"message": "riordantp API is running"}


@app.get("/health")
@limiter.exempt
async def health_check():
    return {
        "status": "healthy",
        "version": __version__,
        "triangles": [name.value for name in NAMED_TRIANGLES],
        "timestamp": datetime.utcnow()
    }


# Computation endpoints run in the threadpool
@app.post(f"{settings.api_v1_prefix}/triangles", response_model=OutputDocument)
def generate_triangle(request: Request, body: GenRequest):
    request.state.command = "gen"
    return cmd_gen(body)


@app.post(f"{settings.api_v1_prefix}/checks", response_model=OutputDocument)
def run_check(request: Request, body: CheckRequest):
    request.state.command = f"check {body.subject.value}"
    return cmd_check(body)


@app.post(f"{settings.api_v1_prefix}/catalan-like", response_model=OutputDocument)
def catalan_like(request: Request, body: CatalanLikeRequest):
    request.state.command = "catalan-like"
    return cmd_catalan_like(body)


if __name__ == "__main__":
    uvicorn.run(app, host=settings.host, port=settings.port)
