from fastapi import Request, status
from fastapi.responses import JSONResponse
from slowapi import Limiter
from slowapi.errors import RateLimitExceeded
from slowapi.util import get_remote_address
import time
import logging

from .config import settings
from .errors import RiordanTPError, SizeCapExceeded

logger = logging.getLogger(__name__)

# Rate limiting; all-orders checks are CPU bound
limiter = Limiter(key_func=get_remote_address, default_limits=[settings.rate_limit])


# Request logging middleware
async def logging_middleware(request: Request, call_next):
    start_time = time.time()

    response = await call_next(request)

    # endpoints name the command they ran, e.g. "check hankel"
    command = getattr(request.state, "command", None) or request.url.path
    process_time = time.time() - start_time
    logger.info(f"{request.method} {command}: {response.status_code} in {process_time:.4f}s")
    response.headers["X-Process-Time"] = f"{process_time:.4f}"

    return response


# Error handling middleware
async def error_handling_middleware(request: Request, call_next):
    try:
        return await call_next(request)
    except Exception:
        logger.exception(f"Unhandled error on {request.method} {request.url.path}")
        return JSONResponse(
            status_code=status.HTTP_500_INTERNAL_SERVER_ERROR,
            content={"detail": "Internal server error"}
        )


def riordan_error_handler(request: Request, exc: RiordanTPError):
    logger.info(f"Rejected {request.url.path}: {exc}")
    return JSONResponse(
        status_code=status.HTTP_422_UNPROCESSABLE_ENTITY,
        content={"detail": str(exc)}
    )


def size_cap_handler(request: Request, exc: SizeCapExceeded):
    logger.warning(f"Size cap hit on {request.url.path}: {exc.rows}x{exc.cols} > {exc.cap}")
    return JSONResponse(
        status_code=status.HTTP_413_REQUEST_ENTITY_TOO_LARGE,
        content={"detail": str(exc), "cap": exc.cap}
    )


def rate_limit_handler(request: Request, exc: RateLimitExceeded):
    return JSONResponse(
        status_code=status.HTTP_429_TOO_MANY_REQUESTS,
        content={"detail": f"Rate limit exceeded: {exc.detail}"}
    )
