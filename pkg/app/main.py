from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
from fastapi.openapi.docs import get_swagger_ui_html
from fastapi.openapi.utils import get_openapi
from contextlib import asynccontextmanager
import logging

from app.routes import dominance, sequences
from app.schemas import HealthResponse
from app.services.startup import startup_manager
from config import settings

# Configure logging
logging.basicConfig(level=settings.LOG_LEVEL)
logger = logging.getLogger(__name__)


@asynccontextmanager
async def lifespan(app: FastAPI):
    """Handle application startup and shutdown"""

    # Startup
    logger.info("Starting Forced Pairs API...")

    startup_status = await startup_manager.run_startup_checks()
    if startup_status["status"] == "degraded":
        logger.warning("Application started with some issues - check logs above")

    logger.info(
        f"Oracle enumeration cap {settings.ORACLE_DEFAULT_CAP} (max {settings.ORACLE_MAX_CAP}), "
        f"default pair method {settings.DEFAULT_PAIR_METHOD}"
    )

    yield

    # Shutdown
    logger.info("Application shutdown complete")


def custom_openapi():
    """Generate custom OpenAPI schema"""
    if app.openapi_schema:
        return app.openapi_schema

    openapi_schema = get_openapi(
        title="Forced Pairs API",
        version="1.0.0",
        description="""
## Forced Pairs of Degree Sequences

Decides which vertex pairs of a labeled degree sequence are adjacent in every
realization (forced edges), in none (forced non-edges), or vary.

### Features
- **Erdos-Gallai analysis**: graphicality, difference table, split/threshold flags
- **Pair classification**: three independent methods that must agree
- **Envelope graphs**: intersection and union of all realizations, as threshold graphs
- **Dominance order**: comparison, elementary covers, lift to a decomposable sequence

### Input
Sequences are sent as text in comma form (`2,2,1,1,0`) or exponent form
(`15^5,6^7,3^7`), or as a JSON list of integers. Terms bind to vertex labels
1..n in the order given; set `normalize` to sort them first.
        """,
        routes=app.routes,
        tags=[
            {
                "name": "sequences",
                "description": "Analyses of a single degree sequence"
            },
            {
                "name": "dominance",
                "description": "Dominance order on sequences of fixed length and sum"
            },
            {
                "name": "health",
                "description": "Health check and status endpoints"
            }
        ]
    )

    openapi_schema["info"]["license"] = {
        "name": "MIT License",
        "url": "https://opensource.org/licenses/MIT"
    }

    app.openapi_schema = openapi_schema
    return app.openapi_schema


# Create FastAPI application
app = FastAPI(
    title="Forced Pairs API",
    description="Forced edges, forced non-edges and envelope graphs of degree sequences",
    version="1.0.0",
    lifespan=lifespan,
    docs_url=None,  # Disable default docs
    redoc_url=None,  # Disable ReDoc
    openapi_url="/openapi.json"
)

# Set custom OpenAPI
app.openapi = custom_openapi

# Add CORS middleware conditionally
if settings.CORS_ENABLED:
    logger.info(f"CORS enabled with origins: {settings.CORS_ORIGINS}")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=settings.cors_origins_list,
        allow_methods=settings.cors_methods_list,
        allow_headers=settings.cors_headers_list,
    )
else:
    logger.info("CORS disabled - assuming handled by nginx/webserver")

# Include routers
app.include_router(sequences.router)
app.include_router(dominance.router)


# Custom Swagger UI endpoint
@app.get("/api-docs", include_in_schema=False)
async def api_documentation():
    """Serve Swagger UI documentation"""
    return get_swagger_ui_html(
        openapi_url="/openapi.json",
        title="Forced Pairs API Documentation",
        swagger_ui_parameters={
            "deepLinking": True,
            "displayRequestDuration": True,
            "docExpansion": "list",
            "operationsSorter": "method",
            "tryItOutEnabled": True
        }
    )


# Health check endpoint
@app.get("/", tags=["health"], summary="Basic health check", include_in_schema=False)
async def root():
    """Basic service information and status"""
    return {
        "service": "Forced Pairs API",
        "status": startup_manager.get_startup_status()["status"],
        "version": "1.0.0",
        "default_pair_method": settings.DEFAULT_PAIR_METHOD,
        "cors_enabled": settings.CORS_ENABLED,
        "documentation": "/api-docs"
    }


@app.get("/health", tags=["health"], summary="Detailed health check", response_model=HealthResponse)
async def health_check():
    """
    Detailed health check endpoint

    Returns the startup self-check results, uptime and the configured size limits.
    """
    startup_status = startup_manager.get_startup_status()

    return HealthResponse(
        status=startup_status["status"],
        uptime_seconds=int(startup_status["uptime_seconds"]),
        startup_checks={
            "passed": startup_status["checks_passed"],
            "total": startup_status["total_checks"],
            "details": startup_status["checks"],
            "errors": startup_status["errors"]
        },
        limits={
            "oracle_default_cap": settings.ORACLE_DEFAULT_CAP,
            "oracle_max_cap": settings.ORACLE_MAX_CAP,
            "max_sequence_length": settings.MAX_SEQUENCE_LENGTH
        },
        documentation="/api-docs"
    )
